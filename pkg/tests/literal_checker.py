"""Independent restatement of the hyperfield axioms on plain Python sets.

Shares no code with the package: tables are nested lists of sets and
every quantifier is spelled out.
"""

from itertools import product


def set_sum(add, A, B):
    out = set()
    for a in A:
        for b in B:
            out |= add[a][b]
    return out


def is_hyperfield_literal(mul, add, n):
    elems = range(n)
    units = range(1, n)
    # multiplicative monoid with absorbing zero, units form an abelian group
    for x in elems:
        if mul[0][x] != 0 or mul[x][0] != 0 or mul[1][x] != x:
            return False
    for x, y in product(units, units):
        if mul[x][y] == 0 or mul[x][y] != mul[y][x]:
            return False
    for x, y, z in product(elems, elems, elems):
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            return False
    for x in units:
        if not any(mul[x][y] == 1 for y in units):
            return False
    if any(not add[x][y] for x, y in product(elems, elems)):
        return False
    # hypergroup
    for x in elems:
        if add[0][x] != {x}:
            return False
    for x, y in product(elems, elems):
        if add[x][y] != add[y][x]:
            return False
    for x, y, z in product(elems, elems, elems):
        if set_sum(add, add[x][y], {z}) != set_sum(add, {x}, add[y][z]):
            return False
    neg = {}
    for x in elems:
        inv = [y for y in elems if 0 in add[x][y]]
        if len(inv) != 1:
            return False
        neg[x] = inv[0]
    for x, y, z in product(elems, elems, elems):
        if (x in add[y][z]) != (z in add[x][neg[y]]):
            return False
    # distributivity
    for a, x, y in product(elems, elems, elems):
        if {mul[a][s] for s in add[x][y]} != add[mul[a][x]][mul[a][y]]:
            return False
    return True
