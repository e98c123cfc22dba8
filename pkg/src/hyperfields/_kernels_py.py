"""Pure-Python versions of the hot table kernels.

Tables are flat row-major sequences of length ``n * n``.  Hyperaddition cells
are bitmasks (bit ``i`` set means element ``i`` is a member); multiplication
cells are element indices.  The compiled module ``_kernels`` exposes exactly
the same functions.
"""


def set_add(add, n, a, b):
    """Union of ``add[x][y]`` over ``x`` in mask ``a`` and ``y`` in mask ``b``."""
    out = 0
    for x in range(n):
        if a >> x & 1:
            row = x * n
            for y in range(n):
                if b >> y & 1:
                    out |= add[row + y]
    return out


def _extensions(add, n):
    # left[x][B] = x + B, right[z][A] = A + z
    size = 1 << n
    left = []
    right = []
    for x in range(n):
        lrow = [0] * size
        rrow = [0] * size
        for m in range(1, size):
            low = m & -m
            y = low.bit_length() - 1
            lrow[m] = lrow[m ^ low] | add[x * n + y]
            rrow[m] = rrow[m ^ low] | add[y * n + x]
        left.append(lrow)
        right.append(rrow)
    return left, right


def assoc_failures(add, n, limit=-1):
    """All triples ``(x, y, z, lhs, rhs)`` with ``(x+y)+z != x+(y+z)``.

    ``limit`` caps the number of reported triples (-1 for no cap).
    """
    left, right = _extensions(add, n)
    out = []
    for x in range(n):
        lx = left[x]
        for y in range(n):
            xy = add[x * n + y]
            for z in range(n):
                lhs = right[z][xy]
                rhs = lx[add[y * n + z]]
                if lhs != rhs:
                    out.append((x, y, z, lhs, rhs))
                    if len(out) == limit:
                        return out
    return out


def is_hyperfield(add, mul, n, neg_one):
    """Fast yes/no check of every hyperaddition axiom.

    The multiplicative monoid is assumed to be valid already; this only
    looks at the additive table and its interaction with ``mul``.
    """
    full = (1 << n) - 1
    for c in add:
        if c == 0 or c & ~full:
            return False
    for x in range(n):
        if add[x] != 1 << x:
            return False
        for y in range(x + 1, n):
            if add[x * n + y] != add[y * n + x]:
                return False
    # unique hyperinverse, and it is neg_one * x
    neg = [0] * n
    for x in range(n):
        expect = mul[neg_one * n + x]
        for y in range(n):
            if (add[x * n + y] & 1) != (y == expect):
                return False
        neg[x] = expect
    # reversibility: x in y+z  <=>  z in x+(-y)
    for x in range(n):
        for y in range(n):
            cell = add[x * n + neg[y]]
            for z in range(n):
                if ((add[y * n + z] >> x) & 1) != ((cell >> z) & 1):
                    return False
    # distributivity a(x+y) = ax + ay
    for a in range(1, n):
        arow = a * n
        for x in range(n):
            ax = mul[arow + x]
            for y in range(x, n):
                s = add[x * n + y]
                img = 0
                for u in range(n):
                    if s >> u & 1:
                        img |= 1 << mul[arow + u]
                if img != add[ax * n + mul[arow + y]]:
                    return False
    return not assoc_failures(add, n, 1)
