from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperfields.groups import (
    AbelianGroup,
    abelian_groups,
    automorphisms,
    element_order,
    factorize,
    identify,
    isomorphisms,
    parse_group,
)


def test_small_classifications():
    assert [g.label for g in abelian_groups(4)] == ["C4", "C2,2"]
    assert [g.label for g in abelian_groups(1)] == ["C1"]
    assert sorted(g.factors for g in abelian_groups(27)) == [(3, 3, 3), (9, 3), (27,)]
    with pytest.raises(ValueError):
        abelian_groups(0)


def _brute_aut_count(group):
    mul = group.monoid_table
    units = list(range(1, group.order + 1))
    count = 0
    for perm in permutations(units):
        f = dict(zip(units, perm))
        if f[1] == 1 and all(f[mul[x][y]] == mul[f[x]][f[y]] for x in units for y in units):
            count += 1
    return count


def test_automorphism_counts():
    assert len(automorphisms(AbelianGroup((4,)))) == 2
    assert len(automorphisms(AbelianGroup(()))) == 1
    assert len(automorphisms(AbelianGroup((2, 2)))) == 6
    for m in range(1, 8):
        for g in abelian_groups(m):
            assert len(automorphisms(g)) == _brute_aut_count(g)


@given(st.integers(1, 64))
def test_group_tables_are_abelian_groups(m):
    groups = abelian_groups(m)
    # pairwise non-isomorphic: compare sorted element-order profiles
    profiles = set()
    for g in groups:
        mul = g.monoid_table
        n = len(mul)
        assert g.order == m
        for x in range(1, n):
            for y in range(1, n):
                assert mul[x][y] == mul[y][x] != 0
        profiles.add(tuple(sorted(element_order(mul, x) for x in range(1, n))))
    assert len(profiles) == len(groups)


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_identify_relabelled_group():
    g = AbelianGroup((4,))
    # swap a and a^3 in the carrier
    perm = [0, 1, 4, 3, 2]
    mul = [[perm[g.monoid_table[perm[x]][perm[y]]] for y in range(5)] for x in range(5)]
    std, iso = identify(mul)
    assert std.factors == (4,)
    assert len(isomorphisms(std, mul)) == 2


def test_names():
    assert AbelianGroup((4,)).names == ("0", "1", "a", "a^2", "a^3")
    assert AbelianGroup((2, 2)).names == ("0", "1", "a", "b", "ab")


def test_parse_group():
    assert parse_group("cyclic:4").factors == (4,)
    assert parse_group("product:2,2").factors == (2, 2)
    assert parse_group("C2,2").factors == (2, 2)
    with pytest.raises(ValueError):
        parse_group("dihedral:4")
