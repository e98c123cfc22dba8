import pytest

from hyperfields import (
    canonical_form,
    enumerate_hyperfields,
    is_isomorphic,
    naive_enumerate,
    negation_representatives,
    parity_check,
    verify,
)
from hyperfields.enumeration import CapacityError, RowFamily, _involutions
from hyperfields.groups import AbelianGroup
from hyperfields.morphisms import structure_from_form


def test_negation_representatives():
    assert negation_representatives(AbelianGroup((2, 2))) == [1, 4]  # 1, ab
    assert negation_representatives(AbelianGroup((4,))) == [1, 3]  # 1, a^2
    assert negation_representatives(AbelianGroup((3,))) == [1]
    assert negation_representatives(AbelianGroup((2,))) == [1, 2]


def test_counts(classes):
    assert [classes[n].count for n in range(2, 6)] == [2, 5, 7, 27]


def test_order5_subtotals(classes):
    assert classes[5].subtotals == {("C4", "a^2"): 9, ("C4", "1"): 7, ("C2,2", "ab"): 6, ("C2,2", "1"): 5}


def test_every_class_verifies_and_is_distinct(classes):
    for result in classes.values():
        assert len(set(result.forms)) == result.count
        for form, h in zip(result.forms, result.classes):
            assert verify(h).ok
            assert canonical_form(h) == form
            assert structure_from_form(form).add == structure_from_form(canonical_form(h)).add


def test_parity_on_all_classes(all_classes):
    for h in all_classes:
        r = parity_check(h)
        assert r.ok
        assert r.applies == (h.neg_one != 1)


def test_restricted_search(classes):
    c4 = AbelianGroup((4,))
    part = enumerate_hyperfields(5, group=c4, neg=3)
    assert part.count == 9
    assert set(part.forms) <= set(classes[5].forms)
    with pytest.raises(ValueError):
        enumerate_hyperfields(5, group=c4, neg=2)
    with pytest.raises(ValueError):
        enumerate_hyperfields(5, group=AbelianGroup((3,)))
    with pytest.raises(ValueError):
        enumerate_hyperfields(1)


def test_traversal_order_does_not_change_classes(classes):
    for n in (4, 5):
        rev = enumerate_hyperfields(n, reverse=True)
        assert rev.forms == classes[n].forms
        assert rev.subtotals == classes[n].subtotals


def test_counters(classes):
    c = classes[5].counters
    assert c["classes"] == 27
    assert c["candidates"] >= c["verified"] >= 27


@pytest.mark.parametrize("n", [2, 3])
def test_naive_matches_fast(classes, n):
    assert naive_enumerate(n).forms == classes[n].forms


def test_naive_capacity():
    with pytest.raises(CapacityError):
        naive_enumerate(5)


def test_involutions():
    assert len(list(_involutions([1, 2, 3]))) == 4
    assert len(list(_involutions([1, 2, 3, 4]))) == 10


def test_row_family_of_class_is_clean(all_classes):
    from hyperfields.groups import identify

    for h in all_classes:
        std, _ = identify(h.mul)
        if h.mul != std.monoid_table:
            continue
        fam = RowFamily(std, h.neg_one, h.row_family())
        assert fam.violations() == []
        assert fam.assemble() == h


def test_row_family_detects_broken_rows():
    g = AbelianGroup((2,))
    # S_1 missing 0 although -1 = 1
    fam = RowFamily(g, 1, (0b100, 0b110))
    kinds = {v[0] for v in fam.violations()}
    assert "zero" in kinds


def test_enumerated_classes_are_pairwise_non_isomorphic(classes):
    hs = classes[4].classes
    for i, a in enumerate(hs):
        for b in hs[i + 1:]:
            assert is_isomorphic(a, b) is None
