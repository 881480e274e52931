import pytest
from hypothesis import given
from hypothesis import strategies as st

from algoprob.spectrum import Distribution, all_words
from algoprob.symmetry import (
    SymmetryOp,
    apply,
    canonical,
    class_count,
    classes,
    classes_to_csv,
    group_distribution,
    orbit,
)
from oracles import brute_orbit_count

words = st.text(alphabet="01", min_size=1, max_size=40)
ops = st.sampled_from(list(SymmetryOp))


def test_apply_examples():
    assert apply(SymmetryOp.REVERSAL, "0011") == "1100"
    assert apply(SymmetryOp.COMPLEMENTATION, "0011") == "1100"
    assert apply(SymmetryOp.REVERSAL_COMPLEMENTATION, "0010") == "1011"
    assert SymmetryOp.IDENTITY("0010") == "0010"


@given(words, ops, ops)
def test_group_laws(s, f, g):
    if f is not SymmetryOp.IDENTITY:
        assert f(f(s)) == s
    assert f.compose(g)(s) == f(g(s))
    assert f.compose(g) == g.compose(f)


def test_rc_is_composition():
    assert SymmetryOp.REVERSAL.compose(SymmetryOp.COMPLEMENTATION) is SymmetryOp.REVERSAL_COMPLEMENTATION


def test_canonical_examples():
    assert canonical("1010") == "0101"
    assert canonical("0000") == "0000" and orbit("0000") == {"0000", "1111"}


@given(words, ops)
def test_canonical_orbit_invariant(s, op):
    assert canonical(op(s)) == canonical(s)
    assert canonical(canonical(s)) == canonical(s)
    assert len(orbit(s)) in (2, 4)


@pytest.mark.parametrize("n,expected", [(10, 272), (4, 6), (1, 1), (2, 2)])
def test_class_count_examples(n, expected):
    assert class_count(n) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_burnside_against_brute_force(n):
    assert class_count(n) == len(classes(n)) == brute_orbit_count(n)


def test_classes_n4():
    cs = classes(4)
    assert len(cs) == 6
    assert ("0101", "1010") in [c.members for c in cs]
    assert [c.representative for c in cs] == sorted(c.representative for c in cs)
    assert [c.members for c in classes(2)] == [("00", "11"), ("01", "10")]


@pytest.mark.parametrize("n", [3, 6, 9])
def test_classes_partition(n):
    seen = [w for c in classes(n) for w in c.members]
    assert sorted(seen) == all_words(n)
    for c in classes(n):
        assert c.representative == min(c.members)
        assert all(op(w) in c.members for w in c.members for op in SymmetryOp)


def test_group_distribution_sums_members():
    d = Distribution.from_mapping(4, {"0101": 5, "1010": 7})
    g = group_distribution(d)
    assert g.counts["0101"] == 12
    assert g.total == d.total
    assert g.member_spread(d)["0101"] == 2


@given(st.lists(st.integers(0, 50), min_size=32, max_size=32))
def test_grouping_conserves_total(counts):
    d = Distribution(5, tuple(counts))
    assert group_distribution(d).total == d.total


def test_tm22_class_ranking(tm22_100):
    ranked = group_distribution(tm22_100).ranked()
    assert ranked[0].word == "0000"
    assert ranked[1].word == "0101"


def test_classes_csv(tm22_100):
    lines = classes_to_csv(group_distribution(tm22_100)).splitlines()
    assert lines[0] == "representative,members,count,m_e,K_e,rank"
    assert len(lines) == 1 + class_count(4)
    assert lines[1].startswith("0000,0000|1111,")
