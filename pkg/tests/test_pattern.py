import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealtop.pattern import (
    GALLERY,
    FCSet,
    cofinite_space,
    example1_space,
    example2_space,
    gallery_space,
    pattern_axiom_check,
    pattern_separates,
    pattern_separates_set,
    representative_sets,
)

import oracles

POINTS = st.frozensets(st.integers(0, 9), max_size=5)
FC = st.builds(FCSet, POINTS, st.booleans())
WINDOW = range(12)  # every support lies below 10, so point 11 stands for the generic tail
SPACES = [make() for make in GALLERY.values()]


def as_set(s: FCSet) -> frozenset:
    return s.truncate(WINDOW)


# --- FC-set algebra --------------------------------------------------------------------


@given(FC, FC)
def test_operations_match_truncation(a, b):
    w = frozenset(WINDOW)
    assert as_set(a | b) == as_set(a) | as_set(b)
    assert as_set(a & b) == as_set(a) & as_set(b)
    assert as_set(a - b) == as_set(a) - as_set(b)
    assert as_set(~a) == w - as_set(a)
    assert (a <= b) == (as_set(a) <= as_set(b))


@given(FC, FC, FC)
def test_boolean_algebra(a, b, c):
    assert ~~a == a
    assert ~(a | b) == ~a & ~b and ~(a & b) == ~a | ~b
    assert a | (a & b) == a and a & (a | b) == a
    assert a & (b | c) == (a & b) | (a & c)
    assert (a | ~a).is_full and (a & ~a).is_empty


def test_fcset_basics():
    assert 7 in FCSet.cofin(1) and 1 not in FCSet.cofin(1)
    assert FCSet.empty().is_empty and FCSet.full().is_full
    assert str(FCSet.cofin(2)) == "X-{2}" and str(FCSet.fin(3, 1)) == "{1,3}"


# --- rules ------------------------------------------------------------------------------


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
def test_empty_and_full_open(ps):
    assert ps.is_open(FCSet.empty()) and ps.is_open(FCSet.full())


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
@given(a=FC, b=FC)
def test_open_rule_closed_under_union_and_meet(ps, a, b):
    if ps.is_open(a) and ps.is_open(b):
        assert ps.is_open(a | b) and ps.is_open(a & b)


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
@given(s=FC)
def test_interior_is_largest_open_subset(ps, s):
    # compare with the best open subset among all sets that differ from s inside the window
    i = ps.interior(s)
    assert ps.is_open(i) and i <= s
    for drop in oracles.subsets(sum(1 << p for p in as_set(s) if p < 11)):
        cand = s - FCSet.fin(*(p for p in range(11) if drop >> p & 1))
        if ps.is_open(cand):
            assert cand <= i
    assert ps.closure(s) == ~ps.interior(~s)


# finite sets that are open, recomputed by hand for each gallery space
FINITE_OPEN = {
    "example1": lambda pts: 1 not in pts and 2 not in pts,
    "example2": lambda pts: not pts,
    "cofinite": lambda pts: not pts,
}


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
def test_truncation_consistency(ps):
    w = range(6)
    full = (1 << 6) - 1
    traces = set()
    for bits in range(full + 1):
        pts = [p for p in w if bits >> p & 1]
        fin, cof = FCSet.fin(*pts), FCSet.cofin(*(p for p in w if p not in pts))
        assert ps.is_open(fin) == FINITE_OPEN[ps.name](set(pts))
        for u in (fin, cof):
            if ps.is_open(u):
                traces.add(sum(1 << p for p in u.truncate(w)))
    assert oracles.is_topology(6, traces)


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
@given(s=FC, t=FC)
def test_compactness_sanity(ps, s, t):
    if s.is_finite:
        assert ps.is_compact(s)
    if ps.is_compact(s) and ps.is_closed(t):
        assert ps.is_compact(s & t)
    if ps.is_hk(s) and t <= s:
        assert ps.is_compact(t)


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
@given(s=FC)
def test_point_facts(ps, s):
    for fact in ps.facts:
        assert fact.holds(s), fact.description


# --- gallery examples -----------------------------------------------------------------------


def test_example1_rules():
    ps = example1_space()
    assert ps.is_open(FCSet.fin(7))
    assert ps.is_open(FCSet.cofin(1))
    assert not ps.is_compact(FCSet.cofin(1, 2))
    assert not ps.is_open(FCSet.fin(1)) and not ps.is_open(FCSet.fin(2))
    assert not ps.is_open(FCSet.cofin(2))


def test_example1_noncompact_on_truncations():
    # the open singletons cover X-{1,2}; any finite subfamily misses a point of every window past it
    ps = example1_space()
    s = FCSet.cofin(1, 2)
    assert all(ps.is_open(FCSet.fin(p)) for p in range(3, 40))
    for k in range(4, 40):
        part = FCSet.fin(*range(3, k))
        assert not s <= part and k in s - part


def test_example2_rules():
    ps = example2_space()
    assert ps.is_open(FCSet.cofin(5))
    assert not ps.is_open(FCSet.fin(0))
    assert ps.is_closed(FCSet.fin(3))


def test_separation_examples():
    e1, e2 = example1_space(), example2_space()
    kind, w = pattern_separates(e1, FCSet.fin(5, 7), 2)
    assert kind == "open" and 2 in w and (w & FCSet.fin(5, 7)).is_empty
    assert pattern_separates(e1, FCSet.cofin(2), 2) is None
    assert pattern_separates(e2, FCSet.cofin(0), 0) is None
    with pytest.raises(ValueError):
        pattern_separates(e1, FCSet.fin(2), 2)


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
def test_separation_complement_symmetry(ps):
    for x in list(ps.specials) + list(ps.generic_points):
        for I in representative_sets(ps, x):
            a = pattern_separates(ps, I, x)
            b = pattern_separates_set(ps, I, x)
            assert (a is None) == (b is None)
            if a is not None:
                kind, w = a
                assert x in w and (w & I).is_empty
                assert ps.is_open(w) if kind == "open" else ps.is_closed(w)
            if b is not None:
                kind, w = b
                assert x not in w and I <= w


@pytest.mark.parametrize("ps", SPACES, ids=lambda p: p.name)
@given(data=st.data())
def test_representative_types_suffice(ps, data):
    # any FC-set avoiding x separates exactly like the representative of its type
    x = data.draw(st.sampled_from(list(ps.specials) + list(ps.generic_points)))
    I = data.draw(FC) - FCSet.fin(x)
    marked = sorted(set(ps.specials) | set(ps.generic_points) | {x})
    rep = next(r for r in representative_sets(ps, x)
               if r.cofinite == I.cofinite and all((p in r) == (p in I) for p in marked))
    assert (pattern_separates(ps, I, x) is None) == (pattern_separates(ps, rep, x) is None)


def test_gallery_verdicts():
    v = pattern_axiom_check(example1_space(), "T_HK")
    assert v.holds and v.checked > 0
    v = pattern_axiom_check(example1_space(), "T_THIRD")
    assert not v.holds
    K, x = v.witness
    assert x == 2 and K.cofinite and 1 in K and example1_space().is_compact(K)
    assert pattern_axiom_check(example2_space(), "T_QUARTER").holds
    v = pattern_axiom_check(example2_space(), "T_HK")
    assert not v.holds and v.witness[1] == 0
    assert "fails" in v.describe()


def test_cofinite_space_is_T1_like():
    ps = cofinite_space()
    for ax in ("T_HALF", "T_QUARTER", "T_THIRD", "T_HK"):
        assert pattern_axiom_check(ps, ax).holds


def test_unknown_names():
    with pytest.raises(ValueError):
        gallery_space("moon")
    with pytest.raises(ValueError):
        pattern_axiom_check(example1_space(), "T0")
