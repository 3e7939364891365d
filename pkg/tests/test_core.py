import pytest
from hypothesis import given
from hypothesis import strategies as st

from idealtop.core import (
    InvalidCarrier,
    InvalidPreorder,
    InvalidSubspace,
    InvalidWindow,
    closure,
    discrete,
    indiscrete,
    interior,
    is_dense,
    is_nowhere_dense,
    is_preopen,
    is_semi_alexandroff,
    is_semi_closed,
    is_semi_open,
    is_simply_open,
    khalimsky_window,
    mask,
    members,
    permute,
    sierpinski,
    space_from_min_nbhds,
    space_from_opens,
    space_from_pairs,
    space_from_preorder,
    subspace,
)

import oracles
from conftest import family_spaces, spaces


# --- constructors ----------------------------------------------------------------


def test_opens_single_generator_is_sierpinski():
    assert space_from_opens(2, [0b01]).opens == (0, 0b01, 0b11)


def test_opens_no_generators_is_trivial():
    assert space_from_opens(3, []).opens == (0, 0b111)


def test_opens_one_point():
    assert space_from_opens(1, [1]).opens == (0, 1)


@pytest.mark.parametrize("n", [0, 65, -1])
def test_carrier_bounds(n):
    with pytest.raises(InvalidCarrier):
        space_from_opens(n, [])


def test_generator_outside_carrier():
    with pytest.raises(ValueError):
        space_from_opens(2, [0b100])


def test_preorder_identity_is_discrete():
    rel = [[x == y for y in range(3)] for x in range(3)]
    sp = space_from_preorder(rel)
    assert len(sp.opens) == 8 and sp == discrete(3)


def test_preorder_full_is_trivial():
    sp = space_from_preorder([[True] * 3 for _ in range(3)])
    assert sp.opens == (0, 0b111)


def test_preorder_pair_gives_sierpinski():
    # 0 <= 1 means 1 lies in every open set containing 0
    sp = space_from_pairs(2, [(0, 0), (1, 1), (0, 1)])
    assert sp == space_from_opens(2, [0b10])
    assert sp.opens == (0, 0b10, 0b11)


def test_preorder_must_be_reflexive():
    with pytest.raises(InvalidPreorder):
        space_from_preorder([[False, True], [False, True]])


def test_preorder_must_be_transitive():
    rel = [[True, True, False], [False, True, True], [False, False, True]]
    with pytest.raises(InvalidPreorder):
        space_from_preorder(rel)


def test_min_nbhds_must_contain_point():
    with pytest.raises(InvalidPreorder):
        space_from_min_nbhds(2, [0b10, 0b10])


def test_sierpinski_opens():
    assert sierpinski().opens == (0, 0b01, 0b11)


# --- calculus -----------------------------------------------------------------------


def test_sierpinski_closures():
    sp = sierpinski()
    assert closure(sp, 0b01) == 0b11
    assert closure(sp, 0b10) == 0b10


@given(spaces())
def test_empty_closure(sp):
    assert closure(sp, 0) == 0 and interior(sp, sp.full) == sp.full


def test_sierpinski_set_classes():
    sp = sierpinski()
    assert not is_semi_open(sp, 0b10)
    assert is_semi_open(sp, 0b11)
    assert not is_preopen(sp, 0b10)
    assert is_nowhere_dense(sp, 0b10)
    assert is_simply_open(sp, 0b10)


def test_trivial_topology_preopen_and_dense():
    sp = indiscrete(3)
    for a in range(1, 8):
        assert is_preopen(sp, a) and is_dense(sp, a)


def test_family_agrees_with_oracle():
    for n, opens, sp in family_spaces(4):
        assert sorted(sp.opens) == sorted(opens)
        for a in range(1 << n):
            assert closure(sp, a) == oracles.cl(n, opens, a)
            assert interior(sp, a) == oracles.interior(n, opens, a)
            assert is_nowhere_dense(sp, a) == oracles.is_nwd(n, opens, a)
            assert is_preopen(sp, a) == oracles.is_preopen(n, opens, a)
            assert is_semi_open(sp, a) == oracles.is_semi_open(n, opens, a)


def test_simply_open_forms_agree():
    # open-union-nwd form, its brute-force oracle, and the semi-open-meets-semi-closed form
    for n, opens, sp in family_spaces(3):
        for a in range(1 << n):
            via_oracle = oracles.is_simply_open(n, opens, a)
            via_meet = any(is_semi_open(sp, s) and is_semi_closed(sp, c) and s & c == a
                           for s in range(1 << n) for c in range(1 << n))
            assert is_simply_open(sp, a) == via_oracle == via_meet


@given(spaces(), st.data())
def test_space_invariants(sp, data):
    fam = set(sp.opens)
    assert 0 in fam and sp.full in fam
    assert all(a | b in fam and a & b in fam for a in fam for b in fam)
    for x, u in enumerate(sp.min_nbhd):
        assert u in fam
        assert u == _meet(v for v in fam if v >> x & 1)
    # opens are exactly the up-sets of the preorder
    ups = [a for a in range(sp.full + 1)
           if all(not (a >> x & 1) or (a >> y & 1) for x, y in sp.preorder)]
    assert ups == sorted(sp.opens)
    rel = [[sp.leq(x, y) for y in range(sp.n)] for x in range(sp.n)]
    assert space_from_preorder(rel) == sp


def _meet(sets):
    out = -1
    for s in sets:
        out &= s
    return out


@given(spaces(), st.integers(0, 15), st.integers(0, 15))
def test_kuratowski(sp, a, b):
    a &= sp.full
    b &= sp.full
    c, i = sp.closure, sp.interior
    assert c(a) & a == a and c(c(a)) == c(a) and c(a | b) == c(a) | c(b)
    assert i(a) & ~a == 0 and i(i(a)) == i(a) and i(a & b) == i(a) & i(b)
    if a & ~b == 0:
        assert c(a) & ~c(b) == 0 and i(a) & ~i(b) == 0
    assert c(a) == sp.full & ~i(sp.full & ~a)


@given(spaces(), st.integers(0, 15))
def test_set_class_relations(sp, a):
    a &= sp.full
    if sp.is_open(a):
        assert is_semi_open(sp, a) and is_preopen(sp, a) and is_simply_open(sp, a)
    if is_nowhere_dense(sp, a):
        assert interior(sp, a) == 0 and is_simply_open(sp, a)
    assert is_semi_closed(sp, a) == is_semi_open(sp, sp.full & ~a)


@given(spaces())
def test_semi_alexandroff_on_finite(sp):
    assert is_semi_alexandroff(sp)


# --- subspaces and Khalimsky windows ---------------------------------------------------


def test_subspace_full_is_identity():
    sp = space_from_opens(3, [0b001, 0b011])
    assert subspace(sp, 0b111) == sp


def test_subspace_single_point():
    assert subspace(sierpinski(), 0b10).opens == (0, 1)


def test_subspace_of_chain():
    sp = space_from_opens(3, [0b001, 0b011])
    sub = subspace(sp, 0b110)
    # {1} -> 0 and {1,2} -> {0,1} after re-indexing
    assert sub.opens == (0, 0b01, 0b11)
    assert sub.labels == (1, 2)


def test_empty_subspace():
    with pytest.raises(InvalidSubspace):
        subspace(sierpinski(), 0)


@given(spaces(), st.integers(1, 15))
def test_subspace_opens_are_traces(sp, a):
    a &= sp.full
    if a == 0:
        return
    sub = subspace(sp, a)
    from idealtop.core import compress
    assert sorted(sub.opens) == sorted({compress(u & a, a) for u in sp.opens})


def test_khalimsky_small_window():
    k = khalimsky_window(-1, 1)
    assert k.n == 3 and k.labels == (-1, 0, 1)
    assert k == space_from_opens(3, [0b111, 0b001, 0b100])


def test_khalimsky_window_points():
    k = khalimsky_window(-3, 3)
    zero, one = k.labels.index(0), k.labels.index(1)
    assert k.is_closed(1 << zero) and not k.is_open(1 << zero)
    assert k.is_open(1 << one)
    from idealtop.axioms import is_T1, is_T_half
    assert not is_T1(k) and is_T_half(k)


@pytest.mark.parametrize("lo,hi", [(-2, 3), (-3, 2), (3, 1), (1, 1)])
def test_khalimsky_bad_window(lo, hi):
    with pytest.raises(InvalidWindow):
        khalimsky_window(lo, hi)


def test_khalimsky_window_is_subspace_of_larger():
    big = khalimsky_window(-7, 7)
    small = khalimsky_window(-3, 3)
    keep = mask(i for i, v in enumerate(big.labels) if -3 <= v <= 3)
    assert subspace(big, keep) == small


# --- bit helpers ---------------------------------------------------------------------


@given(st.lists(st.integers(0, 63), unique=True))
def test_mask_members_round_trip(pts):
    assert members(mask(pts)) == sorted(pts)


@given(st.permutations(range(5)), st.integers(0, 31))
def test_permute_preserves_size(perm, a):
    assert bin(permute(a, perm)).count("1") == bin(a).count("1")
