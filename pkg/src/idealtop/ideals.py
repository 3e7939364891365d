"""Ideals on finite carriers.

On a finite carrier every ideal is principal: the union of all members is
itself a member, so the ideal is exactly the power set of that union.  An
ideal is therefore stored as its maximal element ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .core import (
    FiniteSpace,
    PreconditionError,
    Subset,
    compress,
    format_set,
    is_T0,
    is_nowhere_dense,
    is_preopen,
    members,
    permute,
    submasks,
)
from .core import _check_carrier


class IdealTag(Enum):
    CUSTOM = "CUSTOM"
    TRIVIAL = "TRIVIAL"
    POWERSET = "POWERSET"
    NWD = "NWD"
    CLOSED_DISCRETE = "CD"
    SCATTERED = "SCATTERED"
    # ideals that coincide with POWERSET on every finite carrier
    FINITE = "F"
    COUNTABLE = "C"
    HEREDITARILY_COMPACT = "HK"
    COMPACT_SUBSETS = "IK"
    DISCRETELY_FINITE = "DF"
    DISCRETELY_COUNTABLE = "DC"
    HEREDITARILY_LINDELOF = "HL"
    LINDELOF_SUBSETS = "IL"

    @property
    def collapsed(self) -> bool:
        return self.value in COLLAPSED_NAMES


COLLAPSED_NAMES = ("F", "C", "HK", "IK", "DF", "DC", "HL", "IL")


class FamilyKind(Enum):
    IDEAL = "ideal"
    SUBIDEAL = "subideal"
    FA_FAMILY = "FA-family"


@dataclass(frozen=True)
class PrincipalIdeal:
    n: int
    M: Subset
    tag: IdealTag = IdealTag.CUSTOM

    def __post_init__(self):
        _check_carrier(self.n)
        if self.M < 0 or self.M >> self.n:
            raise PreconditionError(f"M={self.M:#x} is not a subset of a {self.n}-point carrier")

    def __contains__(self, s: Subset) -> bool:
        return s & ~self.M == 0

    def members(self) -> Iterable[Subset]:
        return submasks(self.M)

    def __le__(self, other: "PrincipalIdeal") -> bool:
        return self.n == other.n and self.M & ~other.M == 0

    def __str__(self) -> str:
        name = "" if self.tag is IdealTag.CUSTOM else f"{self.tag.value}:"
        return f"{name}P({format_set(self.M)})"


def ideal(n: int, M: Subset) -> PrincipalIdeal:
    """Principal ideal with a tag chosen for the two trivial cases."""
    full = (1 << n) - 1
    tag = IdealTag.TRIVIAL if M == 0 else IdealTag.POWERSET if M == full else IdealTag.CUSTOM
    return PrincipalIdeal(n, M, tag)


def ideal_from_generators(n: int, gens: Iterable[Subset]) -> PrincipalIdeal:
    M = 0
    for g in gens:
        if g < 0 or g >> n:
            raise PreconditionError(f"generator {g:#x} is not a subset of a {n}-point carrier")
        M |= g
    return ideal(n, M)


def minimal_ideal(n: int) -> PrincipalIdeal:
    return PrincipalIdeal(n, 0, IdealTag.TRIVIAL)


def maximal_ideal(n: int) -> PrincipalIdeal:
    return PrincipalIdeal(n, (1 << n) - 1, IdealTag.POWERSET)


def nwd_ideal(sp: FiniteSpace) -> PrincipalIdeal:
    # finite unions of nowhere dense sets are nowhere dense, so the nwd points form M
    M = 0
    for x in range(sp.n):
        if is_nowhere_dense(sp, 1 << x):
            M |= 1 << x
    return PrincipalIdeal(sp.n, M, IdealTag.NWD)


def cd_ideal(sp: FiniteSpace) -> PrincipalIdeal:
    """Closed and discrete sets.

    A set is closed and discrete iff all its singletons are closed.  One way:
    finitely many closed points form a closed set, and if ``y`` lay in
    ``U_x`` for another member ``x`` then ``x`` would be in ``Cl{y} = {y}``.
    Conversely, for a closed discrete ``A`` and ``z`` in ``Cl{x}``, ``z != x``,
    the point ``z`` has ``x`` in every neighbourhood, so ``A`` is not discrete
    at ``z``.  Hence CD is hereditary and its maximal member collects the
    closed points.
    """
    M = 0
    for x in range(sp.n):
        if sp.cl_point[x] == 1 << x:
            M |= 1 << x
    return PrincipalIdeal(sp.n, M, IdealTag.CLOSED_DISCRETE)


def isolated_points(sp: FiniteSpace, a: Subset) -> Subset:
    """Points of ``a`` that are isolated in the subspace ``a``."""
    out = 0
    for x in members(a):
        if sp.min_nbhd[x] & a == 1 << x:
            out |= 1 << x
    return out


def is_scattered(sp: FiniteSpace, a: Subset) -> bool:
    """Peel isolated points off ``a`` until nothing is left or nothing peels."""
    while a:
        iso = isolated_points(sp, a)
        if not iso:
            return False
        a &= ~iso
    return True


def scattered_ideal(sp: FiniteSpace) -> PrincipalIdeal:
    if not is_T0(sp):
        raise PreconditionError("the scattered sets form an ideal only on T0 spaces")
    a, M = sp.full, 0
    while a:
        iso = isolated_points(sp, a)
        if not iso:
            break
        M |= iso
        a &= ~iso
    # T0 finite: the preorder is a partial order, so each layer has a maximal point
    # and the peel exhausts the carrier
    return PrincipalIdeal(sp.n, M, IdealTag.SCATTERED)


def named_collapsed_ideal(n: int, name: str) -> PrincipalIdeal:
    """One of F, C, HK, IK, DF, DC, HL, IL: all equal the power set on a finite carrier."""
    if name not in COLLAPSED_NAMES:
        raise PreconditionError(f"unknown collapsed ideal {name!r}")
    return PrincipalIdeal(n, (1 << n) - 1, IdealTag(name))


def named_ideal(sp: FiniteSpace, name: str) -> PrincipalIdeal:
    name = name.upper()
    if name in ("TRIVIAL", "EMPTY"):
        return minimal_ideal(sp.n)
    if name in ("POWERSET", "P"):
        return maximal_ideal(sp.n)
    if name in ("NWD", "N"):
        return nwd_ideal(sp)
    if name == "CD":
        return cd_ideal(sp)
    if name in ("SCATTERED", "S"):
        return scattered_ideal(sp)
    if name in COLLAPSED_NAMES:
        return named_collapsed_ideal(sp.n, name)
    raise PreconditionError(f"unknown ideal name {name!r}")


IDEAL_NAMES = ("TRIVIAL", "NWD", "CD", "SCATTERED", "POWERSET") + COLLAPSED_NAMES


def trace_ideal(I: PrincipalIdeal, a: Subset) -> PrincipalIdeal:
    """The ideal ``{J in I : J <= a}`` on the subspace ``a``, re-indexed like :func:`core.subspace`."""
    k = bin(a).count("1")
    if k == 0:
        raise PreconditionError("trace on the empty set")
    return ideal(k, compress(I.M & a, a))


def image_ideal(I: PrincipalIdeal, perm: Sequence[int]) -> PrincipalIdeal:
    if sorted(perm) != list(range(I.n)):
        raise PreconditionError(f"{list(perm)} is not a permutation of {I.n} points")
    return PrincipalIdeal(I.n, permute(I.M, perm), I.tag)


def is_tau_boundary(sp: FiniteSpace, I: PrincipalIdeal) -> bool:
    # the open members of I are the open subsets of M; they are all empty iff Int M is
    return sp.interior(I.M) == 0


def is_completely_codense(sp: FiniteSpace, I: PrincipalIdeal) -> bool:
    """No nonempty preopen set belongs to ``I``."""
    return not any(s and is_preopen(sp, s) for s in submasks(I.M))


def family_kind(family: Iterable[Subset]) -> FamilyKind | None:
    """Classify an explicit family of subsets; ``None`` if it is neither hereditary nor union-closed."""
    fam = set(family)
    if not fam:
        return None
    hereditary = all(t in fam for s in fam for t in submasks(s))
    additive = all(s | t in fam for s in fam for t in fam)
    if hereditary and additive:
        return FamilyKind.IDEAL
    if hereditary:
        return FamilyKind.SUBIDEAL
    if additive:
        return FamilyKind.FA_FAMILY
    return None
