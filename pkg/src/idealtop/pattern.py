"""Rule-based topologies on a countably infinite carrier.

The carrier is the set of non-negative integers.  Sets are represented as
finite-or-cofinite (:class:`FCSet`); a :class:`PatternSpace` decides openness,
compactness and hereditary compactness of such sets by closed-form rules.

Three gallery spaces are provided:

``example1``
    Open sets: all sets avoiding 1 and 2, cofinite sets containing 2 but not
    1, and cofinite sets containing both.  A countable carrier realizes the
    same rules as the real line.  Compact FC-sets are the finite ones and
    the cofinite ones meeting {1, 2}: a cover of a cofinite set containing 1
    (or 2) must use a cofinite member at that point, while a cofinite set
    avoiding both is covered by open singletons.  Any infinite set has an
    infinite subset avoiding {1, 2}, which is not compact, so the
    hereditarily compact sets are the finite ones.
``example2``
    Open sets: the empty set and the cofinite sets containing 0.  Every
    subset is compact (whichever member covers 0 leaves finitely many
    points), hence also hereditarily compact.
``cofinite``
    The cofinite topology: every subset compact.

Interiors are computed from a finite candidate list: ``Int(S)`` is the union
of the open sets among ``S - T`` for ``T`` a set of special points.  For the
gallery spaces this list always contains the true interior (derivations in the
space constructors); it is not claimed for arbitrary rule sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True)
class FCSet:
    """A finite set (``cofinite=False``) or the complement of a finite set."""

    support: frozenset = frozenset()
    cofinite: bool = False

    @classmethod
    def fin(cls, *points: int) -> "FCSet":
        return cls(frozenset(points), False)

    @classmethod
    def cofin(cls, *excluded: int) -> "FCSet":
        return cls(frozenset(excluded), True)

    @classmethod
    def empty(cls) -> "FCSet":
        return cls()

    @classmethod
    def full(cls) -> "FCSet":
        return cls(frozenset(), True)

    def __contains__(self, x: int) -> bool:
        return (x in self.support) != self.cofinite

    def __invert__(self) -> "FCSet":
        return FCSet(self.support, not self.cofinite)

    def __or__(self, other: "FCSet") -> "FCSet":
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return FCSet(a.support | b.support, False)
        if a.cofinite and b.cofinite:
            return FCSet(a.support & b.support, True)
        fin, cof = (a, b) if b.cofinite else (b, a)
        return FCSet(cof.support - fin.support, True)

    def __and__(self, other: "FCSet") -> "FCSet":
        return ~(~self | ~other)

    def __sub__(self, other: "FCSet") -> "FCSet":
        return self & ~other

    def __le__(self, other: "FCSet") -> bool:
        return (self - other).is_empty

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.support

    @property
    def is_full(self) -> bool:
        return self.cofinite and not self.support

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    def truncate(self, window: Iterable[int]) -> frozenset:
        return frozenset(x for x in window if x in self)

    def __str__(self) -> str:
        pts = ",".join(str(p) for p in sorted(self.support))
        return f"X-{{{pts}}}" if self.cofinite else f"{{{pts}}}"


Rule = Callable[[FCSet], bool]


@dataclass(frozen=True)
class PointFact:
    """A claim about every set satisfying a rule, checked as ``holds(S)`` for all ``S``."""

    point: int
    description: str
    holds: Rule


@dataclass(frozen=True)
class PatternSpace:
    name: str
    specials: tuple[int, ...]
    open_rule: Rule
    compact_rule: Rule
    hk_rule: Rule
    facts: tuple[PointFact, ...] = field(default=())

    def is_open(self, s: FCSet) -> bool:
        return self.open_rule(s)

    def is_closed(self, s: FCSet) -> bool:
        return self.open_rule(~s)

    def is_compact(self, s: FCSet) -> bool:
        return self.compact_rule(s)

    def is_hk(self, s: FCSet) -> bool:
        return self.hk_rule(s)

    def interior(self, s: FCSet) -> FCSet:
        out = FCSet.empty()
        inside = [p for p in self.specials if p in s]
        for k in range(len(inside) + 1):
            for drop in combinations(inside, k):
                cand = s - FCSet.fin(*drop)
                if self.open_rule(cand):
                    out = out | cand
        return out

    def closure(self, s: FCSet) -> FCSet:
        return ~self.interior(~s)

    @property
    def generic_points(self) -> tuple[int, int]:
        """Two points outside the special list; all such points behave alike."""
        base = max(self.specials, default=-1) + 1
        return base, base + 1

    def __str__(self) -> str:
        return self.name


# --- gallery ---------------------------------------------------------------


def example1_space() -> PatternSpace:
    def open_rule(u: FCSet) -> bool:
        one, two = 1 in u, 2 in u
        if not one and not two:
            return True
        return u.cofinite and two

    def compact_rule(s: FCSet) -> bool:
        return s.is_finite or 1 in s or 2 in s

    def hk_rule(s: FCSet) -> bool:
        return s.is_finite

    # Interior candidates suffice: a set missing 1 and 2 is open; a cofinite
    # set containing 2 is open; otherwise removing the specials it holds
    # leaves an open set and no larger open subset exists, since opens
    # through 1 or 2 are cofinite and opens through 1 contain 2.
    facts = (
        PointFact(2, "every open set containing 2 is cofinite",
                  lambda u: not (open_rule(u) and 2 in u) or u.cofinite),
        PointFact(2, "every closed set containing 2 contains 1",
                  lambda c: not (open_rule(~c) and 2 in c) or 1 in c),
        PointFact(1, "every open set containing 1 is cofinite and contains 2",
                  lambda u: not (open_rule(u) and 1 in u) or (u.cofinite and 2 in u)),
        PointFact(1, "{1} is closed", lambda _s: open_rule(~FCSet.fin(1))),
    )
    return PatternSpace("example1", (1, 2), open_rule, compact_rule, hk_rule, facts)


def example2_space() -> PatternSpace:
    def open_rule(u: FCSet) -> bool:
        return u.is_empty or (u.cofinite and 0 in u)

    def always(_s: FCSet) -> bool:
        return True

    # Int(S) is S when S is an open set and empty otherwise, since every
    # nonempty open set is cofinite and contains 0.
    facts = (
        PointFact(0, "every nonempty open set is cofinite and contains 0",
                  lambda u: not open_rule(u) or u.is_empty or (u.cofinite and 0 in u)),
        PointFact(0, "{0} is neither open nor closed",
                  lambda _s: not open_rule(FCSet.fin(0)) and not open_rule(FCSet.cofin(0))),
    )
    return PatternSpace("example2", (0,), open_rule, always, always, facts)


def cofinite_space() -> PatternSpace:
    def open_rule(u: FCSet) -> bool:
        return u.is_empty or u.cofinite

    def always(_s: FCSet) -> bool:
        return True

    return PatternSpace("cofinite", (), open_rule, always, always, ())


GALLERY = {
    "example1": example1_space,
    "example2": example2_space,
    "cofinite": cofinite_space,
}


def gallery_space(name: str) -> PatternSpace:
    try:
        return GALLERY[name]()
    except KeyError:
        raise ValueError(f"unknown gallery space {name!r}; choose from {sorted(GALLERY)}") from None


# --- separation --------------------------------------------------------------


def pattern_separates(ps: PatternSpace, I: FCSet, x: int) -> tuple[str, FCSet] | None:
    """An open-or-closed set containing ``x`` and disjoint from ``I``, or ``None``.

    The largest open set missing ``I`` is ``Int(X - I)`` and the smallest
    closed set containing ``x`` is ``Cl{x}``; one of them works if anything does.
    """
    if x in I:
        raise ValueError(f"point {x} lies in {I}")
    big_open = ps.interior(~I)
    if x in big_open:
        return "open", big_open
    small_closed = ps.closure(FCSet.fin(x))
    if (small_closed & I).is_empty:
        return "closed", small_closed
    return None


def pattern_separates_set(ps: PatternSpace, I: FCSet, x: int) -> tuple[str, FCSet] | None:
    """An open-or-closed set containing ``I`` and missing ``x``, or ``None``."""
    if x in I:
        raise ValueError(f"point {x} lies in {I}")
    cl = ps.closure(I)
    if x not in cl:
        return "closed", cl
    big_open = ps.interior(FCSet.cofin(x))
    if I <= big_open:
        return "open", big_open
    return None


def representative_sets(ps: PatternSpace, x: int) -> Iterator[FCSet]:
    """FC-sets avoiding ``x``, one per way of meeting the special and sample points.

    For the gallery spaces, separability of ``I`` from ``x`` depends only on
    whether ``I`` is finite and on which of these points it contains.
    """
    pts = sorted(set(ps.specials) | set(ps.generic_points) | {x})
    others = [p for p in pts if p != x]
    # largest sets first: they are the hardest to separate
    for k in range(len(others), -1, -1):
        for chosen in combinations(others, k):
            yield FCSet(frozenset(p for p in pts if p not in chosen), True)
            yield FCSet.fin(*chosen)


@dataclass
class PatternVerdict:
    space: str
    axiom: str
    holds: bool
    checked: int
    witness: tuple[FCSet, int] | None = None

    def describe(self) -> str:
        if self.holds:
            return f"{self.space}: {self.axiom} holds ({self.checked} representative pairs)"
        I, x = self.witness
        return f"{self.space}: {self.axiom} fails: no open or closed set separates {I} from {x}"


PATTERN_AXIOMS = ("T_HK", "T_THIRD", "T_QUARTER", "T_HALF")


def pattern_axiom_check(ps: PatternSpace, axiom: str) -> PatternVerdict:
    axiom = axiom.upper()
    if axiom == "T_HK":
        member, sep = ps.is_hk, pattern_separates
    elif axiom == "T_THIRD":
        member, sep = ps.is_compact, pattern_separates_set
    elif axiom == "T_QUARTER":
        member, sep = (lambda s: s.is_finite), pattern_separates_set
    elif axiom == "T_HALF":
        member, sep = (lambda s: True), pattern_separates
    else:
        raise ValueError(f"pattern spaces support {PATTERN_AXIOMS}, not {axiom!r}")
    checked = 0
    for x in list(ps.specials) + list(ps.generic_points):
        for I in representative_sets(ps, x):
            if not member(I):
                continue
            checked += 1
            if sep(ps, I, x) is None:
                return PatternVerdict(ps.name, axiom, False, checked, (I, x))
    return PatternVerdict(ps.name, axiom, True, checked)
