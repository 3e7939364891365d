"""Finite topological spaces on carriers of at most 64 points.

Subsets of the carrier are plain Python ints used as bit-vectors: point ``i``
belongs to the set iff bit ``i`` is set.  A finite topology is stored through
its minimal neighbourhoods ``U_x`` (the smallest open set containing ``x``);
every other view (open list, closed list, specialization preorder) is derived
from that table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 64

Subset = int


class TopologyError(ValueError):
    """Base class for invalid inputs to the finite-space constructors."""


class InvalidCarrier(TopologyError):
    pass


class InvalidPreorder(TopologyError):
    pass


class InvalidSubspace(TopologyError):
    pass


class InvalidWindow(TopologyError):
    pass


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


# --- bit-vector helpers ----------------------------------------------------


def mask(points: Iterable[int]) -> Subset:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def members(a: Subset) -> list[int]:
    out = []
    while a:
        low = a & -a
        out.append(low.bit_length() - 1)
        a ^= low
    return out


def submasks(a: Subset) -> Iterator[Subset]:
    """All subsets of ``a``, including ``a`` and the empty set."""
    s = a
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & a


def compress(a: Subset, onto: Subset) -> Subset:
    """Re-index the bits of ``a & onto`` so the points of ``onto`` become 0..k-1."""
    out = 0
    for i, p in enumerate(members(onto)):
        if a >> p & 1:
            out |= 1 << i
    return out


def expand(a: Subset, onto: Subset) -> Subset:
    """Inverse of :func:`compress`."""
    out = 0
    for i, p in enumerate(members(onto)):
        if a >> i & 1:
            out |= 1 << p
    return out


def permute(a: Subset, perm: Sequence[int]) -> Subset:
    out = 0
    for p in members(a):
        out |= 1 << perm[p]
    return out


def format_set(a: Subset, labels: Sequence | None = None) -> str:
    pts = members(a)
    if labels is not None:
        pts = [labels[p] for p in pts]
    return "{" + ",".join(str(p) for p in pts) + "}"


def _check_carrier(n: int) -> None:
    if not 1 <= n <= MAX_POINTS:
        raise InvalidCarrier(f"carrier size must be in 1..{MAX_POINTS}, got {n}")


# --- spaces ------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteSpace:
    """A topology on ``{0, ..., n-1}``.

    ``min_nbhd[x]`` is the smallest open set containing ``x``.  Two spaces are
    equal iff they have the same carrier size and the same open sets; the
    optional ``labels`` only affect printing.
    """

    n: int
    min_nbhd: tuple[Subset, ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        _check_carrier(self.n)
        if len(self.min_nbhd) != self.n:
            raise TopologyError("min_nbhd must have one entry per point")
        for x, u in enumerate(self.min_nbhd):
            if not u >> x & 1:
                raise InvalidPreorder(f"U_{x} does not contain {x}")
            if u >> self.n:
                raise TopologyError(f"U_{x} leaves the carrier")
            for y in members(u):
                if self.min_nbhd[y] & ~u:
                    raise InvalidPreorder(f"U_{y} is not contained in U_{x}")
        if self.labels is not None and len(self.labels) != self.n:
            raise TopologyError("labels must have one entry per point")

    @property
    def full(self) -> Subset:
        return (1 << self.n) - 1

    @cached_property
    def cl_point(self) -> tuple[Subset, ...]:
        """``cl_point[x]`` is the closure of ``{x}``."""
        down = [0] * self.n
        for y, u in enumerate(self.min_nbhd):
            for x in members(u):
                down[x] |= 1 << y
        return tuple(down)

    @cached_property
    def opens(self) -> tuple[Subset, ...]:
        # every open set is a union of minimal neighbourhoods
        family = {0}
        for u in self.min_nbhd:
            family |= {f | u for f in family}
        return tuple(sorted(family))

    @cached_property
    def closeds(self) -> tuple[Subset, ...]:
        return tuple(sorted(self.full & ~u for u in self.opens))

    @property
    def preorder(self) -> frozenset[tuple[int, int]]:
        """Specialization preorder: ``(x, y)`` present iff x is in Cl{y}."""
        return frozenset((x, y) for x in range(self.n) for y in members(self.min_nbhd[x]))

    def leq(self, x: int, y: int) -> bool:
        return bool(self.min_nbhd[x] >> y & 1)

    def label(self, x: int):
        return x if self.labels is None else self.labels[x]

    def fmt(self, a: Subset) -> str:
        return format_set(a, self.labels)

    def check_subset(self, a: Subset) -> None:
        if a < 0 or a >> self.n:
            raise PreconditionError(f"set {a:#x} is not a subset of a {self.n}-point carrier")

    # calculus

    def closure(self, a: Subset) -> Subset:
        out = 0
        for y, u in enumerate(self.min_nbhd):
            if u & a:
                out |= 1 << y
        return out

    def interior(self, a: Subset) -> Subset:
        out = 0
        for y, u in enumerate(self.min_nbhd):
            if not u & ~a:
                out |= 1 << y
        return out

    def is_open(self, a: Subset) -> bool:
        return self.interior(a) == a

    def is_closed(self, a: Subset) -> bool:
        return self.closure(a) == a

    def __repr__(self) -> str:
        opens = self.opens if self.n <= 6 else None
        if opens is None:
            return f"FiniteSpace(n={self.n}, min_nbhd={[self.fmt(u) for u in self.min_nbhd]})"
        return f"FiniteSpace(n={self.n}, opens=[{', '.join(self.fmt(u) for u in opens)}])"


def closure(sp: FiniteSpace, a: Subset) -> Subset:
    return sp.closure(a)


def interior(sp: FiniteSpace, a: Subset) -> Subset:
    return sp.interior(a)


# --- constructors ----------------------------------------------------------


def space_from_min_nbhds(n: int, nbhds: Sequence[Subset], labels=None) -> FiniteSpace:
    return FiniteSpace(n, tuple(nbhds), tuple(labels) if labels is not None else None)


def space_from_opens(n: int, generators: Iterable[Subset], labels=None) -> FiniteSpace:
    """Smallest topology on ``n`` points in which every generator is open."""
    _check_carrier(n)
    full = (1 << n) - 1
    gens = list(generators)
    for g in gens:
        if g < 0 or g & ~full:
            raise TopologyError(f"generator {g:#x} is not a subset of the carrier")
    nbhds = []
    for x in range(n):
        u = full
        for g in gens:
            if g >> x & 1:
                u &= g
        nbhds.append(u)
    return space_from_min_nbhds(n, nbhds, labels)


def space_from_preorder(rel: Sequence[Sequence[bool]]) -> FiniteSpace:
    """Alexandrov topology whose opens are the up-sets of ``rel``.

    ``rel[x][y]`` true means x <= y, i.e. x lies in the closure of {y}.
    """
    n = len(rel)
    _check_carrier(n)
    rows = []
    for x in range(n):
        if len(rel[x]) != n:
            raise InvalidPreorder("relation matrix must be square")
        rows.append(mask(y for y in range(n) if rel[x][y]))
    return space_from_rows(rows)


def space_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> FiniteSpace:
    """Like :func:`space_from_preorder` but the reflexive pairs may be omitted."""
    _check_carrier(n)
    rows = [1 << x for x in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise InvalidPreorder(f"pair ({x}, {y}) outside carrier")
        rows[x] |= 1 << y
    return space_from_rows(rows)


def space_from_rows(rows: Sequence[Subset]) -> FiniteSpace:
    """Space whose specialization preorder has ``rows[x]`` as the up-set of x."""
    n = len(rows)
    _check_carrier(n)
    for x, r in enumerate(rows):
        if not r >> x & 1:
            raise InvalidPreorder(f"relation is not reflexive at {x}")
    for x, r in enumerate(rows):
        for y in members(r):
            if rows[y] & ~r:
                z = members(rows[y] & ~r)[0]
                raise InvalidPreorder(f"relation is not transitive: {x}<={y}<={z} but not {x}<={z}")
    return FiniteSpace(n, tuple(rows))


def discrete(n: int) -> FiniteSpace:
    return space_from_opens(n, [1 << x for x in range(n)])


def indiscrete(n: int) -> FiniteSpace:
    return space_from_opens(n, [])


def sierpinski() -> FiniteSpace:
    return space_from_opens(2, [0b01])


def permute_space(sp: FiniteSpace, perm: Sequence[int]) -> FiniteSpace:
    """Image of ``sp`` under the bijection ``x -> perm[x]``."""
    if sorted(perm) != list(range(sp.n)):
        raise PreconditionError(f"{list(perm)} is not a permutation of {sp.n} points")
    nbhds = [0] * sp.n
    for x, u in enumerate(sp.min_nbhd):
        nbhds[perm[x]] = permute(u, perm)
    return FiniteSpace(sp.n, tuple(nbhds))


def subspace(sp: FiniteSpace, a: Subset) -> FiniteSpace:
    """Relative topology on ``a``; point ``i`` of the result is the i-th member of ``a``.

    The result's ``labels`` record the original label of each point.
    """
    sp.check_subset(a)
    if a == 0:
        raise InvalidSubspace("subspace on the empty set")
    pts = members(a)
    nbhds = [compress(sp.min_nbhd[p], a) for p in pts]
    return FiniteSpace(len(pts), tuple(nbhds), tuple(sp.label(p) for p in pts))


def khalimsky_window(lo: int, hi: int) -> FiniteSpace:
    """The integers ``lo..hi`` as a subspace of the digital line.

    Both endpoints must be odd, so each boundary point is an open singleton
    exactly as in the full line.
    """
    if lo % 2 == 0 or hi % 2 == 0:
        raise InvalidWindow(f"window endpoints must be odd, got [{lo}, {hi}]")
    if lo >= hi:
        raise InvalidWindow(f"empty or degenerate window [{lo}, {hi}]")
    n = hi - lo + 1
    _check_carrier(n)
    gens = [1 << 0, 1 << (n - 1)]
    for centre in range(lo + 1, hi, 2):
        i = centre - lo
        gens.append(mask((i - 1, i, i + 1)))
    return space_from_opens(n, gens, labels=range(lo, hi + 1))


# --- set-class predicates --------------------------------------------------


def is_semi_open(sp: FiniteSpace, a: Subset) -> bool:
    return a & ~sp.closure(sp.interior(a)) == 0


def is_semi_closed(sp: FiniteSpace, a: Subset) -> bool:
    return is_semi_open(sp, sp.full & ~a)


def is_preopen(sp: FiniteSpace, a: Subset) -> bool:
    return a & ~sp.interior(sp.closure(a)) == 0


def is_nowhere_dense(sp: FiniteSpace, a: Subset) -> bool:
    return sp.interior(sp.closure(a)) == 0


def is_dense(sp: FiniteSpace, a: Subset) -> bool:
    return sp.closure(a) == sp.full


def is_simply_open(sp: FiniteSpace, a: Subset) -> bool:
    """Whether ``a`` is the union of an open set and a nowhere dense set.

    If such a decomposition exists, the interior can serve as the open part:
    the leftover ``a - Int(a)`` sits inside the nowhere dense part.
    """
    return is_nowhere_dense(sp, a & ~sp.interior(a))


def is_T0(sp: FiniteSpace) -> bool:
    """Distinct points have distinct minimal neighbourhoods (the preorder is antisymmetric)."""
    return len(set(sp.min_nbhd)) == sp.n


def is_semi_alexandroff(sp: FiniteSpace) -> bool:
    """Every intersection of open sets is semi-open.

    On a finite carrier every intersection of opens is a finite one, so it is
    enough to close the open family under pairwise intersection and test each
    member.
    """
    family = set(sp.opens)
    frontier = list(family)
    while frontier:
        nxt = []
        for u in frontier:
            for v in sp.opens:
                w = u & v
                if w not in family:
                    family.add(w)
                    nxt.append(w)
        frontier = nxt
    return all(is_semi_open(sp, w) for w in family)
