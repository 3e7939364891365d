"""Local function, star closure and the star topology of a finite ideal space."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteSpace, PreconditionError, Subset, space_from_rows, submasks
from .ideals import PrincipalIdeal


@dataclass(frozen=True)
class IdealSpace:
    sp: FiniteSpace
    ideal: PrincipalIdeal

    def __post_init__(self):
        if self.sp.n != self.ideal.n:
            raise PreconditionError(
                f"ideal lives on {self.ideal.n} points but the space has {self.sp.n}"
            )

    @property
    def M(self) -> Subset:
        return self.ideal.M


def local_function(ctx: IdealSpace, a: Subset) -> Subset:
    """Points every neighbourhood of which meets ``a`` outside the ideal.

    ``U & a`` escaping ``M`` is antitone in ``U``, so only the minimal
    neighbourhood of each point needs testing.
    """
    ctx.sp.check_subset(a)
    M = ctx.M
    out = 0
    for x, u in enumerate(ctx.sp.min_nbhd):
        if u & a & ~M:
            out |= 1 << x
    return out


def local_function_naive(ctx: IdealSpace, a: Subset) -> Subset:
    """Reference version quantifying over every open set containing each point."""
    out = 0
    for x in range(ctx.sp.n):
        if all((u & a) not in ctx.ideal for u in ctx.sp.opens if u >> x & 1):
            out |= 1 << x
    return out


def star_closure(ctx: IdealSpace, a: Subset) -> Subset:
    return a | local_function(ctx, a)


def star_topology(ctx: IdealSpace) -> FiniteSpace:
    """The topology whose closure operator is the star closure.

    A finite topology is fixed by the closures of its singletons, so the star
    topology has specialization preorder ``x <= y iff x in Cl*{y}``.
    """
    n = ctx.sp.n
    cl = [star_closure(ctx, 1 << y) for y in range(n)]
    rows = [0] * n
    for y, c in enumerate(cl):
        for x in range(n):
            if c >> x & 1:
                rows[x] |= 1 << y
    return space_from_rows(rows)


def star_open_sets_naive(ctx: IdealSpace) -> list[Subset]:
    """Every ``A`` with ``Cl*(X - A) = X - A``, by scanning all subsets."""
    full = ctx.sp.full
    return [a for a in range(full + 1) if star_closure(ctx, full & ~a) == full & ~a]


def beta_family(ctx: IdealSpace) -> list[Subset]:
    """All ``U - I`` with ``U`` open and ``I`` in the ideal, sorted and deduplicated."""
    out = set()
    for u in ctx.sp.opens:
        for i in submasks(u & ctx.M):
            out.add(u & ~i)
    return sorted(out)


def beta_is_topology(ctx: IdealSpace) -> bool:
    beta = beta_family(ctx)
    fam = set(beta)
    if 0 not in fam or ctx.sp.full not in fam:
        return False
    return all(a | b in fam and a & b in fam for i, a in enumerate(beta) for b in beta[i + 1:])


def is_I_dense(ctx: IdealSpace, a: Subset) -> bool:
    return local_function(ctx, a) == ctx.sp.full


def is_I_resolvable(ctx: IdealSpace) -> bool:
    """Whether the carrier splits into two disjoint I-dense sets.

    The local function is monotone, so a disjoint I-dense pair ``(A, B)`` can
    always be widened to ``(A, X - A)``.
    """
    return I_resolution(ctx) is not None


def I_resolution(ctx: IdealSpace) -> tuple[Subset, Subset] | None:
    full = ctx.sp.full
    for a in range(full + 1):
        if is_I_dense(ctx, a) and is_I_dense(ctx, full & ~a):
            return a, full & ~a
    return None
