"""Separation axioms of finite (ideal) spaces and checkers for the known implications.

The ideal separation axiom asks, for each member ``I`` of an ideal and each
point ``x`` outside it, for an open-or-closed set containing ``x`` and missing
``I``.  Open-or-closed sets are closed under complement, so this is the same
as asking for an open-or-closed set containing ``I`` and missing ``x``.
:func:`separates` uses the first reading and :func:`separates_set` the
second; the finite-set and compact-set axioms are written with the second.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .core import (
    FiniteSpace,
    PreconditionError,
    Subset,
    is_semi_alexandroff,
    is_T0,
    members,
    permute_space,
    submasks,
    subspace,
)
from .ideals import (
    PrincipalIdeal,
    cd_ideal,
    image_ideal,
    is_completely_codense,
    is_tau_boundary,
    maximal_ideal,
    minimal_ideal,
    IDEAL_NAMES,
    named_collapsed_ideal,
    named_ideal,
    nwd_ideal,
    trace_ideal,
)
from .star import I_resolution, IdealSpace, beta_family, beta_is_topology, star_topology

__all__ = [
    "Axiom",
    "AxiomRef",
    "Claim",
    "Outcome",
    "Verdict",
    "check_proposition",
    "evaluate",
    "is_T0",
    "is_T1",
    "is_T_half",
    "is_T_ideal",
    "is_T_quarter",
    "is_T_third",
    "is_nodec",
    "is_resolvable",
    "is_semi_alexandroff",
    "separates",
    "separates_set",
    "separation_witness",
    "t_ideal_violation",
]


def _M(ideal: PrincipalIdeal | Subset) -> Subset:
    return ideal.M if isinstance(ideal, PrincipalIdeal) else ideal


# --- point separation ------------------------------------------------------


def separation_witness(sp: FiniteSpace, I: Subset, x: int) -> tuple[str, Subset] | None:
    """An open-or-closed set containing ``x`` and disjoint from ``I``, if any.

    The smallest open set around ``x`` is ``U_x`` and the smallest closed one
    is ``Cl{x}``; any witness contains one of them.
    """
    if I >> x & 1:
        raise PreconditionError(f"point {x} lies in the set to be separated")
    if not sp.min_nbhd[x] & I:
        return "open", sp.min_nbhd[x]
    if not sp.cl_point[x] & I:
        return "closed", sp.cl_point[x]
    return None


def separates(sp: FiniteSpace, I: Subset, x: int) -> bool:
    return separation_witness(sp, I, x) is not None


def separates_set(sp: FiniteSpace, I: Subset, x: int) -> bool:
    """Whether some open-or-closed set contains ``I`` and misses ``x``."""
    if I >> x & 1:
        raise PreconditionError(f"point {x} lies in the set to be separated")
    up = 0
    for p in members(I):
        up |= sp.min_nbhd[p]
    return not (up >> x & 1) or not (sp.closure(I) >> x & 1)


def t_ideal_violation(sp: FiniteSpace, ideal: PrincipalIdeal | Subset) -> int | None:
    """A point ``x`` that cannot be separated from ``M - {x}``, or ``None``.

    ``M - {x}`` is the largest ideal member avoiding ``x``, and separability
    only gets harder as the set grows.
    """
    M = _M(ideal)
    for x in range(sp.n):
        if not separates(sp, M & ~(1 << x), x):
            return x
    return None


def is_T_ideal(sp: FiniteSpace, ideal: PrincipalIdeal | Subset) -> bool:
    return t_ideal_violation(sp, ideal) is None


# --- classical axioms ------------------------------------------------------


def is_T1(sp: FiniteSpace) -> bool:
    return all(c == 1 << x for x, c in enumerate(sp.cl_point))


def t_half_violation(sp: FiniteSpace) -> int | None:
    for x in range(sp.n):
        if sp.min_nbhd[x] != 1 << x and sp.cl_point[x] != 1 << x:
            return x
    return None


def is_T_half(sp: FiniteSpace) -> bool:
    """Every singleton is open or closed."""
    return t_half_violation(sp) is None


def is_compact(sp: FiniteSpace, a: Subset) -> bool:
    # every subset of a finite space is compact
    return True


def _small_set_violation(sp: FiniteSpace) -> tuple[Subset, int] | None:
    # finite and compact sets are all subsets here; the hardest one to
    # separate from x is the rest of the carrier
    for x in range(sp.n):
        rest = sp.full & ~(1 << x)
        if is_compact(sp, rest) and not separates_set(sp, rest, x):
            return rest, x
    return None


def is_T_quarter(sp: FiniteSpace) -> bool:
    """Every finite set can be separated from each outside point."""
    return _small_set_violation(sp) is None


def is_T_third(sp: FiniteSpace) -> bool:
    """Every compact set can be separated from each outside point."""
    return _small_set_violation(sp) is None


def nodec_violation(sp: FiniteSpace) -> int | None:
    """A point whose star-topology neighbourhood (nowhere dense ideal) is smaller than in ``sp``."""
    finer = star_topology(IdealSpace(sp, nwd_ideal(sp)))
    for x in range(sp.n):
        if finer.min_nbhd[x] != sp.min_nbhd[x]:
            return x
    return None


def is_nodec(sp: FiniteSpace) -> bool:
    return nodec_violation(sp) is None


def resolution(sp: FiniteSpace) -> tuple[Subset, Subset] | None:
    full = sp.full
    for a in range(full + 1):
        if sp.closure(a) == full and sp.closure(full & ~a) == full:
            return a, full & ~a
    return None


def is_resolvable(sp: FiniteSpace) -> bool:
    """The carrier is the disjoint union of two dense sets (closure is monotone,
    so the pair may be taken complementary)."""
    return resolution(sp) is not None


# --- axiom references for queries and the CLI -------------------------------


class Axiom(Enum):
    T0 = "T0"
    T1 = "T1"
    T_HALF = "T_HALF"
    T_QUARTER = "T_QUARTER"
    T_THIRD = "T_THIRD"
    T_IDEAL = "T_IDEAL"
    T_EMPTY = "T_EMPTY"
    NODEC = "NODEC"
    SEMI_ALEXANDROFF = "SEMI_ALEXANDROFF"
    RESOLVABLE = "RESOLVABLE"
    I_RESOLVABLE = "I_RESOLVABLE"
    BETA_TOPOLOGY = "BETA_TOPOLOGY"
    TAU_BOUNDARY = "TAU_BOUNDARY"
    COMPLETELY_CODENSE = "COMPLETELY_CODENSE"


_IDEAL_AXIOMS = {
    Axiom.T_IDEAL,
    Axiom.I_RESOLVABLE,
    Axiom.BETA_TOPOLOGY,
    Axiom.TAU_BOUNDARY,
    Axiom.COMPLETELY_CODENSE,
}

_ALIASES = {"T_1/2": "T_HALF", "T_1/4": "T_QUARTER", "T_1/3": "T_THIRD", "ALPHA": "NODEC",
            "T_I": "T_IDEAL", "T_0": "T0", "T_1": "T1", "T_EMPTYSET": "T_EMPTY"}


_IDEAL_ALIASES = {"N": "NWD", "P": "POWERSET", "S": "SCATTERED", "EMPTY": "TRIVIAL"}


def _ideal_name(name: str, text: str) -> str:
    name = _IDEAL_ALIASES.get(name.upper(), name.upper())
    if name not in IDEAL_NAMES:
        raise ValueError(f"unknown ideal {name!r} in {text!r}")
    return name


@dataclass(frozen=True)
class AxiomRef:
    """An axiom, optionally bound to a named ideal (``T_IDEAL(NWD)``).

    Ideal-dependent axioms without a bound name use whatever ideal the caller
    supplies at evaluation time.
    """

    axiom: Axiom
    ideal: str | None = None

    @classmethod
    def parse(cls, text: str) -> "AxiomRef":
        m = re.fullmatch(r"\s*([A-Za-z_0-9/]+)\s*(?:\(\s*([A-Za-z_]+)\s*\))?\s*", text)
        if not m:
            raise ValueError(f"cannot parse axiom {text!r}")
        name = m.group(1).upper()
        name = _ALIASES.get(name, name)
        # T_NWD, T_CD, T_F ... as shorthand for T_IDEAL(NAME)
        if name not in Axiom.__members__ and name.startswith("T_") and m.group(2) is None:
            return cls(Axiom.T_IDEAL, _ideal_name(name[2:], text))
        if name not in Axiom.__members__:
            raise ValueError(f"unknown axiom {text!r}")
        ax = Axiom[name]
        ideal = _ideal_name(m.group(2), text) if m.group(2) else None
        if ideal is not None and ax not in _IDEAL_AXIOMS:
            raise ValueError(f"axiom {name} takes no ideal")
        return cls(ax, ideal)

    @property
    def needs_context_ideal(self) -> bool:
        return self.axiom in _IDEAL_AXIOMS and self.ideal is None

    def __str__(self) -> str:
        return self.axiom.value + (f"({self.ideal})" if self.ideal else "")


@dataclass(frozen=True)
class Outcome:
    holds: bool
    witness: str = ""
    data: dict = field(default_factory=dict, compare=False)


def evaluate(ref: AxiomRef, sp: FiniteSpace, ideal: PrincipalIdeal | None = None) -> Outcome:
    """Decide ``ref`` on ``sp`` and describe a witness for the verdict."""
    if ref.axiom in _IDEAL_AXIOMS:
        if ref.ideal is not None:
            ideal = named_ideal(sp, ref.ideal)
        elif ideal is None:
            raise PreconditionError(f"{ref} needs an ideal")
    ax = ref.axiom
    fmt = sp.fmt
    if ax is Axiom.T0:
        for x in range(sp.n):
            for y in range(x + 1, sp.n):
                if sp.min_nbhd[x] == sp.min_nbhd[y]:
                    return Outcome(False, f"points {sp.label(x)} and {sp.label(y)} are topologically indistinguishable")
        return Outcome(True)
    if ax is Axiom.T1:
        # a finite T1 space is discrete: report a non-closed and a non-open singleton
        not_closed = [x for x in range(sp.n) if sp.cl_point[x] != 1 << x]
        if not not_closed:
            return Outcome(True)
        not_open = [x for x in range(sp.n) if sp.min_nbhd[x] != 1 << x]
        x, y = not_closed[0], not_open[0]
        return Outcome(False, f"{fmt(1 << x)} is not closed (closure {fmt(sp.cl_point[x])}); "
                              f"{fmt(1 << y)} is not open (smallest open set {fmt(sp.min_nbhd[y])})",
                       {"not_closed": sp.label(x), "not_open": sp.label(y)})
    if ax is Axiom.T_HALF:
        x = t_half_violation(sp)
        if x is None:
            return Outcome(True)
        return Outcome(False, f"{fmt(1 << x)} is neither open nor closed", {"point": sp.label(x)})
    if ax in (Axiom.T_QUARTER, Axiom.T_THIRD):
        v = _small_set_violation(sp)
        if v is None:
            return Outcome(True)
        s, x = v
        return Outcome(False, f"no open or closed set contains {fmt(s)} and misses {sp.label(x)}",
                       {"set": s, "point": sp.label(x)})
    if ax in (Axiom.T_IDEAL, Axiom.T_EMPTY):
        M = 0 if ax is Axiom.T_EMPTY else ideal.M
        x = t_ideal_violation(sp, M)
        if x is None:
            return Outcome(True)
        rest = M & ~(1 << x)
        return Outcome(False, f"no open or closed set contains {sp.label(x)} and misses {fmt(rest)}",
                       {"set": rest, "point": sp.label(x)})
    if ax is Axiom.NODEC:
        x = nodec_violation(sp)
        if x is None:
            return Outcome(True)
        finer = star_topology(IdealSpace(sp, nwd_ideal(sp)))
        return Outcome(False, f"{fmt(finer.min_nbhd[x])} is open in the nowhere-dense star topology but not in the space")
    if ax is Axiom.SEMI_ALEXANDROFF:
        return Outcome(is_semi_alexandroff(sp))
    if ax is Axiom.RESOLVABLE:
        r = resolution(sp)
        return Outcome(r is not None, f"dense split {fmt(r[0])} | {fmt(r[1])}" if r else "no split into two dense sets")
    ctx = IdealSpace(sp, ideal)
    if ax is Axiom.I_RESOLVABLE:
        r = I_resolution(ctx)
        return Outcome(r is not None, f"I-dense split {fmt(r[0])} | {fmt(r[1])}" if r else "no split into two I-dense sets")
    if ax is Axiom.BETA_TOPOLOGY:
        if beta_is_topology(ctx):
            return Outcome(True)
        beta = set(beta_family(ctx))
        for a in beta:
            for b in beta:
                if a | b not in beta:
                    return Outcome(False, f"{fmt(a)} U {fmt(b)} is not in beta")
                if a & b not in beta:
                    return Outcome(False, f"{fmt(a)} n {fmt(b)} is not in beta")
        return Outcome(False, "beta misses the empty set or the carrier")
    if ax is Axiom.TAU_BOUNDARY:
        w = sp.interior(ideal.M)
        return Outcome(w == 0, "" if w == 0 else f"open set {fmt(w)} lies in the ideal")
    if ax is Axiom.COMPLETELY_CODENSE:
        return Outcome(is_completely_codense(sp, ideal))
    raise AssertionError(ax)


# --- implication checks ----------------------------------------------------


class Claim(Enum):
    P4 = "P4"
    O1i = "O1i"
    O1ii = "O1ii"
    O1iii = "O1iii"
    AL1 = "AL1"
    COR = "COR"
    P1i = "P1i"
    P1ii = "P1ii"
    P1iii = "P1iii"
    P1iv = "P1iv"
    P3 = "P3"
    MP3 = "MP3"
    REMARK_FINER = "REMARK_FINER"
    ALPHA_TN = "ALPHA_TN"
    ITOP = "ITOP"


STATEMENTS = {
    Claim.P4: "a T_J space is T_I for every ideal I contained in J",
    Claim.O1i: "every T_1/2 space is T_I for every ideal I",
    Claim.O1ii: "every space is T_CD",
    Claim.O1iii: "the set X with closed sets I + {X} is a T_I space whose topology is its beta basis; "
                 "if it is also T_J then each F in J - I is an intersection of open sets",
    Claim.AL1: "semi-Alexandroff + T_I + I a tau-boundary implies I completely codense",
    Claim.COR: "under the same hypotheses, resolvable implies I-resolvable",
    Claim.P1i: "T_1/4 iff T_F",
    Claim.P1ii: "T_1/3 implies T_HK",
    Claim.P1iii: "T_1/2 iff T_P",
    Claim.P1iv: "T_I(K) implies T_1/3",
    Claim.P3: "every subspace A of a T_I space is T_(I_A)",
    Claim.MP3: "a topology finer than a T_HK topology is T_HK",
    Claim.REMARK_FINER: "for a topology-independent ideal, a finer topology keeps T_I",
    Claim.ALPHA_TN: "every nodec (alpha) space is T_N",
    Claim.ITOP: "T_I is preserved by ideal homeomorphisms",
}


@dataclass
class Verdict:
    claim: Claim
    holds: bool
    vacuous: bool = False
    space: FiniteSpace | None = None
    ideal: Subset | None = None
    witness: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds


def _implies(claim, sp, ideal, premise: bool, conclusion: bool, **witness) -> Verdict:
    if not premise:
        return Verdict(claim, True, vacuous=True)
    if conclusion:
        return Verdict(claim, True)
    return Verdict(claim, False, space=sp, ideal=ideal.M if ideal else None, witness=witness)


def _is_finer(coarse: FiniteSpace, fine: FiniteSpace) -> bool:
    # every open of `coarse` is open in `fine` iff each fine U_x sits inside the coarse one
    return coarse.n == fine.n and all(f & ~c == 0 for c, f in zip(coarse.min_nbhd, fine.min_nbhd))


def check_proposition(claim: Claim | str, sp: FiniteSpace, ideal: PrincipalIdeal | None = None,
                      aux: Any = None) -> Verdict:
    """Check one implication on a concrete (space, ideal) input.

    ``aux`` carries the extra datum some claims need: a second ideal
    (``P4``, optionally ``O1iii``), a nonempty subspace set (``P3``), a finer
    space (``MP3``, ``REMARK_FINER``) or a permutation (``ITOP``).
    """
    claim = Claim(claim) if isinstance(claim, str) else claim
    if ideal is None:
        ideal = minimal_ideal(sp.n)
    if ideal.n != sp.n:
        raise PreconditionError("ideal and space have different carriers")

    if claim is Claim.P4:
        if not isinstance(aux, PrincipalIdeal) or aux.n != sp.n:
            raise PreconditionError("P4 needs a second ideal on the same carrier")
        premise = ideal <= aux and is_T_ideal(sp, aux)
        x = t_ideal_violation(sp, ideal) if premise else None
        return _implies(claim, sp, ideal, premise, x is None, larger_ideal=aux.M, point=x)

    if claim is Claim.O1i:
        x = t_ideal_violation(sp, ideal)
        return _implies(claim, sp, ideal, is_T_half(sp), x is None, point=x)

    if claim is Claim.O1ii:
        cd = cd_ideal(sp)
        x = t_ideal_violation(sp, cd)
        return _implies(claim, sp, cd, True, x is None, cd=cd.M, point=x)

    if claim is Claim.O1iii:
        return _check_o1iii(sp.n, ideal, aux)

    if claim in (Claim.AL1, Claim.COR):
        premise = is_semi_alexandroff(sp) and is_T_ideal(sp, ideal) and is_tau_boundary(sp, ideal)
        if claim is Claim.AL1:
            return _implies(claim, sp, ideal, premise, premise and is_completely_codense(sp, ideal))
        premise = premise and is_resolvable(sp)
        return _implies(claim, sp, ideal, premise, premise and I_resolution(IdealSpace(sp, ideal)) is not None,
                        dense_split=resolution(sp) if premise else None)

    if claim is Claim.P1i:
        a, b = is_T_quarter(sp), is_T_ideal(sp, named_collapsed_ideal(sp.n, "F"))
        return Verdict(claim, a == b, space=None if a == b else sp,
                       witness={} if a == b else {"t_quarter": a, "t_F": b})

    if claim is Claim.P1ii:
        return _implies(claim, sp, None, is_T_third(sp), is_T_ideal(sp, named_collapsed_ideal(sp.n, "HK")))

    if claim is Claim.P1iii:
        a, b = is_T_half(sp), is_T_ideal(sp, maximal_ideal(sp.n))
        return Verdict(claim, a == b, space=None if a == b else sp,
                       witness={} if a == b else {"t_half": a, "t_P": b})

    if claim is Claim.P1iv:
        return _implies(claim, sp, None, is_T_ideal(sp, named_collapsed_ideal(sp.n, "IK")), is_T_third(sp))

    if claim is Claim.P3:
        if not isinstance(aux, int) or aux <= 0 or aux >> sp.n:
            raise PreconditionError("P3 needs a nonempty subset of the carrier")
        premise = is_T_ideal(sp, ideal)
        if not premise:
            return Verdict(claim, True, vacuous=True)
        sub = subspace(sp, aux)
        x = t_ideal_violation(sub, trace_ideal(ideal, aux))
        return _implies(claim, sp, ideal, True, x is None, subspace=aux,
                        point=None if x is None else sub.label(x))

    if claim in (Claim.MP3, Claim.REMARK_FINER):
        if not isinstance(aux, FiniteSpace) or not _is_finer(sp, aux):
            raise PreconditionError(f"{claim.value} needs a topology finer than the given one")
        if claim is Claim.MP3:
            hk, hk_fine = named_collapsed_ideal(sp.n, "HK"), named_collapsed_ideal(aux.n, "HK")
            return _implies(claim, sp, None, is_T_ideal(sp, hk), is_T_ideal(aux, hk_fine), finer=aux)
        return _implies(claim, sp, ideal, is_T_ideal(sp, ideal), is_T_ideal(aux, ideal), finer=aux)

    if claim is Claim.ALPHA_TN:
        N = nwd_ideal(sp)
        return _implies(claim, sp, N, is_nodec(sp), is_T_ideal(sp, N))

    if claim is Claim.ITOP:
        if aux is None or sorted(aux) != list(range(sp.n)):
            raise PreconditionError("ITOP needs a permutation of the carrier")
        premise = is_T_ideal(sp, ideal)
        if not premise:
            return Verdict(claim, True, vacuous=True)
        img, img_ideal = permute_space(sp, aux), image_ideal(ideal, aux)
        return _implies(claim, sp, ideal, True, is_T_ideal(img, img_ideal), permutation=tuple(aux))

    raise AssertionError(claim)


def _check_o1iii(n: int, ideal: PrincipalIdeal, other: PrincipalIdeal | None) -> Verdict:
    from .core import indiscrete

    claim = Claim.O1iii
    base = indiscrete(n)
    ctx = IdealSpace(base, ideal)
    tau = star_topology(ctx)
    full = (1 << n) - 1
    expected_closed = sorted(set(submasks(ideal.M)) | {full})
    if list(tau.closeds) != expected_closed:
        return Verdict(claim, False, space=tau, ideal=ideal.M,
                       witness={"closed_sets": tau.closeds, "expected": expected_closed})
    if not is_T_ideal(tau, ideal):
        return Verdict(claim, False, space=tau, ideal=ideal.M, witness={"point": t_ideal_violation(tau, ideal)})
    if beta_family(ctx) != list(tau.opens):
        return Verdict(claim, False, space=tau, ideal=ideal.M, witness={"beta": beta_family(ctx)})
    if other is None:
        return Verdict(claim, True)
    if not isinstance(other, PrincipalIdeal) or other.n != n:
        raise PreconditionError("O1iii takes an optional second ideal on the same carrier")
    if not is_T_ideal(tau, other):
        return Verdict(claim, True, vacuous=True)
    for F in submasks(other.M):
        if F in ideal:
            continue
        meet = full
        for u in tau.opens:
            if u & F == F:
                meet &= u
        if meet != F:
            return Verdict(claim, False, space=tau, ideal=ideal.M, witness={"F": F, "second_ideal": other.M})
    return Verdict(claim, True)
