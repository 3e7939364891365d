"""Exhaustive enumeration of small topologies, counterexample search and the
verification drivers that run every implication check over the enumeration."""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Sequence

from .axioms import (
    STATEMENTS,
    Axiom,
    AxiomRef,
    Claim,
    Outcome,
    _is_finer,
    check_proposition,
    evaluate,
    is_T0,
)
from .core import (
    FiniteSpace,
    PreconditionError,
    is_nowhere_dense,
    khalimsky_window,
    members,
    space_from_rows,
)
from .ideals import PrincipalIdeal, ideal, is_completely_codense, named_ideal
from .pattern import example1_space, example2_space, pattern_axiom_check

MAX_ENUM = 5

# labeled topologies on n points (OEIS A000798); used to validate caches
KNOWN_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}


def _canonical_key(sp: FiniteSpace) -> tuple:
    return sp.opens


def _preorder_rows(n: int) -> Iterator[tuple[int, ...]]:
    """Every preorder on ``n`` points as up-set rows, built one point at a time.

    A preorder on ``k + 1`` points is a preorder on ``k`` points plus the
    up-set ``U`` and down-set ``D`` of the new point, where ``D`` must lie
    below ``U`` for transitivity to hold through the new point.
    """
    if n == 1:
        yield (1,)
        return
    new = n - 1
    for rows in _preorder_rows(n - 1):
        k = n - 1
        down_of = [0] * k
        for x, r in enumerate(rows):
            for y in members(r):
                down_of[y] |= 1 << x
        for up in range(1 << k):
            if any(rows[y] & ~up for y in members(up)):
                continue
            for down in range(1 << k):
                if any(down_of[y] & ~down for y in members(down)):
                    continue
                if any(rows[d] & up != up for d in members(down)):
                    continue
                # x below the new point also lies below everything above it
                new_rows = [r | (1 << new) | up if (down >> x & 1) else r for x, r in enumerate(rows)]
                yield tuple(new_rows) + ((1 << new) | up,)


@lru_cache(maxsize=None)
def _topologies(n: int) -> tuple[FiniteSpace, ...]:
    spaces = [space_from_rows(rows) for rows in _preorder_rows(n)]
    spaces.sort(key=_canonical_key)
    return tuple(spaces)


def enumerate_topologies(n: int) -> Iterator[FiniteSpace]:
    """Every labeled topology on ``n`` points, once, in canonical (sorted open list) order."""
    if not 1 <= n <= MAX_ENUM:
        raise PreconditionError(f"enumeration supports 1 <= n <= {MAX_ENUM}, got {n}")
    return iter(_topologies(n))


def enumerate_topologies_by_family_filter(n: int) -> list[tuple[int, ...]]:
    """Independent oracle: keep every family of subsets containing the empty set
    and the carrier that is closed under pairwise union and intersection.

    Returns the sorted open lists.  Feasible up to ``n = 4`` (2^14 candidates).
    """
    if not 1 <= n <= 4:
        raise PreconditionError("the family filter only runs for n <= 4")
    full = (1 << n) - 1
    inner = list(range(1, full))
    found = []
    for choice in range(1 << len(inner)):
        fam = [0] + [s for i, s in enumerate(inner) if choice >> i & 1] + [full]
        bits = 0
        for s in fam:
            bits |= 1 << s
        ok = True
        for i, a in enumerate(fam):
            for b in fam[i + 1:]:
                if not (bits >> (a | b) & 1 and bits >> (a & b) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(sorted(fam)))
    found.sort()
    return found


def enumerate_ideals(n: int) -> Iterator[PrincipalIdeal]:
    for M in range(1 << n):
        yield ideal(n, M)


def finer_topologies(sp: FiniteSpace) -> Iterator[FiniteSpace]:
    """Every topology on the same carrier whose opens include those of ``sp``.

    These are the sub-preorders of the specialization preorder of ``sp``.
    """
    if sp.n <= MAX_ENUM:
        for other in _topologies(sp.n):
            if _is_finer(sp, other):
                yield other
        return
    pairs = [(x, y) for x in range(sp.n) for y in members(sp.min_nbhd[x]) if x != y]
    if len(pairs) > 24:
        raise PreconditionError("too many preorder pairs to enumerate finer topologies")
    for choice in range(1 << len(pairs)):
        rows = [1 << x for x in range(sp.n)]
        for i, (x, y) in enumerate(pairs):
            if choice >> i & 1:
                rows[x] |= 1 << y
        if all(rows[y] & ~r == 0 for r in rows for y in members(r)):
            yield space_from_rows(rows)


# --- cache file ----------------------------------------------------------------

CACHE_MAGIC = "IDEALTOP-TOPOLOGIES"
CACHE_VERSION = 1


class CacheError(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationCache:
    """All topologies on ``n`` points, each stored as its minimal-neighbourhood table."""

    n: int
    spaces: tuple[FiniteSpace, ...]

    @property
    def body(self) -> str:
        return "".join(" ".join(f"{u:x}" for u in sp.min_nbhd) + "\n" for sp in self.spaces)

    @property
    def checksum(self) -> str:
        return hashlib.sha256(self.body.encode()).hexdigest()

    @classmethod
    def build(cls, n: int) -> "EnumerationCache":
        return cls(n, tuple(enumerate_topologies(n)))

    def dumps(self) -> str:
        header = (f"{CACHE_MAGIC}\nversion {CACHE_VERSION}\nn {self.n}\n"
                  f"count {len(self.spaces)}\nchecksum {self.checksum}\n")
        return header + self.body

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.dumps())

    @classmethod
    def loads(cls, text: str) -> "EnumerationCache":
        lines = text.split("\n")
        if len(lines) < 5 or lines[0] != CACHE_MAGIC:
            raise CacheError("not a topology cache file")
        try:
            fields = dict(line.split(" ", 1) for line in lines[1:5])
            version, n, count = int(fields["version"]), int(fields["n"]), int(fields["count"])
            checksum = fields["checksum"]
        except (KeyError, ValueError) as exc:
            raise CacheError(f"malformed cache header: {exc}") from None
        if version != CACHE_VERSION:
            raise CacheError(f"cache version {version}, expected {CACHE_VERSION}")
        body = "\n".join(lines[5:])
        if hashlib.sha256(body.encode()).hexdigest() != checksum:
            raise CacheError("cache checksum mismatch")
        rows = [ln for ln in body.split("\n") if ln]
        if len(rows) != count:
            raise CacheError(f"cache declares {count} spaces but holds {len(rows)}")
        spaces = tuple(FiniteSpace(n, tuple(int(h, 16) for h in ln.split())) for ln in rows)
        if len(set(spaces)) != len(spaces):
            raise CacheError("duplicate spaces in cache")
        if n in KNOWN_COUNTS and count != KNOWN_COUNTS[n]:
            raise CacheError(f"cache holds {count} topologies on {n} points, expected {KNOWN_COUNTS[n]}")
        return cls(n, spaces)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "EnumerationCache":
        return cls.loads(Path(path).read_text())


def default_cache_dir() -> Path:
    return Path(os.environ.get("IDEALTOP_CACHE_DIR", Path.home() / ".cache" / "idealtop"))


def load_or_build(n: int, path: str | os.PathLike | None = None) -> EnumerationCache:
    """Read the cache at ``path``; rebuild and rewrite it if missing or stale."""
    path = Path(path) if path is not None else default_cache_dir() / f"topologies-{n}.txt"
    if path.exists():
        try:
            cache = EnumerationCache.load(path)
            if cache.n == n:
                return cache
        except CacheError:
            pass
    cache = EnumerationCache.build(n)
    path.parent.mkdir(parents=True, exist_ok=True)
    cache.save(path)
    return cache


# --- counterexample search ---------------------------------------------------------


@dataclass(frozen=True)
class SearchQuery:
    satisfy: tuple[AxiomRef, ...] = ()
    violate: tuple[AxiomRef, ...] = ()
    max_n: int = 4
    ideal_scope: str = "ALL"
    min_n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "satisfy", tuple(_ref(a) for a in self.satisfy))
        object.__setattr__(self, "violate", tuple(_ref(a) for a in self.violate))
        if set(self.satisfy) & set(self.violate):
            raise ValueError("an axiom cannot be both satisfied and violated")
        if self.ideal_scope not in ("ALL", "NAMED"):
            raise ValueError("ideal_scope must be ALL or NAMED")
        if not 1 <= self.min_n <= self.max_n <= MAX_ENUM:
            raise ValueError(f"need 1 <= min_n <= max_n <= {MAX_ENUM}")

    @property
    def uses_ideal(self) -> bool:
        return any(r.needs_context_ideal for r in self.satisfy + self.violate)


def _ref(a) -> AxiomRef:
    if isinstance(a, AxiomRef):
        return a
    if isinstance(a, Axiom):
        return AxiomRef(a)
    return AxiomRef.parse(a)


@dataclass
class Counterexample:
    space: FiniteSpace
    ideal: PrincipalIdeal | None
    trace: dict[str, Outcome]

    def describe(self) -> str:
        lines = [f"space on {self.space.n} points: opens {[self.space.fmt(u) for u in self.space.opens]}"]
        if self.ideal is not None:
            lines.append(f"ideal: power set of {self.space.fmt(self.ideal.M)}")
        for name, out in self.trace.items():
            verdict = "holds" if out.holds else "fails"
            lines.append(f"  {name}: {verdict}" + (f" ({out.witness})" if out.witness else ""))
        return "\n".join(lines)


@dataclass
class SearchResult:
    query: SearchQuery
    found: Counterexample | None
    scanned: dict[int, int] = field(default_factory=dict)


def candidate_ideals(sp: FiniteSpace, scope: str) -> Iterator[PrincipalIdeal]:
    """Named ideals first, then (for ``ALL``) every remaining principal ideal."""
    seen = set()
    names = ["TRIVIAL", "NWD", "CD"] + (["SCATTERED"] if is_T0(sp) else []) + ["POWERSET"]
    for name in names:
        I = named_ideal(sp, name)
        if I.M not in seen:
            seen.add(I.M)
            yield I
    if scope == "ALL":
        for M in range(1 << sp.n):
            if M not in seen:
                yield ideal(sp.n, M)


def search(q: SearchQuery) -> SearchResult:
    result = SearchResult(q, None)
    for n in range(q.min_n, q.max_n + 1):
        result.scanned[n] = 0
        for sp in enumerate_topologies(n):
            ideals = candidate_ideals(sp, q.ideal_scope) if q.uses_ideal else [None]
            for I in ideals:
                result.scanned[n] += 1
                trace = _match(q, sp, I)
                if trace is not None:
                    result.found = Counterexample(sp, I, trace)
                    return result
    return result


def _match(q: SearchQuery, sp: FiniteSpace, I: PrincipalIdeal | None) -> dict[str, Outcome] | None:
    trace = {}
    for ref in q.satisfy:
        out = evaluate(ref, sp, I)
        if not out.holds:
            return None
        trace[str(ref)] = out
    for ref in q.violate:
        out = evaluate(ref, sp, I)
        if out.holds:
            return None
        trace[str(ref)] = out
    return trace


def find_counterexample(q: SearchQuery) -> Counterexample | None:
    return search(q).found


# --- diagram -----------------------------------------------------------------------

_NODE_REFS = {
    "T1": AxiomRef(Axiom.T1),
    "T_HL": AxiomRef(Axiom.T_IDEAL, "HL"),
    "T_I(L)": AxiomRef(Axiom.T_IDEAL, "IL"),
    "T_C": AxiomRef(Axiom.T_IDEAL, "C"),
    "T_DC": AxiomRef(Axiom.T_IDEAL, "DC"),
    "T0": AxiomRef(Axiom.T0),
    "T_P": AxiomRef(Axiom.T_IDEAL, "POWERSET"),
    "T_1/2": AxiomRef(Axiom.T_HALF),
    "T_HK": AxiomRef(Axiom.T_IDEAL, "HK"),
    "T_I(K)": AxiomRef(Axiom.T_IDEAL, "IK"),
    "T_F": AxiomRef(Axiom.T_IDEAL, "F"),
    "T_DF": AxiomRef(Axiom.T_IDEAL, "DF"),
    "T_EMPTY": AxiomRef(Axiom.T_EMPTY),
}

# nodes whose ideal is the whole power set on every finite carrier
_COLLAPSED = {"T_HL", "T_I(L)", "T_C", "T_DC", "T_HK", "T_I(K)", "T_F", "T_DF"}

DIAGRAM_ARROWS = (
    ("T1", "T_HL"), ("T_HL", "T_I(L)"), ("T_I(L)", "T_C"), ("T_C", "T_DC"), ("T_DC", "T0"),
    ("T1", "T_P"), ("T_HL", "T_HK"), ("T_I(L)", "T_I(K)"), ("T_C", "T_F"), ("T_DC", "T_DF"),
    ("T0", "T_EMPTY"),
    ("T_P", "T_HK"), ("T_HK", "T_I(K)"), ("T_I(K)", "T_F"), ("T_F", "T_DF"), ("T_DF", "T_EMPTY"),
    # the diagonal arrow out of T_DF; its target is read both as T0 and as T_EMPTY
    ("T_DF", "T0"),
    # the node label T_P = T_1/2
    ("T_P", "T_1/2"), ("T_1/2", "T_P"),
)


@dataclass
class ArrowResult:
    source: str
    target: str
    checked: int = 0
    violations: int = 0
    equivalent: bool = True
    target_universal: bool = True
    first_violation: FiniteSpace | None = None

    @property
    def holds(self) -> bool:
        return self.violations == 0

    @property
    def annotation(self) -> str:
        notes = []
        collapsed = [s for s in (self.source, self.target) if s in _COLLAPSED]
        if collapsed:
            notes.append(f"{'/'.join(collapsed)} = T_P on finite carriers")
        if self.target_universal:
            notes.append("target holds everywhere (vacuous)")
        elif self.equivalent and self.holds:
            notes.append("source and target agree on every input")
        return "; ".join(notes)


@dataclass
class DiagramReport:
    max_n: int
    arrows: list[ArrowResult]
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return all(a.holds for a in self.arrows)

    def to_text(self) -> str:
        lines = [f"implication diagram, all topologies with n <= {self.max_n}"]
        for a in self.arrows:
            mark = "HOLDS" if a.holds else "FAILS"
            lines.append(f"  {a.source:>7} -> {a.target:<7} {mark}  {a.checked} spaces, "
                         f"{a.violations} violations  {a.annotation}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "holds": self.holds,
            "arrows": [
                {"source": a.source, "target": a.target, "checked": a.checked, "violations": a.violations,
                 "verdict": "HOLDS" if a.holds else "FAILS", "annotation": a.annotation}
                for a in self.arrows
            ],
        }


def verify_diagram(max_n: int) -> DiagramReport:
    start = time.perf_counter()
    arrows = [ArrowResult(s, t) for s, t in DIAGRAM_ARROWS]
    for n in range(1, max_n + 1):
        for sp in enumerate_topologies(n):
            value = {name: evaluate(ref, sp).holds for name, ref in _NODE_REFS.items()}
            for a in arrows:
                src, tgt = value[a.source], value[a.target]
                a.checked += 1
                a.equivalent &= src == tgt
                a.target_universal &= tgt
                if src and not tgt:
                    a.violations += 1
                    a.first_violation = a.first_violation or sp
    return DiagramReport(max_n, arrows, time.perf_counter() - start)


# --- full verification ---------------------------------------------------------

REPORT_SCHEMA = "idealtop.report/1"


@dataclass
class ClaimResult:
    claim: str
    anchor: str
    inputs: int = 0
    vacuous: int = 0
    violations: int = 0
    witness: str | None = None

    @property
    def holds(self) -> bool:
        return self.violations == 0

    def record(self, holds: bool, vacuous: bool = False, witness: str | None = None) -> None:
        self.inputs += 1
        self.vacuous += vacuous
        if not holds:
            self.violations += 1
            if self.witness is None:
                self.witness = witness

    def merge(self, other: "ClaimResult") -> "ClaimResult":
        return ClaimResult(self.claim, self.anchor, self.inputs + other.inputs, self.vacuous + other.vacuous,
                           self.violations + other.violations, self.witness or other.witness)

    def to_dict(self) -> dict:
        return {"id": self.claim, "anchor": self.anchor, "inputs": self.inputs, "vacuous": self.vacuous,
                "verdict": "HOLDS" if self.holds else "FAILS", "witness": self.witness}


@dataclass
class PaperReport:
    max_n: int
    claims: dict[str, ClaimResult]
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.claims.values())

    def to_dict(self) -> dict:
        return {"schema": REPORT_SCHEMA, "max_n": self.max_n, "holds": self.holds,
                "elapsed_s": round(self.elapsed, 3), "claims": [c.to_dict() for c in self.claims.values()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        width = max(len(k) for k in self.claims)
        lines = [f"claims checked over all topologies with n <= {self.max_n} and all principal ideals"]
        for c in self.claims.values():
            mark = "HOLDS" if c.holds else "FAILS"
            line = f"  {c.claim:<{width}}  {mark}  {c.inputs:>7} inputs ({c.vacuous} vacuous)  {c.anchor}"
            if c.witness:
                line += f"\n      witness: {c.witness}"
            lines.append(line)
        lines.append(f"{sum(c.holds for c in self.claims.values())}/{len(self.claims)} claims hold "
                     f"in {self.elapsed:.1f}s")
        return "\n".join(lines)


GALLERY_CLAIMS = {
    "EX1_T_HK": ("the rule-based space on the line is T_HK", example1_space, "T_HK", True),
    "EX1_NOT_T_THIRD": ("the same space is not T_1/3", example1_space, "T_THIRD", False),
    "EX2_T_QUARTER": ("non-negative integers, opens cofinite through 0: T_1/4", example2_space, "T_QUARTER", True),
    "EX2_NOT_T_HK": ("the same space is not T_HK", example2_space, "T_HK", False),
}

KHALIMSKY_WINDOW = (-5, 5)


def _record(res: ClaimResult, v) -> None:
    witness = None
    if not v.holds:
        witness = f"space {v.space!r}, ideal M={v.ideal}, {v.witness}"
    res.record(v.holds, v.vacuous, witness)


def verify_paper(max_n: int = 4, seed: int = 0, include_gallery: bool = True) -> PaperReport:
    """Run every implication check over all topologies with ``n <= max_n``.

    Each (space, ideal) input draws one random carrier permutation for the
    homeomorphism-invariance check; the permutations come from ``seed``.
    """
    start = time.perf_counter()
    rng = random.Random(seed)
    claims = {c.value: ClaimResult(c.value, STATEMENTS[c]) for c in Claim}
    codense = ClaimResult("CODENSE_IFF_NWD", "I is completely codense iff every member is nowhere dense")
    t_empty = ClaimResult("T_EMPTY", "every space is T_I for the minimal ideal")

    for n in range(1, max_n + 1):
        spaces = list(enumerate_topologies(n))
        ideals = list(enumerate_ideals(n))
        for I in ideals:
            for J in ideals:
                _record(claims["O1iii"], check_proposition(Claim.O1iii, spaces[0], I, J))
        for sp in spaces:
            finer = list(finer_topologies(sp))
            for c in (Claim.O1ii, Claim.P1i, Claim.P1ii, Claim.P1iii, Claim.P1iv, Claim.ALPHA_TN):
                _record(claims[c.value], check_proposition(c, sp))
            for f in finer:
                _record(claims["MP3"], check_proposition(Claim.MP3, sp, None, f))
            t_empty.record(evaluate(AxiomRef(Axiom.T_EMPTY), sp).holds)
            for I in ideals:
                for c in (Claim.O1i, Claim.AL1, Claim.COR):
                    _record(claims[c.value], check_proposition(c, sp, I))
                for J in ideals:
                    _record(claims["P4"], check_proposition(Claim.P4, sp, I, J))
                for A in range(1, 1 << n):
                    _record(claims["P3"], check_proposition(Claim.P3, sp, I, A))
                for f in finer:
                    _record(claims["REMARK_FINER"], check_proposition(Claim.REMARK_FINER, sp, I, f))
                perm = list(range(n))
                rng.shuffle(perm)
                _record(claims["ITOP"], check_proposition(Claim.ITOP, sp, I, perm))
                cc, nwd = is_completely_codense(sp, I), is_nowhere_dense(sp, I.M)
                codense.record(cc == nwd, witness=f"space {sp!r}, M={sp.fmt(I.M)}: codense={cc}, nwd={nwd}")

    out = {k: v for k, v in claims.items()}
    out[codense.claim] = codense
    out[t_empty.claim] = t_empty
    if include_gallery:
        for key, (anchor, make, axiom, expected) in GALLERY_CLAIMS.items():
            v = pattern_axiom_check(make(), axiom)
            res = ClaimResult(key, anchor)
            res.record(v.holds == expected, witness=v.describe())
            if v.witness is not None:
                res.witness = v.describe()
            out[key] = res
        lo, hi = KHALIMSKY_WINDOW
        k = khalimsky_window(lo, hi)
        half, t1 = evaluate(AxiomRef(Axiom.T_HALF), k), evaluate(AxiomRef(Axiom.T1), k)
        res = ClaimResult("KHALIMSKY_T_HALF", f"digital line window [{lo},{hi}] is T_1/2")
        res.record(half.holds, witness=half.witness)
        out[res.claim] = res
        res = ClaimResult("KHALIMSKY_NOT_T1", f"digital line window [{lo},{hi}] is not T_1")
        res.record(not t1.holds, witness=t1.witness)
        res.witness = t1.witness
        out[res.claim] = res
    return PaperReport(max_n, out, time.perf_counter() - start)


def merge_reports(a: PaperReport, b: PaperReport) -> PaperReport:
    """Combine reports from disjoint input partitions."""
    keys = list(a.claims) + [k for k in b.claims if k not in a.claims]
    claims = {}
    for k in keys:
        if k in a.claims and k in b.claims:
            claims[k] = a.claims[k].merge(b.claims[k])
        else:
            claims[k] = a.claims.get(k) or b.claims[k]
    return PaperReport(max(a.max_n, b.max_n), claims, a.elapsed + b.elapsed)


def space_sequence(n: int) -> Sequence[FiniteSpace]:
    return _topologies(n)
