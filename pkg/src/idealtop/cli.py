"""Command-line front end.

Space files are line oriented, one ``key=value`` per line, ``#`` starts a
comment::

    n=3
    opens=[[],[0],[0,1],[0,1,2]]

Exactly one construction key is allowed: ``opens`` (the full open list),
``min_nbhds`` (smallest open set per point), ``preorder`` (pairs ``(x,y)``
meaning x is in the closure of {y}) or ``named`` (``khalimsky:LO:HI``,
``example1``, ``example2``, ``cofinite``).  Ideals are given as a name
(``NWD``, ``CD``, ``SCATTERED``, ``TRIVIAL``, ``POWERSET``, ``F``, ``C``, ``HK``,
``IK``, ``DF``, ``DC``, ``HL``, ``IL``) or as a generator list ``[[0],[1,2]]``;
both forms may be prefixed with ``ideal=`` / ``generators=``.

Exit codes: 0 holds / found, 1 fails / not found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .axioms import Axiom, AxiomRef, evaluate
from .core import FiniteSpace, TopologyError, PreconditionError, khalimsky_window, mask, members
from .core import space_from_min_nbhds, space_from_opens, space_from_pairs
from .ideals import IDEAL_NAMES, PrincipalIdeal, ideal_from_generators, named_ideal
from .pattern import GALLERY, PATTERN_AXIOMS, PatternSpace, gallery_space, pattern_axiom_check
from .search import (
    REPORT_SCHEMA,
    CacheError,
    EnumerationCache,
    SearchQuery,
    enumerate_topologies,
    finer_topologies,
    search,
    verify_diagram,
    verify_paper,
)
from .star import IdealSpace, is_I_dense, local_function, star_closure

SPACE_FORMS = ("opens", "min_nbhds", "preorder", "named")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        super().__init__(message if line is None else f"line {line}, column {col}: {message}")
        self.line, self.col = line, col


# --- value grammar -------------------------------------------------------------
#   value := INT | list | pair
#   list  := '[' [value (',' value)*] ']'
#   pair  := '(' INT ',' INT ')'

_TOKEN = re.compile(r"\s*(?:(-?\d+)|([\[\]\(\),]))")


class _Values:
    def __init__(self, text: str, line: int, col0: int):
        self.text, self.line, self.col0, self.pos = text, line, col0, 0

    def error(self, expected: str):
        rest = self.text[self.pos:].lstrip()
        found = repr(rest[0]) if rest else "end of line"
        col = self.col0 + len(self.text) - len(rest)
        raise ParseError(f"expected {expected}, found {found}", self.line, col)

    def peek(self):
        m = _TOKEN.match(self.text, self.pos)
        return m.group(1) or m.group(2) if m else None

    def take(self, expected: str):
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            self.error(expected)
        self.pos = m.end()
        return m.group(1) or m.group(2)

    def value(self):
        tok = self.peek()
        if tok == "[":
            self.take("'['")
            items = []
            if self.peek() == "]":
                self.take("']'")
                return items
            while True:
                items.append(self.value())
                tok = self.peek()
                if tok == ",":
                    self.take("','")
                elif tok == "]":
                    self.take("']'")
                    return items
                else:
                    self.error("',' or ']'")
        if tok == "(":
            self.take("'('")
            a = self.integer()
            if self.peek() != ",":
                self.error("','")
            self.take("','")
            b = self.integer()
            if self.peek() != ")":
                self.error("')'")
            self.take("')'")
            return (a, b)
        return self.integer()

    def integer(self) -> int:
        tok = self.peek()
        if tok is None or not re.fullmatch(r"-?\d+", tok):
            self.error("an integer")
        return int(self.take("an integer"))

    def finish(self, value):
        if self.text[self.pos:].strip():
            self.error("end of value")
        return value


def parse_value(text: str, line: int = 1, col: int = 1):
    v = _Values(text, line, col)
    return v.finish(v.value())


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if "=" not in body:
            raise ParseError("expected 'key=value'", lineno, len(raw) - len(raw.lstrip()) + 1)
        key, val = body.split("=", 1)
        col = len(key) + 2 + (len(val) - len(val.lstrip()))
        yield lineno, key.strip(), val.strip(), col


# --- documents -----------------------------------------------------------------


@dataclass(frozen=True)
class SpaceDoc:
    n: int | None
    form: str
    data: object  # tuple of point tuples, tuple of pairs, or a name string

    def format(self) -> str:
        lines = [] if self.n is None else [f"n={self.n}"]
        if self.form == "named":
            lines.append(f"named={self.data}")
        elif self.form == "preorder":
            lines.append("preorder=[" + ",".join(f"({x},{y})" for x, y in self.data) + "]")
        else:
            lines.append(f"{self.form}=[" + ",".join("[" + ",".join(map(str, s)) + "]" for s in self.data) + "]")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class IdealDoc:
    named: str | None = None
    generators: tuple[tuple[int, ...], ...] | None = None

    def format(self) -> str:
        if self.named is not None:
            return f"ideal={self.named}\n"
        return "generators=[" + ",".join("[" + ",".join(map(str, s)) + "]" for s in self.generators) + "]\n"


def _point_lists(value, lineno, col, what) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list) or not all(isinstance(s, list) and all(isinstance(p, int) for p in s)
                                              for s in value):
        raise ParseError(f"{what} must be a list of point lists", lineno, col)
    return tuple(tuple(s) for s in value)


def parse_space(text: str) -> SpaceDoc:
    n = None
    form = data = None
    form_line = 1
    for lineno, key, val, col in _lines(text):
        if key == "n":
            if n is not None:
                raise ParseError("duplicate 'n'", lineno, 1)
            n = parse_value(val, lineno, col)
            if not isinstance(n, int) or n < 1:
                raise ParseError("n must be a positive integer", lineno, col)
            continue
        if key not in SPACE_FORMS:
            raise ParseError(f"unknown key {key!r}; expected n, {', '.join(SPACE_FORMS)}", lineno, 1)
        if form is not None:
            raise ParseError(f"second construction form {key!r} (already have {form!r})", lineno, 1)
        form, form_line = key, lineno
        if key == "named":
            data = val
        elif key == "preorder":
            v = parse_value(val, lineno, col)
            if not isinstance(v, list):
                raise ParseError("preorder must be a list of pairs", lineno, col)
            pairs = []
            for item in v:
                if isinstance(item, list) and len(item) == 2 and all(isinstance(p, int) for p in item):
                    item = tuple(item)
                if not (isinstance(item, tuple) and len(item) == 2):
                    raise ParseError("preorder entries must be pairs (x,y)", lineno, col)
                pairs.append(item)
            data = tuple(pairs)
        else:
            data = _point_lists(parse_value(val, lineno, col), lineno, col, key)
    if form is None:
        raise ParseError("missing construction: one of " + ", ".join(SPACE_FORMS))
    if form != "named":
        if n is None:
            raise ParseError("missing 'n'")
        pts = [p for s in data for p in s]
        bad = [p for p in pts if not 0 <= p < n]
        if bad:
            raise ParseError(f"point {bad[0]} out of range 0..{n - 1}", form_line, 1)
    return SpaceDoc(n, form, data)


def parse_ideal(text: str) -> IdealDoc:
    text = text.strip()
    if "=" not in text:
        text = ("generators=" if text.startswith("[") else "ideal=") + text
    doc = None
    for lineno, key, val, col in _lines(text):
        if doc is not None:
            raise ParseError("only one ideal per description", lineno, 1)
        if key in ("ideal", "named"):
            name = val.upper()
            if name not in IDEAL_NAMES:
                raise ParseError(f"unknown ideal {val!r}; expected one of {', '.join(IDEAL_NAMES)}", lineno, col)
            doc = IdealDoc(named=name)
        elif key == "generators":
            doc = IdealDoc(generators=_point_lists(parse_value(val, lineno, col), lineno, col, "generators"))
        else:
            raise ParseError(f"unknown key {key!r}; expected ideal or generators", lineno, 1)
    if doc is None:
        raise ParseError("empty ideal description")
    return doc


def resolve_space(doc: SpaceDoc) -> FiniteSpace | PatternSpace:
    if doc.form == "named":
        name = doc.data
        m = re.fullmatch(r"khalimsky:(-?\d+):(-?\d+)", name)
        if m:
            return khalimsky_window(int(m.group(1)), int(m.group(2)))
        if name in GALLERY:
            return gallery_space(name)
        raise ParseError(f"unknown named space {name!r}; expected khalimsky:LO:HI or one of {sorted(GALLERY)}")
    n = doc.n
    if doc.form == "opens":
        given = {mask(s) for s in doc.data}
        full = (1 << n) - 1
        if 0 not in given or full not in given:
            raise ParseError("open list must contain [] and the whole carrier")
        for a in given:
            for b in given:
                if a | b not in given or a & b not in given:
                    raise ParseError(f"open list is not closed under union/intersection "
                                     f"({sorted(members(a))}, {sorted(members(b))})")
        return space_from_opens(n, given)
    if doc.form == "min_nbhds":
        if len(doc.data) != n:
            raise ParseError(f"min_nbhds needs {n} entries, got {len(doc.data)}")
        return space_from_min_nbhds(n, [mask(s) for s in doc.data])
    return space_from_pairs(n, doc.data)


def resolve_ideal(doc: IdealDoc, sp: FiniteSpace) -> PrincipalIdeal:
    if doc.named is not None:
        return named_ideal(sp, doc.named)
    for g in doc.generators:
        for p in g:
            if not 0 <= p < sp.n:
                raise ParseError(f"ideal generator point {p} out of range 0..{sp.n - 1}")
    return ideal_from_generators(sp.n, [mask(g) for g in doc.generators])


def parse_set(text: str, sp: FiniteSpace) -> int:
    text = text.strip()
    if not text.startswith("["):
        text = f"[{text}]"
    v = parse_value(text)
    if not isinstance(v, list) or not all(isinstance(p, int) for p in v):
        raise ParseError("a set is a list of points")
    labels = list(sp.labels) if sp.labels is not None else None
    pts = []
    for p in v:
        if labels is not None:
            if p not in labels:
                raise ParseError(f"point {p} not in the carrier")
            pts.append(labels.index(p))
        elif not 0 <= p < sp.n:
            raise ParseError(f"point {p} out of range 0..{sp.n - 1}")
        else:
            pts.append(p)
    return mask(pts)


# --- commands ------------------------------------------------------------------


class UsageError(Exception):
    pass


def _load_space(arg: str) -> FiniteSpace | PatternSpace:
    if arg == "-":
        text = sys.stdin.read()
    elif Path(arg).is_file():
        text = Path(arg).read_text(encoding="utf-8")
    elif arg in GALLERY or arg.startswith("khalimsky:"):
        text = f"named={arg}"
    else:
        raise UsageError(f"no such space file: {arg}")
    return resolve_space(parse_space(text))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": REPORT_SCHEMA, **payload}, indent=2, default=str))
    else:
        print(text)


def _finite(sp) -> FiniteSpace:
    if not isinstance(sp, FiniteSpace):
        raise UsageError(f"{sp} is a rule-based infinite space; this command needs a finite one")
    return sp


def cmd_check(args) -> int:
    sp = _load_space(args.space)
    ref = AxiomRef.parse(args.axiom)
    if isinstance(sp, PatternSpace):
        name = {Axiom.T_HALF: "T_HALF", Axiom.T_THIRD: "T_THIRD", Axiom.T_QUARTER: "T_QUARTER"}.get(ref.axiom)
        if ref.axiom is Axiom.T_IDEAL and ref.ideal == "HK":
            name = "T_HK"
        if name is None:
            raise UsageError(f"rule-based spaces support {', '.join(PATTERN_AXIOMS)}")
        v = pattern_axiom_check(sp, name)
        witness = None if v.witness is None else {"set": str(v.witness[0]), "point": v.witness[1]}
        _emit(args, {"command": "check", "space": sp.name, "axiom": name,
                     "verdict": "HOLDS" if v.holds else "FAILS", "witness": witness}, v.describe())
        return 0 if v.holds else 1
    ideal = None
    if args.ideal is not None:
        ideal = resolve_ideal(parse_ideal(args.ideal), sp)
    if ref.needs_context_ideal and ideal is None:
        raise UsageError(f"{ref} needs --ideal")
    out = evaluate(ref, sp, ideal)
    label = str(ref) + (f" with ideal P({sp.fmt(ideal.M)})" if ideal is not None and ref.needs_context_ideal else "")
    text = f"{label}: {'holds' if out.holds else 'fails'}" + (f"\n  {out.witness}" if out.witness else "")
    _emit(args, {"command": "check", "axiom": str(ref), "ideal": None if ideal is None else members(ideal.M),
                 "verdict": "HOLDS" if out.holds else "FAILS", "witness": out.witness or None}, text)
    return 0 if out.holds else 1


def cmd_star(args) -> int:
    sp = _finite(_load_space(args.space))
    ctx = IdealSpace(sp, resolve_ideal(parse_ideal(args.ideal), sp))
    a = parse_set(args.set, sp)
    lf, cl, dense = local_function(ctx, a), star_closure(ctx, a), is_I_dense(ctx, a)
    text = (f"A      = {sp.fmt(a)}\nA*     = {sp.fmt(lf)}\nCl*(A) = {sp.fmt(cl)}\n"
            f"I-dense: {'yes' if dense else 'no'}")
    labels = lambda s: [sp.label(p) for p in members(s)]  # noqa: E731
    _emit(args, {"command": "star", "set": labels(a), "local_function": labels(lf),
                 "star_closure": labels(cl), "I_dense": dense}, text)
    return 0


def cmd_enumerate(args) -> int:
    path = args.cache
    if path is None and os.environ.get("IDEALTOP_CACHE_DIR"):
        path = Path(os.environ["IDEALTOP_CACHE_DIR"]) / f"topologies-{args.n}.txt"
    if path is not None and Path(path).exists():
        cache = EnumerationCache.load(path)
        if cache.n != args.n:
            raise CacheError(f"cache {path} holds n={cache.n}, asked for n={args.n}")
        source = f"cache {path}"
    else:
        cache = EnumerationCache.build(args.n)
        source = "enumeration"
        if path is not None:
            Path(path).parent.mkdir(parents=True, exist_ok=True)
            cache.save(path)
            source += f", written to {path}"
    _emit(args, {"command": "enumerate", "n": args.n, "count": len(cache.spaces), "checksum": cache.checksum},
          f"{len(cache.spaces)} topologies on {args.n} points ({source})")
    return 0


def _split(values) -> list[str]:
    out = []
    for v in values or []:
        # commas separate axioms except inside T_IDEAL(...)
        out.extend(p for p in re.split(r",(?![^()]*\))", v) if p.strip())
    return out


def cmd_search(args) -> int:
    try:
        q = SearchQuery(tuple(_split(args.satisfy)), tuple(_split(args.violate)), max_n=args.max_n,
                        ideal_scope=args.scope, min_n=args.min_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    res = search(q)
    scanned = ", ".join(f"n={n}: {c}" for n, c in res.scanned.items())
    if res.found is None:
        text = f"no example up to n={q.max_n} (scanned {scanned})"
        payload = {"found": False}
    else:
        f = res.found
        text = f"found (scanned {scanned})\n{f.describe()}"
        payload = {"found": True, "n": f.space.n, "opens": [members(u) for u in f.space.opens],
                   "ideal": None if f.ideal is None else members(f.ideal.M),
                   "trace": {k: {"holds": o.holds, "witness": o.witness} for k, o in f.trace.items()}}
    _emit(args, {"command": "search", "satisfy": [str(r) for r in q.satisfy],
                 "violate": [str(r) for r in q.violate], "scanned": res.scanned, **payload}, text)
    return 0 if res.found is not None else 1


def cmd_verify_paper(args) -> int:
    report = verify_paper(args.max_n, seed=args.seed)
    diagram = verify_diagram(args.max_n)
    ok = report.holds and diagram.holds
    if args.json:
        print(json.dumps({**report.to_dict(), "command": "verify-paper", "diagram": diagram.to_dict(),
                          "holds": ok}, indent=2))
    else:
        print(report.to_text())
        print(diagram.to_text())
    return 0 if ok else 1


def cmd_diagram(args) -> int:
    d = verify_diagram(args.max_n)
    _emit(args, {"command": "diagram", **d.to_dict()}, d.to_text())
    return 0 if d.holds else 1


def cmd_finer(args) -> int:
    sp = _finite(_load_space(args.space))
    finer = list(finer_topologies(sp))
    text = "\n".join([f"{len(finer)} topologies at least as fine"] +
                     ["  " + ", ".join(sp.fmt(u) for u in f.opens) for f in finer])
    _emit(args, {"command": "finer", "count": len(finer),
                 "topologies": [[members(u) for u in f.opens] for f in finer]}, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idealtop", description="Separation axioms of ideal topological spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    c = add("check", cmd_check, "decide one axiom on a space")
    c.add_argument("--space", required=True, help="space file, '-' for stdin, or a gallery name")
    c.add_argument("--axiom", required=True, help="e.g. T0, T1, T_HALF, T_IDEAL, T_IDEAL(NWD), NODEC")
    c.add_argument("--ideal", help="ideal name or generator list")

    s = add("star", cmd_star, "local function and star closure of a set")
    s.add_argument("--space", required=True)
    s.add_argument("--ideal", required=True)
    s.add_argument("--set", required=True, help="points, e.g. '[0,2]'")

    e = add("enumerate", cmd_enumerate, "count labeled topologies")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--cache", help="cache file (read if present, written otherwise)")

    q = add("search", cmd_search, "find a space satisfying and violating given axioms")
    q.add_argument("--satisfy", action="append", help="axiom(s), comma separated or repeated")
    q.add_argument("--violate", action="append")
    q.add_argument("--max-n", type=int, default=4)
    q.add_argument("--min-n", type=int, default=1)
    q.add_argument("--scope", choices=("ALL", "NAMED"), default="ALL")

    v = add("verify-paper", cmd_verify_paper, "run every implication check")
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--seed", type=int, default=0)

    d = add("diagram", cmd_diagram, "check the implication diagram")
    d.add_argument("--max-n", type=int, default=4)

    f = add("finer", cmd_finer, "list the topologies finer than a space")
    f.add_argument("--space", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (ParseError, UsageError, CacheError, TopologyError, PreconditionError, ValueError, OSError) as exc:
        print(f"idealtop {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
