import itertools
import json
import math

import pytest

from idealtop.axioms import Axiom, AxiomRef, is_T0, is_T1, is_T_half
from idealtop.core import PreconditionError, discrete, indiscrete, permute_space, sierpinski
from idealtop.search import (
    DIAGRAM_ARROWS,
    KNOWN_COUNTS,
    CacheError,
    ClaimResult,
    EnumerationCache,
    SearchQuery,
    enumerate_ideals,
    enumerate_topologies,
    enumerate_topologies_by_family_filter,
    find_counterexample,
    finer_topologies,
    load_or_build,
    merge_reports,
    search,
    verify_diagram,
    verify_paper,
)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_counts_agree_with_family_filter(n):
    spaces = list(enumerate_topologies(n))
    assert len(spaces) == KNOWN_COUNTS[n]
    assert len(set(spaces)) == len(spaces)
    assert sorted(sp.opens for sp in spaces) == enumerate_topologies_by_family_filter(n)


@pytest.mark.slow
def test_count_n5():
    spaces = list(enumerate_topologies(5))
    assert len(spaces) == 6942 == len(set(spaces))


@pytest.mark.parametrize("n", [0, 6])
def test_enumeration_range(n):
    with pytest.raises(PreconditionError):
        enumerate_topologies(n)


def test_canonical_order():
    spaces = list(enumerate_topologies(3))
    assert [sp.opens for sp in spaces] == sorted(sp.opens for sp in spaces)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orbit_sizes_divide_factorial(n):
    remaining = set(enumerate_topologies(n))
    total = 0
    while remaining:
        sp = next(iter(remaining))
        orbit = {permute_space(sp, p) for p in itertools.permutations(range(n))}
        assert orbit <= remaining
        assert math.factorial(n) % len(orbit) == 0
        remaining -= orbit
        total += len(orbit)
    assert total == KNOWN_COUNTS[n]


def test_ideals():
    assert len(list(enumerate_ideals(2))) == 4
    Ms = [I.M for I in enumerate_ideals(3)]
    assert len(Ms) == 8 and 0 in Ms and 7 in Ms


def test_finer_examples():
    assert list(finer_topologies(discrete(3))) == [discrete(3)]
    assert len(list(finer_topologies(indiscrete(2)))) == 4
    assert set(finer_topologies(sierpinski())) == {sierpinski(), discrete(2)}


def test_finer_large_carrier_path():
    # above the enumeration bound the sub-preorder construction is used
    from idealtop.core import khalimsky_window
    k = khalimsky_window(-3, 1)
    fine = list(finer_topologies(k))
    assert k in fine and discrete(5) in fine
    assert all(set(k.opens) <= set(f.opens) for f in fine)
    small = {f for f in enumerate_topologies(5) if set(k.opens) <= set(f.opens)}
    assert set(fine) == small


# --- search -----------------------------------------------------------------------


def test_T0_not_T_half():
    res = search(SearchQuery(["T0"], ["T_HALF"], max_n=4))
    ce = res.found
    assert ce.space.n == 3 and is_T0(ce.space) and not is_T_half(ce.space)
    assert ce.space.opens == (0, 0b001, 0b011, 0b111)
    assert res.scanned[1] == 1 and res.scanned[2] == 4
    assert find_counterexample(SearchQuery(["T0"], ["T_HALF"], max_n=2)) is None


def test_T_half_not_T1():
    ce = find_counterexample(SearchQuery(["T_HALF"], ["T1"]))
    assert ce.space.n == 2 and ce.space == sierpinski()


def test_TN_not_nodec():
    ce = find_counterexample(SearchQuery(["T_IDEAL(NWD)"], ["NODEC"]))
    assert ce is not None and ce.space.n <= 4
    from idealtop.axioms import is_nodec, is_T_ideal
    from idealtop.ideals import nwd_ideal
    assert is_T_ideal(ce.space, nwd_ideal(ce.space)) and not is_nodec(ce.space)
    assert "T_IDEAL(NWD)" in ce.describe()


def test_T_empty_never_violated():
    assert find_counterexample(SearchQuery([], ["T_EMPTY"], max_n=4)) is None


def test_named_ideals_come_first():
    ce = find_counterexample(SearchQuery([], ["T_IDEAL"], max_n=3))
    assert ce.ideal is not None
    # the chain space fails for the power set, which is scanned before custom ideals
    assert ce.ideal.M == ce.space.full


def test_query_validation():
    with pytest.raises(ValueError):
        SearchQuery(["T0"], ["T0"])
    with pytest.raises(ValueError):
        SearchQuery(["T0"], [], max_n=6)
    with pytest.raises(ValueError):
        SearchQuery(["T0"], [], ideal_scope="SOME")


# --- diagram and full suite -----------------------------------------------------------


def test_diagram_n3():
    rep = verify_diagram(3)
    assert rep.holds
    by = {(a.source, a.target): a for a in rep.arrows}
    assert set(by) == set(DIAGRAM_ARROWS)
    assert by[("T_DF", "T_EMPTY")].target_universal
    assert "vacuous" in by[("T_DF", "T_EMPTY")].annotation
    assert not by[("T_DF", "T0")].target_universal
    assert "T_DF" in by[("T_F", "T_DF")].annotation
    assert json.loads(json.dumps(rep.to_dict()))["holds"]


def test_diagram_deterministic():
    assert verify_diagram(3).to_dict() == verify_diagram(3).to_dict()


def test_verify_paper_small():
    rep = verify_paper(3)
    assert rep.holds, rep.to_text()
    d = json.loads(rep.to_json())
    assert d["schema"] == "idealtop.report/1"
    assert all(c["anchor"] and c["verdict"] == "HOLDS" for c in d["claims"])
    ids = {c["id"] for c in d["claims"]}
    assert {"P4", "AL1", "ITOP", "EX1_NOT_T_THIRD", "KHALIMSKY_NOT_T1"} <= ids


def test_verify_paper_deterministic():
    a, b = verify_paper(2, seed=5), verify_paper(2, seed=5)
    strip = lambda r: [(c.claim, c.inputs, c.vacuous, c.violations) for c in r.claims.values()]
    assert strip(a) == strip(b)


def test_merge_is_associative_and_commutative():
    a = ClaimResult("X", "", 3, 1, 0)
    b = ClaimResult("X", "", 2, 0, 1, "w")
    c = ClaimResult("X", "", 5, 2, 0)
    key = lambda r: (r.inputs, r.vacuous, r.violations)
    assert key(a.merge(b).merge(c)) == key(a.merge(b.merge(c))) == key(c.merge(b).merge(a))
    r1, r2 = verify_paper(1, include_gallery=False), verify_paper(2, include_gallery=False)
    merged = merge_reports(r1, r2)
    assert merged.claims["P4"].inputs == r1.claims["P4"].inputs + r2.claims["P4"].inputs


# --- cache -------------------------------------------------------------------------


def test_cache_round_trip(tmp_path):
    cache = EnumerationCache.build(3)
    path = tmp_path / "t3.txt"
    cache.save(path)
    back = EnumerationCache.load(path)
    assert back == cache and len(back.spaces) == 29
    assert path.read_text().startswith("IDEALTOP-TOPOLOGIES\nversion 1\nn 3\ncount 29\nchecksum ")


def test_cache_checksum_mismatch(tmp_path):
    text = EnumerationCache.build(3).dumps()
    lines = text.split("\n")
    lines[5] = "1 3 7" if lines[5] != "1 3 7" else "1 2 7"
    with pytest.raises(CacheError, match="checksum"):
        EnumerationCache.loads("\n".join(lines))


@pytest.mark.parametrize("mutate", [
    lambda t: t.replace("IDEALTOP-TOPOLOGIES", "SOMETHING"),
    lambda t: t.replace("version 1", "version 2"),
    lambda t: t.replace("count 29", "count 30"),
    lambda t: "",
])
def test_cache_rejects_bad_headers(mutate):
    with pytest.raises(CacheError):
        EnumerationCache.loads(mutate(EnumerationCache.build(3).dumps()))


def test_cache_rejects_short_enumeration():
    good = EnumerationCache.build(3)
    short = EnumerationCache(3, good.spaces[:-1])
    with pytest.raises(CacheError, match="expected 29"):
        EnumerationCache.loads(short.dumps())


def test_load_or_build_rebuilds_stale(tmp_path, monkeypatch):
    monkeypatch.setenv("IDEALTOP_CACHE_DIR", str(tmp_path))
    cache = load_or_build(2)
    path = tmp_path / "topologies-2.txt"
    assert path.exists() and len(cache.spaces) == 4
    path.write_text(path.read_text().replace("count 4", "count 5"))
    assert len(load_or_build(2).spaces) == 4
    assert EnumerationCache.load(path) == cache
