"""Exit criteria for the package, one check per criterion.

Run ``pytest tests/test_acceptance.py -s`` (or ``python -m tests.test_acceptance``)
to see one PASS/FAIL line per criterion. Runtime limits are asserted alongside
the values.
"""

from __future__ import annotations

import os
import random
import time

import numpy as np
import pytest

from weakdiam2.cli import DEFAULT_ROWS, bounds_row
from weakdiam2.construct import build_O, verify_family
from weakdiam2.digraph import (
    OrientedGraph,
    delete_vertex,
    is_absolute_clique,
    push,
    push_all,
    shrink_chain,
    weak_diameter,
)
from weakdiam2.search import SearchConfig, enumerate_all, f2_exact
from weakdiam2.sequence import check_lemma_suite, min_split_sum, split, x_alt_table, x_table

TABLE_1 = {
    10: (18, 24, 18),
    100: (514, 651, 467),
    1000: (8465, 9900, 7976),
    10_000: (117877, 139804, 112727),
    100_000: (1510964, 1699711, 1453411),
    1_000_000: (18431568, 19999600, 17927158),
}


def table_reproduction():
    rows = [bounds_row(n) for n in DEFAULT_ROWS]
    got = {r.n: (r.fhpz, r.klss, r.xn) for r in rows}
    return got == TABLE_1, f"{len(rows)} rows, bit-exact={got == TABLE_1}"


def sequence_cross_validation():
    t = x_table(10**6)
    alt = x_alt_table(t)
    equal = bool((alt[1:] == t[1:]).all())
    increasing = bool((np.diff(t[1:]) > 0).all())
    return equal and increasing, f"x = x_alt on [1, 1e6]: {equal}; strictly increasing: {increasing}"


def lemma_suite():
    report = check_lemma_suite(10**4)
    total = sum(report.checked.values())
    return report.ok, f"{total} inequality instances, violations: {[k for k, v in report.failures.items() if v]}"


def optimal_split_certification():
    t = x_table(2000)
    bad = [n for n in range(6, 2001) if min_split_sum(n, t) != t[split(n)[0]] + t[split(n)[1]]]
    return not bad, f"n in [6, 2000], mismatches: {bad[:5]}"


def construction_validity():
    report = verify_family(2000, clique_cap=512)
    detail = (
        f"arc-count failures {report.arc_count_failures[:5]}, clique failures {report.clique_failures[:5]}, "
        f"hub degree {report.hub_degree_failures[:5]}, hub cut {report.hub_cut_failures[:5]}"
    )
    return report.ok, detail


def exact_oracle():
    expected = [0, 1, 2, 4, 5, 8]
    got, exhaustive = [], []
    for n in range(1, 7):
        out = f2_exact(SearchConfig(n))
        got.append(out.f2)
        exhaustive.append(out.exhaustive)
        if out.witness is None or out.witness.num_arcs != out.f2 or not is_absolute_clique(out.witness):
            return False, f"bad witness at n={n}"
    unpruned = [enumerate_all(n) for n in range(1, 6)]
    ok = got == expected and all(exhaustive) and unpruned == expected[:5]
    return ok, f"f2(1..6) = {got}, exhaustive={all(exhaustive)}, unpruned(1..5) = {unpruned}"


def exact_oracle_n7():
    out = f2_exact(SearchConfig(7, symmetry=True))
    ok = out.f2 == 10 and out.exhaustive and is_absolute_clique(out.witness)
    return ok, f"f2(7) = {out.f2}, exhaustive={out.exhaustive}, nodes={out.nodes_explored} (symmetry cut on)"


def shrink_procedure():
    for n in range(2, 65):
        g = build_O(n)
        steps = shrink_chain(g)
        counts = [g.num_arcs] + [s.graph.num_arcs for s in steps]
        if steps[-1].graph.n != 1:
            return False, f"n={n}: chain stopped at {steps[-1].graph.n} vertices"
        if not all(a > b for a, b in zip(counts, counts[1:])):
            return False, f"n={n}: arc counts not strictly decreasing {counts}"
        if not all(is_absolute_clique(s.graph) for s in steps):
            return False, f"n={n}: intermediate graph is not a clique"
    return True, "chains from O_2..O_64 reach one vertex, strictly decreasing, all cliques"


def _random_graph(rng: random.Random, n: int) -> OrientedGraph:
    p = rng.random()
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph.from_arcs(n, arcs)


def graph_properties(samples: int = 10_000):
    rng = random.Random(1_000_003)
    violations = []
    source_checks = 0
    for i in range(samples):
        g = _random_graph(rng, rng.randint(1, 12))
        v = rng.randrange(g.n)
        h = push(g, v)
        try:
            h.check_invariants()
        except AssertionError as e:
            violations.append(f"push invariants #{i}: {e}")
        if push(h, v) != g:
            violations.append(f"push involution #{i}")
        if (weak_diameter(g) <= 2) != is_absolute_clique(g):
            violations.append(f"diameter/clique equivalence #{i}")
        # make v a source, then test source deletion when the result is a clique
        s = push_all(g, [w for w in range(g.n) if g.has_arc(w, v)])
        s.check_invariants()
        if s.inn[v] == 0 and is_absolute_clique(s):
            source_checks += 1
            if not is_absolute_clique(delete_vertex(s, v)):
                violations.append(f"source deletion #{i}")
    ok = not violations and source_checks > 0
    return ok, f"{samples} random graphs (n <= 12), {source_checks} source deletions, violations: {violations[:3]}"


CRITERIA = [
    (1, "table reproduction", table_reproduction, 1.0),
    (2, "sequence cross-validation", sequence_cross_validation, 5.0),
    (3, "lemma suite", lemma_suite, 60.0),
    (4, "optimal-split certification", optimal_split_certification, 10.0),
    (5, "construction validity", construction_validity, 120.0),
    (6, "exact oracle n <= 6", exact_oracle, 600.0),
    (7, "shrink procedure", shrink_procedure, 60.0),
    (8, "graph property tests", graph_properties, None),
]


def run_criterion(number, name, check, limit):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    bound = "" if limit is None else f" < {limit:g}s"
    print(f"[{status}] criterion {number} ({name}): {detail} [{elapsed:.2f}s{bound}]")
    return ok, in_time, elapsed


@pytest.mark.parametrize("number, name, check, limit", CRITERIA, ids=[f"c{c[0]}-{c[1].replace(' ', '-')}" for c in CRITERIA])
def test_criterion(number, name, check, limit):
    ok, in_time, elapsed = run_criterion(number, name, check, limit)
    assert ok
    assert in_time, f"took {elapsed:.1f}s, limit {limit}s"


def test_stretch_n7_with_symmetry_cut():
    ok, _, _ = run_criterion("6+", "exact oracle n = 7", exact_oracle_n7, None)
    assert ok


@pytest.mark.skipif(not os.environ.get("WEAKDIAM2_SLOW"), reason="set WEAKDIAM2_SLOW=1 (takes minutes)")
def test_stretch_n7_without_symmetry_cut():
    out = f2_exact(SearchConfig(7))
    assert out.f2 == 10 and out.exhaustive


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    run_criterion("6+", "exact oracle n = 7", exact_oracle_n7, None)
    raise SystemExit(0 if all(ok and t for ok, t, _ in results) else 1)
