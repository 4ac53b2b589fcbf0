"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line with its timing; ``conftest.py`` prints
them in the terminal summary.  Time limits are asserted, not just reported.
"""

import random
import time
from itertools import combinations

import networkx as nx
import pytest

from oracles import (
    blocking_exists, cross_rank_nx, is_blocking_brute, is_half_graph, local_complement_nx,
    matched_cliques_nx, pivot_nx, replay_nx, to_nx,
)
from test_blocking import prime_patch_instances, reduction_cases
from test_extract_brooms_bounded import connected_graph
from test_extract_brooms_bounded import random_graph as plain_random_graph
from vmkit import delete_vertices, local_complement, pivot, replay
from vmkit.blocking import find_blocking_sequence, patch_bound, reduce_at, shorten_for_patch
from vmkit.campaigns import CampaignConfig, random_graph, run_campaign
from vmkit.extract import (
    ExtractionRefused, anti_matching_clique_star, anti_matching_star_star, chain_clique_star,
    chain_star_star, complete_from_connected, edgeless_from_large, fan_to_cycle, ladder_to_cycle,
    path_to_cycle,
)
from vmkit.families import all_graphs, cycle, fan, make_ladder
from vmkit.rank import cross_rank, cut_rank
from vmkit.search import is_vertex_minor
from vmkit.structure import is_prime
from vmkit.trace import Pivot

RESULTS: list[str] = []


def _report(num: int, name: str, failures: int, elapsed: float, limit: float, detail: str = "") -> None:
    ok = failures == 0 and elapsed < limit
    line = f"{'PASS' if ok else 'FAIL'} {num:>2} {name}: failures={failures} time={elapsed:.1f}s limit={limit:.0f}s"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line)
    assert failures == 0, line
    assert elapsed < limit, line


def _subset(vs, rng, p=0.5):
    return {v for v in vs if rng.random() < p}


def test_01_operation_algebra():
    rng = random.Random(1)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(500):
        n = rng.randint(1, 12)
        g = random_graph(n, rng.random(), rng)
        h = to_nx(g)
        for v in g.vertices():
            gv = local_complement(g, v)
            bad += local_complement(gv, v) != g
            bad += set(map(frozenset, gv.edges())) != set(map(frozenset, local_complement_nx(h, v).edges()))
        for x, y in g.edges():
            p = pivot(g, x, y)
            bad += pivot(p, x, y) != g
            bad += p != local_complement(local_complement(local_complement(g, x), y), x)
            bad += set(map(frozenset, p.edges())) != set(map(frozenset, pivot_nx(h, x, y).edges()))
            for z in g.neighbors(x):
                if z != y:
                    bad += pivot(pivot(g, x, z), y, z) != p
    _report(1, "operation algebra on 500 graphs", bad, time.perf_counter() - t0, 10)


def test_02_rank_invariants():
    rng = random.Random(2)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        n = rng.randint(1, 10)
        g = random_graph(n, rng.random(), rng)
        vs = g.vertices()
        v = rng.choice(vs)
        gv = local_complement(g, v)
        for r in range(n + 1):
            for xs in combinations(vs, r):
                bad += cut_rank(g, xs) != cut_rank(gv, xs)
    for _ in range(1000):
        g = random_graph(rng.randint(2, 12), rng.random(), rng)
        vs = g.vertices()
        while True:
            a, b, a2, b2 = (_subset(vs, rng, 0.3) for _ in range(4))
            if not (a & b or a2 & b2 or (a | a2) & (b & b2) or (a & a2) & (b | b2)):
                break
        lhs = cross_rank(g, a, b) + cross_rank(g, a2, b2)
        bad += lhs < cross_rank(g, a | a2, b & b2) + cross_rank(g, a & a2, b | b2)
    for _ in range(1000):
        g = random_graph(rng.randint(2, 10), rng.random(), rng)
        v = rng.choice(g.vertices())
        rest = [u for u in g.vertices() if u != v]
        x1, y1 = _subset(rest, rng), _subset(rest, rng)
        x2, y2 = set(rest) - x1, set(rest) - y1
        rhs = cut_rank(g, x1 & y1) + cut_rank(g, x2 & y2) - 1
        g_minus = delete_vertices(g, [v])
        bad += cut_rank(g_minus, x1) + cut_rank(delete_vertices(local_complement(g, v), [v]), y1) < rhs
        for w in g.neighbors(v):
            bad += cut_rank(g_minus, x1) + cut_rank(delete_vertices(pivot(g, v, w), [v]), y1) < rhs
    _report(2, "rank invariants", bad, time.perf_counter() - t0, 60)


def test_03_bouchet():
    t0 = time.perf_counter()
    bad = 0
    counts = []
    for n in (5, 6, 7):
        primes = [g for g in all_graphs(n) if is_prime(g)]
        counts.append(len(primes))
        for g in primes:
            w = is_vertex_minor(cycle(5), g)
            bad += w is None or not replay(g, w.trace).verified
    bad += counts != [3, 18, 180]
    _report(3, "C5 in every prime graph on 5-7 vertices", bad, time.perf_counter() - t0, 300,
             f"primes {counts}")


def test_04_join_constructions():
    t0 = time.perf_counter()
    bad = 0
    for n in range(3, 9):
        g, t = anti_matching_clique_star(n)
        bad += not nx.is_isomorphic(replay_nx(g, t), matched_cliques_nx(n - 1))
        g, t = anti_matching_star_star(n)
        bad += not nx.is_isomorphic(replay_nx(g, t), matched_cliques_nx(n - 2))
    for n in range(2, 7):
        g, t = chain_star_star(n)
        bad += not is_half_graph(to_nx(g), n)
        bad += not all(isinstance(s, Pivot) for s in t.steps)
        bad += not nx.is_isomorphic(replay_nx(g, t), nx.path_graph(2 * n))
        g, t = chain_clique_star(n)
        bad += t.keep is not None or any(type(s).__name__ == "Delete" for s in t.steps)
        bad += not nx.is_isomorphic(replay_nx(g, t), nx.path_graph(2 * n))
    _report(4, "join constructions", bad, time.perf_counter() - t0, 30)


def test_05_fans():
    t0 = time.perf_counter()
    bad = 0
    for n in range(1, 9):
        g = fan(3 * n)
        rep = fan_to_cycle(g)
        bad += rep.target != f"cycle {2 * n + 1}" or not replay(g, rep.trace).verified
    _report(5, "fan F_3n to C_2n+1, n = 1..8", bad, time.perf_counter() - t0, 5)


def test_06_ladders():
    t0 = time.perf_counter()
    bad = 0
    lv = make_ladder("deg3", 1)
    rep = ladder_to_cycle(lv, 1, best_effort=True)
    bad += rep is None or "zigzag" not in rep.stats["route"]
    bad += rep is None or rep.target != "cycle 7" or not replay(lv.graph, rep.trace).verified
    rng = random.Random(6)
    for s in range(50):
        a = rng.randint(300, 4300)
        b = max(1, 4608 - a + rng.randint(0, 800))
        lv = make_ladder("random", a, b, rng.choice([0.01, 0.05, 0.2, 0.5, 0.9]), 600 + s)
        assert lv.graph.order >= 4608
        try:
            rep = ladder_to_cycle(lv, 1)
        except ExtractionRefused:
            bad += 1
            continue
        bad += rep.target != "cycle 7" or not replay(lv.graph, rep.trace).verified
    _report(6, "ladders: deg3 zigzag and 50 random guarantee-mode", bad, time.perf_counter() - t0, 600)


def test_07_blocking_sequences():
    t0 = time.perf_counter()
    bad = checked = 0
    for n in range(4, 8):
        for g in all_graphs(n):
            h = to_nx(g)
            vs = g.vertices()
            for a in combinations(vs, 2):
                rest = [v for v in vs if v not in a]
                for b in combinations(rest, 2):
                    checked += 1
                    bad += (find_blocking_sequence(g, a, b) is not None) != blocking_exists(h, a, b)
    for g, a, b, seq in reduction_cases(7, 200):
        k = cross_rank_nx(to_nx(g), a, b)
        m = len(seq)
        for i in range(m):
            g2, rest, k2 = reduce_at(g, a, b, seq, i)
            bad += k2 != cross_rank_nx(to_nx(g2), a, b)
            bad += k2 != (k if m > 1 else k + 1)
    for g, a, b, a0, b0 in prime_patch_instances(17, 100):
        g2, seq, trace = shorten_for_patch(g, a, b, a0, b0)
        bad += len(seq) > patch_bound(a0, b0)
        bad += not is_blocking_brute(to_nx(g2), a, b, seq)
        bad += replay(g, trace).graph != g2
    _report(7, "blocking sequences", bad, time.perf_counter() - t0, 600, f"{checked} exhaustive instances")


def test_08_optimality():
    t0 = time.perf_counter()
    rep = run_campaign(CampaignConfig("optimality"))
    bad = rep.failures + (len(rep.records) != 16)
    _report(8, "optimality checks", bad, time.perf_counter() - t0, 600, f"{rep.summary()['passed']}/16")


def test_09_h3_census():
    t0 = time.perf_counter()
    rep = run_campaign(CampaignConfig("h3-census"))
    _report(9, "H3 census", rep.failures, time.perf_counter() - t0, 300, f"{len(rep.records)} prime minors")


def test_10_bounded_size():
    rng = random.Random(10)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        g = connected_graph(rng.randint(30, 60), rng.choice([0.0, 0.01, 0.03, 0.1, 0.3]), rng)
        rep = complete_from_connected(g, 5)
        bad += not nx.is_isomorphic(replay_nx(g, rep.trace), nx.complete_graph(5))
    for _ in range(200):
        g = plain_random_graph(rng.randint(85, 100), rng.random(), rng)
        h = replay_nx(g, edgeless_from_large(g, 5).trace)
        bad += len(h) != 5 or h.number_of_edges() != 0
    _report(10, "K5 and S5 from large graphs", bad, time.perf_counter() - t0, 300)


def test_11_path_to_cycle_smoke():
    t0 = time.perf_counter()
    bad = 0
    for m in (50, 500, 5000):
        g = cycle(m)
        rep = path_to_cycle(g, 1, best_effort=True)
        bad += rep is None or rep.target != "cycle 7" or not replay(g, rep.trace).verified
    with pytest.raises(ExtractionRefused):
        path_to_cycle(cycle(5), 1)
    _report(11, "path_to_cycle smoke", bad, time.perf_counter() - t0, 120)
