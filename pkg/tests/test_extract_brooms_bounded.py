import random

import networkx as nx
import pytest

from oracles import (
    cross_rank_nx, is_half_graph, matched_cliques_nx, replay_nx, to_nx,
)
from vmkit import Graph, GraphError
from vmkit.extract import (
    anti_matching_clique_star, anti_matching_star_star, chain_clique_star, chain_star_star,
    complete_from_connected, edgeless_from_large, induced_p4_between,
    matched_cliques_from_components,
)
from vmkit.families import path


def connected_graph(n, p, rng):
    # random spanning tree plus independent extra edges
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return Graph(n, sorted(edges))


def random_graph(n, p, rng):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def p4_pairs(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = connected_graph(rng.randint(5, 11), rng.random() * 0.5, rng)
        h = to_nx(g)
        x, y = rng.sample(sorted(h), 2)
        rest = set(h) - {x, y}
        if cross_rank_nx(h, {x, y}, rest) == 2 and nx.is_connected(h.subgraph(rest)):
            out.append((g, x, y))
    return out


def test_induced_p4_between_random():
    for g, x, y in p4_pairs(11, 120):
        t = induced_p4_between(g, x, y)
        h = replay_nx(g, t)
        assert t.keep[0] == x and t.keep[-1] == y
        assert h.has_edge(x, t.keep[1]) and h.has_edge(t.keep[2], y)
        assert nx.is_isomorphic(h, nx.path_graph(4))
        # only x and y may be the path ends
        assert h.degree(x) == 1 and h.degree(y) == 1
        # no LC at x or y
        assert all(getattr(st, "v", None) not in (x, y) for st in t.steps)


def test_induced_p4_between_rejects_bad_pairs():
    with pytest.raises(GraphError):
        induced_p4_between(path(5), 0, 0)
    # removing 0 and 2 from P5 leaves two components
    with pytest.raises(GraphError):
        induced_p4_between(path(5), 0, 2)
    # two leaves of a star see the same centre: rank 1
    with pytest.raises(GraphError):
        induced_p4_between(Graph(4, [(0, 1), (0, 2), (0, 3)]), 1, 2)


def component_instance(c, extra, rng):
    """x = 0, y = 1, then c components of rank 2 against {x, y} and some of lower rank."""
    edges = []
    nxt = 2
    made = 0
    while made < c + extra:
        size = rng.randint(2, 5)
        comp = list(range(nxt, nxt + size))
        inner = [(comp[rng.randrange(i)], comp[i]) for i in range(1, size)]
        sx = {v for v in comp if rng.random() < 0.5}
        sy = {v for v in comp if rng.random() < 0.5}
        want2 = made < c
        rank2 = sx and sy and sx != sy
        if want2 != bool(rank2):
            continue
        edges += inner + [(0, v) for v in sx] + [(1, v) for v in sy]
        nxt += size
        made += 1
    if rng.random() < 0.5:
        edges.append((0, 1))
    return Graph(nxt, edges)


def test_matched_cliques_from_components():
    rng = random.Random(3)
    for _ in range(40):
        c = rng.randint(1, 5)
        g = component_instance(c, rng.randint(0, 2), rng)
        rep = matched_cliques_from_components(g, 0, 1, c)
        assert nx.is_isomorphic(replay_nx(g, rep.trace), matched_cliques_nx(c))


def test_matched_cliques_needs_enough_components():
    g = component_instance(2, 1, random.Random(0))
    with pytest.raises(GraphError):
        matched_cliques_from_components(g, 0, 1, 3)


@pytest.mark.parametrize("n", range(3, 9))
def test_anti_matching_constructions(n):
    g, t = anti_matching_clique_star(n)
    h = to_nx(g)
    # K_n on side one, stable side two, everything across except i -- n+i
    assert nx.is_isomorphic(h.subgraph(range(n)), nx.complete_graph(n))
    assert h.subgraph(range(n, 2 * n)).number_of_edges() == 0
    assert h.number_of_edges() == n * (n - 1) // 2 + n * (n - 1)
    assert nx.is_isomorphic(replay_nx(g, t), matched_cliques_nx(n - 1))

    g, t = anti_matching_star_star(n)
    assert to_nx(g).number_of_edges() == n * (n - 1)
    assert nx.is_isomorphic(replay_nx(g, t), matched_cliques_nx(n - 2))


@pytest.mark.parametrize("n", range(2, 7))
def test_chain_constructions(n):
    g, t = chain_star_star(n)
    assert is_half_graph(to_nx(g), n)
    assert nx.is_isomorphic(replay_nx(g, t), nx.path_graph(2 * n))

    g, t = chain_clique_star(n)
    h = to_nx(g)
    assert nx.is_isomorphic(h.subgraph(range(n)), nx.complete_graph(n))
    assert h.subgraph(range(n, 2 * n)).number_of_edges() == 0
    assert nx.is_isomorphic(replay_nx(g, t), nx.path_graph(2 * n))


def test_complete_from_connected_sweep():
    rng = random.Random(8)
    for _ in range(25):
        g = connected_graph(rng.randint(30, 60), rng.choice([0.0, 0.02, 0.05, 0.2]), rng)
        rep = complete_from_connected(g, 5)
        assert nx.is_isomorphic(replay_nx(g, rep.trace), nx.complete_graph(5))


def test_complete_from_path_uses_pivots():
    rep = complete_from_connected(path(8), 5)
    assert rep.stats["route"] == "path pivots"
    assert nx.is_isomorphic(replay_nx(path(8), rep.trace), nx.complete_graph(5))


def test_complete_from_small_graph_falls_back_to_search():
    # C5 has no induced path on 8 vertices and no large neighbourhood
    g = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    with pytest.raises(GraphError):
        complete_from_connected(g, 5)
    rep = complete_from_connected(g, 3)
    assert nx.is_isomorphic(replay_nx(g, rep.trace), nx.complete_graph(3))


def test_edgeless_from_large_sweep():
    rng = random.Random(9)
    for _ in range(10):
        g = random_graph(rng.randint(85, 100), rng.random(), rng)
        rep = edgeless_from_large(g, 5)
        h = replay_nx(g, rep.trace)
        assert len(h) == 5 and h.number_of_edges() == 0


def test_edgeless_route_through_clique():
    g = Graph(8, [(u, v) for u in range(8) for v in range(u + 1, 8)])
    rep = edgeless_from_large(g, 5)
    assert rep.stats["route"] == "clique"
    h = replay_nx(g, rep.trace)
    assert len(h) == 5 and h.number_of_edges() == 0
