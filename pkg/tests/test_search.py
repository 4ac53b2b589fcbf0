import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs
from oracles import lc_orbit_codes, to_nx, vertex_minor_brute
from vmkit import GraphError, replay
from vmkit.canon import are_isomorphic
from vmkit.families import complete, cycle, edgeless, join, path, wheel_variant
from vmkit.graph import local_complement, relabel
from vmkit.search import (
    Inconclusive, find_bipartite_pattern, find_induced_matching_or_hub, is_vertex_minor, local_orbit,
    locally_equivalent, pivot_equivalent,
)


@given(graphs(min_n=1, max_n=6))
def test_orbit_size_matches_brute_force(g):
    orb = local_orbit(g)
    assert orb.complete
    assert orb.size == len(lc_orbit_codes(to_nx(g)))


@given(graphs(min_n=1, max_n=7))
def test_orbit_words_reproduce_members(g):
    orb = local_orbit(g)
    for code, word in list(orb.codes.items())[:20]:
        h = g
        for v in word:
            h = local_complement(h, v)
        assert are_isomorphic(h, orb.graphs[code]) is not None


@given(graphs(min_n=2, max_n=7), st.randoms())
def test_locally_equivalent_finds_scrambled_copy(g, rnd):
    h = g
    for _ in range(3):
        h = local_complement(h, rnd.choice(h.vertices()))
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(h, perm)
    word, mapping = locally_equivalent(g, h)
    w = g
    for v in word:
        w = local_complement(w, v)
    assert all(w.adjacent(a, b) == h.adjacent(mapping[a], mapping[b])
               for a in w.vertices() for b in w.vertices() if a < b)


@settings(max_examples=25)
@given(graphs(min_n=4, max_n=6), st.integers(3, 5))
def test_containment_matches_brute_force(g, k):
    target = cycle(k) if k >= 3 else path(k)
    if k > g.order:
        return
    w = is_vertex_minor(target, g)
    assert (w is not None) == vertex_minor_brute(to_nx(target), to_nx(g))
    if w is not None:
        assert replay(g, w.trace).verified


def test_known_containments():
    assert is_vertex_minor(cycle(5), wheel_variant(1)) is not None
    assert is_vertex_minor(complete(3), path(3)) is not None
    # paths are distance-hereditary, a class closed under vertex-minors
    assert is_vertex_minor(cycle(5), path(8)) is None
    assert is_vertex_minor(cycle(7), cycle(6)) is None


def test_wheel_variants_not_equivalent_to_cycle():
    for i in (1, 2, 3):
        assert locally_equivalent(wheel_variant(i), cycle(7)) is None


def test_pivot_equivalence():
    g = path(4)
    assert pivot_equivalent(g, path(4)) is not None
    assert pivot_equivalent(join(edgeless(2), edgeless(2), "chain"), path(4)) is not None


def test_size_limits_and_budget(monkeypatch):
    with pytest.raises(GraphError):
        is_vertex_minor(cycle(5), cycle(20))
    with pytest.raises(Inconclusive):
        is_vertex_minor(cycle(7), cycle(16), budget_ms=0.001)
    monkeypatch.setenv("VMKIT_BUDGET_MS", "0.001")
    with pytest.raises(Inconclusive):
        local_orbit(cycle(14))


def test_randomized_mode_on_large_input():
    import random

    from vmkit.campaigns import random_graph

    g = random_graph(24, 0.5, random.Random(5))
    w = is_vertex_minor(cycle(5), g, randomized=True, seed=1)
    assert replay(g, w.trace).verified
    with pytest.raises(Inconclusive):
        is_vertex_minor(cycle(5), path(24), randomized=True, tries=50)


def test_bipartite_pattern():
    g = join(edgeless(4), edgeless(4), "anti-matching")
    kind, ss, ts = find_bipartite_pattern(g, range(4), range(4, 8), 3)
    assert kind == "anti-matching"
    for i, s in enumerate(ss):
        for j, t in enumerate(ts):
            assert g.adjacent(s, t) == (i != j)


@given(graphs(min_n=4, max_n=12), st.integers(1, 3))
def test_matching_or_hub(g, t):
    vs = g.vertices()
    s_side = vs[: len(vs) // 2]
    t_side = [w for w in vs[len(vs) // 2:] if set(g.neighbors(w)) & set(s_side)]
    if not t_side:
        return
    kind, out = find_induced_matching_or_hub(g, s_side, t_side, t)
    if kind == "hub":
        assert len(set(g.neighbors(out)) & set(t_side)) > t
        return
    assert len(out) * t >= len(t_side)
    for a, (s1, t1) in enumerate(out):
        assert g.adjacent(s1, t1)
        for s2, t2 in out[a + 1:]:
            assert not g.adjacent(s1, t2) and not g.adjacent(s2, t1)
