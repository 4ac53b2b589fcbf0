import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import blocking_exists, cross_rank_nx, is_blocking_brute, to_nx
from vmkit import GraphError, replay
from vmkit.blocking import (
    find_blocking_sequence, is_blocking_sequence, patch_bound, reduce_at, shorten_for_patch,
)
from vmkit.campaigns import random_graph
from vmkit.families import all_graphs, cycle
from vmkit.structure import is_prime


@st.composite
def instances(draw, min_n=4, max_n=9):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    vs = g.vertices()
    # the first vertex is always in A and the last always in B
    lab = ["a"] + [draw(st.sampled_from("ab--")) for _ in vs[2:]] + ["b"]
    a = [v for v, c in zip(vs, lab) if c == "a"]
    b = [v for v, c in zip(vs, lab) if c == "b"]
    return g, a, b


@given(instances())
def test_finder_agrees_with_existence_criterion(inst):
    g, a, b = inst
    found = find_blocking_sequence(g, a, b)
    assert (found is not None) == blocking_exists(to_nx(g), a, b)
    if found is not None:
        assert is_blocking_brute(to_nx(g), a, b, found.seq)


@given(instances(max_n=8), st.data())
def test_checker_matches_definition(inst, data):
    g, a, b = inst
    free = [v for v in g.vertices() if v not in a and v not in b]
    if not free:
        return
    seq = data.draw(st.permutations(free))[: data.draw(st.integers(1, min(4, len(free))))]
    assert bool(is_blocking_sequence(g, a, b, seq)) == is_blocking_brute(to_nx(g), a, b, seq)


def test_finder_is_exhaustive_on_six_vertices():
    for g in all_graphs(6):
        h = to_nx(g)
        for a in combinations(range(6), 2):
            rest = [v for v in range(6) if v not in a]
            for b in combinations(rest, 2):
                assert (find_blocking_sequence(g, a, b) is not None) == blocking_exists(h, a, b)


def test_shortest_then_lexicographic():
    g = cycle(8)
    found = find_blocking_sequence(g, (0, 1), (4, 5))
    assert found.seq == (2, 3)
    assert found.base == 0


def test_checker_rejects_bad_input():
    g = cycle(6)
    with pytest.raises(GraphError):
        is_blocking_sequence(g, (0,), (3,), ())
    with pytest.raises(GraphError):
        is_blocking_sequence(g, (0,), (3,), (0,))
    with pytest.raises(GraphError):
        find_blocking_sequence(g, (0, 1), (1, 2))


def reduction_cases(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(6, 10)
        g = random_graph(n, rng.uniform(0.2, 0.6), rng)
        vs = g.vertices()
        rng.shuffle(vs)
        a, b = vs[:2], vs[2:4]
        found = find_blocking_sequence(g, a, b)
        if found is not None:
            out.append((g, a, b, found.seq))
    return out


def test_reduce_at_arithmetic():
    for g, a, b, seq in reduction_cases(3, 60):
        k = cross_rank_nx(to_nx(g), a, b)
        m = len(seq)
        for i, v in enumerate(seq):
            g2, rest, k2 = reduce_at(g, a, b, seq, i)
            assert k2 == cross_rank_nx(to_nx(g2), a, b)
            assert k2 == (k if m > 1 else k + 1)
            if m > 1:
                assert is_blocking_brute(to_nx(g2), a, b, rest)
            for w in set(g.neighbors(v)) & set(a + b):
                _, _, k3 = reduce_at(g, a, b, seq, i, ("pivot", w))
                assert k3 == (k if m > 1 else k + 1)
            for j in range(i + 1, m):
                if g.adjacent(v, seq[j]):
                    g4, rest4, k4 = reduce_at(g, a, b, seq, i, ("pair", j))
                    assert k4 == (k if m > 2 else k + 1)
                    if m > 2:
                        assert is_blocking_brute(to_nx(g4), a, b, rest4)


def test_reduce_at_errors():
    g, a, b, seq = reduction_cases(4, 1)[0]
    with pytest.raises(GraphError):
        reduce_at(g, a, b, seq, 0, ("nope",))
    with pytest.raises(GraphError):
        reduce_at(g, a, b, (a[0],), 0)


def test_patch_bound():
    assert patch_bound({1}, {2}) == 3
    assert patch_bound({1, 2}, {3}) == 4
    assert patch_bound({1}, {3, 4}) == 4
    assert patch_bound({1, 2}, {3, 4}) == 6


def prime_patch_instances(seed, count):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(7, 12)
        g = random_graph(n, rng.uniform(0.25, 0.55), rng)
        if not is_prime(g):
            continue
        vs = g.vertices()
        rng.shuffle(vs)
        a, b = vs[: rng.randint(2, 3)], vs[3:3 + rng.randint(2, 3)]
        a0 = [x for x in a if set(g.neighbors(x)) & set(b)]
        b0 = [y for y in b if set(g.neighbors(y)) & set(a)]
        if not a0 or not b0:
            continue
        if all(g.adjacent(x, y) == (x in a0 and y in b0) for x in a for y in b):
            out.append((g, a, b, a0, b0))
    return out


def test_shorten_for_patch():
    for g, a, b, a0, b0 in prime_patch_instances(11, 40):
        g2, seq, trace = shorten_for_patch(g, a, b, a0, b0)
        assert replay(g, trace).graph == g2
        ab = sorted(a + b)
        assert all(g2.adjacent(x, y) == g.adjacent(x, y) for x, y in combinations(ab, 2))
        assert is_prime(g2)
        assert len(seq) <= patch_bound(a0, b0)
        assert is_blocking_brute(to_nx(g2), a, b, seq)


def test_shorten_for_patch_preconditions():
    g = cycle(8)
    with pytest.raises(GraphError):
        shorten_for_patch(g, (0,), (4, 5), (0,), (5,))
    with pytest.raises(GraphError):
        shorten_for_patch(g, (0, 1), (4, 5), (0,), (5,))  # A-B edges do not match
