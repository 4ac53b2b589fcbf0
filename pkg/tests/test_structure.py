from hypothesis import given, strategies as st

from conftest import graphs
from oracles import cut_rank_nx, is_prime_brute, to_nx
from vmkit import Graph, local_complement
from vmkit.families import all_graphs, complete, cycle, h_graph, join, path
from vmkit.rank import cut_rank
from vmkit.structure import find_split, is_prime, is_split, one_join


def oracle_prime(g):
    # graphs on at most three vertices are not prime by convention
    return g.order >= 4 and is_prime_brute(to_nx(g))


@given(graphs(max_n=9))
def test_is_prime_matches_brute_force(g):
    assert is_prime(g) == oracle_prime(g)


@given(graphs(max_n=9))
def test_split_certificate(g):
    s = find_split(g)
    if s is None:
        return
    a, b = set(s.A), set(s.B)
    assert a | b == set(g.vertices()) and not a & b
    assert min(len(a), len(b)) >= 2
    assert cut_rank(g, a) <= 1
    for x in a:
        for y in b:
            assert g.adjacent(x, y) == (x in s.A0 and y in s.B0)
    assert is_split(g, a)


@given(graphs(min_n=1, max_n=8), st.data())
def test_primality_lc_invariant(g, data):
    v = data.draw(st.sampled_from(g.vertices()))
    assert is_prime(local_complement(g, v)) == is_prime(g)


def test_prime_counts_per_order():
    # one representative per class; counts taken from the networkx atlas
    # and the brute-force bipartition oracle
    assert [sum(map(is_prime, all_graphs(n))) for n in (4, 5, 6, 7)] == [0, 3, 18, 180]


def test_small_graphs_are_not_prime():
    assert not any(is_prime(g) for n in range(4) for g in all_graphs(n))


def test_known_primes():
    assert all(is_prime(cycle(n)) for n in range(5, 11))
    assert all(is_prime(join(complete(n), complete(n), "matching")) for n in (3, 4))
    assert all(is_prime(h_graph(n)) for n in (3, 4))
    assert not is_prime(path(4))


def test_split_smallest_side():
    s = find_split(path(5))
    assert s.text() == "0 1|1|2 3 4|2"
    assert find_split(cycle(5)) is None


def test_one_join_cut_rank():
    g = one_join(cycle(5), 0, cycle(6), 0)
    assert g.order == 9
    side = list(range(4))
    assert cut_rank_nx(to_nx(g), side) == 1
    assert find_split(g) is not None


def test_one_join_of_edges():
    g = one_join(Graph(2, [(0, 1)]), 0, Graph(2, [(0, 1)]), 1)
    assert list(g.edges()) == [(0, 1)]
