import networkx as nx
from hypothesis import given, strategies as st

from conftest import graphs
from oracles import brute_code, to_nx
from vmkit.canon import are_isomorphic, canonical_form, check_mapping
from vmkit.graph import relabel


@given(graphs(max_n=7), st.randoms())
def test_canonical_form_is_relabel_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_canonical_equality_matches_brute_force(g, h):
    assert (canonical_form(g) == canonical_form(h)) == (brute_code(to_nx(g)) == brute_code(to_nx(h)))


@given(graphs(max_n=9), graphs(max_n=9))
def test_isomorphism_matches_networkx(g, h):
    phi = are_isomorphic(g, h)
    assert (phi is not None) == nx.is_isomorphic(to_nx(g), to_nx(h))
    if phi is not None:
        assert check_mapping(g, h, phi)
