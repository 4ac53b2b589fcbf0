import pytest

from vmkit import Graph, GraphError, replay
from vmkit.extract import ExtractionRefused, center_path_to_cycle, fan_to_cycle, ladder_bound, ladder_to_cycle
from vmkit.extract.cycles import center_path_bound, find_fan
from vmkit.families import cycle, fan, make_ladder, path


@pytest.mark.parametrize("n", range(1, 9))
def test_fan_gives_odd_cycle(n):
    g = fan(3 * n)
    rep = fan_to_cycle(g)
    assert rep.target == f"cycle {2 * n + 1}"
    assert replay(g, rep.trace).verified


def test_fan_with_spare_vertices_and_relabelled_centre():
    g = fan(11)
    assert fan_to_cycle(g).target == "cycle 7"
    edges = [(5, i) for i in range(9) if i != 5] + [(a, b) for a, b in zip([0, 1, 2, 3, 4, 6, 7, 8], [1, 2, 3, 4, 6, 7, 8])]
    h = Graph(9, edges)
    assert find_fan(h)[0] == 5
    assert replay(h, fan_to_cycle(h).trace).verified


def test_not_a_fan():
    with pytest.raises(GraphError):
        fan_to_cycle(cycle(6))


def centre_over_path(length, hits):
    # vertex 0 is the centre, 1..length the path
    edges = [(i, i + 1) for i in range(1, length)] + [(0, i) for i in hits]
    return Graph(length + 1, edges)


def test_centre_path_guarantee_refuses_small_parameters():
    g = centre_over_path(10, range(1, 11))
    with pytest.raises(ExtractionRefused):
        center_path_to_cycle(g, 0, 1)
    with pytest.raises(ExtractionRefused):
        center_path_to_cycle(g, 0, 3)


def test_centre_path_above_bound():
    n = 3
    length = center_path_bound(n)
    g = centre_over_path(length, [1, 2, 3] + list(range(7, length - 2, 4)) + [length - 2, length - 1, length])
    rep = center_path_to_cycle(g, 0, n)
    assert rep.target == "cycle 7"
    assert replay(g, rep.trace).verified


def test_centre_path_best_effort_gap():
    g = centre_over_path(9, [1, 9])
    rep = center_path_to_cycle(g, 0, 2, best_effort=True)
    assert rep.target == "cycle 5"
    assert replay(g, rep.trace).verified


def test_centre_path_input_checks():
    from vmkit.families import complete

    with pytest.raises(GraphError):
        center_path_to_cycle(complete(5), 0, 1, best_effort=True)
    with pytest.raises(GraphError):
        center_path_to_cycle(centre_over_path(6, [1, 3]), 0, 1, best_effort=True)


def test_deg3_ladder_zigzag():
    for n in (1, 2, 3):
        lv = make_ladder("deg3", n)
        rep = ladder_to_cycle(lv, n, best_effort=True)
        assert rep.target == f"cycle {4 * n + 3}"
        assert "zigzag" in rep.stats["route"]
        assert replay(lv.graph, rep.trace).verified


def test_ladder_guarantee_refusal():
    assert ladder_bound(1) == 4608
    with pytest.raises(ExtractionRefused):
        ladder_to_cycle(make_ladder("deg3", 1), 1)
    with pytest.raises(GraphError):
        ladder_to_cycle(make_ladder("deg3", 1), 0, best_effort=True)


def test_random_ladders_best_effort():
    found = 0
    for seed in range(40):
        lv = make_ladder("random", 40 + seed, 50, 0.3, seed)
        rep = ladder_to_cycle(lv, 1, best_effort=True)
        if rep is not None:
            found += 1
            assert replay(lv.graph, rep.trace).verified
            assert rep.target == "cycle 7"
    assert found > 0


def test_ladder_guarantee_above_bound():
    lv = make_ladder("random", 2300, 2400, 0.2, 3)
    rep = ladder_to_cycle(lv, 1)
    assert replay(lv.graph, rep.trace).verified


def test_ladder_with_single_vertex_side_is_a_centre_path():
    lv = make_ladder("explicit", 1, 30, [(1, j) for j in (1, 2, 3, 12, 28, 29, 30)])
    rep = ladder_to_cycle(lv, 1, best_effort=True)
    assert rep is not None and replay(lv.graph, rep.trace).verified


def test_path_family_is_not_a_fan():
    with pytest.raises(GraphError):
        find_fan(path(5))
