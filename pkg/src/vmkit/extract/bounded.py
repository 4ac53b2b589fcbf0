"""Cliques and stable sets as vertex-minors of large graphs, and the
join constructions used by the broom arguments.

A stable set of size ``n`` is written ``edgeless n``; claims use the
family names understood by :func:`vmkit.families.make`.
"""

from __future__ import annotations

from collections import deque

from ..families import complete, edgeless, join, path
from ..graph import Graph, GraphError, bits, compact, local_complement, pivot
from ..search import is_vertex_minor
from ..trace import LC, Delete, OpTrace, Pivot, replay
from ._work import ExtractionReport, Workspace


def _rows(g: Graph) -> tuple[list[int], list[int]]:
    h, index = compact(g)
    back = sorted(index, key=index.get)
    return h.rows(), back


def _find_clique(rows: list[int], cand: int, k: int, complement: bool = False) -> list[int] | None:
    """``k`` pairwise adjacent (or, with ``complement``, non-adjacent) vertices inside ``cand``."""
    full = 0
    for v in bits(cand):
        full |= 1 << v

    def nbr(v):
        r = rows[v]
        return (~r & full & ~(1 << v)) if complement else (r & full)

    def grow(chosen, pool):
        if len(chosen) == k:
            return chosen
        if len(chosen) + pool.bit_count() < k:
            return None
        while pool:
            low = pool & -pool
            v = low.bit_length() - 1
            pool &= ~low
            got = grow(chosen + [v], pool & nbr(v))
            if got:
                return got
            if len(chosen) + pool.bit_count() < k:
                return None
        return None

    return grow([], cand)


def find_clique(g: Graph, k: int, within=None) -> list[int] | None:
    rows, back = _rows(g)
    fwd = {v: i for i, v in enumerate(back)}
    cand = sum(1 << fwd[v] for v in (within if within is not None else back))
    got = _find_clique(rows, cand, k)
    return None if got is None else [back[v] for v in got]


def find_stable_set(g: Graph, k: int, within=None) -> list[int] | None:
    rows, back = _rows(g)
    fwd = {v: i for i, v in enumerate(back)}
    cand = sum(1 << fwd[v] for v in (within if within is not None else back))
    got = _find_clique(rows, cand, k, complement=True)
    return None if got is None else [back[v] for v in got]


def find_induced_path(g: Graph, k: int, node_limit: int = 200_000) -> list[int] | None:
    """An induced path on ``k`` vertices by depth-first extension, or ``None``."""
    vs = g.vertices()
    nb = {v: g.neighbor_set(v) for v in vs}
    budget = [node_limit]

    def extend(p, inside):
        if len(p) == k:
            return p
        budget[0] -= 1
        if budget[0] < 0:
            return None
        end = p[-1]
        for w in sorted(nb[end]):
            if w in inside:
                continue
            # w may see only the current end of the path
            if len(nb[w] & inside) != 1:
                continue
            inside.add(w)
            got = extend(p + [w], inside)
            if got:
                return got
            inside.discard(w)
        return None

    for s in vs:
        got = extend([s], {s})
        if got:
            return got
        if budget[0] < 0:
            break
    return None


def _star_to_clique(ws: Workspace, c: int, leaves: list[int]) -> str:
    ws.keep_only([c, *leaves])
    ws.lc(c)
    return f"complete {len(leaves) + 1}"


def complete_from_connected(g: Graph, n: int = 5, *, budget_ms: float | None = None) -> ExtractionReport:
    """``K_n`` as a vertex-minor of a connected graph.

    A vertex whose neighbourhood holds ``n-1`` pairwise adjacent or pairwise
    non-adjacent vertices gives it directly (the second after one LC).
    Otherwise an induced path on ``2n-2`` vertices is pivoted on every
    other edge, which leaves a star with ``n-1`` leaves.  Small leftovers
    fall back to the exhaustive containment search.
    """
    if n < 2:
        raise GraphError("n must be at least 2")
    ws = Workspace(g)
    for v in sorted(g.vertices(), key=lambda u: (-g.degree(u), u)):
        if g.degree(v) < n - 1:
            break
        nb = g.neighbors(v)
        clique = find_clique(g, n - 1, nb)
        if clique:
            ws.keep_only([v, *clique])
            return ws.finish(f"complete {n}", route="clique neighbourhood")
        stable = find_stable_set(g, n - 1, nb)
        if stable:
            return ws.finish(_star_to_clique(ws, v, stable), route="stable neighbourhood")
    p = find_induced_path(g, 2 * n - 2)
    if p is not None:
        ws.keep_only(p)
        for i in range(0, len(p), 2):
            ws.pivot(p[i], p[i + 1])
        h = ws.graph()
        for c in h.vertices():
            leaves = find_stable_set(h, n - 1, h.neighbors(c))
            if leaves:
                return ws.finish(_star_to_clique(ws, c, leaves), route="path pivots")
        raise AssertionError("pivoted path has no star with enough leaves")
    if g.order > 16:
        raise GraphError("no direct route and the graph is too large for exhaustive search")
    w = is_vertex_minor(complete(n), g, budget_ms=budget_ms)
    if w is None:
        raise GraphError(f"no K_{n} vertex-minor")
    return ExtractionReport(w.trace, f"complete {n}", {"route": "search", "steps": len(w.trace.steps)})


def edgeless_from_large(g: Graph, n: int = 5) -> ExtractionReport:
    """A stable set of size ``n`` as a vertex-minor.

    Either one is already induced, or a clique on ``n+1`` vertices exists
    and LC at one of its vertices followed by deleting it leaves the rest
    pairwise non-adjacent.  Graphs on at least ``R(n, n+1)`` vertices
    always have one of the two.
    """
    ws = Workspace(g)
    stable = find_stable_set(g, n)
    if stable:
        ws.keep_only(stable)
        return ws.finish(f"edgeless {n}", route="stable set")
    clique = find_clique(g, n + 1)
    if clique:
        ws.keep_only(clique)
        ws.lc(clique[0])
        ws.delete((clique[0],))
        return ws.finish(f"edgeless {n}", route="clique")
    raise GraphError(f"neither a stable set of size {n} nor a clique of size {n + 1}")


# ----------------------------------------------------------------------
# join constructions; side one is ids 0..n-1, side two is n..2n-1


def anti_matching_clique_star(n: int) -> tuple[Graph, OpTrace]:
    """``K_n`` anti-matched to ``S_n``: LC at both first vertices, delete them."""
    if n < 3:
        raise GraphError("n must be at least 3")
    g = join(complete(n), edgeless(n), "anti-matching")
    t = OpTrace((LC(0), LC(n), Delete((0, n))), None, f"join matching complete complete {n - 1}")
    return g, t


def anti_matching_star_star(n: int) -> tuple[Graph, OpTrace]:
    """``S_n`` anti-matched to ``S_n`` down to ``K_{n-2}`` matched to ``K_{n-2}``.

    One LC at the first vertex of side one turns side two into a clique;
    the remainder is then the clique/stable anti-matched join with the
    clique on side two, handled by LC at both second vertices.
    """
    if n < 3:
        raise GraphError("n must be at least 3")
    g = join(edgeless(n), edgeless(n), "anti-matching")
    t = OpTrace(
        (LC(0), Delete((0, n)), LC(n + 1), LC(1), Delete((1, n + 1))),
        None,
        f"join matching complete complete {n - 2}",
    )
    return g, t


def chain_path_pivots(n: int) -> list[tuple[int, int]]:
    # path ids 0..2n-1; pivot every other edge
    return [(i, i + 1) for i in range(0, 2 * n, 2)]


def chain_star_star(n: int) -> tuple[Graph, OpTrace]:
    """``S_n`` chain-joined to ``S_n`` with a pivot trace back to ``P_{2n}``."""
    if n < 1:
        raise GraphError("n must be positive")
    target = join(edgeless(n), edgeless(n), "chain")
    return target, _pivots_to_path(target, n)


def chain_clique_star(n: int) -> tuple[Graph, OpTrace]:
    """``K_n`` chain-joined to ``S_n``; LC at the first side-two vertex makes
    side one stable, after which the pivot route applies."""
    if n < 1:
        raise GraphError("n must be positive")
    g = join(complete(n), edgeless(n), "chain")
    h = local_complement(g, n)
    t = _pivots_to_path(h, n)
    return g, OpTrace((LC(n),) + t.steps, None, t.claim)


def _pivots_to_path(target: Graph, n: int) -> OpTrace:
    from ..canon import are_isomorphic

    p = path(2 * n)
    for x, y in chain_path_pivots(n):
        p = pivot(p, x, y)
    phi = are_isomorphic(p, target)
    if phi is None:
        raise AssertionError("pivoted path is not the chain join")
    # pivots are involutions, so undo them in reverse order on the image
    steps = tuple(Pivot(phi[x], phi[y]) for x, y in reversed(chain_path_pivots(n)))
    return OpTrace(steps, None, f"path {2 * n}")


def check_construction(g: Graph, t: OpTrace) -> bool:
    return replay(g, t).verified
