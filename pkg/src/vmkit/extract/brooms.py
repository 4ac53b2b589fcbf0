"""Induced x-y paths of length three, and matched cliques from many components.

Both work on a :class:`Workspace`; only local complementations at vertices
other than ``x`` and ``y`` and deletions are used until the final step.
"""

from __future__ import annotations

from collections import deque

from ..graph import Graph, GraphError
from ..rank import cross_rank
from ..trace import OpTrace
from ._work import ExtractionReport, Workspace


def _connected(ws: Workspace, vs: set[int]) -> bool:
    if not vs:
        return True
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in ws.nbrs(u) & vs:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vs)


def _rank2(ws: Workspace, x: int, y: int, rest: set[int]) -> bool:
    return cross_rank(ws.graph(), {x, y}, rest) == 2


def _is_p4(ws: Workspace, x: int, y: int, a: int, b: int) -> bool:
    want = {frozenset(e) for e in ((x, a), (a, b), (b, y))}
    vs = (x, a, b, y)
    have = {frozenset((u, v)) for i, u in enumerate(vs) for v in vs[i + 1:] if ws.adjacent(u, v)}
    return have == want


def _base(ws: Workspace, x: int, y: int, r: list[int]) -> tuple[int, int]:
    # the 4-vertex case: breadth-first over short LC words inside r
    u, v = r

    def shape():
        for a, b in ((u, v), (v, u)):
            if _is_p4(ws, x, y, a, b):
                return a, b
        return None

    hit = shape()
    if hit:
        return hit
    words = deque([()])
    seen = {()}
    while words:
        word = words.popleft()
        if len(word) >= 4:
            continue
        for w in (u, v):
            nxt = word + (w,)
            if nxt in seen:
                continue
            seen.add(nxt)
            mark = ws.checkpoint()
            for z in nxt:
                ws.lc(z)
            hit = shape()
            if hit:
                return hit
            ws.rollback(mark)
            words.append(nxt)
    raise AssertionError("4-vertex case without an LC word to an induced path")


def _p4_in(ws: Workspace, x: int, y: int, r: set[int]) -> tuple[int, int]:
    while len(r) > 2:
        step = None
        for t in sorted(r):
            rest = r - {t}
            if _connected(ws, rest) and _rank2(ws, x, y, rest):
                step = t
                break
        if step is not None:
            ws.delete((step,))
            r.discard(step)
            continue
        # few deletable vertices: G[r] is a path; LC at an inner vertex
        inner = [w for w in sorted(r) if len(ws.nbrs(w) & r) == 2]
        if not inner:
            raise AssertionError("no deletable vertex and no inner path vertex")
        ws.lc(inner[0])
        # the next pass must find a deletable vertex
        if not any(_connected(ws, r - {t}) and _rank2(ws, x, y, r - {t}) for t in r):
            raise AssertionError("LC at an inner vertex did not free a deletable vertex")
    return _base(ws, x, y, sorted(r))


def _check_pair(g: Graph, x: int, y: int, r: set[int]) -> None:
    if x == y or x not in g or y not in g:
        raise GraphError("x and y must be two distinct vertices")
    ws = Workspace(g)
    if not _connected(ws, r):
        raise GraphError("G - x - y is not connected")
    if cross_rank(g, {x, y}, r) != 2:
        raise GraphError("the cut-rank of {x, y} is not 2")


def induced_p4_between(g: Graph, x: int, y: int) -> OpTrace:
    """LCs away from ``x`` and ``y`` and deletions leaving the path ``x a b y``.

    Needs ``rank({x, y}) = 2`` and ``G - x - y`` connected.  The returned
    trace keeps exactly the four path vertices and claims ``path 4``.
    """
    r = set(g.vertices()) - {x, y}
    _check_pair(g, x, y, r)
    ws = Workspace(g)
    a, b = _p4_in(ws, x, y, r)
    ws.keep_only((x, a, b, y))
    return OpTrace(ws.trace().steps, (x, a, b, y), "path 4")


def _components(g: Graph, vs: set[int]) -> list[set[int]]:
    left = set(vs)
    out = []
    while left:
        s = min(left)
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in left and w not in comp:
                    comp.add(w)
                    queue.append(w)
        left -= comp
        out.append(comp)
    return out


def matched_cliques_from_components(g: Graph, x: int, y: int, c: int) -> ExtractionReport:
    """``K_c`` matched to ``K_c`` from ``c`` components of ``G - x - y`` each of rank 2 against ``{x, y}``.

    Components are reduced one at a time to an induced ``x a b y`` path;
    an LC inside one component only touches that component and the edge
    ``xy``, and the last reduction leaves ``x`` and ``y`` non-adjacent.
    Then ``*x *y`` and deleting ``x``, ``y`` gives the matched cliques.
    """
    if c < 1:
        raise GraphError("c must be positive")
    if x == y or x not in g or y not in g:
        raise GraphError("x and y must be two distinct vertices")
    comps = _components(g, set(g.vertices()) - {x, y})
    good = [f for f in comps if cross_rank(g, {x, y}, f) == 2]
    if len(good) < c:
        raise GraphError(f"only {len(good)} components have rank 2 against {{x, y}}")
    use = good[:c]
    ws = Workspace(g)
    ws.keep_only(set().union(*use) | {x, y})
    for f in use:
        _p4_in(ws, x, y, set(f))
    assert not ws.adjacent(x, y), "x and y still adjacent after the last component"
    ws.lc(x)
    ws.lc(y)
    ws.delete((x, y))
    return ws.finish(f"join matching complete complete {c}", route="components")
