"""Fans, centre-plus-path graphs and induced cycles, all shrunk to an exact cycle."""

from __future__ import annotations

import math

from ..graph import Graph, GraphError
from ._work import ExtractionRefused, ExtractionReport, Workspace


def walk_cycle(ws: Workspace, vs) -> list[int]:
    """Cyclic order of a vertex set that induces a cycle in the workspace."""
    vs = set(vs)
    for v in vs:
        if len(ws.nbrs(v) & vs) != 2:
            raise GraphError("vertex set does not induce a cycle")
    start = min(vs)
    order = [start]
    prev, cur = None, start
    while True:
        a, b = sorted(ws.nbrs(cur) & vs)
        nxt = b if a == prev else a
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != len(vs):
        raise GraphError("vertex set induces more than one cycle")
    return order


def walk_path(ws: Workspace, vs, start: int) -> list[int]:
    """Order of an induced path inside ``vs`` beginning at the end ``start``."""
    vs = set(vs)
    order = [start]
    prev = None
    while len(order) < len(vs):
        nxt = [w for w in ws.nbrs(order[-1]) if w in vs and w != prev]
        if len(nxt) != 1:
            raise GraphError("vertex set is not an induced path from the given end")
        prev = order[-1]
        order.append(nxt[0])
    return order


def shrink_cycle(ws: Workspace, order: list[int], length: int) -> str:
    """Keep the induced cycle ``order`` and cut it down to ``length`` by LC then delete."""
    if len(order) < length:
        raise GraphError("cycle shorter than the target")
    ws.keep_only(order)
    order = list(order)
    while len(order) > length:
        v = order.pop()
        ws.lc(v)
        ws.delete((v,))
    return f"cycle {length}"


def _fan_in(ws: Workspace, c: int, path: list[int], n: int) -> str:
    # path has exactly 3n - 1 vertices, all adjacent to c
    ws.keep_only([c, *path])
    hits = [path[i - 1] for i in range(3, 3 * n - 2, 3)]
    for v in hits:
        ws.lc(v)
    ws.delete(hits)
    return f"cycle {2 * n + 1}"


def find_fan(g: Graph, center: int | None = None) -> tuple[int, list[int]]:
    """``(centre, path order)`` if ``g`` is a fan, else :class:`GraphError`."""
    vs = g.vertices()
    if len(vs) < 3:
        raise GraphError("a fan needs at least three vertices")
    for c in ([center] if center is not None else vs):
        if c not in g or g.degree(c) != len(vs) - 1:
            continue
        rest = [v for v in vs if v != c]
        if g.m != 2 * len(rest) - 1:
            continue
        ends = [v for v in rest if g.degree(v) <= 2]
        try:
            return c, walk_path(Workspace(g), rest, min(ends))
        except (GraphError, ValueError):
            continue
    raise GraphError("not a fan" if center is None else f"not a fan centred at {center}")


def fan_to_cycle(g: Graph, center: int | None = None) -> ExtractionReport:
    """A fan on ``m`` vertices gives a cycle of length ``2*(m//3) + 1``.

    Extra path vertices are trimmed first; then every third path vertex
    (except the two ends of the kept stretch) is complemented and removed.
    """
    center, path = find_fan(g, center)
    n = g.order // 3
    if n < 1:
        raise GraphError("fan too small")
    ws = Workspace(g)
    claim = _fan_in(ws, center, path[: 3 * n - 1], n)
    return ws.finish(claim, route="fan")


def center_path_bound(n: int) -> int:
    return 6 * (n - 1) ** 2 - 3


def _center_path_in(ws: Workspace, c: int, path: list[int], n: int) -> str | None:
    """The centre-path argument inside a workspace; ``None`` if it falls short."""
    ws.keep_only([c, *path])
    if len(path) >= 6:
        nb = ws.nbrs(c)
        if path[1] not in nb:
            ws.lc(path[0])
        if path[-2] not in ws.nbrs(c):
            ws.lc(path[-1])
        if path[2] not in ws.nbrs(c):
            ws.pivot(path[0], path[1])
            path = walk_path(ws, path, path[1])
        if path[-3] not in ws.nbrs(c):
            ws.pivot(path[-1], path[-2])
            path = walk_path(ws, path, path[0])
        nb = ws.nbrs(c)
        assert all(path[i] in nb for i in (0, 1, 2, -1, -2, -3)), "end normalisation failed"
    nb = ws.nbrs(c)
    hits = [i for i, v in enumerate(path) if v in nb]
    if len(hits) >= 3 * n - 1:
        for i, v in enumerate(path):
            if v not in nb:
                ws.lc(v)
                ws.delete((v,))
        kept = [v for v in path if v in nb]
        return _fan_in(ws, c, kept[: 3 * n - 1], n)
    for s, t in zip(hits, hits[1:]):
        if t - s >= 2 * n - 1:
            return shrink_cycle(ws, [c, *path[s:t + 1]], 2 * n + 1)
    return None


def center_path_to_cycle(g: Graph, c: int, n: int | None = None, *,
                         best_effort: bool = False) -> ExtractionReport | None:
    """Cycle of length ``2n+1`` from a centre ``c`` over an induced path.

    ``g - c`` must be an induced path whose ends both see ``c``.  Without
    ``n`` the largest size-backed value is used.  The size bound only
    carries a promise for ``n >= 3``.
    """
    rest = [v for v in g.vertices() if v != c]
    ends = [v for v in rest if sum(1 for w in g.neighbors(v) if w != c) <= 1]
    if len(ends) != 2 or g.m - g.degree(c) != len(rest) - 1:
        raise GraphError("g - c is not an induced path")
    ws = Workspace(g)
    path = walk_path(ws, rest, min(ends))
    if not (g.adjacent(c, path[0]) and g.adjacent(c, path[-1])):
        raise GraphError("both path ends must be adjacent to the centre")
    if n is None:
        n = max(1, 1 + math.isqrt((g.order + 3) // 6))
        while n > 1 and center_path_bound(n) > g.order:
            n -= 1
    guarantee = not best_effort
    if guarantee and (n < 3 or g.order < center_path_bound(n)):
        raise ExtractionRefused(f"no size-backed promise of a cycle of length {2 * n + 1}")
    if len(path) + 1 < 2 * n + 1 and len(path) < 3 * n - 1:
        return None
    claim = _center_path_in(ws, c, path, n)
    if claim is None:
        if guarantee:
            raise AssertionError("centre-path argument failed above its size bound")
        return None
    return ws.finish(claim, route="center-path")
