"""Patched induced paths, the ladder inside a fully patched path, and the
path-to-cycle pipeline built on them.

``n`` in the shortening helpers is the cycle parameter of the early exit:
an exit produces a cycle of length ``2n+1``.  ``path_to_cycle(G, n)``
targets ``4n+3`` and therefore runs the helpers with ``2n+1``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from ..blocking import find_blocking_sequence, is_blocking_sequence, shorten_for_patch
from ..families import LadderView, PatchView, validate_ladder, validate_patch
from ..graph import Graph, GraphError, induced_subgraph
from ..rank import cross_rank
from ..trace import LC, OpTrace, Pivot, matches_claim
from ._work import ExtractionRefused, ExtractionReport, Workspace
from .cycles import _center_path_in, shrink_cycle
from .ladder import _Ladder, _ladder_in


def fan_guard(n: int) -> int:
    return 6 * (n - 1) ** 2 - 6


def path_bound(n: int) -> int:
    return 110592 * n ** 7


class _Exit(Exception):
    """An early exit already produced a cycle claim in the workspace."""

    def __init__(self, claim: str):
        super().__init__(claim)
        self.claim = claim


def _is_induced_path(ws: Workspace, path: list[int]) -> bool:
    pos = {v: i for i, v in enumerate(path)}
    for i, v in enumerate(path):
        near = sorted(pos[w] for w in ws.nbrs(v) if w in pos)
        if near != [j for j in (i - 1, i + 1) if 0 <= j < len(path)]:
            return False
    return True


def _path_through_h(ws: Workspace, h: set[int], s: int, v: int) -> list[int] | None:
    """Shortest path inside ``H + s`` from a neighbour of ``v`` to ``s``, ending at ``s``."""
    allowed = h | {s}
    parent = {s: None}
    queue = deque([s])
    nv = ws.nbrs(v)
    while queue:
        x = queue.popleft()
        if x != s and x in nv:
            out = [x]
            while parent[out[-1]] is not None:
                out.append(parent[out[-1]])
            return out
        for y in sorted(ws.nbrs(x)):
            if y in allowed and y not in parent:
                parent[y] = x
                queue.append(y)
    return None


def _shorten_in(ws: Workspace, path: list[int], h: set[int], v: int, n: int | None) -> list[int]:
    """Compress ``path`` so that ``v`` sees only its second vertex.

    Raises :class:`_Exit` when the fan guard fires and the centre-path
    argument has produced a cycle.
    """
    s = path[0]
    near = {i for i, x in enumerate(path) if ws.adjacent(v, x)}
    if not near - {0} or not ws.nbrs(v) & h:
        raise GraphError("v must see both the path beyond s and H")
    k = max(near)
    keep_h = {x: ws.nbrs(x) & (h | {s}) for x in h | {s}}
    keep_v = ws.nbrs(v) & h
    if n is not None and n >= 3 and k >= fan_guard(n):
        lead = _path_through_h(ws, h, s, v)
        if lead is not None:
            claim = _center_path_in(ws, v, lead + path[1:k + 1], n)
            assert claim, "fan guard fired below the centre-path bound"
            raise _Exit(claim)
    if k == 1:
        if near == {1}:
            out = list(path)
        else:
            ws.lc(path[1])
            out = [s] + path[2:]
    else:
        for x in path[1:k - 1]:
            ws.lc(x)
        p0 = [s] + path[k - 1:]
        seen = {x for x in (p0[0], p0[1], p0[2]) if ws.adjacent(v, x)}
        a, b = path[k - 1], path[k]
        if seen == {b}:
            ws.lc(a)
            out = [s] + path[k:]
        elif seen == {a, b}:
            ws.lc(b)
            ws.lc(a)
            out = [s] + path[k + 1:]
        elif seen == {s, b}:
            ws.lc(a)
            ws.lc(b)
            out = [s] + path[k + 1:]
        elif seen == {s, a, b}:
            if k + 1 >= len(path):
                raise GraphError("path too short for the shortening step")
            ws.lc(b)
            ws.lc(a)
            ws.lc(path[k + 1])
            out = [s] + path[k + 2:]
        else:
            raise AssertionError(f"unexpected neighbourhood pattern after compression: {seen}")
    if len(out) < 2:
        raise GraphError("path too short for the shortening step")
    assert _is_induced_path(ws, out), "compressed path is not induced"
    assert {x for x in out if ws.adjacent(v, x)} == {out[1]}, "v does not see exactly the second vertex"
    assert all(ws.nbrs(x) & (h | {s}) == keep_h[x] for x in keep_h), "H + s changed"
    assert ws.nbrs(v) & h == keep_v, "v's neighbours in H changed"
    return out


def shorten_path(g: Graph, path, h, v: int, n: int | None = None):
    """The path-compression step on a copy of ``g``.

    Returns ``(G', P', trace)``, or an :class:`ExtractionReport` when the
    fan guard for cycle parameter ``n`` fires.
    """
    ws = Workspace(g)
    try:
        out = _shorten_in(ws, list(path), set(h), v, n)
    except _Exit as e:
        return ws.finish(e.claim, route="fan guard")
    return ws.graph(), tuple(out), ws.trace()


# ----------------------------------------------------------------------
# patching


@dataclass(frozen=True)
class PatchOutcome:
    view: PatchView | None  # lives in the transformed graph
    trace: OpTrace  # from the input graph to view.graph
    early: ExtractionReport | None = None


def _apply(ws: Workspace, t: OpTrace) -> None:
    for st in t.steps:
        if isinstance(st, LC):
            ws.lc(st.v)
        elif isinstance(st, Pivot):
            ws.pivot(st.x, st.y)
        else:
            ws.delete(st.vs)


def _one_patch(ws: Workspace, path: list[int], n: int | None) -> tuple[list[int], list[int]]:
    path = list(path)
    seen = set()
    while True:
        if (path[0], len(path)) in seen:
            raise GraphError("no usable first patch vertex")
        seen.add((path[0], len(path)))
        v0, v1 = path[0], path[1]
        others = sorted(w for w in ws.nbrs(v0) if w != v1)
        if not others:
            raise GraphError("the path start has no second neighbour; the graph is not prime")
        # LC at v0 never changes what a candidate sees on path[2:]
        far = {w: ws.nbrs(w) & set(path[2:]) for w in others}
        good = [w for w in others if far[w] - {path[2]}]
        free = [w for w in others if not far[w]]
        v = (good or free or others)[0]
        if ws.adjacent(v, v1):
            ws.lc(v0)
        if good:
            break
        if free:
            # v extends the path: it sees v0 only
            path = [v] + path
        else:
            # every candidate closes a 4-cycle with v0 v1 v2; start one vertex later
            path = path[1:]
        if len(path) < 4:
            raise GraphError("path used up while looking for the first patch vertex")
    tail = _shorten_in(ws, path[2:], {path[0], path[1]}, v, n)
    return path[:2] + tail, [v]


def _patch_step(ws: Workspace, path: list[int], patch: list[int], n: int | None) -> tuple[list[int], list[int]]:
    k = len(patch)
    a = set(path[:k + 2]) | set(patch)
    b = list(path[k + 2:])
    a0 = {path[k + 1], patch[-1]}
    b0 = {path[k + 2]}
    g = ws.graph()
    g2, seq, t = shorten_for_patch(g, a, b, a0, b0)
    _apply(ws, t)
    seq = list(seq)
    s = b[0]
    h = a | set(seq[:-1])
    tail = _shorten_in(ws, b, h, seq[-1], n)
    # reduce the nice blocking sequence to a single vertex
    vk1 = path[k + 1]
    while len(seq) > 1:
        br, bq = seq[-1], seq[-2]
        vi = tail[1]
        lc_s = ws.adjacent(br, vk1)
        skip = ws.adjacent(bq, s)
        # dropping v_i needs the path to continue past it
        if skip and len(tail) < 3:
            raise GraphError("path too short to reduce the blocking sequence")
        if lc_s:
            ws.lc(s)
        ws.lc(br)
        if skip:
            ws.lc(vi)
            tail = [s] + tail[2:]
        seq.pop()
        assert _is_induced_path(ws, tail), "reduction broke the path"
        check = is_blocking_sequence(ws.graph(), a, tail, seq)
        assert check, f"reduced sequence stopped blocking ({check.condition})"
    w = seq[0]
    new_path = path[:k + 2] + tail
    return new_path, patch + [w]


def _ensure_patch(ws: Workspace, path, patch) -> None:
    ok, clause, i = validate_patch(ws.graph(), tuple(path), tuple(patch))
    assert ok, f"patch clause {clause} fails at w{i}"


def build_patched_path(g: Graph, path, target_k: int | None = None, n: int | None = None,
                       patch=()) -> PatchOutcome:
    """Grow a patch on an induced path, compressing the path as needed.

    Stops at ``target_k`` patch vertices or when the path is fully patched.
    A valid starting ``patch`` is extended rather than rebuilt.  With a
    cycle parameter ``n`` the fan guard may end the run early with a cycle
    certificate instead.
    """
    ws = Workspace(g)
    try:
        p, q = _patch_in(ws, list(path), target_k, n, list(patch))
    except _Exit as e:
        return PatchOutcome(None, ws.trace(), ws.finish(e.claim, route="fan guard"))
    return PatchOutcome(PatchView(ws.graph(), tuple(p), tuple(q)), ws.trace())


def _patch_in(ws: Workspace, path: list[int], target_k: int | None, n: int | None, patch=()):
    if len(path) < 4:
        raise GraphError("need an induced path of length at least 3")
    if not _is_induced_path(ws, path):
        raise GraphError("input path is not induced")
    if patch:
        ok, clause, i = validate_patch(ws.graph(), tuple(path), tuple(patch))
        if not ok:
            raise GraphError(f"starting patch invalid: clause {clause} at w{i}")
        p, q = list(path), list(patch)
    else:
        mark = ws.checkpoint()
        try:
            p, q = _one_patch(ws, path, n)
        except GraphError:
            # mirrored orientation
            ws.rollback(mark)
            p, q = _one_patch(ws, path[::-1], n)
        _ensure_patch(ws, p, q)
    while len(q) < len(p) - 3 and (target_k is None or len(q) < target_k):
        t = len(p) - 1
        mark = ws.checkpoint()
        try:
            p, q = _patch_step(ws, p, q, n)
        except GraphError:
            # path used up; keep the last valid patch
            ws.rollback(mark)
            break
        if n is not None and t >= 6 * (n - 1) ** 2 + len(q) - 1:
            assert len(p) - 1 >= t - 6 * (n - 1) ** 2 + 3, "patching lost more length than allowed"
        _ensure_patch(ws, p, q)
    return p, q


# ----------------------------------------------------------------------
# ladder from a fully patched path


@dataclass(frozen=True)
class TypedPatchVertex:
    index: int  # i of w_i, 1-based
    L: int
    type: int


def _a_set(p, q, i: int) -> set[int]:
    if i == 1:
        return {p[0], p[1]}
    return set(p[:i + 1]) | set(q[:i - 1])


def classify_patch(g: Graph, p, q) -> list[TypedPatchVertex]:
    """``L(w_i)`` and the Type of every patch vertex."""
    out = []
    for i in range(1, len(q) + 1):
        w = q[i - 1]
        L = None
        for j in range(i):
            a = _a_set(p, q, j + 1)
            b = set(p) - a
            if cross_rank(g, a, b | {w}) > 1:
                L = j
                break
        assert L is not None and L < i, f"w{i} has no threshold"
        nb = g.neighbor_set(w)
        kinds = []
        if L == 0 and p[0] in nb:
            kinds.append(0)
        if L >= 1 and not nb & _a_set(p, q, L) and (p[L + 1] in nb) != (q[L - 1] in nb):
            kinds.append(1)
        if L == 1 and p[1] in nb and p[0] not in nb:
            kinds.append(2)
        if L >= 2 and not nb & _a_set(p, q, L - 1) and p[L] in nb and q[L - 2] in nb:
            kinds.append(3)
        assert len(kinds) == 1, f"w{i} has types {kinds}"
        out.append(TypedPatchVertex(i, L, kinds[0]))
    return out


def _good_pairs(g: Graph, p, q, types: list[TypedPatchVertex]) -> dict[int, tuple[list[int], list[int]]]:
    pairs: dict[int, tuple[list[int], list[int]]] = {}
    for tv in types:
        i, L = tv.index, tv.L
        w = q[i - 1]
        if tv.type == 0:
            p1, p2 = list(p[1:i + 2]), [p[0], w]
        elif tv.type == 2:
            p1, p2 = [p[0], q[0]] + list(p[3:i + 2]), [p[1], w]
        elif tv.type == 1:
            a1, a2 = pairs[L]
            x = p[L + 1] if g.adjacent(w, p[L + 1]) else q[L - 1]
            if a1[-1] == x:
                a1, a2 = a2, a1
            p1 = a1 + list(p[L + 2:i + 2])
            p2 = a2 + [w]
        else:
            a1, a2 = pairs[L]
            if a1[-1] == p[L + 1]:
                a1, a2 = a2, a1
            p1 = a1 + list(p[L + 2:i + 2])
            p2 = a2[:-1] + [w]
        pairs[i] = (p1, p2)
    return pairs


def patched_path_to_ladder(g: Graph, pv: PatchView) -> LadderView:
    """Induced generalized ladder on at least ``k + 4`` vertices from a ``k``-patch.

    A ``k``-patched path cut after its vertex ``k+2`` is fully patched, so
    only that prefix is used.
    """
    p, q = pv.path, pv.patch
    ok, clause, i = validate_patch(g, p, q)
    if not ok:
        raise GraphError(f"patch invalid: clause {clause} at w{i}")
    if len(q) < 1:
        raise GraphError("need at least one patch vertex")
    p = p[:len(q) + 3]
    types = classify_patch(g, p, q)
    p1, p2 = _good_pairs(g, p, q, types)[len(q)]
    if p1[-1] != p[-2]:
        p1, p2 = p2, p1
    lp, lq = tuple(p1 + [p[-1]]), tuple(p2)
    keep = set(lp) | set(lq)
    sub = induced_subgraph(g, keep)
    lv = LadderView.build(sub, lp, lq)
    assert len(keep) >= len(p) + 1, "ladder smaller than promised"
    return lv


# ----------------------------------------------------------------------
# orchestration


def long_induced_path(g: Graph, start: int | None = None) -> list[int]:
    """A long induced path: a BFS-farthest shortest path, then greedy extension at both ends."""
    vs = g.vertices()
    if not vs:
        return []

    def bfs(src):
        par = {src: None}
        queue = deque([src])
        last = src
        while queue:
            x = queue.popleft()
            last = x
            for y in g.neighbors(x):
                if y not in par:
                    par[y] = x
                    queue.append(y)
        return last, par

    a = vs[0] if start is None else start
    b, _ = bfs(a)
    c, par = bfs(b)
    path = [c]
    while par[path[-1]] is not None:
        path.append(par[path[-1]])
    inside = set(path)
    for _ in range(2):
        while True:
            end = path[-1]
            grow = None
            for y in g.neighbors(end):
                if y in inside:
                    continue
                if sum(1 for z in g.neighbors(y) if z in inside) == 1:
                    grow = y
                    break
            if grow is None:
                break
            path.append(grow)
            inside.add(grow)
        path.reverse()
    return path


def _gap_cycle(ws: Workspace, path: list[int], length: int) -> str | None:
    # an off-path vertex whose consecutive path neighbours are far apart
    pos = {v: i for i, v in enumerate(path)}
    for c in ws.vertices():
        if c in pos:
            continue
        hits = sorted(pos[w] for w in ws.nbrs(c) if w in pos)
        for s, t in zip(hits, hits[1:]):
            if t - s + 2 >= length:
                return shrink_cycle(ws, [c] + path[s:t + 1], length)
    return None


def path_to_cycle(g: Graph, n: int, *, path=None, best_effort: bool = False) -> ExtractionReport | None:
    """Certificate for a cycle of length ``4n+3`` from a prime graph with a long induced path.

    Guarantee mode promises success only from a path of length
    ``110592 n^7``; below that it still tries every route and raises
    :class:`ExtractionRefused` if none succeeds.  Best-effort mode returns
    ``None`` instead.
    """
    if n < 1:
        raise GraphError("n must be positive")
    length = 4 * n + 3
    if path is None:
        path = long_induced_path(g)
    path = list(path)
    promised = len(path) - 1 >= path_bound(n)
    ws = Workspace(g)
    if not _is_induced_path(ws, path):
        raise GraphError("path is not induced")
    if matches_claim(g, f"cycle {length}") is not None:
        return ws.finish(f"cycle {length}", route="identity")
    claim = _gap_cycle(ws, path, length)
    if claim:
        return ws.finish(claim, route="gap")
    route = ["patch"]
    try:
        claim = _pipeline(ws, path, n, route)
    except _Exit as e:
        route.append("fan guard")
        claim = e.claim
    except GraphError:
        claim = None
    if claim is None:
        if promised:
            raise AssertionError("pipeline failed above its size bound")
        if not best_effort:
            raise ExtractionRefused(
                f"path of length {len(path) - 1} is below {path_bound(n)} and no early exit appeared")
        return None
    return ws.finish(claim, route=route)


def _pipeline(ws: Workspace, path: list[int], n: int, route: list[str]) -> str | None:
    nc = 2 * n + 1
    p, q = _patch_in(ws, path, None, nc)
    if len(q) != len(p) - 3:
        return None
    g = ws.graph()
    lv = patched_path_to_ladder(g, PatchView(g, tuple(p), tuple(q)))
    route.append(f"ladder {lv.graph.order}")
    ws.keep_only(lv.p + lv.q)
    lad = _Ladder(ws, lv.p, lv.q)
    claim = _ladder_in(lad, n, lv.graph.order >= 4608 * n ** 5)
    route.extend(lad.route)
    return claim


def cycle_target(m: int) -> int:
    """Smallest ``n`` with ``4n+3 >= m``."""
    return max(1, math.ceil((m - 3) / 4))
