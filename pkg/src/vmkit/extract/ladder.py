"""Long cycles from generalized ladders.

The ladder lives in a :class:`Workspace`; ``p`` and ``q`` are the current
defining paths.  Lists are 0-based, so ``p[0]`` is the first vertex of P.
"""

from __future__ import annotations

from ..families import LadderError, LadderView, validate_ladder
from ..graph import GraphError
from ._work import ExtractionRefused, ExtractionReport, Workspace
from .cycles import _center_path_in, shrink_cycle


def ladder_bound(n: int) -> int:
    return 4608 * n ** 5


class _Ladder:
    def __init__(self, ws: Workspace, p, q):
        self.ws = ws
        self.p = list(p)
        self.q = list(q)
        self.route: list[str] = []

    # orientation
    def swap(self) -> None:
        self.p, self.q = self.q, self.p

    def flip(self) -> None:
        self.p.reverse()
        self.q.reverse()

    def check(self) -> None:
        validate_ladder(self.ws.graph(), tuple(self.p), tuple(self.q))

    def deg(self, v: int) -> int:
        return self.ws.degree(v)

    def max_degree(self) -> int:
        return max(self.ws.degree(v) for v in self.p + self.q)

    # edits; list bookkeeping is batched because ladders get large
    def remove(self, vs) -> None:
        dead = set(vs)
        self.ws.delete(sorted(dead))
        self.p = [v for v in self.p if v not in dead]
        self.q = [v for v in self.q if v not in dead]

    def contract(self, vs) -> None:
        vs = list(vs)
        for v in vs:
            self.ws.lc(v)
        for v in vs:
            self.ws.delete((v,))
        dead = set(vs)
        self.p = [v for v in self.p if v not in dead]
        self.q = [v for v in self.q if v not in dead]

    def contract_deg2(self, p_from: int = 1, q_from: int = 1) -> int:
        """Complement and delete degree-2 vertices strictly inside the paths.

        Only positions ``>= p_from`` / ``>= q_from`` are touched.  One pass
        suffices: contracting such a vertex leaves every other degree alone.
        """
        # a deg-2 interior vertex and its two path neighbours: LC then delete
        # joins the neighbours; nothing else moves
        out = []
        for path, start in ((self.p, p_from), (self.q, q_from)):
            out += [v for v in path[max(start, 1):-1] if self.ws.degree(v) == 2]
        for v in out:
            self.ws.lc(v)
            self.ws.delete((v,))
        if out:
            dead = set(out)
            self.p = [v for v in self.p if v not in dead]
            self.q = [v for v in self.q if v not in dead]
        return len(out)

    # geometry
    def chords(self) -> list[tuple[int, int]]:
        qpos = {v: j for j, v in enumerate(self.q)}
        out = []
        for i, v in enumerate(self.p):
            js = sorted(qpos[w] for w in self.ws.nbrs(v) if w in qpos)
            out += [(i, j) for j in js]
        return out

    def faces(self):
        """``(length, vertex order)`` of the induced cycles between consecutive chords."""
        ch = self.chords()
        for (i, j), (i2, j2) in zip(ch, ch[1:]):
            order = self.p[i:i2 + 1] + self.q[j:j2 + 1][::-1]
            yield (i2 - i) + (j2 - j) + 2, order

    def longest_face(self):
        return max(self.faces(), key=lambda f: f[0], default=(0, []))


def _face_claim(lad: _Ladder, length: int) -> str | None:
    size, order = lad.longest_face()
    if size < length:
        return None
    lad.route.append(f"face {size}")
    return shrink_cycle(lad.ws, order, length)


def _normalize_corner(lad: _Ladder, length: int) -> str | None:
    """Make the face at the first chord use at most two path edges.

    A long corner face is itself the answer.  Otherwise the cut is rotated
    along the face so the LC at the new ``p[0]`` splits off a triangle.
    """
    if len(lad.p) < 2 or len(lad.q) < 2:
        return None
    x, y = lad.chords()[1]
    if x + y <= 2:
        return None
    face = lad.p[x::-1] + lad.q[:y + 1]
    if len(face) >= length:
        lad.route.append(f"corner face {len(face)}")
        return shrink_cycle(lad.ws, face, length)
    new_p = [face[2], face[1], face[0]] + lad.p[x + 1:]
    new_q = face[3:] + lad.q[y + 1:]
    lad.ws.lc(face[2])
    lad.p = new_p[1:]
    lad.q = [face[2]] + new_q
    lad.check()
    return None


def _normalize_corners(lad: _Ladder, length: int) -> str | None:
    claim = _normalize_corner(lad, length)
    if claim:
        return claim
    lad.flip()
    claim = _normalize_corner(lad, length)
    lad.flip()
    return claim


def _deg3_zigzag(lad: _Ladder, n: int) -> str | None:
    """The explicit zigzag for max-degree-3 ladders with many degree-3 vertices."""
    lad.contract_deg2()
    while True:
        if len(lad.p) < 2 or len(lad.q) < 2:
            return None
        if lad.deg(lad.p[0]) != 2:
            lad.swap()
        if lad.deg(lad.p[0]) != 2:
            return None
        if lad.deg(lad.q[0]) == 2:
            lad.contract([lad.q[0]])
            lad.contract_deg2()
            continue
        break
    p, q = lad.p, lad.q
    if len(p) == len(q) + 2:
        # q_b sees p_{b+1} and p_{b+2}: the last vertex of P is really the
        # cap of Q, so move it across; no operation is needed
        lad.q.append(lad.p.pop())
        lad.check()
    elif len(p) == len(q) + 1 and lad.deg(p[-1]) == 2:
        lad.contract([p[-1]])
    target = 3 * n + 1
    while len(lad.p) == len(lad.q) > target:
        lad.remove([lad.q[-1]])
        lad.contract([lad.p[-1]])
    p, q = lad.p, lad.q
    if not len(p) == len(q) == target:
        return None
    if any(not lad.ws.adjacent(p[i + 1], q[i]) for i in range(target - 1)):
        return None
    lad.check()
    lad.route.append("zigzag")
    ws = lad.ws
    ws.lc(p[0])
    for t in range(1, n + 1):
        ws.pivot(p[3 * t], q[3 * t - 1])
    gone = [p[3 * t] for t in range(1, n)] + [q[3 * t - 1] for t in range(1, n)] + [q[3 * n]]
    ws.delete(gone)
    # the formula's deletion set is checked by replay in Workspace.finish
    return f"cycle {4 * n + 3}"


def _final_deg3(lad: _Ladder, n: int, guarantee: bool) -> str | None:
    length = 4 * n + 3
    if guarantee:
        assert lad.max_degree() <= 3
    if len(lad.p) > 1 and len(lad.q) > 1:
        claim = _normalize_corners(lad, length)
        if claim:
            return claim
    deg3 = sum(1 for v in lad.p + lad.q if lad.deg(v) == 3)
    if deg3 >= 6 * n:
        lad.route.append("deg3")
        claim = _deg3_zigzag(lad, n)
        if claim or guarantee:
            return claim
    return _face_claim(lad, length)


def _alpha(lad: _Ladder, i: int, j: int) -> int:
    return sum(1 for v in lad.p[i:] + lad.q[j:] if lad.deg(v) >= 3)


def _chord_run(lad: _Ladder, start: int) -> list[int]:
    # the chord-only component through start is a path when degrees are at most 4
    onp = set(lad.p)
    side = lambda v: v in onp  # noqa: E731
    run = [start]
    prev = None
    while True:
        cur = run[-1]
        nxt = [w for w in lad.ws.nbrs(cur) if side(w) != side(cur) and w != prev]
        if not nxt:
            return run
        if len(nxt) > 1:
            raise LadderError("chord component is not a path")
        prev = cur
        run.append(nxt[0])


def _keep_prefix(lad: _Ladder, i: int, j: int) -> None:
    lad.remove(lad.p[i:] + lad.q[j:])
    lad.check()


def _removedeg4(lad: _Ladder, enough: int) -> None:
    """Turn a max-degree-4 ladder into a max-degree-3 one, crawling from the first chord.

    Stops as soon as the absorbed prefix has ``enough`` vertices.
    """
    lad.route.append("removedeg4")
    lad.contract_deg2()
    if len(lad.p) < 2 or len(lad.q) < 2:
        return
    while True:
        if lad.deg(lad.p[0]) > 2:
            lad.ws.lc(lad.q[0])
        elif lad.deg(lad.q[0]) > 2:
            lad.ws.lc(lad.p[0])
        else:
            break
        lad.contract_deg2()
    lad.check()
    i = j = 1  # X holds p[:i] and q[:j]
    while True:
        lad.contract_deg2(i, j)
        p, q = lad.p, lad.q
        if i + j + 2 >= enough and i < len(p) and j < len(q):
            _keep_prefix(lad, i + 1, j + 1)
            return
        if i >= len(p) - 1 or j >= len(q) - 1:
            if i >= len(p) - 1 and lad.deg(p[-1]) == 4:
                lad.remove([q[-1]])
            elif j >= len(q) - 1 and lad.deg(q[-1]) == 4:
                lad.remove([p[-1]])
            lad.check()
            assert lad.max_degree() <= 3, "tail of the case machine left a degree-4 vertex"
            return
        if not lad.ws.adjacent(p[i], q[j]):
            raise LadderError("frontier vertices are not joined")
        di, dj = lad.deg(p[i]), lad.deg(q[j])
        if di == 3 and dj == 3:
            i, j = i + 1, j + 1
            continue
        mirrored = dj == 3
        if mirrored:
            lad.swap()
            i, j = j, i
        i, j = _case_step(lad, i, j)
        if mirrored:
            lad.swap()
            i, j = j, i
        if i is None:
            return
        lad.check()


def _case_step(lad: _Ladder, i: int, j: int):
    """One move of the six-case machine; p[i] has degree 3, q[j] degree 4."""
    p, q, ws = lad.p, lad.q, lad.ws
    if _alpha(lad, i, j) <= 12:
        _keep_prefix(lad, i + 2, j + 1)
        lad.route.append("alpha<=12")
        return None, None
    run = _chord_run(lad, p[i])
    r = len(run) - 1
    p2, q2 = p[i + 1], q[j + 1]
    if r == 2:
        if lad.deg(p[i + 2]) == 3:
            lad.contract([p2])  # (a)
            return i + 1, j
        lad.contract([p2, q2])  # (b)
        return i + 1, j + 1
    if r == 3:
        if lad.deg(q[j + 2]) == 3:
            lad.contract([q2])  # (c)
            return i + 1, j + 1
        lad.contract([q2, p[i + 2]])  # (d)
        return i + 2, j + 1
    ws.pivot(p2, q2)
    if r == 4:
        p3 = p[i + 2]
        ws.lc(p3)  # (e)
        lad.remove([p2, q2, p3])
        return i + 1, j + 1
    lad.remove([p2, q2])  # (f)
    return i, j + 1


def _final_deg4(lad: _Ladder, n: int, guarantee: bool) -> str | None:
    length = 4 * n + 3
    top = lad.max_degree()
    assert top <= 4 or not guarantee
    if top <= 3:
        return _final_deg3(lad, n, guarantee)
    if len(lad.p) > 1 and len(lad.q) > 1:
        claim = _normalize_corners(lad, length)
        if claim:
            return claim
    heavy = sum(1 for v in lad.p + lad.q if lad.deg(v) >= 3)
    if heavy >= 48 * n * n:
        _removedeg4(lad, 12 * n * n)
        return _final_deg3(lad, n, guarantee)
    claim = _face_claim(lad, length)
    if claim or guarantee or not heavy:
        return claim
    _removedeg4(lad, 12 * n * n)
    return _final_deg3(lad, n, guarantee)


def _span(lad: _Ladder, v: int, pos: dict) -> tuple[int, int]:
    js = [pos[w] for w in lad.ws.nbrs(v) if w in pos]
    if not js:
        return 0, 0
    return min(js), max(js)


def _bound_degrees(lad: _Ladder, heavy: list[int]) -> None:
    """LC-delete the interior of each heavy vertex's chord span; heavy vertices survive."""
    lad.route.append(f"bound {len(heavy)}")
    ppos = {v: i for i, v in enumerate(lad.p)}
    qpos = {v: j for j, v in enumerate(lad.q)}
    p0, q0 = list(lad.p), list(lad.q)
    dead: set[int] = set()
    for v in heavy:
        on_p = v in ppos
        mine, other, opos = (p0, q0, qpos) if on_p else (q0, p0, ppos)
        lo, hi = _span(lad, v, opos)
        if hi - lo < 2:
            # neighbouring spans already stripped its chords
            continue
        inner = [u for u in other[lo + 1:hi] if u not in dead]
        # ends of the live path; an earlier corner cut may have moved them
        first = v == next(u for u in mine if u not in dead)
        last = v == next(u for u in reversed(mine) if u not in dead)
        if first or last:
            # corner: cut the other path back to the span end instead
            cut = [u for u in (other[:hi] if first else other[lo + 1:]) if u not in dead]
            lad.ws.delete(cut)
            dead.update(cut)
            continue
        for u in inner:
            lad.ws.lc(u)
            lad.ws.delete((u,))
        dead.update(inner)
    lad.p = [v for v in lad.p if v not in dead]
    lad.q = [v for v in lad.q if v not in dead]
    lad.check()
    assert all(lad.deg(v) <= 4 for v in heavy), "a bounded vertex kept degree above 4"


def _ladder_in(lad: _Ladder, n: int, guarantee: bool) -> str | None:
    length = 4 * n + 3
    p, q = lad.p, lad.q
    if len(p) == 1 or len(q) == 1:
        c, path = (p[0], q) if len(p) == 1 else (q[0], p)
        lad.route.append("center-path")
        return _center_path_in(lad.ws, c, path, 2 * n + 1)
    four = [v for v in p + q if lad.deg(v) >= 4]
    if len(four) >= 192 * n ** 3:
        _bound_degrees(lad, four)
        return _final_deg4(lad, n, guarantee)
    five = [v for v in p + q if lad.deg(v) >= 5]
    ppos = {v: i for i, v in enumerate(p)}
    qpos = {v: j for j, v in enumerate(q)}
    for v in five:
        other, opos = (q, qpos) if v in ppos else (p, ppos)
        lo, hi = _span(lad, v, opos)
        if hi - lo + 2 >= 24 * n * n - 3:
            lad.route.append("center-path")
            claim = _center_path_in(lad.ws, v, other[lo:hi + 1], 2 * n + 1)
            if claim:
                return claim
            if guarantee:
                raise AssertionError("centre-path step failed above its size bound")
            return None
    if five:
        _bound_degrees(lad, five)
    return _final_deg4(lad, n, guarantee)


def ladder_to_cycle(lv: LadderView, n: int, *, best_effort: bool = False) -> ExtractionReport | None:
    """Certificate that a generalized ladder has a cycle of length ``4n+3`` as a vertex-minor.

    Guarantee mode refuses ladders below ``4608 n^5`` vertices; best-effort
    mode runs the same decision tree with fallbacks and may return ``None``.
    """
    if n < 1:
        raise GraphError("n must be positive")
    validate_ladder(lv.graph, lv.p, lv.q)
    guarantee = not best_effort
    if guarantee and lv.graph.order < ladder_bound(n):
        raise ExtractionRefused(
            f"ladder has {lv.graph.order} vertices, below the {ladder_bound(n)} needed for a promise")
    ws = Workspace(lv.graph)
    lad = _Ladder(ws, lv.p, lv.q)
    claim = _ladder_in(lad, n, guarantee)
    if claim is None:
        if guarantee:
            raise AssertionError("ladder decision tree ended without a cycle above the size bound")
        return None
    return ws.finish(claim, route=lad.route)
