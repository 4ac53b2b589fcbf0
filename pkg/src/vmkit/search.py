"""Certificate-producing decision procedures.

Containment uses the three-way elimination recursion: if ``H`` is a
vertex-minor of ``G`` and ``v`` lies outside some copy of ``H``, then ``H``
is a vertex-minor of ``G - v``, ``G*v - v`` or ``G^vw - v``.  Every vertex is
tried as ``v`` (highest degree first), each reduced graph is memoised by its
canonical code, and the leaves compare against the local-equivalence orbit of
``H``.  A ``None`` answer is therefore exhaustive.
"""

from __future__ import annotations

import os
import random
import time
from collections import deque
from dataclasses import dataclass, field

from .canon import are_isomorphic, canonical_code_rows
from .graph import Graph, GraphError, bits, compact
from .io import to_graph6
from .trace import LC, Delete, OpTrace, Pivot, replay

EXHAUSTIVE_LIMIT = 16


class Inconclusive(RuntimeError):
    """A budget ran out before the search could decide."""


class Budget:
    """Wall-clock budget; ``ms=None`` reads ``VMKIT_BUDGET_MS`` and else never expires."""

    def __init__(self, ms: float | None = None):
        if ms is None:
            env = os.environ.get("VMKIT_BUDGET_MS")
            ms = float(env) if env else None
        self.deadline = None if ms is None else time.monotonic() + ms / 1000.0
        self._tick = 0

    def check(self) -> None:
        self._tick += 1
        if self.deadline is not None and self._tick % 64 == 0 and time.monotonic() > self.deadline:
            raise Inconclusive("time budget exhausted")


# -- row-level primitives on compact graphs -------------------------------


def _lc(rows: list[int], v: int) -> list[int]:
    rows = rows[:]
    nv = rows[v]
    for u in bits(nv):
        rows[u] ^= nv & ~(1 << u)
    return rows


def _pivot(rows: list[int], x: int, y: int) -> list[int]:
    rows = rows[:]
    bx, by = 1 << x, 1 << y
    nx = rows[x] & ~by
    ny = rows[y] & ~bx
    both, xo, yo = nx & ny, nx & ~ny, ny & ~nx
    for u in bits(both):
        rows[u] ^= xo | yo
    for u in bits(xo):
        rows[u] ^= both | yo
    for u in bits(yo):
        rows[u] ^= both | xo
    nx = rows[x] & ~by
    ny = rows[y] & ~bx
    for u in bits(nx ^ ny):
        rows[u] ^= bx | by
    rows[x] = ny | by
    rows[y] = nx | bx
    return rows


def _delete(rows: list[int], v: int) -> list[int]:
    rows = rows[:]
    bv = 1 << v
    for u in bits(rows[v]):
        rows[u] &= ~bv
    rows[v] = 0
    return rows


def _code(rows: list[int], alive: int) -> bytes:
    vs = list(bits(alive))
    pos = {v: i for i, v in enumerate(vs)}
    sub = []
    for v in vs:
        r = 0
        for u in bits(rows[v]):
            r |= 1 << pos[u]
        sub.append(r)
    return canonical_code_rows(sub)


def _as_graph(rows: list[int], alive: int, n: int) -> Graph:
    return Graph._raw(n, tuple(rows), alive, False)


def _compact_rows(g: Graph) -> tuple[list[int], list[int]]:
    h, index = compact(g)
    back = sorted(index, key=index.get)
    return h.rows(), back


# -- orbits -------------------------------------------------------------


@dataclass
class OrbitSummary:
    """Canonical codes reachable by local complementation, each with one word."""

    codes: dict[bytes, tuple[int, ...]]
    complete: bool
    graphs: dict[bytes, Graph] = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.codes)

    @property
    def generator_log(self) -> dict[bytes, tuple[int, ...]]:
        return self.codes


def _orbit(g: Graph, moves: str, limit: int | None, budget: Budget, target: bytes | None = None):
    rows, back = _compact_rows(g)
    n = len(rows)
    if n > EXHAUSTIVE_LIMIT:
        raise GraphError(f"orbit enumeration supports at most {EXHAUSTIVE_LIMIT} vertices")
    alive = (1 << n) - 1
    start = _code(rows, alive)
    words: dict[bytes, tuple] = {start: ()}
    states: dict[bytes, list[int]] = {start: rows}
    queue = deque([start])
    complete = True
    hit = start if start == target else None
    while queue and hit is None:
        code = queue.popleft()
        cur = states[code]
        if moves == "lc":
            succ = ((v,) for v in range(n))
        else:
            succ = ((x, y) for x in range(n) for y in bits(cur[x]) if x < y)
        for mv in succ:
            budget.check()
            nxt = _lc(cur, mv[0]) if moves == "lc" else _pivot(cur, *mv)
            c = _code(nxt, alive)
            if c in words:
                continue
            if limit is not None and len(words) >= limit:
                complete = False
                queue.clear()
                break
            words[c] = words[code] + (mv,)
            states[c] = nxt
            queue.append(c)
            if c == target:
                hit = c
                break
    words_out = {c: tuple(tuple(back[v] for v in mv) for mv in w) for c, w in words.items()}
    return words_out, states, back, complete, hit


def local_orbit(g: Graph, budget: int | None = None, *, budget_ms: float | None = None) -> OrbitSummary:
    """Breadth-first enumeration of the local-equivalence class up to isomorphism.

    ``budget`` caps the number of classes; when hit, ``complete`` is False.
    """
    words, states, back, complete, _ = _orbit(g, "lc", budget, Budget(budget_ms))
    n = len(back)
    graphs = {}
    for c, rows in states.items():
        # relabel back onto g's ids
        perm_rows = [0] * g.n
        for i, r in enumerate(rows):
            perm_rows[back[i]] = sum(1 << back[u] for u in bits(r))
        graphs[c] = Graph._raw(g.n, tuple(perm_rows), g.live_mask, False)
    del n
    return OrbitSummary({c: tuple(mv[0] for mv in w) for c, w in words.items()}, complete, graphs)


def _equivalence(g: Graph, h: Graph, moves: str, budget_ms: float | None, limit: int | None):
    if g.order != h.order:
        return None
    hrows, _ = _compact_rows(h)
    target = canonical_code_rows(hrows)
    words, _, _, complete, hit = _orbit(g, moves, limit, Budget(budget_ms), target)
    if hit is None:
        if not complete:
            raise Inconclusive("orbit budget exhausted before the target appeared")
        return None
    word = words[hit]
    cur = g
    for mv in word:
        cur = _apply_move(cur, mv)
    mapping = are_isomorphic(cur, h)
    assert mapping is not None
    return word, mapping


def _apply_move(g: Graph, mv: tuple[int, ...]) -> Graph:
    from .graph import local_complement, pivot

    return local_complement(g, mv[0]) if len(mv) == 1 else pivot(g, *mv)


def locally_equivalent(g: Graph, h: Graph, *, budget_ms: float | None = None, limit: int | None = None):
    """``(word, mapping)`` with ``G*word`` isomorphic to ``H`` via ``mapping``, or ``None``.

    Raises :class:`Inconclusive` if a budget stops the enumeration early.
    """
    out = _equivalence(g, h, "lc", budget_ms, limit)
    if out is None:
        return None
    word, mapping = out
    return tuple(mv[0] for mv in word), mapping


def pivot_equivalent(g: Graph, h: Graph, *, budget_ms: float | None = None, limit: int | None = None):
    """``(pairs, mapping)`` using pivots only, or ``None``."""
    return _equivalence(g, h, "pivot", budget_ms, limit)


# -- containment --------------------------------------------------------


@dataclass(frozen=True)
class ContainmentWitness:
    trace: OpTrace
    mapping: dict[int, int]


class _Containment:
    def __init__(self, h: Graph, budget: Budget):
        hrows, _ = _compact_rows(h)
        self.h = h
        self.k = len(hrows)
        self.h_connected = h.is_connected()
        words, states, hback, complete, _ = _orbit(h, "lc", None, budget)
        assert complete
        self.targets = words  # code -> word in h's ids
        self.budget = budget
        self.failed: set[bytes] = set()
        self.nodes = 0

    def run(self, rows: list[int], alive: int, path: list):
        self.budget.check()
        self.nodes += 1
        count = alive.bit_count()
        if count < self.k:
            return None
        code = _code(rows, alive)
        if count == self.k:
            return path if code in self.targets else None
        if code in self.failed:
            return None
        if self.h_connected:
            comps = _components(rows, alive)
            if len(comps) > 1:
                for comp in comps:
                    if comp.bit_count() < self.k:
                        continue
                    drop = alive & ~comp
                    sub = rows
                    for v in bits(drop):
                        sub = _delete(sub, v)
                    got = self.run(sub, comp, path + [Delete(tuple(bits(drop)))])
                    if got is not None:
                        return got
                self.failed.add(code)
                return None
        order = sorted(bits(alive), key=lambda v: (-rows[v].bit_count(), v))
        for v in order:
            nxt = _delete(rows, v)
            got = self.run(nxt, alive & ~(1 << v), path + [Delete((v,))])
            if got is not None:
                return got
            if rows[v]:
                nxt = _delete(_lc(rows, v), v)
                got = self.run(nxt, alive & ~(1 << v), path + [LC(v), Delete((v,))])
                if got is not None:
                    return got
                w = (rows[v] & -rows[v]).bit_length() - 1
                nxt = _delete(_pivot(rows, v, w), v)
                got = self.run(nxt, alive & ~(1 << v), path + [Pivot(v, w), Delete((v,))])
                if got is not None:
                    return got
        self.failed.add(code)
        return None


def _components(rows: list[int], alive: int) -> list[int]:
    out = []
    left = alive
    while left:
        seed = left & -left
        comp = 0
        todo = seed
        while todo:
            low = todo & -todo
            comp |= low
            todo = (todo | rows[low.bit_length() - 1]) & ~comp
        out.append(comp)
        left &= ~comp
    return out


def _finish(g: Graph, h: Graph, steps: list, targets: dict) -> ContainmentWitness:
    """Append the local-complementation word that turns the leaf into ``H``."""
    t = OpTrace(tuple(steps))
    leaf = replay(g, t).graph
    hrows, _ = _compact_rows(h)
    # the leaf is isomorphic to H*word for the word stored under its code
    lrows, lback = _compact_rows(leaf)
    word = targets[canonical_code_rows(lrows)]
    hw = h
    for mv in word:
        hw = _apply_move(hw, mv)
    iso = are_isomorphic(hw, leaf)
    assert iso is not None
    extra = [LC(iso[mv[0]]) for mv in reversed(word)]
    claim = "g6 " + to_graph6(h)
    t = OpTrace(tuple(steps) + tuple(extra), tuple(leaf.vertices()), claim)
    res = replay(g, t)
    assert res.verified, "containment witness failed to verify"
    hc, hindex = compact(h)
    mapping = are_isomorphic(res.graph, h)
    del hc, hindex
    return ContainmentWitness(t, mapping)


def is_vertex_minor(h: Graph, g: Graph, *, budget_ms: float | None = None, randomized: bool = False,
                    seed: int = 0, tries: int = 2000) -> ContainmentWitness | None:
    """Witness that ``H`` is isomorphic to a vertex-minor of ``G``, or ``None``.

    ``None`` is exhaustive.  Beyond the exhaustive size bound only the
    randomized mode is available, and it raises :class:`Inconclusive`
    instead of returning ``None``.
    """
    budget = Budget(budget_ms)
    if h.order > g.order:
        return None
    if randomized:
        return _random_vm(h, g, budget, seed, tries)
    if g.order > EXHAUSTIVE_LIMIT:
        raise GraphError(f"exhaustive containment supports at most {EXHAUSTIVE_LIMIT} vertices")
    grows, gback = _compact_rows(g)
    search = _Containment(h, budget)
    found = search.run(grows, (1 << len(grows)) - 1, [])
    if found is None:
        return None
    steps = [_lift(s, gback) for s in found]
    return _finish(g, h, steps, search.targets)


def _lift(step, back: list[int]):
    if isinstance(step, LC):
        return LC(back[step.v])
    if isinstance(step, Pivot):
        return Pivot(back[step.x], back[step.y])
    return Delete(tuple(back[v] for v in step.vs))


def _random_vm(h: Graph, g: Graph, budget: Budget, seed: int, tries: int):
    rng = random.Random(seed)
    if h.order > EXHAUSTIVE_LIMIT:
        raise GraphError("target too large for orbit comparison")
    words, *_ = _orbit(h, "lc", None, budget)
    from .graph import MutableGraph

    for _ in range(tries):
        budget.check()
        work: MutableGraph = g.thaw()
        steps = []
        while sum(work.alive) > h.order:
            vs = work.vertices()
            v = rng.choice(vs)
            r = rng.random()
            if r < 0.4 and work.degree(v):
                work.local_complement(v)
                steps.append(LC(v))
            elif r < 0.6 and work.degree(v):
                w = min(work.nbrs(v))
                work.pivot(v, w)
                steps.append(Pivot(v, w))
            work.delete(v)
            steps.append(Delete((v,)))
        leaf = work.freeze()
        lrows, _ = _compact_rows(leaf)
        if canonical_code_rows(lrows) in words:
            return _finish(g, h, steps, words)
    raise Inconclusive("randomized containment found no witness")


# -- bipartite patterns ---------------------------------------------------


def _pattern_edge(kind: str, i: int, j: int) -> bool:
    if kind == "matching":
        return i == j
    if kind == "anti-matching":
        return i != j
    return i >= j


def find_bipartite_pattern(g: Graph, s_side, t_side, k: int):
    """Ordered ``S'``, ``T'`` of size ``k`` whose cross pattern is a matching,
    a chain (``s_i ~ t_j`` iff ``i >= j``) or an anti-matching.

    Returns ``(kind, S', T')`` or ``None``; only the ``S x T`` adjacencies count.
    """
    s_side = sorted(set(s_side))
    t_side = sorted(set(t_side))
    if set(s_side) & set(t_side):
        raise GraphError("S and T must be disjoint")
    nb = {s: g.neighbor_set(s) for s in s_side}
    for kind in ("matching", "chain", "anti-matching"):
        symmetric = kind != "chain"
        ss: list[int] = []
        ts: list[int] = []

        def extend() -> bool:
            i = len(ss)
            if i == k:
                return True
            start = s_side.index(ss[-1]) + 1 if symmetric and ss else 0
            for s in s_side[start:]:
                if s in ss:
                    continue
                if any((t in nb[s]) != _pattern_edge(kind, i, j) for j, t in enumerate(ts)):
                    continue
                for t in t_side:
                    if t in ts:
                        continue
                    if (t in nb[s]) != _pattern_edge(kind, i, i):
                        continue
                    if any((t in nb[s2]) != _pattern_edge(kind, j, i) for j, s2 in enumerate(ss)):
                        continue
                    ss.append(s)
                    ts.append(t)
                    if extend():
                        return True
                    ss.pop()
                    ts.pop()
            return False

        if extend():
            return kind, tuple(ss), tuple(ts)
    return None


def find_induced_matching_or_hub(g: Graph, s_side, t_side, t: int):
    """``("hub", s)`` for an S-vertex with more than ``t`` T-neighbours, else
    ``("matching", pairs)`` with at least ``ceil(|T|/t)`` pairwise induced edges.
    """
    s_side = set(s_side)
    t_side = set(t_side)
    adj = {s: g.neighbor_set(s) & t_side for s in s_side}
    for w in t_side:
        if not g.neighbor_set(w) & s_side:
            raise GraphError(f"T-vertex {w} has no neighbour in S")
    for s in sorted(s_side):
        if len(adj[s]) >= t + 1:
            return "hub", s
    live_s = set(s_side)
    live_t = set(t_side)
    pairs = []
    while live_t:
        deg = {w: [s for s in live_s if w in adj[s]] for w in live_t}
        ones = sorted(w for w, ss in deg.items() if len(ss) == 1)
        if ones:
            w = ones[0]
            v = deg[w][0]
            pairs.append((v, w))
            live_t -= adj[v]
            live_s.discard(v)
        else:
            live_s.discard(min(live_s))
    return "matching", tuple(pairs)
