"""Blocking sequences for a pair of disjoint vertex sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError, local_complement, pivot
from .rank import cross_rank
from .trace import LC, OpTrace, Pivot


@dataclass(frozen=True)
class BlockingSequence:
    graph: Graph
    A: frozenset[int]
    B: frozenset[int]
    seq: tuple[int, ...]
    base: int

    def __len__(self) -> int:
        return len(self.seq)


@dataclass(frozen=True)
class BlockCheck:
    ok: bool
    condition: str | None = None  # "a", "b", "c" or "d"
    index: int | None = None

    def __bool__(self) -> bool:
        return self.ok


class _Ranks:
    """Memoised cross-rank for one fixed graph and context."""

    def __init__(self, g: Graph, a, b):
        self.g = g
        self.a = frozenset(a)
        self.b = frozenset(b)
        if self.a & self.b:
            raise GraphError("A and B must be disjoint")
        self.cache: dict[tuple[frozenset, frozenset], int] = {}
        self.k = self(frozenset(), frozenset())

    def __call__(self, xa, yb) -> int:
        key = (frozenset(xa), frozenset(yb))
        r = self.cache.get(key)
        if r is None:
            r = cross_rank(self.g, self.a | key[0], self.b | key[1])
            self.cache[key] = r
        return r


def is_blocking_sequence(g: Graph, a, b, seq) -> BlockCheck:
    """Check conditions (a) to (c) directly and minimality via the singleton patterns.

    Minimality holds iff ``rank(A, B+v_j) = k`` for ``j >= 2``,
    ``rank(A+v_j, B) = k`` for ``j < m`` and ``rank(A+v_i, B+v_j) = k`` for
    ``j > i+1``: any proper subsequence that blocks must start late, end
    early or skip a gap, and each of those is one such pattern.
    """
    seq = tuple(seq)
    if not seq or len(set(seq)) != len(seq):
        raise GraphError("sequence must be nonempty and repetition-free")
    rk = _Ranks(g, a, b)
    if set(seq) & (rk.a | rk.b):
        raise GraphError("sequence must avoid A and B")
    k, m = rk.k, len(seq)
    if rk((), (seq[0],)) <= k:
        return BlockCheck(False, "a", 0)
    for i in range(m - 1):
        if rk((seq[i],), (seq[i + 1],)) <= k:
            return BlockCheck(False, "b", i)
    if rk((seq[-1],), ()) <= k:
        return BlockCheck(False, "c", m - 1)
    for j in range(1, m):
        if rk((), (seq[j],)) != k:
            return BlockCheck(False, "d", j)
    for j in range(m - 1):
        if rk((seq[j],), ()) != k:
            return BlockCheck(False, "d", j)
    for i in range(m):
        for j in range(i + 2, m):
            if rk((seq[i],), (seq[j],)) != k:
                return BlockCheck(False, "d", i)
    return BlockCheck(True)


def find_blocking_sequence(g: Graph, a, b) -> BlockingSequence | None:
    """Shortest blocking sequence, lexicographically least among the shortest.

    Shortest paths in the digraph whose arcs ``u -> w`` satisfy
    ``rank(A+u, B+w) > k`` from a vertex raising ``rank(A, B+v)`` to one
    raising ``rank(A+v, B)``.  A shortest one cannot have a blocking proper
    subsequence.
    """
    rk = _Ranks(g, a, b)
    k = rk.k
    cand = [v for v in g.vertices() if v not in rk.a and v not in rk.b]
    start = [v for v in cand if rk((), (v,)) > k]
    if not start:
        return None
    end = [v for v in cand if rk((v,), ()) > k]
    if not end:
        return None
    succ = {u: [w for w in cand if w != u and rk((u,), (w,)) > k] for u in cand}
    pred: dict[int, list[int]] = {v: [] for v in cand}
    for u, ws in succ.items():
        for w in ws:
            pred[w].append(u)
    dist = {v: 0 for v in end}
    queue = deque(end)
    while queue:
        w = queue.popleft()
        for u in pred[w]:
            if u not in dist:
                dist[u] = dist[w] + 1
                queue.append(u)
    reach = [v for v in start if v in dist]
    if not reach:
        return None
    best = min(dist[v] for v in reach)
    cur = min(v for v in reach if dist[v] == best)
    seq = [cur]
    while dist[cur]:
        cur = min(w for w in succ[cur] if dist.get(w) == dist[cur] - 1)
        seq.append(cur)
    out = BlockingSequence(g, rk.a, rk.b, tuple(seq), k)
    assert is_blocking_sequence(g, a, b, seq), "finder produced an invalid sequence"
    return out


def reduce_at(g: Graph, a, b, seq, i: int, mode="lc"):
    """Shorten a blocking sequence by one operation at position ``i`` (0-based).

    ``mode`` is ``"lc"``, ``("pivot", w)`` with ``w`` in A or B adjacent to
    ``seq[i]``, or ``("pair", j)`` with ``j > i`` and ``seq[i] ~ seq[j]``.
    Returns ``(G', seq', base')``.  Beyond the threshold length the base is
    unchanged and ``seq'`` blocks in ``G'``; at the threshold the base grows
    by exactly one and ``seq'`` is empty.
    """
    seq = tuple(seq)
    check = is_blocking_sequence(g, a, b, seq)
    if not check:
        raise GraphError(f"input is not a blocking sequence (condition {check.condition})")
    a, b = frozenset(a), frozenset(b)
    k = cross_rank(g, a, b)
    m = len(seq)
    v = seq[i]
    if mode == "lc":
        g2 = local_complement(g, v)
        rest = seq[:i] + seq[i + 1:]
        threshold = 1
    elif mode[0] == "pivot":
        w = mode[1]
        if w not in a | b or not g.adjacent(v, w):
            raise GraphError("pivot anchor must be a neighbour in A or B")
        g2 = pivot(g, v, w)
        rest = seq[:i] + seq[i + 1:]
        threshold = 1
    elif mode[0] == "pair":
        j = mode[1]
        if not i < j < m or not g.adjacent(v, seq[j]):
            raise GraphError("pivot pair must be adjacent with i < j")
        g2 = pivot(g, v, seq[j])
        rest = tuple(x for t, x in enumerate(seq) if t not in (i, j))
        threshold = 2
    else:
        raise GraphError(f"unknown mode {mode!r}")
    k2 = cross_rank(g2, a, b)
    if m > threshold:
        assert k2 == k, "base changed above the threshold"
        assert is_blocking_sequence(g2, a, b, rest), "reduced sequence does not block"
        return g2, rest, k2
    assert k2 == k + 1, "base did not grow by one at the threshold"
    return g2, (), k2


def patch_bound(a0, b0) -> int:
    if len(a0) == 1 and len(b0) == 1:
        return 3
    if len(a0) == 1 or len(b0) == 1:
        return 4
    return 6


def shorten_for_patch(g: Graph, a, b, a0, b0):
    """Locally equivalent ``G'`` agreeing with ``G`` on ``A | B`` whose blocking
    sequence has length at most 3, 4 or 6 by the sizes of ``A0`` and ``B0``.

    Returns ``(G', sequence, trace)`` with ``trace`` replaying ``G -> G'``.
    """
    a, b, a0, b0 = frozenset(a), frozenset(b), frozenset(a0), frozenset(b0)
    if len(a) < 2 or len(b) < 2 or not a0 or not b0:
        raise GraphError("need |A|, |B| >= 2 and nonempty A0, B0")
    for x in a:
        for y in b:
            if g.adjacent(x, y) != (x in a0 and y in b0):
                raise GraphError("A-B edges are not exactly A0 x B0")
    found = find_blocking_sequence(g, a, b)
    if found is None:
        raise GraphError("no blocking sequence; the graph is not prime")
    seq = list(found.seq)
    ab = a | b
    steps = []
    while True:
        m = len(seq)
        trace = {v: g.neighbor_set(v) & ab for v in seq}
        move = None
        # a vertex seeing at most one of A | B can be complemented for free
        for t in range(m):
            if m > 1 and len(trace[seq[t]]) <= 1:
                move = ("lc", t)
                break
        if move is None:
            seen: dict[frozenset, int] = {}
            for t in range(1, m - 1):
                key = frozenset(trace[seq[t]])
                if key in seen:
                    move = ("twin", seen[key], t)
                    break
                seen[key] = t
        if move is None:
            break
        if move[0] == "lc":
            t = move[1]
            v = seq[t]
            g, rest, _ = reduce_at(g, a, b, seq, t, "lc")
            steps.append(LC(v))
        else:
            _, s, t = move
            x, y = seq[s], seq[t]
            if g.adjacent(x, y):
                g, rest, _ = reduce_at(g, a, b, seq, s, ("pair", t))
                steps.append(Pivot(x, y))
            else:
                g, mid, _ = reduce_at(g, a, b, seq, s, "lc")
                g, rest, _ = reduce_at(g, a, b, mid, mid.index(y), "lc")
                steps += [LC(x), LC(y)]
        seq = list(rest)
    assert len(seq) <= patch_bound(a0, b0), "pigeonhole bound violated"
    return g, tuple(seq), OpTrace(tuple(steps))
