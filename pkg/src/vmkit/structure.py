"""Splits, primality and the 1-join.

Convention: graphs on three or fewer vertices are never prime.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, compact, mask_of


@dataclass(frozen=True)
class Split:
    A: tuple[int, ...]
    B: tuple[int, ...]
    A0: tuple[int, ...]
    B0: tuple[int, ...]

    def text(self) -> str:
        return "|".join(" ".join(map(str, s)) for s in (self.A, self.A0, self.B, self.B0))


def _closure(out: list[int], seed: int) -> int:
    done = 0
    todo = seed
    while todo:
        low = todo & -todo
        done |= low
        todo = (todo | out[low.bit_length() - 1]) & ~done
    return done


def _candidates(rows: list[int], live: int) -> set[int]:
    """Minimal split sides generated from seed pairs.

    With ``a`` in A0 and ``b`` in B0 fixed, a vertex pair can only straddle
    the split if its adjacency equals ``[x~b][y~a]``; every other pair forces
    ``y`` into A once ``x`` is in A.  The A-side is therefore a closure in
    that implication digraph.  Edgeless cross patterns fall back to unions
    of components.
    """
    vs = list(bits(live))
    found: set[int] = set()
    for a in vs:
        for b in bits(rows[a]):
            out = [0] * len(rows)
            ra, rb = rows[a], rows[b]
            for x in vs:
                xb = (rb >> x) & 1
                allowed = ra if xb else 0  # y with [x~b][y~a] = 1
                # y forbidden across the split when adj(x,y) != allowed(y)
                out[x] = (rows[x] ^ allowed) & live & ~(1 << x)
            for a2 in vs:
                if a2 == a or a2 == b:
                    continue
                side = _closure(out, (1 << a) | (1 << a2))
                if not (side >> b) & 1 and (live & ~side).bit_count() >= 2:
                    found.add(side)
    comp = {}
    for v in vs:
        comp[v] = _closure([r & live for r in rows], 1 << v)
    for i, u in enumerate(vs):
        for v in vs[i:]:
            side = comp[u] | comp[v]
            if side.bit_count() >= 2 and (live & ~side).bit_count() >= 2:
                found.add(side)
    return found


def find_split(g: Graph) -> Split | None:
    """A split with the smallest A, ties broken by the sorted id list of A."""
    if g.order < 4:
        return None
    h, index = compact(g)
    back = sorted(index, key=index.get)
    rows = h.rows()
    live = (1 << h.n) - 1
    cands = _candidates(rows, live)
    if not cands:
        return None
    pool = set()
    for side in cands:
        pool.add(side)
        pool.add(live & ~side)
    best = min(pool, key=lambda s: (s.bit_count(), list(bits(s))))
    other = live & ~best
    a0 = [v for v in bits(best) if rows[v] & other]
    b0 = [v for v in bits(other) if rows[v] & best]
    conv = lambda xs: tuple(back[v] for v in xs)  # noqa: E731
    return Split(conv(bits(best)), conv(bits(other)), conv(a0), conv(b0))


def is_split(g: Graph, a_side) -> bool:
    a = set(a_side)
    b = set(g.vertices()) - a
    if len(a) < 2 or len(b) < 2:
        return False
    bm = mask_of(b)
    pattern = {g.row(x) & bm for x in a} - {0}
    return len(pattern) <= 1


def is_prime(g: Graph) -> bool:
    return g.order >= 4 and find_split(g) is None


def one_join(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Disjoint union of ``G1 - v1`` and ``G2 - v2`` plus ``N(v1) x N(v2)``.

    Side one takes ids ``0..|G1|-2`` in id order, side two follows.
    """
    n1 = set(g1.neighbors(v1))
    n2 = set(g2.neighbors(v2))
    left = [v for v in g1.vertices() if v != v1]
    right = [v for v in g2.vertices() if v != v2]
    li = {v: i for i, v in enumerate(left)}
    ri = {v: i + len(left) for i, v in enumerate(right)}
    edges = [(li[u], li[v]) for u, v in g1.edges() if v1 not in (u, v)]
    edges += [(ri[u], ri[v]) for u, v in g2.edges() if v2 not in (u, v)]
    edges += [(li[u], ri[v]) for u in n1 for v in n2]
    return Graph(len(left) + len(right), edges)
