"""GF(2) cross-rank and cut-rank."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, bits, mask_of


_queries = [0]  # statistics only; racy increments under threads are acceptable


def query_count() -> int:
    """Running total of rank evaluations."""
    return _queries[0]


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of bit-vectors given as ints."""
    _queries[0] += 1
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def _rows(g: Graph, xs: Iterable[int], ys: set[int] | frozenset[int]) -> list[int]:
    if not g.is_sparse:
        ym = mask_of(ys)
        return [g.row(x) & ym for x in xs]
    index: dict[int, int] = {}
    out = []
    for x in xs:
        r = 0
        for w in g.neighbor_set(x):
            if w in ys:
                r |= 1 << index.setdefault(w, len(index))
        out.append(r)
    return out


def cross_rank(g: Graph, xs: Iterable[int], ys: Iterable[int]) -> int:
    """Rank of the ``X x Y`` block of the adjacency matrix."""
    xs = set(xs)
    ys = set(ys)
    if xs & ys:
        raise GraphError("cross_rank needs disjoint sets")
    for v in xs | ys:
        if v not in g:
            raise GraphError(f"vertex {v} is not in the graph")
    if len(xs) > len(ys) and not g.is_sparse:
        xs, ys = ys, xs
    return gf2_rank(_rows(g, sorted(xs), ys))


def cut_rank(g: Graph, xs: Iterable[int]) -> int:
    xs = set(xs)
    for v in xs:
        if v not in g:
            raise GraphError(f"vertex {v} is not in the graph")
    if g.is_sparse:
        outside = _Complement(g, xs)
        return gf2_rank(_rows(g, sorted(xs), outside))
    rest = g.live_mask & ~mask_of(xs)
    if len(xs) <= rest.bit_count():
        return gf2_rank(g.row(x) & rest for x in xs)
    xm = mask_of(xs)
    return gf2_rank(g.row(v) & xm for v in bits(rest))


class _Complement:
    # membership view of V \ X without materialising it
    __slots__ = ("g", "xs")

    def __init__(self, g: Graph, xs: set[int]):
        self.g, self.xs = g, xs

    def __contains__(self, v: object) -> bool:
        return v in self.g and v not in self.xs


@dataclass(frozen=True)
class CutRankProfile:
    anchor: int
    size: int
    rank: int
    sets: tuple[tuple[int, ...], ...]


def cutrank_profile(g: Graph, anchor: int, size: int, rank: int) -> CutRankProfile:
    """Every ``X`` containing ``anchor`` with ``|X| = size`` and cut-rank ``rank``."""
    if anchor not in g:
        raise GraphError(f"anchor {anchor} is not in the graph")
    if size > g.order:
        raise GraphError("size exceeds the vertex count")
    others = [v for v in g.vertices() if v != anchor]
    found = []
    for rest in combinations(others, size - 1):
        xs = (anchor,) + rest
        if cut_rank(g, xs) == rank:
            found.append(tuple(sorted(xs)))
    return CutRankProfile(anchor, size, rank, tuple(sorted(found)))
