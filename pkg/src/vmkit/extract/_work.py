from __future__ import annotations

import time
from dataclasses import dataclass, field

from .. import rank
from ..graph import Graph, GraphError
from ..trace import LC, Delete, OpTrace, Pivot, replay


class ExtractionRefused(GraphError):
    """Guarantee mode was asked for something the size bounds do not promise."""


@dataclass(frozen=True)
class ExtractionReport:
    trace: OpTrace
    target: str
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def length(self) -> int:
        return int(self.target.split()[-1])


class Workspace:
    """A mutable copy of the source graph that logs every operation."""

    def __init__(self, g: Graph):
        self.source = g
        self.work = g.thaw()
        self.steps: list = []
        self.t0 = time.perf_counter()
        self.q0 = rank.query_count()

    # reads
    def nbrs(self, v: int) -> set[int]:
        return set(self.work.nbrs(v))

    def adjacent(self, u: int, v: int) -> bool:
        return self.work.adjacent(u, v)

    def degree(self, v: int) -> int:
        return self.work.degree(v)

    def alive(self, v: int) -> bool:
        return 0 <= v < self.work.n and bool(self.work.alive[v])

    def vertices(self) -> list[int]:
        return self.work.vertices()

    def graph(self) -> Graph:
        return self.work.freeze()

    # writes
    def lc(self, v: int) -> None:
        self.work.local_complement(v)
        self.steps.append(LC(v))

    def pivot(self, x: int, y: int) -> None:
        self.work.pivot(x, y)
        self.steps.append(Pivot(x, y))

    def delete(self, vs) -> None:
        vs = tuple(vs)
        if not vs:
            return
        for v in vs:
            self.work.delete(v)
        self.steps.append(Delete(vs))

    def keep_only(self, keep) -> None:
        keep = set(keep)
        self.delete(v for v in self.vertices() if v not in keep)

    def checkpoint(self) -> tuple:
        return self.work.copy(), len(self.steps)

    def rollback(self, mark: tuple) -> None:
        work, k = mark
        self.work = work.copy()
        del self.steps[k:]

    def trace(self) -> OpTrace:
        return OpTrace(tuple(self.steps))

    def finish(self, claim: str, **extra) -> ExtractionReport:
        """Certificate for the current graph; replays it before returning."""
        t = OpTrace(tuple(self.steps), tuple(self.vertices()), claim)
        res = replay(self.source, t)
        if not res.verified:
            raise AssertionError(f"certificate does not verify its claim {claim!r}")
        stats = {
            "steps": len(self.steps),
            "rank_queries": rank.query_count() - self.q0,
            "wall_time": time.perf_counter() - self.t0,
        }
        stats.update(extra)
        return ExtractionReport(t, claim, stats)
