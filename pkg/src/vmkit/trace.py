"""Replayable operation sequences: the certificate format for every extractor.

Text form, one record per line::

    LC 3
    PIVOT 4 7
    DEL 3 6
    KEEP 0 1 2 4 5 7 8
    CLAIM cycle 7
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .graph import Graph, GraphError, MutableGraph


@dataclass(frozen=True)
class LC:
    v: int

    def text(self) -> str:
        return f"LC {self.v}"


@dataclass(frozen=True)
class Pivot:
    x: int
    y: int

    def text(self) -> str:
        return f"PIVOT {self.x} {self.y}"


@dataclass(frozen=True)
class Delete:
    vs: tuple[int, ...]

    def text(self) -> str:
        return "DEL " + " ".join(map(str, self.vs))


Step = LC | Pivot | Delete


@dataclass(frozen=True)
class OpTrace:
    steps: tuple[Step, ...] = ()
    keep: tuple[int, ...] | None = None
    claim: str | None = None

    def then(self, *more: Step) -> "OpTrace":
        return OpTrace(self.steps + tuple(more), self.keep, self.claim)

    def with_keep(self, keep: Iterable[int], claim: str | None = None) -> "OpTrace":
        return OpTrace(self.steps, tuple(sorted(keep)), claim if claim is not None else self.claim)

    def to_text(self) -> str:
        lines = [s.text() for s in self.steps]
        if self.keep is not None:
            lines.append("KEEP " + " ".join(map(str, self.keep)))
        if self.claim is not None:
            lines.append("CLAIM " + self.claim)
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "OpTrace":
        from .io import ParseError

        steps: list[Step] = []
        keep = claim = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            op, _, rest = line.partition(" ")
            if op == "CLAIM":
                claim = rest.strip()
                continue
            try:
                args = [int(t) for t in rest.split()]
            except ValueError:
                raise ParseError(f"non-integer argument in {op} record", lineno, len(op) + 2) from None
            if op == "LC" and len(args) == 1:
                steps.append(LC(args[0]))
            elif op == "PIVOT" and len(args) == 2:
                steps.append(Pivot(args[0], args[1]))
            elif op == "DEL":
                steps.append(Delete(tuple(args)))
            elif op == "KEEP":
                keep = tuple(args)
            else:
                raise ParseError(f"unknown or malformed record {op!r}", lineno, 1)
        return cls(tuple(steps), keep, claim)


class ReplayError(GraphError):
    def __init__(self, index: int, message: str):
        super().__init__(f"step {index}: {message}")
        self.index = index


@dataclass(frozen=True)
class ReplayResult:
    graph: Graph
    verified: bool | None = None
    mapping: dict[int, int] | None = field(default=None, compare=False)


def apply_steps(work: MutableGraph, steps: Iterable[Step], offset: int = 0) -> None:
    for k, s in enumerate(steps, start=offset):
        try:
            if isinstance(s, LC):
                work.local_complement(s.v)
            elif isinstance(s, Pivot):
                work.pivot(s.x, s.y)
            else:
                for v in s.vs:
                    work.delete(v)
        except GraphError as exc:
            raise ReplayError(k, str(exc)) from None


def replay(g: Graph, t: OpTrace) -> ReplayResult:
    """Apply the steps, restrict to ``keep`` and check the claim if present."""
    work = g.thaw()
    apply_steps(work, t.steps)
    if t.keep is not None:
        keep = set(t.keep)
        for v in keep:
            if not (0 <= v < work.n) or not work.alive[v]:
                raise ReplayError(len(t.steps), f"kept vertex {v} is not alive")
        for v in work.vertices():
            if v not in keep:
                work.delete(v)
    out = work.freeze()
    if t.claim is None:
        return ReplayResult(out)
    mapping = matches_claim(out, t.claim)
    return ReplayResult(out, mapping is not None, mapping)


def _cycle_order(g: Graph) -> list[int] | None:
    vs = g.vertices()
    if len(vs) < 3 or any(g.degree(v) != 2 for v in vs):
        return None
    order = [vs[0]]
    prev, cur = None, vs[0]
    while True:
        nxt = [w for w in g.neighbors(cur) if w != prev]
        if prev is None:
            nxt = nxt[:1]
        step = nxt[0]
        if step == vs[0]:
            break
        order.append(step)
        prev, cur = cur, step
    return order if len(order) == len(vs) else None


def _path_order(g: Graph) -> list[int] | None:
    vs = g.vertices()
    if len(vs) == 1:
        return vs
    ends = [v for v in vs if g.degree(v) == 1]
    if len(ends) != 2 or any(g.degree(v) > 2 for v in vs) or g.m != len(vs) - 1:
        return None
    order = [min(ends)]
    prev = None
    while len(order) < len(vs):
        nxt = [w for w in g.neighbors(order[-1]) if w != prev]
        if not nxt:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order


def matches_claim(g: Graph, claim: str) -> dict[int, int] | None:
    """Isomorphism from ``g`` onto the claimed family member, or ``None``.

    Cycles and paths are recognised structurally at any size; other claims
    go through canonical labelling.
    """
    from .canon import are_isomorphic
    from .families import make

    parts = claim.split()
    if parts and parts[0] in ("cycle", "path") and len(parts) == 2:
        k = int(parts[1])
        if g.order != k:
            return None
        order = _cycle_order(g) if parts[0] == "cycle" else _path_order(g)
        if order is None:
            return None
        return {v: i for i, v in enumerate(order)}
    return are_isomorphic(g, make(claim))
