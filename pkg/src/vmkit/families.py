"""Named graph families and the structural overlays used by the extractors.

Vertex numbering is part of the contract:

* ``path(n)``: ``0-1-...-(n-1)``; ``cycle(n)`` adds ``(n-1)-0``.
* ``star(n)``: centre ``0`` joined to leaves ``1..n-1`` (``K_{1,n-1}``).
* ``fan(n)``: centre ``0`` dominating the path ``1-2-...-(n-1)``.
* ``wheel_variant(i)``: hub ``0`` inside the hexagon ``1-2-3-4-5-6-1``; the hub
  sees ``{1,4}``, ``{1,3,5}`` or ``{1,2,4,6}`` for ``i = 1, 2, 3``.
* ``h_graph(n)``: roots ``0`` and ``1``; the k-th root-to-root path is
  ``0 - 2+2k - 3+2k - 1``.  ``j_graph(n)`` adds ``2n+2`` adjacent to both roots.
* ``join(G, H, kind)``: side one keeps ids ``0..n-1``, side two is shifted to
  ``n..2n-1``; vertex ``i`` of side one meets vertex ``n+j`` when ``i == j``
  (matching), ``i != j`` (anti-matching) or ``i >= j`` (chain).
* ``edgeless(n)`` is the stable set written ``S_n`` in the join names.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError, compact

JOIN_KINDS = ("matching", "anti-matching", "chain")


class FamilyError(ValueError):
    pass


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs at least one vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    if n < 1:
        raise FamilyError("edgeless graph needs at least one vertex")
    return Graph(n)


def star(n: int) -> Graph:
    if n < 2:
        raise FamilyError("star needs a centre and a leaf")
    return Graph(n, [(0, i) for i in range(1, n)])


def fan(n: int) -> Graph:
    if n < 3:
        raise FamilyError("fan needs at least two path vertices")
    return Graph(n, [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)])


_HUB = {1: (1, 4), 2: (1, 3, 5), 3: (1, 2, 4, 6)}


def wheel_variant(i: int) -> Graph:
    if i not in _HUB:
        raise FamilyError("wheel variants are F1, F2, F3")
    hexagon = [(k, k % 6 + 1) for k in range(1, 7)]
    return Graph(7, hexagon + [(0, k) for k in _HUB[i]])


def h_graph(n: int) -> Graph:
    if n < 1:
        raise FamilyError("h_graph needs at least one path")
    edges = []
    for k in range(n):
        a, b = 2 + 2 * k, 3 + 2 * k
        edges += [(0, a), (a, b), (b, 1)]
    return Graph(2 * n + 2, edges)


def j_graph(n: int) -> Graph:
    h = h_graph(n)
    z = 2 * n + 2
    return Graph(2 * n + 3, list(h.edges()) + [(0, z), (1, z)])


def join(g: Graph, h: Graph, kind: str) -> Graph:
    if kind not in JOIN_KINDS:
        raise FamilyError(f"unknown join kind {kind!r}")
    gc, _ = compact(g)
    hc, _ = compact(h)
    n = gc.n
    if hc.n != n:
        raise FamilyError("join needs equal side sizes")
    edges = list(gc.edges()) + [(u + n, v + n) for u, v in hc.edges()]
    for i in range(n):
        for j in range(n):
            if (kind == "matching" and i == j) or (kind == "anti-matching" and i != j) or (kind == "chain" and i >= j):
                edges.append((i, n + j))
    return Graph(2 * n, edges)


_SIMPLE = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "edgeless": edgeless,
    "star": star,
    "fan": fan,
    "h_graph": h_graph,
    "j_graph": j_graph,
}


def make(spec: str) -> Graph:
    """Build a graph from a family spec string.

    Accepted forms: ``"cycle 7"``, ``"F2"``, ``"join matching complete complete 3"``
    and ``"g6 <graph6>"``.
    """
    parts = spec.split()
    if not parts:
        raise FamilyError("empty family spec")
    name = parts[0]
    try:
        if name in _SIMPLE and len(parts) == 2:
            return _SIMPLE[name](int(parts[1]))
        if name in ("F1", "F2", "F3") and len(parts) == 1:
            return wheel_variant(int(name[1]))
        if name == "join" and len(parts) == 5 and parts[2] in _SIMPLE and parts[3] in _SIMPLE:
            k = int(parts[4])
            return join(_SIMPLE[parts[2]](k), _SIMPLE[parts[3]](k), parts[1])
        if name == "g6" and len(parts) == 2:
            from .io import from_graph6

            return from_graph6(parts[1])
    except ValueError as exc:
        raise FamilyError(f"bad family spec {spec!r}: {exc}") from None
    raise FamilyError(f"unknown family spec {spec!r}")


# ----------------------------------------------------------------------
# generalized ladders


class LadderError(GraphError):
    pass


def ladder_chords(g: Graph, p: tuple[int, ...], q: tuple[int, ...]) -> list[tuple[int, int]]:
    """Chords as 1-based ``(i, j)`` pairs meaning ``p_i q_j``, sorted."""
    qpos = {v: j for j, v in enumerate(q, start=1)}
    out = []
    for i, v in enumerate(p, start=1):
        for w in g.neighbor_set(v):
            j = qpos.get(w)
            if j is not None:
                out.append((i, j))
    out.sort()
    return out


def _check_induced_path(g: Graph, seq: tuple[int, ...], name: str) -> None:
    inside = set(seq)
    pos = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        same = [pos[w] for w in g.neighbor_set(v) if w in inside]
        want = {i - 1, i + 1} & set(range(len(seq)))
        if set(same) != want:
            raise LadderError(f"{name} is not an induced path at position {i + 1}")


def validate_ladder(g: Graph, p: tuple[int, ...], q: tuple[int, ...]) -> list[tuple[int, int]]:
    """Check the generalized-ladder axioms; return the chord list."""
    if not p or not q:
        raise LadderError("both paths must be nonempty")
    if set(p) & set(q):
        raise LadderError("paths share a vertex")
    if len(set(p)) != len(p) or len(set(q)) != len(q):
        raise LadderError("repeated vertex on a path")
    if set(p) | set(q) != set(g.vertices()):
        raise LadderError("paths do not cover the vertex set")
    _check_induced_path(g, p, "P")
    _check_induced_path(g, q, "Q")
    chords = ladder_chords(g, p, q)
    cs = set(chords)
    if (1, 1) not in cs:
        raise LadderError("first chord p1q1 missing")
    if (len(p), len(q)) not in cs:
        raise LadderError("last chord paqb missing")
    # sorted by i then j: crossing iff some later chord has smaller j
    best = 0
    for i, j in chords:
        if j < best:
            raise LadderError(f"chord p{i}q{j} crosses an earlier chord")
        best = max(best, j)
    return chords


@dataclass(frozen=True)
class LadderView:
    graph: Graph
    p: tuple[int, ...]
    q: tuple[int, ...]
    chords: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @classmethod
    def build(cls, g: Graph, p, q) -> "LadderView":
        p, q = tuple(p), tuple(q)
        return cls(g, p, q, tuple(validate_ladder(g, p, q)))

    @property
    def a(self) -> int:
        return len(self.p)

    @property
    def b(self) -> int:
        return len(self.q)


def _ladder_from_chords(a: int, b: int, chords) -> LadderView:
    edges = [(i, i + 1) for i in range(a - 1)] + [(a + j, a + j + 1) for j in range(b - 1)]
    edges += [(i - 1, a + j - 1) for i, j in chords]
    n = a + b
    g = Graph(n, edges)
    return LadderView.build(g, range(a), range(a, a + b))


def make_ladder(kind: str, *args, **kwargs) -> LadderView:
    """Build a validated ladder; ``p_i`` gets id ``i-1`` and ``q_j`` gets ``a+j-1``.

    ``make_ladder("explicit", a, b, chords)`` with 1-based chord pairs,
    ``make_ladder("random", a, b, density, seed)`` and
    ``make_ladder("deg3", n)`` for the rung-count ``n`` zigzag ladder.
    """
    if kind == "explicit":
        a, b, chords = args
        for i, j in chords:
            if not (1 <= i <= a and 1 <= j <= b):
                raise LadderError(f"chord p{i}q{j} out of range")
        return _ladder_from_chords(a, b, sorted(set(chords)))
    if kind == "random":
        a, b, density, seed = args
        return _ladder_from_chords(a, b, random_chords(a, b, density, seed))
    if kind == "deg3":
        (n,) = args
        size = 3 * n + 1
        chords = [(1, 1)] + [(i + 1, i) for i in range(1, size)] + [(size, size)]
        return _ladder_from_chords(size, size, chords)
    raise LadderError(f"unknown ladder kind {kind!r}")


def random_chords(a: int, b: int, density: float, seed: int) -> list[tuple[int, int]]:
    """Non-crossing chords sampled along a random monotone lattice walk."""
    rng = random.Random(seed)
    i = j = 1
    chords = [(1, 1)]
    while (i, j) != (a, b):
        moves = []
        if i < a:
            moves.append((1, 0))
        if j < b:
            moves.append((0, 1))
        if i < a and j < b:
            moves.append((1, 1))
        di, dj = rng.choice(moves)
        i, j = i + di, j + dj
        if (i, j) == (a, b) or rng.random() < density:
            chords.append((i, j))
    return chords


SAMPLE_LADDER_CHORDS = (
    (1, 1), (1, 3), (3, 3), (3, 4), (3, 5), (4, 5), (4, 6),
    (6, 6), (7, 6), (8, 6), (8, 8), (9, 8),
)  # fmt: skip


# ----------------------------------------------------------------------
# patched paths


@dataclass(frozen=True)
class PatchView:
    graph: Graph
    path: tuple[int, ...]
    patch: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def fully_patched(self) -> bool:
        return len(self.patch) == self.length - 2


def validate_patch(g: Graph, path_: tuple[int, ...], patch: tuple[int, ...]) -> tuple[bool, str | None, int | None]:
    """Check the k-patch clauses; return ``(ok, clause, i)`` for the first failure.

    Clauses are checked per patch vertex in order (i), (ii), (iii).
    """
    n = len(path_) - 1
    k = len(patch)
    if k > max(n - 2, 0):
        return False, "size", None
    if set(path_) & set(patch):
        return False, "disjoint", None
    vs = list(path_)
    for idx in range(1, len(vs)):
        for jdx in range(idx):
            if g.adjacent(vs[idx], vs[jdx]) != (idx - jdx == 1):
                return False, "path", None
    for i in range(1, k + 1):
        w = patch[i - 1]
        nb = g.neighbor_set(w)
        later = {path_[j] for j in range(i + 1, n + 1)}
        if nb & later != {path_[i + 2]}:
            return False, "i", i
        if i > 1:
            earlier = {path_[j] for j in range(i + 1)} | set(patch[: i - 1])
            seen = nb & earlier
            if not seen or seen == {path_[i], patch[i - 2]}:
                return False, "ii", i
        else:
            if nb & {path_[0], path_[1]} != {path_[0]}:
                return False, "iii", i
    return True, None, None


SAMPLE_PATCH_EDGES = (
    ("w1", "v3"), ("w2", "v4"), ("w3", "v5"), ("w4", "v6"),
    ("w1", "v0"), ("w2", "w1"), ("w2", "v1"), ("w3", "w1"), ("w3", "v3"), ("w4", "v4"),
)  # fmt: skip


def sample_patch(drop: tuple[str, str] | None = None) -> PatchView:
    """The 4-patched path of length 8: ``v_i`` is id ``i``, ``w_i`` is ``8+i``."""
    def vid(name: str) -> int:
        return int(name[1:]) + (8 if name[0] == "w" else 0)

    edges = [(i, i + 1) for i in range(8)]
    edges += [(vid(a), vid(b)) for a, b in SAMPLE_PATCH_EDGES if (a, b) != drop]
    return PatchView(Graph(13, edges), tuple(range(9)), (9, 10, 11, 12))


# ----------------------------------------------------------------------
# brooms


@dataclass(frozen=True)
class BroomView:
    graph: Graph
    center: int
    handle: tuple[int, ...]  # starts at the centre
    fibers: tuple[tuple[int, ...], ...]

    @property
    def height(self) -> int:
        return len(self.handle) - 1

    @property
    def width(self) -> int:
        return len(self.fibers)


def validate_broom(bv: BroomView) -> None:
    g = bv.graph
    h = bv.handle
    if not h or h[0] != bv.center:
        raise GraphError("handle must start at the centre")
    if not g.is_connected():
        raise GraphError("broom must be connected")
    _check_induced_path(g, h, "handle")
    rest = set(g.vertices()) - {bv.center}
    tail = set(h[1:])
    for v in tail:
        if g.neighbor_set(v) - tail - {bv.center}:
            raise GraphError("handle minus centre is not a component")
    sizes = {len(f) for f in bv.fibers}
    if len(sizes) > 1:
        raise GraphError("fibers differ in size")
    cover = set().union(*map(set, bv.fibers)) if bv.fibers else set()
    if cover != rest - tail:
        raise GraphError("fibers do not cover the rest of the broom")
    for f in bv.fibers:
        fs = set(f)
        for v in f:
            if g.neighbor_set(v) - fs - {bv.center}:
                raise GraphError("fibers are not separate components")
        sub = _components_within(g, fs)
        if len(sub) != 1:
            raise GraphError("fiber is disconnected")


def _components_within(g: Graph, xs: set[int]) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for s in sorted(xs):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.neighbor_set(u):
                if w in xs and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        out.append(comp)
    return out


def make_broom(h: int, w: int, ell: int, fiber: str = "path", attach: str = "end", seed: int = 0) -> BroomView:
    """A broom with ``w`` fibers of ``ell`` vertices on a handle of length ``h``.

    ``fiber`` is ``"path"``, ``"complete"`` or ``"random"`` (a random tree);
    ``attach`` is ``"end"`` (centre sees the first fiber vertex),
    ``"all"`` or ``"random"`` (a nonempty random subset).
    """
    if min(h, w, ell) < 1:
        raise FamilyError("broom parameters must be positive")
    rng = random.Random(seed)
    center = 0
    handle = tuple(range(h + 1))
    edges = [(i, i + 1) for i in range(h)]
    nxt = h + 1
    fibers = []
    for _ in range(w):
        f = list(range(nxt, nxt + ell))
        nxt += ell
        if fiber == "path":
            edges += [(f[i], f[i + 1]) for i in range(ell - 1)]
        elif fiber == "complete":
            edges += [(f[i], f[j]) for i in range(ell) for j in range(i + 1, ell)]
        elif fiber == "random":
            edges += [(f[i], f[rng.randrange(i)]) for i in range(1, ell)]
        else:
            raise FamilyError(f"unknown fiber spec {fiber!r}")
        if attach == "end":
            seen = [f[0]]
        elif attach == "all":
            seen = f
        elif attach == "random":
            seen = [v for v in f if rng.random() < 0.5] or [rng.choice(f)]
        else:
            raise FamilyError(f"unknown attachment spec {attach!r}")
        edges += [(center, v) for v in seen]
        fibers.append(tuple(f))
    bv = BroomView(Graph(nxt, edges), center, handle, tuple(fibers))
    validate_broom(bv)
    return bv


def blocks_fiber(g: Graph, bv: BroomView, fiber: tuple[int, ...], v: int) -> bool:
    """Whether ``v`` (outside the broom) blocks ``fiber``."""
    from .rank import cross_rank

    fs = set(fiber)
    broom = set(bv.handle) | {u for f in bv.fibers for u in f}
    return cross_rank(g, fs, (broom - fs) | {v}) > 1


def all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class on ``n`` vertices.

    Grown one vertex at a time over every neighbourhood subset and deduplicated
    by canonical code.  Practical up to 8 vertices.
    """
    from .canon import canonical_code_rows

    if n < 0:
        raise FamilyError("n must be non-negative")
    level = {b"": []}
    for size in range(n):
        nxt: dict[bytes, list[int]] = {}
        for rows in level.values():
            for nb in range(1 << size):
                grown = [r | (((nb >> i) & 1) << size) for i, r in enumerate(rows)] + [nb]
                nxt.setdefault(canonical_code_rows(grown), grown)
        level = nxt
    return [Graph.from_rows(rows) for _, rows in sorted(level.items())]
