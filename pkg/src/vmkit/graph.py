"""Immutable simple graphs with stable vertex ids.

Vertices are integer ids in ``range(n)``.  Deleting a vertex clears its bit in
the liveness mask but never renumbers the survivors, so an operation sequence
recorded against the original graph can be replayed verbatim.

Small graphs keep one Python ``int`` bitmask per vertex.  Graphs with more
than ``DENSE_LIMIT`` id slots keep ``frozenset`` neighbour sets instead; both
layouts answer every query identically.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

DENSE_LIMIT = 4096


class GraphError(ValueError):
    """Raised for out-of-range or dead vertices and undefined operations."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def _mask_from_flags(flags: bytearray) -> int:
    # bytes-per-bit packing; avoids quadratic int building for large n
    packed = bytearray((len(flags) + 7) // 8)
    for v, f in enumerate(flags):
        if f:
            packed[v >> 3] |= 1 << (v & 7)
    return int.from_bytes(packed, "little")


class Graph:
    """Simple undirected graph on stable ids ``0..n-1``.

    ``n`` is the size of the id space; ``order`` is the number of live
    vertices.  Freshly generated graphs have ``order == n``.
    """

    __slots__ = ("_n", "_adj", "_live", "_sparse", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), *, sparse: bool | None = None):
        if n < 0:
            raise GraphError("negative vertex count")
        if sparse is None:
            sparse = n > DENSE_LIMIT
        work = MutableGraph.empty(n, sparse=sparse)
        for u, v in edges:
            work.add_edge(u, v)
        g = work.freeze()
        self._n, self._adj, self._live, self._sparse = g._n, g._adj, g._live, g._sparse
        self._hash = None

    @classmethod
    def _raw(cls, n: int, adj: tuple, live: int, sparse: bool) -> "Graph":
        g = object.__new__(cls)
        g._n, g._adj, g._live, g._sparse, g._hash = n, adj, live, sparse, None
        return g

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Dense graph from adjacency bitmasks (symmetry is checked)."""
        rows = tuple(rows)
        n = len(rows)
        for v, r in enumerate(rows):
            if r >> n or (r >> v) & 1:
                raise GraphError(f"row {v} out of range or has a loop")
            for u in bits(r):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency at {u},{v}")
        return cls._raw(n, rows, (1 << n) - 1, False)

    # -- basic queries -------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def order(self) -> int:
        return self._live.bit_count()

    @property
    def is_sparse(self) -> bool:
        return self._sparse

    @property
    def live_mask(self) -> int:
        return self._live

    def vertices(self) -> list[int]:
        return list(bits(self._live))

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self._n and (self._live >> v) & 1 == 1

    def _check(self, v: int) -> None:
        if v not in self:
            raise GraphError(f"vertex {v} is not a live vertex of this graph")

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if self._sparse:
            return v in self._adj[u]
        return (self._adj[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        if self._sparse:
            return sorted(self._adj[v])
        return list(bits(self._adj[v]))

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check(v)
        if self._sparse:
            return self._adj[v]
        return frozenset(bits(self._adj[v]))

    def row(self, v: int) -> int:
        """Neighbourhood of ``v`` as a bitmask over ids."""
        self._check(v)
        if self._sparse:
            return mask_of(self._adj[v])
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        if self._sparse:
            return len(self._adj[v])
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in bits(self._live):
            for v in (sorted(self._adj[u]) if self._sparse else bits(self._adj[u])):
                if u < v:
                    yield (u, v)

    @property
    def m(self) -> int:
        if self._sparse:
            return sum(len(s) for s in self._adj) // 2
        return sum(r.bit_count() for r in self._adj) // 2

    def rows(self) -> list[int]:
        """Bitmask rows for every id slot (zero for dead slots)."""
        if self._sparse:
            return [mask_of(s) for s in self._adj]
        return list(self._adj)

    def is_connected(self) -> bool:
        vs = self.vertices()
        if not vs:
            return True
        seen = {vs[0]}
        stack = [vs[0]]
        while stack:
            u = stack.pop()
            for w in self.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(vs)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in self.vertices():
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.neighbors(u):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    # -- identity ------------------------------------------------------
    def _key(self):
        if self._sparse:
            return (self._live, tuple(self._adj))
        return (self._live, self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self._live != other._live:
            return False
        if self._sparse == other._sparse:
            return self._adj == other._adj
        return self.rows() == other.rows()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._live, tuple(self.rows()) if self._sparse else self._adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, order={self.order}, m={self.m})"

    def thaw(self) -> "MutableGraph":
        return MutableGraph.from_graph(self)


class MutableGraph:
    """Scratch copy used by replay and the extractors.

    Same id semantics as :class:`Graph`; every mutator is O(local size).
    """

    __slots__ = ("n", "sparse", "adj", "alive")

    def __init__(self, n: int, sparse: bool, adj: list, alive: bytearray):
        self.n = n
        self.sparse = sparse
        self.adj = adj
        self.alive = alive

    @classmethod
    def empty(cls, n: int, *, sparse: bool = False) -> "MutableGraph":
        adj: list = [set() for _ in range(n)] if sparse else [0] * n
        return cls(n, sparse, adj, bytearray(b"\x01") * n)

    @classmethod
    def from_graph(cls, g: Graph) -> "MutableGraph":
        alive = bytearray(g.n)
        for v in bits(g.live_mask):
            alive[v] = 1
        if g.is_sparse:
            adj: list = [set(s) for s in g._adj]
        else:
            adj = list(g._adj)
        return cls(g.n, g.is_sparse, adj, alive)

    def copy(self) -> "MutableGraph":
        adj = [set(s) for s in self.adj] if self.sparse else list(self.adj)
        return MutableGraph(self.n, self.sparse, adj, bytearray(self.alive))

    def freeze(self) -> Graph:
        if self.sparse:
            adj = tuple(frozenset(s) for s in self.adj)
        else:
            adj = tuple(self.adj)
        return Graph._raw(self.n, adj, _mask_from_flags(self.alive), self.sparse)

    def check(self, v: int) -> None:
        if not (0 <= v < self.n) or not self.alive[v]:
            raise GraphError(f"vertex {v} is not a live vertex of this graph")

    def vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.alive[v]]

    def nbrs(self, v: int) -> Iterable[int]:
        if self.sparse:
            return self.adj[v]
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        if self.sparse:
            return len(self.adj[v])
        return self.adj[v].bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        if self.sparse:
            return v in self.adj[u]
        return (self.adj[u] >> v) & 1 == 1

    def add_edge(self, u: int, v: int) -> None:
        self.check(u)
        self.check(v)
        if u == v:
            raise GraphError(f"loop at {u}")
        if self.sparse:
            self.adj[u].add(v)
            self.adj[v].add(u)
        else:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u

    def flip(self, u: int, v: int) -> None:
        if self.sparse:
            self.adj[u] ^= {v}
            self.adj[v] ^= {u}
        else:
            self.adj[u] ^= 1 << v
            self.adj[v] ^= 1 << u

    def local_complement(self, v: int) -> None:
        self.check(v)
        if self.sparse:
            nb = list(self.adj[v])
            for i, x in enumerate(nb):
                for y in nb[i + 1:]:
                    self.flip(x, y)
        else:
            nv = self.adj[v]
            for u in bits(nv):
                self.adj[u] ^= nv & ~(1 << u)

    def pivot(self, x: int, y: int) -> None:
        self.check(x)
        self.check(y)
        if not self.adjacent(x, y):
            raise GraphError(f"pivot on non-edge {x}{y}")
        if self.sparse:
            nx = self.adj[x] - {y}
            ny = self.adj[y] - {x}
            both, xo, yo = nx & ny, nx - ny, ny - nx
            for a, b in ((both, xo), (both, yo), (xo, yo)):
                for u in a:
                    for w in b:
                        self.flip(u, w)
        else:
            nx = self.adj[x] & ~(1 << y)
            ny = self.adj[y] & ~(1 << x)
            both, xo, yo = nx & ny, nx & ~ny, ny & ~nx
            for u in bits(both):
                self.adj[u] ^= xo | yo
            for u in bits(xo):
                self.adj[u] ^= both | yo
            for u in bits(yo):
                self.adj[u] ^= both | xo
        self._swap(x, y)

    def _swap(self, x: int, y: int) -> None:
        # exchange the neighbourhoods of x and y; they stay adjacent
        if self.sparse:
            nx = self.adj[x] - {y}
            ny = self.adj[y] - {x}
            for u in nx:
                self.adj[u].discard(x)
            for u in ny:
                self.adj[u].discard(y)
            for u in nx:
                self.adj[u].add(y)
            for u in ny:
                self.adj[u].add(x)
            self.adj[x] = ny | {y}
            self.adj[y] = nx | {x}
        else:
            bx, by = 1 << x, 1 << y
            nx = self.adj[x] & ~by
            ny = self.adj[y] & ~bx
            for u in bits(nx ^ ny):
                self.adj[u] ^= bx | by
            self.adj[x] = ny | by
            self.adj[y] = nx | bx

    def delete(self, v: int) -> None:
        self.check(v)
        if self.sparse:
            for u in self.adj[v]:
                self.adj[u].discard(v)
            self.adj[v] = set()
        else:
            bv = 1 << v
            for u in bits(self.adj[v]):
                self.adj[u] &= ~bv
            self.adj[v] = 0
        self.alive[v] = 0


def local_complement(g: Graph, v: int) -> Graph:
    """Return ``G*v``: every pair of neighbours of ``v`` is flipped."""
    g._check(v)
    if g.is_sparse:
        w = g.thaw()
        w.local_complement(v)
        return w.freeze()
    rows = list(g._adj)
    nv = rows[v]
    for u in bits(nv):
        rows[u] ^= nv & ~(1 << u)
    return Graph._raw(g.n, tuple(rows), g.live_mask, False)


def pivot(g: Graph, x: int, y: int) -> Graph:
    """Return ``G∧xy`` for an edge ``xy``.

    Flips every pair of neighbours of distinct kinds (x-only, y-only, both),
    then exchanges ``x`` and ``y``.  A non-edge raises :class:`GraphError`.
    """
    w = g.thaw()
    w.pivot(x, y)
    return w.freeze()


def delete_vertices(g: Graph, xs: Iterable[int]) -> Graph:
    """``G`` minus ``xs``; surviving ids are unchanged."""
    w = g.thaw()
    for v in set(xs):
        w.delete(v)
    return w.freeze()


def induced_subgraph(g: Graph, xs: Iterable[int]) -> Graph:
    """``G[xs]`` on the original ids."""
    keep = set(xs)
    for v in keep:
        g._check(v)
    return delete_vertices(g, [v for v in g.vertices() if v not in keep])


def compact(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Renumber live vertices to ``0..order-1`` preserving id order.

    Returns the new graph and the ``old -> new`` map.
    """
    vs = g.vertices()
    index = {v: i for i, v in enumerate(vs)}
    if len(vs) == g.n:
        return g, index
    sparse = len(vs) > DENSE_LIMIT
    work = MutableGraph.empty(len(vs), sparse=sparse)
    for u, v in g.edges():
        work.add_edge(index[u], index[v])
    return work.freeze(), index


def relabel(g: Graph, perm: dict[int, int] | list[int], n: int | None = None) -> Graph:
    """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
    size = n if n is not None else g.n
    work = MutableGraph.empty(size, sparse=size > DENSE_LIMIT)
    targets = {perm[v] for v in g.vertices()}
    for v in range(size):
        if v not in targets:
            work.alive[v] = 0
    for u, v in g.edges():
        work.add_edge(perm[u], perm[v])
    return work.freeze()


def disjoint_union(g: Graph, h: Graph) -> Graph:
    gc, _ = compact(g)
    hc, _ = compact(h)
    a = gc.n
    edges = list(gc.edges()) + [(u + a, v + a) for u, v in hc.edges()]
    return Graph(a + hc.n, edges)
