"""Canonical labelling by colour refinement plus individualisation.

The search tree branches on the first smallest non-singleton cell.  Vertices
of a cell that are pairwise twins are interchangeable by an automorphism
fixing everything else, so only one representative per twin class is tried.
The certificate of a leaf is the upper-triangle bit string under the leaf's
ordering; the canonical code is the graph6 string of the maximum.
"""

from __future__ import annotations

from .graph import Graph, GraphError, compact

EXACT_LIMIT = 16


class UnsupportedSize(GraphError):
    pass


def _refine(rows: list[int], cells: list[list[int]]) -> list[list[int]]:
    cells = [c[:] for c in cells]
    queue = list(range(len(cells)))
    while queue:
        s = queue.pop(0)
        if s >= len(cells):
            continue
        smask = 0
        for v in cells[s]:
            smask |= 1 << v
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            for k in sorted(groups):
                out.append(groups[k])
        if len(out) != len(cells):
            cells = out
            # positions shift after a split; requeue every cell (n is tiny)
            queue = list(range(len(cells)))
    return cells


def _twin_reps(rows: list[int], cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in cell:
        for r in reps:
            if rows[v] & ~(1 << r) == rows[r] & ~(1 << v):
                break
        else:
            reps.append(v)
    return reps


def _certificate(rows: list[int], order: list[int]) -> int:
    cert = 0
    n = len(order)
    for j in range(1, n):
        rj = rows[order[j]]
        for i in range(j):
            cert = (cert << 1) | ((rj >> order[i]) & 1)
    return cert


def canonical_rows(rows: list[int]) -> tuple[list[int], int]:
    """Canonical order and certificate for a compact bitmask adjacency."""
    n = len(rows)
    if n > EXACT_LIMIT:
        raise UnsupportedSize(f"canonical labelling is exact only up to {EXACT_LIMIT} vertices")
    if n == 0:
        return [], 0
    init: dict[int, list[int]] = {}
    for v in range(n):
        init.setdefault(rows[v].bit_count(), []).append(v)
    start = _refine(rows, [init[k] for k in sorted(init)])
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        target = None
        for c in cells:
            if len(c) > 1 and (target is None or len(c) < len(target)):
                target = c
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(rows, order)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, order
            return
        ti = cells.index(target)
        for v in _twin_reps(rows, target):
            rest = [u for u in target if u != v]
            split = cells[:ti] + [[v], rest] + cells[ti + 1:]
            search(_refine(rows, split))

    search(start)
    return best[1], best[0]


def code_from_certificate(n: int, cert: int) -> bytes:
    # the certificate bit order is graph6's column-wise upper triangle
    from .io import graph6_from_bits

    return graph6_from_bits(n, cert).encode()


def canonical_order(g: Graph) -> list[int]:
    """Live vertices of ``g`` listed in canonical order."""
    h, index = compact(g)
    back = {i: v for v, i in index.items()}
    order, _ = canonical_rows(h.rows())
    return [back[v] for v in order]


def canonical_code_rows(rows: list[int]) -> bytes:
    _, cert = canonical_rows(rows)
    return code_from_certificate(len(rows), cert)


def canonical_form(g: Graph) -> bytes:
    """Byte string shared exactly by isomorphic graphs (``order <= 16``)."""
    h, _ = compact(g)
    return canonical_code_rows(h.rows())


def are_isomorphic(g: Graph, h: Graph) -> dict[int, int] | None:
    """An isomorphism ``g -> h`` as a vertex map, or ``None``."""
    if g.order != h.order or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices()) != sorted(h.degree(v) for v in h.vertices()):
        return None
    og, oh = canonical_order(g), canonical_order(h)
    mapping = dict(zip(og, oh))
    for u, v in g.edges():
        if not h.adjacent(mapping[u], mapping[v]):
            return None
    return mapping


def check_mapping(g: Graph, h: Graph, mapping: dict[int, int]) -> bool:
    if sorted(mapping) != g.vertices() or sorted(mapping.values()) != h.vertices():
        return False
    if g.m != h.m:
        return False
    return all(h.adjacent(mapping[u], mapping[v]) for u, v in g.edges())


__all__ = ["EXACT_LIMIT", "UnsupportedSize", "are_isomorphic", "canonical_code_rows", "canonical_form", "canonical_order", "canonical_rows", "check_mapping"]
