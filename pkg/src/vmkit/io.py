"""graph6 and edge-list text formats.

Both writers emit the compacted graph (live vertices renumbered in id order).
"""

from __future__ import annotations

from .graph import Graph, compact


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def graph6_from_bits(n: int, packed: int) -> str:
    """Encode an upper-triangle bit string given most-significant-first."""
    total = n * (n - 1) // 2
    pad = (-total) % 6
    packed <<= pad
    chunks = (total + pad) // 6
    body = "".join(chr(63 + ((packed >> (6 * (chunks - 1 - k))) & 63)) for k in range(chunks))
    return _size_prefix(n) + body


def to_graph6(g: Graph) -> str:
    h, _ = compact(g)
    n = h.n
    rows = h.rows()
    out = []
    acc = 0
    nb = 0
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nb += 1
            if nb == 6:
                out.append(chr(63 + acc))
                acc = nb = 0
    if nb:
        out.append(chr(63 + (acc << (6 - nb))))
    return _size_prefix(n) + "".join(out)


def from_graph6(text: str, line: int = 1) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    for col, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", line, col)
    if not s:
        raise ParseError("empty graph6 string", line, 1)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] < 63:
        if len(vals) < 4:
            raise ParseError("truncated size field", line, len(s))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise ParseError("truncated size field", line, len(s))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - pos != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(vals) - pos}", line, pos + 1)
    edges = []
    k = 0
    data = vals[pos:]
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def to_edge_list(g: Graph) -> str:
    h, _ = compact(g)
    lines = [f"{h.n} {h.m}"]
    lines += [f"{u} {v}" for u, v in h.edges()]
    return "\n".join(lines) + "\n"


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integers, found {len(parts)}", lineno, 1)
    out = []
    col = 1
    for p in parts:
        col = line.index(p, col - 1) + 1
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"not an integer: {p!r}", lineno, col) from None
        col += len(p)
    return out


def from_edge_list(text: str) -> Graph:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty edge list", 1, 1)
    (hl, header), body = lines[0], lines[1:]
    n, m = _ints(header, hl, 2)
    if n < 0 or m < 0:
        raise ParseError("negative size in header", hl, 1)
    if len(body) != m:
        raise ParseError(f"header promises {m} edges, found {len(body)}", body[-1][0] if body else hl, 1)
    edges = []
    for lineno, ln in body:
        u, v = _ints(ln, lineno, 2)
        for val in (u, v):
            if not 0 <= val < n:
                raise ParseError(f"vertex {val} out of range 0..{n - 1}", lineno, ln.index(str(val)) + 1)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, 1)
        edges.append((u, v))
    return Graph(n, edges)


def read_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse one graph, detecting the format from the first byte if needed.

    An edge list starts with a decimal digit; anything else is graph6.
    """
    if fmt is None:
        stripped = text.lstrip()
        fmt = "edges" if stripped[:1].isdigit() or stripped.startswith("#") else "g6"
    if fmt == "edges":
        return from_edge_list(text)
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, found {len(lines)}", 1, 1)
        return from_graph6(lines[0])
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(g: Graph, fmt: str = "g6") -> str:
    if fmt == "g6":
        return to_graph6(g) + "\n"
    if fmt == "edges":
        return to_edge_list(g)
    raise ValueError(f"unknown format {fmt!r}")
