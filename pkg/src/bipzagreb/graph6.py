"""graph6 text encoding, single-byte size header only (n <= 62)."""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_N = 62


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> str:
    if g.n > MAX_N:
        raise Graph6Error(f"n={g.n} needs the multi-byte header, not supported")
    bits = []
    for v in range(1, g.n):
        row = g.rows[v]
        for u in range(v):
            bits.append((row >> u) & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        out.append(chr(63 + x))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside the graph6 range in {text!r}")
    n = codes[0]
    if n == 63:
        raise Graph6Error("multi-byte size header (n > 62) not supported")
    if n == 0:
        raise Graph6Error("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    if len(codes) - 1 != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(codes) - 1}")
    bits = []
    for c in codes[1:]:
        bits.extend((c >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    try:
        return Graph(n, tuple(rows))
    except GraphError as exc:  # pragma: no cover - rows are symmetric by construction
        raise Graph6Error(str(exc)) from exc
