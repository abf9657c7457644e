"""Simple undirected graphs stored as per-vertex bit rows.

Bit ``u`` of ``rows[v]`` is set iff ``u`` and ``v`` are adjacent.  All the
structural queries here (BFS layering, diameter, bipartition) work on those
rows directly, which keeps them cheap at the orders the oracle runs at.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or a precondition violated by a graph."""


class DisconnectedGraphError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
            u = row
            while u:
                low = u & -u
                w = low.bit_length() - 1
                if not (self.rows[w] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
                u ^= low

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class LayerPartition:
    root: int
    layers: tuple[frozenset[int], ...]

    @property
    def layer_sizes(self) -> list[int]:
        return [len(layer) for layer in self.layers]

    @property
    def depth(self) -> int:
        return len(self.layers) - 1

    def layer_of(self, v: int) -> int:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        raise GraphError(f"vertex {v} not in partition")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def bfs_layers(g: Graph, root: int) -> list[int]:
    """Bitmask of each BFS layer from ``root``; stops at the last nonempty layer."""
    seen = frontier = 1 << root
    layers = [frontier]
    while True:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)
        frontier = nxt


def is_connected(g: Graph) -> bool:
    return sum(layer.bit_count() for layer in bfs_layers(g, 0)) == g.n


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")


def distances_from(g: Graph, v: int) -> list[int]:
    dist = [-1] * g.n
    for i, layer in enumerate(bfs_layers(g, v)):
        for u in _bits(layer):
            dist[u] = i
    return dist


def eccentricity(g: Graph, v: int) -> int:
    _require_connected(g)
    return len(bfs_layers(g, v)) - 1


def diameter(g: Graph) -> int:
    _require_connected(g)
    return max(len(bfs_layers(g, v)) - 1 for v in range(g.n))


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The two colour classes, smaller first (ties: the side holding vertex 0).

    Returns ``None`` for a graph with an odd cycle.
    """
    _require_connected(g)
    layers = bfs_layers(g, 0)
    even = odd = 0
    for i, layer in enumerate(layers):
        if i % 2:
            odd |= layer
        else:
            even |= layer
    for v in range(g.n):
        side = even if (even >> v) & 1 else odd
        if g.rows[v] & side:
            return None
    a, b = frozenset(_bits(even)), frozenset(_bits(odd))
    if len(b) < len(a):
        a, b = b, a
    return a, b


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def layer_partition(g: Graph, root: int) -> LayerPartition:
    _require_connected(g)
    if not 0 <= root < g.n:
        raise GraphError(f"root {root} outside 0..{g.n - 1}")
    return LayerPartition(root, tuple(frozenset(_bits(x)) for x in bfs_layers(g, root)))


def diametral_root(g: Graph) -> int:
    """Smallest vertex whose eccentricity equals the diameter."""
    d = diameter(g)
    return next(v for v in range(g.n) if len(bfs_layers(g, v)) - 1 == d)


def _layer_masks(p: LayerPartition) -> list[int]:
    return [sum(1 << v for v in layer) for layer in p.layers]


def layers_independent(g: Graph, p: LayerPartition) -> bool:
    for mask in _layer_masks(p):
        for v in _bits(mask):
            if g.rows[v] & mask:
                return False
    return True


def consecutive_layers_complete(g: Graph, p: LayerPartition) -> bool:
    masks = _layer_masks(p)
    for prev, cur in zip(masks, masks[1:]):
        for v in _bits(cur):
            if g.rows[v] & prev != prev:
                return False
    return True

