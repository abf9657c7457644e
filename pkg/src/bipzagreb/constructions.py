"""Layer-chain graphs, the extremal (n, d) family, and closed-form index values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, from_edge_list


@dataclass(frozen=True)
class ChainSpec:
    """Layer sizes ``(m_0, ..., m_d)``; consecutive layers are completely joined."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if len(sizes) < 2:
            raise GraphError("a chain needs at least two layers")
        if any(m < 1 for m in sizes):
            raise GraphError(f"empty layer in chain {list(sizes)}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def layer_degrees(self) -> list[int]:
        """Degree shared by every vertex of each layer."""
        m = (0,) + self.sizes + (0,)
        return [m[i - 1] + m[i + 1] for i in range(1, len(m) - 1)]

    def degrees(self) -> list[int]:
        return [d for d, size in zip(self.layer_degrees(), self.sizes) for _ in range(size)]


def _as_chain(spec: ChainSpec | Sequence[int]) -> ChainSpec:
    return spec if isinstance(spec, ChainSpec) else ChainSpec(tuple(spec))


def chain_layers(spec: ChainSpec | Sequence[int]) -> list[range]:
    spec = _as_chain(spec)
    out, start = [], 0
    for size in spec.sizes:
        out.append(range(start, start + size))
        start += size
    return out


def chain_graph(spec: ChainSpec | Sequence[int]) -> Graph:
    """Vertices are numbered layer by layer, so layer 0 starts at vertex 0."""
    layers = chain_layers(spec)
    edges = [(u, v) for a, b in zip(layers, layers[1:]) for u in a for v in b]
    return from_edge_list(_as_chain(spec).n, edges)


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    d: int
    a: int
    b: int
    s: int
    t: int

    def chain(self) -> ChainSpec:
        return ChainSpec((1,) * self.a + (self.s, self.t) + (1,) * self.b)


# (a, b) listed for the small diameters; the floor/ceil split takes over at d >= 7
_SMALL_D_SPLIT = {2: (0, 1), 3: (1, 1), 4: (1, 2), 5: (2, 2), 6: (2, 3)}


def _check_range(n: int, d: int) -> None:
    if not 2 <= d <= n - 1:
        raise ValueError(f"diameter must satisfy 2 <= d <= n-1, got n={n}, d={d}")


def theorem38_params(n: int, d: int) -> ExtremalParams:
    _check_range(n, d)
    big = n - d + 1
    s, t = big // 2, big - big // 2
    if d in _SMALL_D_SPLIT:
        a, b = _SMALL_D_SPLIT[d]
    else:
        a, b = (d - 1) // 2, d - 1 - (d - 1) // 2
    return ExtremalParams(n, d, a, b, s, t)


def theorem38_chain(n: int, d: int) -> ChainSpec:
    return theorem38_params(n, d).chain()


def chain_pi1(spec: ChainSpec | Sequence[int]) -> int:
    spec = _as_chain(spec)
    out = 1
    for deg, size in zip(spec.layer_degrees(), spec.sizes):
        out *= deg ** (2 * size)
    return out


def chain_pi2(spec: ChainSpec | Sequence[int]) -> int:
    spec = _as_chain(spec)
    out = 1
    for deg, size in zip(spec.layer_degrees(), spec.sizes):
        out *= deg ** (deg * size)
    return out


def closed_form_pi1(n: int, d: int) -> int:
    return chain_pi1(theorem38_chain(n, d))


def closed_form_pi2(n: int, d: int) -> int:
    return chain_pi2(theorem38_chain(n, d))


def claim5_pi1(n: int, d: int) -> int:
    """``4^(d-5) (s+1)^(2t+2) (t+1)^(2s+2)``; needs d >= 7."""
    _check_range(n, d)
    if d < 7:
        raise ValueError("the long-chain closed form needs d >= 7")
    p = theorem38_params(n, d)
    return 4 ** (d - 5) * (p.s + 1) ** (2 * p.t + 2) * (p.t + 1) ** (2 * p.s + 2)


def claim5_pi2(n: int, d: int) -> int:
    """``4^(d-5) ((s+1)(t+1))^((s+1)(t+1))``; needs d >= 5 so both tails have two layers."""
    _check_range(n, d)
    if d < 5:
        raise ValueError("the long-chain closed form needs d >= 5")
    p = theorem38_params(n, d)
    e = (p.s + 1) * (p.t + 1)
    return 4 ** (d - 5) * e ** e


def single_tail_pi1(n: int) -> int:
    """pi1 of the diameter-2 chain (1, n-2, 1)."""
    return (n - 2) ** 4 * 4 ** (n - 2)


def single_tail_pi2(n: int) -> int:
    return (n - 2) ** (2 * n - 4) * 4 ** (n - 2)


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError(f"K_(s,t) needs s, t >= 1, got ({s}, {t})")
    return from_edge_list(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def complete_bipartite_minus_edge(s: int, t: int) -> Graph:
    """K_(s,t) without the edge between vertex 0 and vertex s."""
    if s < 1 or t < 1 or s * t < 2:
        raise GraphError(f"K_(s,t) - e needs s, t >= 1 and st >= 2, got ({s}, {t})")
    return from_edge_list(s + t, [(i, s + j) for i in range(s) for j in range(t) if (i, j) != (0, 0)])


def path(n: int) -> Graph:
    if n < 2:
        raise GraphError("path needs n >= 2")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 2:
        raise GraphError("star needs n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def _check_kst(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ValueError(f"need s, t >= 1, got ({s}, {t})")


def pi1_kst(s: int, t: int) -> int:
    _check_kst(s, t)
    return t ** (2 * s) * s ** (2 * t)


def pi2_kst(s: int, t: int) -> int:
    _check_kst(s, t)
    return (s * t) ** (s * t)


def _check_minus_edge(s: int, t: int) -> None:
    if s < 2 or t < 2:
        raise ValueError(f"K_(s,t) - e keeps every degree positive only for s, t >= 2, got ({s}, {t})")


def pi1_kst_minus_e(s: int, t: int) -> int:
    _check_minus_edge(s, t)
    return (t - 1) ** 2 * t ** (2 * (s - 1)) * (s - 1) ** 2 * s ** (2 * (t - 1))


def pi2_kst_minus_e(s: int, t: int) -> int:
    _check_minus_edge(s, t)
    return (t - 1) ** (t - 1) * t ** (t * (s - 1)) * (s - 1) ** (s - 1) * s ** (s * (t - 1))
