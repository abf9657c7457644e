"""Canonical labeling by individualization-refinement.

The search tree starts from the degree partition, refines to an equitable
ordered partition, then individualizes each vertex of the first smallest
non-singleton cell in turn.  Every leaf is a vertex ordering; the canonical
form is the lexicographically smallest upper-triangle adjacency bit string
over all leaves.  Branches that lie in the same orbit of an automorphism
already discovered (and fixing the current individualized prefix) are
skipped.
"""

from __future__ import annotations

from functools import lru_cache

from . import graph6
from .graph import Graph, GraphError

MAX_N = 12


def _refine(g: Graph, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    rows = g.rows
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                out.append(tuple(groups[sig]))
        if len(out) == len(cells):
            return out
        cells = out


def _encode(g: Graph, order: list[int]) -> int:
    rows = g.rows
    x = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            x = (x << 1) | ((rj >> order[i]) & 1)
    return x


def _orbit_reps(candidates, autos, prefix):
    parent = {v: v for v in candidates}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in autos:
        if any(a[v] != v for v in prefix):
            continue
        for v in candidates:
            w = a[v]
            if w in parent:
                rv, rw = find(v), find(w)
                if rv != rw:
                    parent[max(rv, rw)] = min(rv, rw)
    return [v for v in candidates if find(v) == v]


def canonical_order(g: Graph) -> list[int]:
    """Vertex ordering (position -> original vertex) giving the canonical graph."""
    if g.n > MAX_N:
        raise GraphError(f"canonicalization is exhaustive; n={g.n} exceeds {MAX_N}")
    by_deg: dict[int, list[int]] = {}
    for v, d in enumerate(g.degrees()):
        by_deg.setdefault(d, []).append(v)
    start = _refine(g, [tuple(by_deg[d]) for d in sorted(by_deg)])

    best: list = [None, None]  # encoding, order
    autos: list[list[int]] = []

    def search(cells, prefix):
        if len(cells) == g.n:
            order = [c[0] for c in cells]
            code = _encode(g, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            elif code == best[0]:
                # order and best order give identical graphs: record the automorphism
                a = [0] * g.n
                for pos, v in enumerate(best[1]):
                    a[v] = order[pos]
                autos.append(a)
            return
        k = min(range(len(cells)), key=lambda i: (len(cells[i]) == 1, len(cells[i]), i))
        target = cells[k]
        done: list[int] = []
        for v in target:
            if done and v not in _orbit_reps(done + [v], autos, prefix):
                continue
            done.append(v)
            split = cells[:k] + [(v,), tuple(w for w in target if w != v)] + cells[k + 1:]
            search(_refine(g, split), prefix + [v])

    search(start, [])
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


@lru_cache(maxsize=1 << 16)
def _canonical_form_cached(g: Graph) -> bytes:
    return graph6.encode(canonical_graph(g)).encode("ascii")


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonically relabeled graph; equal iff isomorphic."""
    return _canonical_form_cached(g)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
