"""Exhaustive ground truth over connected bipartite graphs of small order.

A connected bipartite graph has a unique bipartition, so sweeping every edge
subset of one labeled ``K_(p,q)`` per split ``p <= q`` reaches every
isomorphism class.  The sweep kernels reduce each subset to a code carrying
diameter, degree histogram and M2; index values are exact functions of that
code.  Only the masks whose code lands on an extremal value are turned back
into graphs and canonicalized.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import _kernels, graph6
from .canon import canonical_form
from .graph import Graph
from .indices import m1_from_degrees, pi1_from_degrees, pi2_from_degrees

log = logging.getLogger(__name__)

MAX_N = 12
CHUNK = 1 << 18
INDEX_NAMES = ("pi1", "pi2", "m1", "m2")


def workers() -> int:
    """Worker threads for the sweep; ``BIPZAGREB_WORKERS`` overrides the CPU count."""
    env = os.environ.get("BIPZAGREB_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class EnumSpec:
    n: int
    diameter_filter: int | None = None
    index: str = "pi1"

    def __post_init__(self):
        if not 2 <= self.n <= MAX_N:
            raise ValueError(f"n must lie in [2, {MAX_N}], got {self.n}")
        if self.diameter_filter is not None and not 1 <= self.diameter_filter <= self.n - 1:
            raise ValueError(f"diameter filter must lie in [1, {self.n - 1}]")
        if self.index not in INDEX_NAMES:
            raise ValueError(f"unknown index {self.index!r}")


def splits(n: int) -> list[tuple[int, int]]:
    return [(p, n - p) for p in range(1, n // 2 + 1)]


def mask_to_graph(p: int, q: int, mask: int) -> Graph:
    n = p + q
    rows = [0] * n
    for i in range(p):
        row = (mask >> (i * q)) & ((1 << q) - 1)
        rows[i] = row << p
        for j in range(q):
            if (row >> j) & 1:
                rows[p + j] |= 1 << i
    return Graph(n, tuple(rows))


def _chunks(p: int, q: int) -> list[tuple[int, int]]:
    total = 1 << (p * q)
    return [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]


def _run_chunks(n, fn, backend):
    jobs = [(p, q, s, e) for p, q in splits(n) for s, e in _chunks(p, q)]
    if workers() == 1 or len(jobs) == 1:
        return [fn(*job, backend) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers()) as pool:
        return list(pool.map(lambda job: fn(*job, backend), jobs))


def _summarize_chunk(p, q, start, stop, backend):
    codes = _kernels.sweep(p, q, start, stop, backend)
    return np.unique(codes[codes >= 0], return_counts=True)


@lru_cache(maxsize=16)
def code_summary(n: int, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Distinct codes over all splits of order ``n`` with labeled-graph counts."""
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must lie in [2, {MAX_N}], got {n}")
    parts = _run_chunks(n, _summarize_chunk, backend)
    codes = np.concatenate([c for c, _ in parts])
    counts = np.concatenate([k for _, k in parts])
    uniq, inv = np.unique(codes, return_inverse=True)
    return uniq, np.bincount(inv, weights=counts).astype(np.int64)


def _gather_chunk(p, q, start, stop, backend, wanted):
    codes = _kernels.sweep(p, q, start, stop, backend)
    hit = np.nonzero(np.isin(codes, wanted))[0]
    return p, q, (hit + start).tolist(), codes[hit].tolist()


def masks_with_codes(n: int, wanted: np.ndarray, backend: str | None = None) -> list[tuple[int, int, int, int]]:
    """All ``(p, q, mask, code)`` whose code is in ``wanted``, in sweep order."""
    parts = _run_chunks(n, lambda p, q, s, e, b: _gather_chunk(p, q, s, e, b, wanted), backend)
    return [(p, q, m, c) for p, q, ms, cs in parts for m, c in zip(ms, cs)]


def degrees_of(hist: list[int]) -> list[int]:
    return [d for d, c in enumerate(hist) for _ in range(c)]


def code_value(code: int, index: str) -> int:
    _, m2, hist = _kernels.decode_code(code)
    if index == "m2":
        return m2
    degs = degrees_of(hist)
    if index == "pi1":
        return pi1_from_degrees(degs)
    if index == "pi2":
        return pi2_from_degrees(degs)
    if index == "m1":
        return m1_from_degrees(degs)
    raise ValueError(f"unknown index {index!r}")


def code_diameter(code: int) -> int:
    return int(code) >> _kernels.DIAM_SHIFT


def enumerate_bipartite_connected(spec: EnumSpec, backend: str | None = None) -> Iterator[Graph]:
    """Every connected bipartite graph of order n (matching the diameter filter)
    on the fixed split templates; isomorphic duplicates are included."""
    for p, q in splits(spec.n):
        for start, stop in _chunks(p, q):
            codes = _kernels.sweep(p, q, start, stop, backend)
            ok = codes >= 0
            if spec.diameter_filter is not None:
                ok &= (codes >> _kernels.DIAM_SHIFT) == spec.diameter_filter
            for k in np.nonzero(ok)[0]:
                yield mask_to_graph(p, q, start + int(k))


@dataclass
class RankedClass:
    canonical: str
    graph6: str
    value: int
    labeled_copies: int

    def to_json(self) -> dict:
        return {"canonical": self.canonical, "graph6": self.graph6,
                "value": str(self.value), "labeled_copies": self.labeled_copies}


@dataclass
class ExtremaReport:
    spec: EnumSpec
    maximizers: list[RankedClass] = field(default_factory=list)
    minimizers: list[RankedClass] = field(default_factory=list)
    graphs_examined: int = 0
    classes_examined: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.spec.n,
            "diameter": self.spec.diameter_filter,
            "index": self.spec.index,
            "maximizers": [c.to_json() for c in self.maximizers],
            "minimizers": [c.to_json() for c in self.minimizers],
            "graphs_examined": self.graphs_examined,
            "classes_examined": self.classes_examined,
        }


def _filtered_summary(spec: EnumSpec, backend):
    codes, counts = code_summary(spec.n, backend)
    if spec.diameter_filter is not None:
        keep = (codes >> _kernels.DIAM_SHIFT) == spec.diameter_filter
        codes, counts = codes[keep], counts[keep]
    return codes, counts


def _classes_for(n: int, codes_by_value: dict[int, list[int]], index: str, backend) -> dict[int, list[RankedClass]]:
    wanted = np.array(sorted({c for cs in codes_by_value.values() for c in cs}), dtype=np.int64)
    hits = masks_with_codes(n, wanted, backend)
    by_value: dict[int, dict[bytes, RankedClass]] = {v: {} for v in codes_by_value}
    value_of = {c: v for v, cs in codes_by_value.items() for c in cs}
    for p, q, mask, code in hits:
        g = mask_to_graph(p, q, mask)
        v = value_of[code]
        cf = canonical_form(g)
        classes = by_value[v]
        if cf in classes:
            classes[cf].labeled_copies += 1
        else:
            classes[cf] = RankedClass(cf.decode("ascii"), graph6.encode(g), v, 1)
    return {v: [cls[k] for k in sorted(cls)] for v, cls in by_value.items()}


def ranked_classes(spec: EnumSpec, k: int, largest: bool = True, backend: str | None = None) -> tuple[list[RankedClass], int, int]:
    """The k best isomorphism classes (whole value levels, so ties stay visible).

    Returns ``(classes, labeled graphs in filter, classes canonicalized)``.
    """
    codes, counts = _filtered_summary(spec, backend)
    total = int(counts.sum())
    if not len(codes):
        return [], total, 0
    values: dict[int, list[int]] = {}
    for c in codes.tolist():
        values.setdefault(code_value(c, spec.index), []).append(c)
    order = sorted(values, reverse=largest)
    out: list[RankedClass] = []
    examined = 0
    pos = 0
    while len(out) < k and pos < len(order):
        v = order[pos]
        pos += 1
        found = _classes_for(spec.n, {v: values[v]}, spec.index, backend)[v]
        examined += len(found)
        out.extend(found)
    return out, total, examined


def extrema(spec: EnumSpec, k: int = 1, backend: str | None = None) -> ExtremaReport:
    if k < 1:
        raise ValueError("k must be positive")
    top, total, ex1 = ranked_classes(spec, k, True, backend)
    bottom, _, ex2 = ranked_classes(spec, k, False, backend)
    return ExtremaReport(spec, top, bottom, total, ex1 + ex2)


def all_classes(n: int, diameter_filter: int | None = None) -> dict[bytes, Graph]:
    """Canonical form -> representative for every class; meant for n <= 7."""
    out: dict[bytes, Graph] = {}
    for g in enumerate_bipartite_connected(EnumSpec(n, diameter_filter)):
        out.setdefault(canonical_form(g), g)
    return out
