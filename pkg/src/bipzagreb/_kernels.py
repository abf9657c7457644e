"""Edge-subset sweep kernels.

For a split ``(p, q)`` the template is ``K_(p,q)`` with left vertices
``0..p-1`` and right vertices ``p..p+q-1``; bit ``i*q + j`` of a mask is the
edge ``(i, p+j)``.  A kernel maps a contiguous mask range to one int64 code per
mask::

    code = diameter << 59 | m2 << 48 | degree_key      (connected graphs)
    code = -1                                           (disconnected)

``degree_key`` packs the degree histogram, four bits per degree value, so the
multiplicative indices and M1 can be recovered exactly from the key alone.

Two interchangeable implementations exist: a numba ``@njit`` loop and a
vectorized numpy one.  Setting ``BIPZAGREB_NO_NUMBA=1`` (or a missing numba)
selects the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

DIAM_SHIFT = 59
M2_SHIFT = 48
KEY_MASK = (1 << M2_SHIFT) - 1
M2_MASK = (1 << (DIAM_SHIFT - M2_SHIFT)) - 1
MAX_N = 12

try:  # pragma: no cover - exercised implicitly by whichever backend is present
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_AVAILABLE = numba is not None


def default_backend() -> str:
    if os.environ.get("BIPZAGREB_NO_NUMBA", "").strip() not in ("", "0") or not NUMBA_AVAILABLE:
        return "numpy"
    return "numba"


def sweep_numpy(p: int, q: int, start: int, stop: int) -> np.ndarray:
    n = p + q
    masks = np.arange(start, stop, dtype=np.int64)
    size = masks.shape[0]
    rowmask = np.int64((1 << q) - 1)
    adj = np.zeros((n, size), dtype=np.int64)
    for i in range(p):
        adj[i] = ((masks >> (i * q)) & rowmask) << p
    for j in range(q):
        col = np.zeros(size, dtype=np.int64)
        for i in range(p):
            col |= ((masks >> (i * q + j)) & 1) << i
        adj[p + j] = col
    deg = np.bitwise_count(adj).astype(np.int64)

    full = np.int64((1 << n) - 1)
    connected = np.ones(size, dtype=bool)
    diam = np.zeros(size, dtype=np.int64)
    for src in range(n):
        reach = np.full(size, 1 << src, dtype=np.int64)
        frontier = reach.copy()
        ecc = np.zeros(size, dtype=np.int64)
        for _ in range(n - 1):
            nxt = np.zeros(size, dtype=np.int64)
            for v in range(n):
                nxt |= adj[v] & -((frontier >> v) & 1)
            nxt &= ~reach
            grew = nxt != 0
            if not grew.any():
                break
            ecc += grew
            reach |= nxt
            frontier = nxt
        connected &= reach == full
        np.maximum(diam, ecc, out=diam)

    key = np.zeros(size, dtype=np.int64)
    for v in range(n):
        key += np.int64(1) << (4 * deg[v])
    m2 = np.zeros(size, dtype=np.int64)
    for i in range(p):
        row = adj[i] >> p
        for j in range(q):
            m2 += ((row >> j) & 1) * deg[i] * deg[p + j]
    code = (diam << DIAM_SHIFT) | (m2 << M2_SHIFT) | key
    return np.where(connected, code, np.int64(-1))


if NUMBA_AVAILABLE:

    @numba.njit(cache=True, nogil=True)
    def _sweep_numba_into(p, q, start, out):
        n = p + q
        rowmask = (1 << q) - 1
        full = (1 << n) - 1
        adj = np.zeros(n, dtype=np.int64)
        deg = np.zeros(n, dtype=np.int64)
        for k in range(out.shape[0]):
            mask = start + k
            for v in range(n):
                adj[v] = 0
            for i in range(p):
                row = (mask >> (i * q)) & rowmask
                adj[i] = row << p
                for j in range(q):
                    if (row >> j) & 1:
                        adj[p + j] |= 1 << i
            diam = 0
            connected = True
            for src in range(n):
                reach = 1 << src
                frontier = reach
                ecc = 0
                while True:
                    nxt = 0
                    for v in range(n):
                        if (frontier >> v) & 1:
                            nxt |= adj[v]
                    nxt &= ~reach
                    if nxt == 0:
                        break
                    reach |= nxt
                    frontier = nxt
                    ecc += 1
                if reach != full:
                    connected = False
                    break
                if ecc > diam:
                    diam = ecc
            if not connected:
                out[k] = -1
                continue
            key = 0
            for v in range(n):
                c = 0
                x = adj[v]
                while x:
                    x &= x - 1
                    c += 1
                deg[v] = c
                key += 1 << (4 * c)
            m2 = 0
            for i in range(p):
                row = adj[i] >> p
                for j in range(q):
                    if (row >> j) & 1:
                        m2 += deg[i] * deg[p + j]
            out[k] = (diam << 59) | (m2 << 48) | key


def sweep_numba(p: int, q: int, start: int, stop: int) -> np.ndarray:
    if not NUMBA_AVAILABLE:
        raise RuntimeError("numba is not installed")
    out = np.empty(stop - start, dtype=np.int64)
    _sweep_numba_into(p, q, start, out)
    return out


def sweep(p: int, q: int, start: int, stop: int, backend: str | None = None) -> np.ndarray:
    if p + q > MAX_N:
        raise ValueError(f"n={p + q} exceeds the sweep guard of {MAX_N}")
    backend = backend or default_backend()
    if backend == "numba":
        return sweep_numba(p, q, start, stop)
    if backend == "numpy":
        return sweep_numpy(p, q, start, stop)
    raise ValueError(f"unknown backend {backend!r}")


def decode_code(code: int) -> tuple[int, int, list[int]]:
    """``(diameter, m2, degree histogram)`` of a connected-graph code."""
    code = int(code)
    key = code & KEY_MASK
    hist = [(key >> (4 * d)) & 15 for d in range(MAX_N)]
    return code >> DIAM_SHIFT, (code >> M2_SHIFT) & M2_MASK, hist
