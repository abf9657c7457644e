"""Vertex relocation between BFS layers and the ratio quantities that predict it.

A relocation deletes every edge at ``u`` and joins ``u`` to all of
``V[i-1] | V[i+1]``, which moves ``u`` into layer ``i``.  On a layer-chain
graph the effect on the multiplicative indices only depends on a handful of
neighbouring layer sizes; :func:`ratio_quads` evaluates those quantities and
the sweep helpers check the implications stated about them.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from typing import Iterator

from .graph import Graph, GraphError, LayerPartition
from .indices import ExactRatio

CASES = ("pi1-case1", "pi1-case2", "pi2-case1", "pi2-case2")


def relocate(g: Graph, p: LayerPartition, u: int, target: int) -> Graph:
    d = p.depth
    src = p.layer_of(u)
    if len(p.layers[src]) < 2:
        raise GraphError(f"vertex {u} is the only member of layer {src}")
    if not 1 <= target <= d - 1:
        raise GraphError(f"target layer {target} outside 1..{d - 1}")
    rows = list(g.rows)
    for w in range(g.n):
        rows[w] &= ~(1 << u)
    new_nbrs = (p.layers[target - 1] | p.layers[target + 1]) - {u}
    rows[u] = 0
    for w in new_nbrs:
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph(g.n, tuple(rows))


def _check_index(index: str) -> None:
    if index not in ("pi1", "pi2"):
        raise ValueError(f"index must be 'pi1' or 'pi2', got {index!r}")


def ratio_d2(index: str, s: int, t: int) -> ExactRatio:
    """Index ratio of chain (1, s, t) over chain (1, s+1, t-1)."""
    _check_index(index)
    if s < 1 or t < 1:
        raise ValueError("need s, t >= 1")
    if index == "pi1":
        return ExactRatio(s ** 2 * (t + 1) ** (2 * s) * s ** (2 * t),
                          (s + 1) ** (2 * t) * t ** (2 * (s + 1)))
    return ExactRatio(s ** s * (t + 1) ** (s * (t + 1)) * s ** (s * t),
                      (s + 1) ** (t * (s + 1)) * t ** (t * (s + 1)))


def ratio_balance(index: str, s: int, t: int) -> ExactRatio:
    """Index ratio before/after moving one vertex from the t-layer to the s-layer
    of an interior pair of big layers (both flanked by singleton layers)."""
    _check_index(index)
    if s < 1 or t < s + 2:
        raise ValueError(f"need s >= 1 and t >= s + 2, got s={s}, t={t}")
    if index == "pi1":
        return ExactRatio((s + 1) ** 2 * (t + 1) ** (2 * s) * (s + 1) ** (2 * t) * (t + 1) ** 2,
                          (s + 2) ** 2 * t ** (2 * (s + 1)) * (s + 2) ** (2 * (t - 1)) * t ** 2)
    e = (s + 1) * (t + 1)
    f = t * (s + 2)
    return ExactRatio(e ** e, f ** f)


@dataclass(frozen=True)
class MoveConfig:
    """Layer sizes around two big layers ``V_i`` and ``V_j``.

    ``case=1``: every layer strictly between ``i`` and ``j`` is a singleton
    (``gap = j - i >= 2``).  ``case=2``: ``j = i + 2`` and the middle layer
    ``mid`` has at least two vertices.  The outermost sizes ``m_im2`` and
    ``m_jp2`` may be 0, meaning the layer lies outside the chain.
    """

    m_im2: int
    m_im1: int
    m_i: int
    m_j: int
    m_jp1: int
    m_jp2: int
    case: int = 1
    mid: int = 1
    gap: int = 3

    def __post_init__(self):
        inner = (self.m_im1, self.m_i, self.m_j, self.m_jp1, self.mid)
        if any(x < 1 for x in inner) or self.m_im2 < 0 or self.m_jp2 < 0:
            raise ValueError(f"layer sizes must be positive (outermost ones may be 0): {self}")
        if self.m_i < 2 or self.m_j < 2:
            raise ValueError("V_i and V_j must both have at least two vertices")
        if self.case == 1:
            if self.mid != 1 or self.gap < 2:
                raise ValueError("case 1 needs singleton intermediate layers and j - i >= 2")
        elif self.case == 2:
            if self.mid < 2 or self.gap != 2:
                raise ValueError("case 2 needs j = i + 2 and a middle layer of size >= 2")
        else:
            raise ValueError(f"case must be 1 or 2, got {self.case}")

    def chain_sizes(self) -> tuple[list[int], int, int]:
        """A rooted chain realizing this configuration, with the indices i and j.

        A root layer is prepended when ``m_im2 > 1`` so layer 0 is a singleton;
        a zero outermost size drops that layer.
        """
        if self.m_im2 == 0 and self.m_im1 != 1:
            raise ValueError("with m_im2 = 0 the layer before V_i is the root and must be a singleton")
        lead = [1] if self.m_im2 > 1 else []
        head = [self.m_im2] if self.m_im2 else []
        tail = [self.m_jp2] if self.m_jp2 else []
        middle = [self.mid] if self.case == 2 else [1] * (self.gap - 1)
        sizes = lead + head + [self.m_im1, self.m_i] + middle + [self.m_j, self.m_jp1] + tail
        i = len(lead) + len(head) + 1
        return sizes, i, i + self.gap


@dataclass(frozen=True)
class RatioQuad:
    A: int
    B: int
    C: int
    D: int


def ratio_quads(case: str, cfg: MoveConfig) -> RatioQuad:
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    want = int(case[-1])
    if cfg.case != want:
        raise ValueError(f"{case} requested for a case-{cfg.case} configuration")
    return quads_for_sizes(case, cfg.m_im2, cfg.m_im1, cfg.m_i, cfg.m_j, cfg.m_jp1, cfg.m_jp2, cfg.mid)


def quads_for_sizes(case: str, a2: int, a1: int, mi: int, mj: int, b1: int, b2: int, mid: int = 1) -> RatioQuad:
    """The quantities of ``case`` evaluated on raw layer sizes, without shape checks."""
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    x, y = a2 + mi, mj + b2  # degrees in V_{i-1} and V_{j+1}

    if case == "pi1-case1":
        return RatioQuad(
            A=x ** a1 * (1 + mi) * (1 + mj) * (1 + b1) * y ** b1,
            B=(x + 1) ** a1 * (2 + mi) * mj * (1 + a1) * (y - 1) ** b1,
            C=(1 + mj) * y ** b1 * (1 + mi) * (1 + a1) * x ** a1,
            D=(2 + mj) * (y + 1) ** b1 * mi * (1 + b1) * (x - 1) ** a1,
        )
    if case == "pi1-case2":
        return RatioQuad(
            A=x ** a1 * (mid + b1) * y ** b1,
            B=(x + 1) ** a1 * (a1 + mid) * (y - 1) ** b1,
            C=y ** b1 * (mid + a1) * x ** a1,
            D=(y + 1) ** b1 * (mid + b1) * (x - 1) ** a1,
        )

    def sp(z):  # z ** z
        return z ** z

    if case == "pi2-case1":
        return RatioQuad(
            A=x ** (x * a1) * sp(1 + b1) * sp(1 + mi) * sp(1 + mj) * y ** (y * b1),
            B=(x + 1) ** ((x + 1) * a1) * sp(1 + a1) * sp(2 + mi) * sp(mj) * (y - 1) ** ((y - 1) * b1),
            C=x ** (x * a1) * sp(1 + a1) * sp(1 + mi) * sp(1 + mj) * y ** (y * b1),
            D=(x - 1) ** ((x - 1) * a1) * sp(1 + b1) * sp(mi) * sp(2 + mj) * (y + 1) ** ((y + 1) * b1),
        )
    return RatioQuad(
        A=x ** (x * a1) * sp(mid + b1) * y ** (y * b1),
        B=(x + 1) ** ((x + 1) * a1) * sp(mid + a1) * (y - 1) ** ((y - 1) * b1),
        C=x ** (x * a1) * sp(mid + a1) * y ** (y * b1),
        D=(x - 1) ** ((x - 1) * a1) * sp(mid + b1) * (y + 1) ** ((y + 1) * b1),
    )


def predicted_ratios(case: str, cfg: MoveConfig | RatioQuad) -> tuple[ExactRatio, ExactRatio]:
    """Predicted ``index(G) / index(G')`` for the j-to-i move and the i-to-j move."""
    q = cfg if isinstance(cfg, RatioQuad) else ratio_quads(case, cfg)
    forward, backward = ExactRatio(q.A, q.B), ExactRatio(q.C, q.D)
    if case.startswith("pi1"):
        return forward ** 2, backward ** 2
    return forward, backward


# the implication checked for each case: (premise, conclusion) over the quad
_CLAIMS = {
    "pi1-case1": ("claim-1", lambda q: q.A <= q.B, lambda q: q.D < q.C, "A <= B", "D < C"),
    "pi1-case2": ("claim-2", lambda q: q.A <= q.B, lambda q: q.D < q.C, "A' <= B'", "D' < C'"),
    "pi2-case1": ("claim-3", lambda q: q.A >= q.B, lambda q: q.D > q.C, "A1 >= B1", "D1 > C1"),
    "pi2-case2": ("claim-4", lambda q: q.A >= q.B, lambda q: q.D > q.C, "A1' >= B1'", "D1' > C1'"),
}


def claim_configs(case: str, lo: int = 1, hi: int = 6) -> Iterator[MoveConfig]:
    """Every configuration of the given case with entries in ``[lo, hi]``.

    Big layers (``m_i``, ``m_j`` and the case-2 middle layer) start at 2.
    """
    r = range(lo, hi + 1)
    big = range(max(lo, 2), hi + 1)
    if case.endswith("case1"):
        for a2, a1, mi, mj, b1, b2 in itertools.product(r, r, big, big, r, r):
            yield MoveConfig(a2, a1, mi, mj, b1, b2, case=1, mid=1, gap=3)
    else:
        for a2, a1, mi, mid, mj, b1, b2 in itertools.product(r, r, big, big, big, r, r):
            yield MoveConfig(a2, a1, mi, mj, b1, b2, case=2, mid=mid, gap=2)


def claim_sweep(case: str, lo: int = 1, hi: int = 6) -> tuple[int, int, list[dict]]:
    """Check the case's implication on every configuration in range.

    Returns ``(configs checked, premise held, counterexample records)``.
    """
    name, premise, conclusion, ptxt, ctxt = _CLAIMS[case]
    checked = held = 0
    bad = []
    for cfg in claim_configs(case, lo, hi):
        q = ratio_quads(case, cfg)
        checked += 1
        if not premise(q):
            continue
        held += 1
        if not conclusion(q):
            bad.append({
                "claim": name,
                "case": case,
                "config": {k: v for k, v in asdict(cfg).items() if k not in ("gap",)},
                "quad": {k: str(v) for k, v in asdict(q).items()},
                "violated": f"{ptxt} holds but {ctxt} fails",
            })
    return checked, held, bad


def prop21_holds(x1: int, x2: int, m: int) -> bool:
    """x/(x+m) increasing, as x1 (x2 + m) < x2 (x1 + m) for x1 < x2."""
    return x1 * (x2 + m) < x2 * (x1 + m)


def prop22_holds(x1: int, x2: int, m: int) -> bool:
    """x^x/(x+m)^(x+m) decreasing, cross-multiplied for x1 < x2."""
    return x1 ** x1 * (x2 + m) ** (x2 + m) > x2 ** x2 * (x1 + m) ** (x1 + m)


def monotonicity_sweep(hi: int = 50) -> dict[str, list[tuple[int, int, int]]]:
    """Failures of both monotonicity statements over 1 <= x1 < x2 <= hi, 1 <= m <= hi."""
    out: dict[str, list[tuple[int, int, int]]] = {"monotone-ratio": [], "monotone-power-ratio": []}
    for x1 in range(1, hi + 1):
        for x2 in range(x1 + 1, hi + 1):
            for m in range(1, hi + 1):
                if not prop21_holds(x1, x2, m):
                    out["monotone-ratio"].append((x1, x2, m))
                if not prop22_holds(x1, x2, m):
                    out["monotone-power-ratio"].append((x1, x2, m))
    return out
