"""Zagreb indices, exact and log-domain.

Index values are plain Python ints (arbitrary precision).  Ratios of index
values are compared by cross-multiplication and never reduced.
"""

from __future__ import annotations

import math
from enum import IntEnum
from functools import total_ordering
from typing import Iterable

from .graph import Graph


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare(a: int, b: int) -> Ordering:
    return Ordering((a > b) - (a < b))


@total_ordering
class ExactRatio:
    """``num / den`` held unreduced; all comparisons cross-multiply."""

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int):
        if den <= 0:
            raise ZeroDivisionError("ratio denominator must be positive")
        if num < 0:
            raise ValueError("ratio numerator must be nonnegative")
        self.num = num
        self.den = den

    def _cross(self, other) -> tuple[int, int]:
        if isinstance(other, ExactRatio):
            return self.num * other.den, other.num * self.den
        if isinstance(other, int):
            return self.num, other * self.den
        return NotImplemented

    def __eq__(self, other):
        c = self._cross(other)
        return c if c is NotImplemented else c[0] == c[1]

    def __lt__(self, other):
        c = self._cross(other)
        return c if c is NotImplemented else c[0] < c[1]

    def __hash__(self):
        g = math.gcd(self.num, self.den)
        return hash((self.num // g, self.den // g))

    def __mul__(self, other: "ExactRatio") -> "ExactRatio":
        return ExactRatio(self.num * other.num, self.den * other.den)

    def __pow__(self, k: int) -> "ExactRatio":
        return ExactRatio(self.num ** k, self.den ** k)

    def reduced(self) -> "ExactRatio":
        g = math.gcd(self.num, self.den)
        return ExactRatio(self.num // g, self.den // g)

    def __repr__(self):
        return f"ExactRatio({self.num}, {self.den})"


def ratio(a: int, b: int) -> ExactRatio:
    return ExactRatio(a, b)


def ratio_vs_one(r: ExactRatio) -> Ordering:
    return compare(r.num, r.den)


def _prod(xs: Iterable[int]) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def pi1_from_degrees(degrees: Iterable[int]) -> int:
    return _prod(d * d for d in degrees)


def pi2_from_degrees(degrees: Iterable[int]) -> int:
    # 0**0 == 1 in Python, which is the convention wanted for isolated vertices
    return _prod(d ** d for d in degrees)


def m1_from_degrees(degrees: Iterable[int]) -> int:
    return sum(d * d for d in degrees)


def pi1(g: Graph) -> int:
    return pi1_from_degrees(g.degrees())


def pi2_vertex(g: Graph) -> int:
    return pi2_from_degrees(g.degrees())


def pi2_edge(g: Graph) -> int:
    deg = g.degrees()
    return _prod(deg[u] * deg[v] for u, v in g.edges())


pi2 = pi2_vertex


def m1(g: Graph) -> int:
    return m1_from_degrees(g.degrees())


def m2(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges())


INDICES = {"pi1": pi1, "pi2": pi2, "m1": m1, "m2": m2}


def index_value(g: Graph, index: str) -> int:
    try:
        fn = INDICES[index]
    except KeyError:
        raise ValueError(f"unknown index {index!r}; expected one of {sorted(INDICES)}") from None
    return fn(g)


def _positive_degrees(g: Graph) -> list[int]:
    deg = g.degrees()
    if min(deg) == 0:
        raise ValueError("log-domain index undefined with an isolated vertex")
    return deg


def log_pi1(g: Graph) -> float:
    return math.fsum(2.0 * math.log(d) for d in _positive_degrees(g))


def log_pi2(g: Graph) -> float:
    return math.fsum(d * math.log(d) for d in _positive_degrees(g))

