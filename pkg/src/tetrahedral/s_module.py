"""The lattice-point model of H^1_m(R/I) for a normalized tetrahedral curve.

S is the set of y in N^4 with

    y1 + y3 >= a2,  y1 + y4 >= a3,  y2 + y3 >= a4,  y2 + y4 >= a5,
    y1 + y2 <  a1,  y3 + y4 <  a6,

and K[S] is an R-module via x^b * x^y = x^(y+b) if y + b is in S, else 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import _kernels
from .tetra import Curve, _require_star

Point = tuple[int, int, int, int]


class _Zero:
    """Result of an action that leaves S."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __bool__(self):
        return False


ZERO = _Zero()


def in_s(a: Sequence[int], y: Sequence[int]) -> bool:
    a1, a2, a3, a4, a5, a6 = a
    y1, y2, y3, y4 = y
    return (
        min(y) >= 0
        and y1 + y3 >= a2
        and y1 + y4 >= a3
        and y2 + y3 >= a4
        and y2 + y4 >= a5
        and y1 + y2 < a1
        and y3 + y4 < a6
    )


@dataclass(frozen=True)
class SSet:
    curve: Curve
    points: tuple
    by_degree: dict = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.points))

    def __contains__(self, y) -> bool:
        return tuple(y) in self._members

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def enumerate_s(a: Sequence[int]) -> SSet:
    curve = _require_star(a)
    points = tuple(sorted(_kernels.enumerate_s(curve)))
    by_degree: dict[int, list[Point]] = {}
    for p in points:
        by_degree.setdefault(sum(p), []).append(p)
    return SSet(curve, points, dict(sorted(by_degree.items())))


def hilbert_function(s: SSet) -> dict[int, int]:
    return {d: len(pts) for d, pts in s.by_degree.items()}


def beg_end_diam(s: SSet) -> tuple[Optional[int], Optional[int], int]:
    if not s.points:
        return None, None, 0
    degs = list(s.by_degree)
    return degs[0], degs[-1], degs[-1] - degs[0] + 1


def module_action(s: SSet, alpha: Sequence[int], beta: Sequence[int]):
    alpha, beta = tuple(alpha), tuple(beta)
    if alpha not in s:
        raise ValueError(f"{alpha} is not a point of S")
    if min(beta) < 0:
        raise ValueError("beta must be nonnegative")
    target = tuple(x + y for x, y in zip(alpha, beta))
    return target if target in s else ZERO


def k_direct(s: SSet) -> int:
    """Least k with m^k K[S] = 0, read off from the action.

    x^b moves alpha to gamma = alpha + b inside S exactly when gamma >= alpha
    componentwise, so k is one more than the largest such deg(gamma - alpha).
    Displacements are bounded by (a1 - 1) + (a6 - 1), so the search is finite.
    """
    if not s.points:
        return 0
    reach = 0
    for alpha in s.points:
        for gamma in s.points:
            if all(g >= x for g, x in zip(gamma, alpha)):
                reach = max(reach, sum(gamma) - sum(alpha))
    return reach + 1


def witness(s: SSet, alpha: Sequence[int]) -> Point:
    """The top-degree partner (y1, a1-1-y1, y3, a6-1-y3) of a point y."""
    a1, a6 = s.curve[0], s.curve[5]
    return (alpha[0], a1 - 1 - alpha[0], alpha[2], a6 - 1 - alpha[2])
