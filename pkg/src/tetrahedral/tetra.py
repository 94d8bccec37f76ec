"""Closed-form classification of tetrahedral curves C(a1, ..., a6).

Exponents are listed in the edge order {1,2}, {1,3}, {1,4}, {2,3}, {2,4},
{3,4}. Most functions assume the curve has been normalized so that
``a1 + a6 >= max(a2 + a5, a3 + a4)``; see :func:`normalize_star`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .monomial_ideal import EDGES

Curve = tuple[int, int, int, int, int, int]
Permutation = tuple[int, int, int, int]

IDENTITY: Permutation = (1, 2, 3, 4)
SWAP_23: Permutation = (1, 3, 2, 4)
SWAP_24: Permutation = (1, 4, 3, 2)

_EDGE_INDEX = {frozenset(e): k for k, e in enumerate(EDGES)}


def as_curve(a: Sequence[int]) -> Curve:
    a = tuple(int(x) for x in a)
    if len(a) != 6:
        raise ValueError(f"expected six exponents, got {len(a)}")
    if min(a) < 0:
        raise ValueError("exponents must be nonnegative")
    if not any(a):
        raise ValueError("a tetrahedral curve needs a nonzero exponent")
    return a  # type: ignore[return-value]


def edge_action(perm: Permutation) -> tuple[int, ...]:
    """Position that each edge slot is sent to by the vertex permutation."""
    return tuple(
        _EDGE_INDEX[frozenset((perm[i - 1], perm[j - 1]))] for i, j in EDGES
    )


def permute_curve(a: Sequence[int], perm: Permutation) -> Curve:
    """Relabel vertices: the exponent on edge {u, v} moves to {perm(u), perm(v)}."""
    out = [0] * 6
    for k, target in enumerate(edge_action(perm)):
        out[target] = a[k]
    return tuple(out)  # type: ignore[return-value]


def all_permutations() -> Iterator[Permutation]:
    return permutations((1, 2, 3, 4))  # type: ignore[return-value]


def satisfies_star(a: Sequence[int]) -> bool:
    return a[0] + a[5] >= max(a[1] + a[4], a[2] + a[3])


def _require_star(a: Sequence[int]) -> Curve:
    a = as_curve(a)
    if not satisfies_star(a):
        raise ValueError(f"{a} is not normalized: need a1 + a6 >= max(a2 + a5, a3 + a4)")
    return a


def normalize_star(a: Sequence[int]) -> tuple[Curve, Permutation]:
    """Relabel so that the opposite pair (a1, a6) has the largest sum.

    Tries the identity, then (2 3), then (2 4); one of them always works
    because these carry each opposite pair onto the {1,2}/{3,4} pair.
    """
    a = as_curve(a)
    for perm in (IDENTITY, SWAP_23, SWAP_24):
        b = permute_curve(a, perm)
        if satisfies_star(b):
            return b, perm
    raise AssertionError("unreachable: some opposite pair has the maximal sum")


def script_a_terms(a: Sequence[int]) -> tuple[int, ...]:
    a1, a2, a3, a4, a5, a6 = a
    return (
        a2 + a5,
        a3 + a4,
        a2 + a4 - a6 + 1,
        a3 + a5 - a6 + 1,
        a2 + a3 - a1 + 1,
        a4 + a5 - a1 + 1,
    )


def script_a(a: Sequence[int]) -> int:
    """Lowest degree in which H^1 can live (its ``beg`` when not ACM)."""
    return max(script_a_terms(a))


@dataclass(frozen=True)
class DegreeInterval:
    """Closed integer interval ``[lo, hi]``; empty when ``lo > hi``."""

    lo: int
    hi: int

    @classmethod
    def empty(cls) -> "DegreeInterval":
        return cls(0, -1)

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __contains__(self, d: int) -> bool:
        return self.lo <= d <= self.hi

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __len__(self):
        return max(0, self.hi - self.lo + 1)

    def __eq__(self, other):
        if not isinstance(other, DegreeInterval):
            return NotImplemented
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        return (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self):
        return hash(None) if self.is_empty else hash((self.lo, self.hi))

    def __repr__(self):
        return "DegreeInterval(empty)" if self.is_empty else f"DegreeInterval({self.lo}, {self.hi})"


def integer_feasible_degrees(a: Sequence[int]) -> DegreeInterval:
    """Degrees d for which the degree-d lattice system has an integer point.

    Valid for any exponents; :func:`feasible_degrees` adds the normalization
    check.
    """
    a1, a2, a3, a4, a5, a6 = a
    if a1 < 1 or a6 < 1:
        return DegreeInterval.empty()
    top = a1 + a6 - 2
    start = script_a(a)
    if top > start:
        return DegreeInterval(start, top)
    if top == start:
        if top > min(a2 + a5, a3 + a4):
            return DegreeInterval(start, start)
        if top == a2 + a5 == a3 + a4 and (a2 + a3 - a6) % 2 == 1:
            return DegreeInterval(start, start)
    return DegreeInterval.empty()


def feasible_degrees(a: Sequence[int]) -> DegreeInterval:
    return integer_feasible_degrees(_require_star(a))


def parity_obstruction(a: Sequence[int], d: int) -> bool:
    """floor((d + a1 - a4 - a5 - 1) / 2) < ceil((a2 + a3 - a6 + 1) / 2).

    Only meaningful for ``a1 + a6 - 2 >= d >= max(a2 + a5, a3 + a4)``; there it
    holds exactly when a2 + a3 - a6 is even and a1 + a6 - 2 = a2 + a5 = a3 + a4.
    """
    a1, a2, a3, a4, a5, a6 = as_curve(a)
    if not a1 + a6 - 2 >= d >= max(a2 + a5, a3 + a4):
        raise ValueError(f"d = {d} outside [max(a2+a5, a3+a4), a1+a6-2] for {a}")
    left = math.floor(Fraction(d + a1 - a4 - a5 - 1, 2))
    right = math.ceil(Fraction(a2 + a3 - a6 + 1, 2))
    return left < right


def parity_characterization(a: Sequence[int]) -> bool:
    a1, a2, a3, a4, a5, a6 = a
    return (a2 + a3 - a6) % 2 == 0 and a1 + a6 - 2 == a2 + a5 == a3 + a4


def is_acm(a: Sequence[int]) -> bool:
    a1, a2, a3, a4, a5, a6 = _require_star(a)
    top = a1 + a6 - 2
    start = script_a((a1, a2, a3, a4, a5, a6))
    return (
        a1 == 0
        or a6 == 0
        or top < start
        or (top == a2 + a5 == a3 + a4 == start and (a2 + a3 - a6) % 2 == 0)
    )


def is_acm_francisco(a: Sequence[int]) -> bool:
    """Francisco's criterion, evaluated independently of :func:`is_acm`."""
    a1, a2, a3, a4, a5, a6 = _require_star(a)
    if a1 == 0 or a6 == 0:
        return True
    if a1 + a6 - max(a2 + a5, a3 + a4) in (0, 1):
        return True
    c = (
        2 * a1 < a2 + a3 - a6 + 3
        or 2 * a1 < a4 + a5 - a6 + 3
        or 2 * a6 < a2 + a4 - a1 + 3
        or 2 * a6 < a3 + a5 - a1 + 3
    )
    if c:
        return True
    return a1 + a6 == a2 + a5 + 2 == a3 + a4 + 2 and (a1 + a3 + a5) % 2 == 0


def diameter(a: Sequence[int]) -> int:
    a = _require_star(a)
    if is_acm(a):
        return 0
    return a[0] + a[5] - script_a(a) - 1


def is_buchsbaum(a: Sequence[int]) -> bool:
    """k <= 1, which for these curves is diam <= 1 (ACM curves included)."""
    return diameter(a) <= 1


def buchsbaum_two_clause(a: Sequence[int], first: str = "a2") -> bool:
    """The Buchsbaum criterion as two clauses: a zero exponent, or a1 + a6 - 2 <= script_a.

    ``first`` picks the exponent tested for zero next to a1 in the first
    clause: ``"a2"`` or ``"a6"`` (the latter matches the ACM test). Only used
    to report disagreements; :func:`is_buchsbaum` is authoritative.
    """
    a1, a2, a3, a4, a5, a6 = _require_star(a)
    other = {"a2": a2, "a6": a6}[first]
    return a1 == 0 or other == 0 or a1 + a6 - 2 <= script_a((a1, a2, a3, a4, a5, a6))


def _require_a6_max(a: Sequence[int]) -> Curve:
    a = as_curve(a)
    if a[5] != max(a):
        raise ValueError(f"{a}: a6 must be the largest exponent")
    return a


def is_minimal(a: Sequence[int]) -> bool:
    a1, a2, a3, a4, a5, a6 = _require_a6_max(a)
    return a1 > max(a2 + a4, a3 + a5) and a6 > max(a2 + a3, a4 + a5)


def _in_diameter_two_family(b: Sequence[int]) -> bool:
    k = b[0]
    b = tuple(b)
    return (k >= 1 and b == (k, k - 1, 0, 0, k - 1, k + 1)) or (
        k >= 2 and b == (k, k - 2, 0, 0, k - 1, k)
    )


def is_diameter_two_family(a: Sequence[int]) -> bool:
    """Whether a relabelling of ``a`` is (k,k-1,0,0,k-1,k+1) or (k,k-2,0,0,k-1,k)."""
    a = _require_a6_max(a)
    if not is_minimal(a):
        raise ValueError(f"{a} is not a minimal curve")
    return any(_in_diameter_two_family(permute_curve(a, p)) for p in all_permutations())


def buchsbaum_minimal_pattern(a: Sequence[int]) -> bool:
    a1, a2, a3, a4, a5, a6 = a
    return (a2 == a5 == 0 and a1 == a6 == a3 + 1 == a4 + 1) or (
        a3 == a4 == 0 and a1 == a6 == a2 + 1 == a5 + 1
    )


@dataclass(frozen=True)
class Classification:
    original: Curve
    normalized: Curve
    permutation: Permutation
    script_a: int
    acm: bool
    buchsbaum: bool
    diam: int
    beg: Optional[int]
    end_: Optional[int]
    k: int
    feasible_degrees: DegreeInterval


def classify(a: Sequence[int]) -> Classification:
    """All closed-form invariants of a curve (normalizing it first)."""
    original = as_curve(a)
    b, perm = normalize_star(original)
    acm = is_acm(b)
    diam = diameter(b)
    start = script_a(b)
    return Classification(
        original=original,
        normalized=b,
        permutation=perm,
        script_a=start,
        acm=acm,
        buchsbaum=diam <= 1,
        diam=diam,
        beg=None if acm else start,
        end_=None if acm else b[0] + b[5] - 2,
        k=diam,
        feasible_degrees=feasible_degrees(b),
    )
