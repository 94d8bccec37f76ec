"""Monomial ideals as minimal sets of exponent vectors.

Only what the tetrahedral computations need: edge powers, intersection,
membership and the deletion step that models localization at a set of
variables.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Tuple

Exponent = Tuple[int, ...]

# Edge {i, j} of the tetrahedron -> position of its exponent in (a1, ..., a6).
EDGES: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))


def divides(g: Exponent, e: Exponent) -> bool:
    return all(x <= y for x, y in zip(g, e))


def minimalize(exponents: Iterable[Exponent]) -> frozenset[Exponent]:
    """Drop every exponent that is divisible by another one."""
    # sorting by degree means a divisor is always seen before its multiples
    pool = sorted(set(map(tuple, exponents)), key=lambda e: (sum(e), e))
    kept: list[Exponent] = []
    for e in pool:
        if not any(divides(g, e) for g in kept):
            kept.append(e)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A nonzero monomial ideal in ``num_vars`` variables.

    ``generators`` is always the minimal generating set; the unit ideal is
    ``{(0, ..., 0)}``.
    """

    num_vars: int
    generators: frozenset

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        gens = [tuple(int(x) for x in g) for g in self.generators]
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if len(g) != self.num_vars:
                raise ValueError(f"generator {g} does not have {self.num_vars} coordinates")
            if min(g) < 0:
                raise ValueError(f"generator {g} has a negative exponent")
        object.__setattr__(self, "generators", minimalize(gens))

    @classmethod
    def unit(cls, num_vars: int) -> "MonomialIdeal":
        return cls(num_vars, frozenset([(0,) * num_vars]))

    @property
    def is_unit(self) -> bool:
        return (0,) * self.num_vars in self.generators

    def sorted_generators(self) -> list[Exponent]:
        return sorted(self.generators, reverse=True)

    def __contains__(self, e) -> bool:
        return contains(self, e)

    def __repr__(self):
        return f"MonomialIdeal({self.num_vars}, {self.sorted_generators()})"


def edge_power_ideal(i: int, j: int, a: int, num_vars: int = 4) -> MonomialIdeal:
    """(x_i, x_j)^a with 1-based variable indices."""
    if i == j or not (1 <= i <= num_vars and 1 <= j <= num_vars):
        raise ValueError(f"invalid edge ({i}, {j}) for {num_vars} variables")
    if a < 0:
        raise ValueError("exponent must be nonnegative")
    gens = []
    for t in range(a + 1):
        e = [0] * num_vars
        e[i - 1] = t
        e[j - 1] = a - t
        gens.append(tuple(e))
    return MonomialIdeal(num_vars, frozenset(gens))


def intersect(m: MonomialIdeal, n: MonomialIdeal) -> MonomialIdeal:
    if m.num_vars != n.num_vars:
        raise ValueError("ideals live in different polynomial rings")
    lcms = (tuple(map(max, g, h)) for g in m.generators for h in n.generators)
    return MonomialIdeal(m.num_vars, minimalize(lcms))


def tetra_ideal(a: Iterable[int]) -> MonomialIdeal:
    """Ideal of the tetrahedral curve with edge exponents ``a = (a1, ..., a6)``."""
    a = tuple(int(x) for x in a)
    if len(a) != 6:
        raise ValueError("a tetrahedral curve needs exactly six exponents")
    if min(a) < 0:
        raise ValueError("exponents must be nonnegative")
    if not any(a):
        raise ValueError("at least one exponent must be nonzero")
    factors = [edge_power_ideal(i, j, ak) for (i, j), ak in zip(EDGES, a)]
    return reduce(intersect, factors)


def contains(m: MonomialIdeal, e: Iterable[int]) -> bool:
    e = tuple(e)
    if len(e) != m.num_vars:
        raise ValueError("exponent has the wrong number of coordinates")
    if min(e) < 0:
        raise ValueError("membership is only defined for nonnegative exponents")
    return any(divides(g, e) for g in m.generators)


def localize_delete(m: MonomialIdeal, inverted: Iterable[int]) -> MonomialIdeal:
    """Image of ``m`` after inverting the variables in ``inverted`` (1-based).

    Inverting x_i amounts to setting the x_i-exponent of every generator to 0.
    """
    inverted = set(inverted)
    if any(not 1 <= i <= m.num_vars for i in inverted):
        raise ValueError(f"variable index out of range in {sorted(inverted)}")
    gens = (
        tuple(0 if k + 1 in inverted else x for k, x in enumerate(g)) for g in m.generators
    )
    return MonomialIdeal(m.num_vars, minimalize(gens))


def max_exponents(m: MonomialIdeal) -> Exponent:
    if not m.generators:
        raise ValueError("empty generator set")
    return tuple(max(col) for col in zip(*m.generators))


def permute_exponent(e: Exponent, perm: tuple[int, ...]) -> Exponent:
    """Move coordinate ``u`` to coordinate ``perm[u-1]`` (1-based images)."""
    out = [0] * len(e)
    for u, x in enumerate(e):
        out[perm[u] - 1] = x
    return tuple(out)


def permute_ideal(m: MonomialIdeal, perm: tuple[int, ...]) -> MonomialIdeal:
    return MonomialIdeal(m.num_vars, frozenset(permute_exponent(g, perm) for g in m.generators))


def subsets(ground: Iterable[int]):
    ground = sorted(ground)
    for r in range(len(ground) + 1):
        yield from (frozenset(c) for c in combinations(ground, r))
