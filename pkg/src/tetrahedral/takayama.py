"""Multigraded pieces of local cohomology of monomial ideals.

For a monomial ideal I and a multidegree alpha, the dimension of
H^i_m(R/I)_alpha is the reduced homology, in degree i - |G| - 1, of the
degree complex ``delta_alpha(I, alpha)`` (G = negative coordinates of
alpha), provided G is a face of the radical complex and alpha_j < rho_j for
every j. This module evaluates that formula by brute force and serves as
the oracle for the closed forms in :mod:`tetrahedral.tetra`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import _kernels
from .monomial_ideal import Exponent, MonomialIdeal, contains, localize_delete, max_exponents, subsets
from .simplicial import SimplicialComplex, reduced_homology_dim

NEGATIVE_REPRESENTATIVE = -1


def g_alpha(alpha: Exponent) -> frozenset:
    return frozenset(i + 1 for i, x in enumerate(alpha) if x < 0)


def radical_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces F whose squarefree monomial x_F is not in the radical of ``ideal``."""
    if ideal.is_unit:
        raise ValueError("the unit ideal has no radical complex")
    n = ideal.num_vars
    big = sum(max_exponents(ideal)) or 1
    faces = [
        f for f in subsets(range(1, n + 1))
        if not contains(ideal, tuple(big if i + 1 in f else 0 for i in range(n)))
    ]
    return SimplicialComplex.from_faces(faces)


def delta_alpha(ideal: MonomialIdeal, alpha: Exponent) -> SimplicialComplex:
    """The degree complex, straight from its defining quantifier."""
    mask = _kernels.delta_mask(sorted(ideal.generators), tuple(alpha))
    return SimplicialComplex.from_mask(mask, ideal.num_vars)


def delta_alpha_via_localization(ideal: MonomialIdeal, alpha: Exponent) -> SimplicialComplex:
    """Same complex as :func:`delta_alpha`, but via membership in localized ideals.

    F is a face iff the monomial prod_{i not in F u G} x_i^{alpha_i} is not
    in the ideal obtained by inverting the variables of F u G.
    """
    n = ideal.num_vars
    neg = g_alpha(alpha)
    faces = []
    for f in subsets(set(range(1, n + 1)) - neg):
        inverted = f | neg
        mono = tuple(0 if i + 1 in inverted else alpha[i] for i in range(n))
        if not contains(_localized(ideal, inverted), mono):
            faces.append(f)
    return SimplicialComplex.from_faces(faces)


@lru_cache(maxsize=4096)
def _localized(ideal: MonomialIdeal, inverted: frozenset) -> MonomialIdeal:
    return localize_delete(ideal, inverted)


def gate(ideal: MonomialIdeal, alpha: Exponent, radical: SimplicialComplex | None = None) -> bool:
    """Whether alpha passes the support conditions of the formula (literal reading)."""
    radical = radical if radical is not None else radical_complex(ideal)
    rho = max_exponents(ideal)
    return g_alpha(alpha) in radical and all(x <= r - 1 for x, r in zip(alpha, rho))


def gate_vacuous(ideal: MonomialIdeal, alpha: Exponent, radical: SimplicialComplex | None = None) -> bool:
    """Gate with the bound alpha_j < rho_j only imposed off the negative support."""
    radical = radical if radical is not None else radical_complex(ideal)
    rho = max_exponents(ideal)
    return g_alpha(alpha) in radical and all(x <= r - 1 for x, r in zip(alpha, rho) if x >= 0)


def local_cohomology_dim(ideal: MonomialIdeal, i: int, alpha: Exponent) -> int:
    if not gate(ideal, alpha):
        return 0
    return reduced_homology_dim(delta_alpha(ideal, alpha), i - len(g_alpha(alpha)) - 1)


@dataclass
class GradedPieceTable:
    """Nonzero multigraded pieces: alpha -> dim."""

    entries: dict = field(default_factory=dict)

    def by_degree(self) -> dict[int, list[Exponent]]:
        out: dict[int, list[Exponent]] = {}
        for alpha in sorted(self.entries):
            out.setdefault(sum(alpha), []).append(alpha)
        return dict(sorted(out.items()))

    def degrees(self) -> list[int]:
        return sorted({sum(a) for a in self.entries})

    def support(self) -> set:
        return set(self.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)


def scan_box(ideal: MonomialIdeal, negative: int = NEGATIVE_REPRESENTATIVE):
    rho = max_exponents(ideal)
    return [negative] * ideal.num_vars, [r - 1 for r in rho]


def h1_table(ideal: MonomialIdeal, negative: int = NEGATIVE_REPRESENTATIVE) -> GradedPieceTable:
    """Every alpha with H^1_m(R/I)_alpha != 0.

    Negative coordinates only matter through the set G, so each axis is
    scanned over ``[negative, rho_j - 1]`` with a single negative value.
    """
    return graded_table(ideal, 1, negative)


def graded_table(ideal: MonomialIdeal, i: int, negative: int = NEGATIVE_REPRESENTATIVE) -> GradedPieceTable:
    n = ideal.num_vars
    radical = radical_complex(ideal).to_mask(n)
    # the box already enforces alpha_j <= rho_j - 1
    lows, highs = scan_box(ideal, negative)
    table = GradedPieceTable()
    for alpha, mask in _kernels.delta_masks_box(sorted(ideal.generators), lows, highs):
        neg = 0
        for k, x in enumerate(alpha):
            if x < 0:
                neg |= 1 << k
        if not radical >> neg & 1:
            continue
        dim = _mask_homology(mask, n, i - bin(neg).count("1") - 1)
        if dim:
            table.entries[alpha] = dim
    return table


@lru_cache(maxsize=None)
def _mask_homology(mask: int, n: int, q: int) -> int:
    return reduced_homology_dim(SimplicialComplex.from_mask(mask, n), q)


def check_tetrahedral_table(table: GradedPieceTable) -> None:
    """Raise if the table breaks the shape forced for tetrahedral ideals."""
    for alpha, dim in table.entries.items():
        if min(alpha) < 0:
            raise AssertionError(f"negative multidegree {alpha} in the H^1 table")
        if dim != 1:
            raise AssertionError(f"H^1 piece at {alpha} has dimension {dim}, expected 1")


def gate_disagreements(ideal: MonomialIdeal, negative: int = NEGATIVE_REPRESENTATIVE) -> list[Exponent]:
    """Multidegrees in the scan box where the two readings of the gate differ."""
    radical = radical_complex(ideal)
    rho = max_exponents(ideal)
    axes = [range(negative, r) for r in rho]
    return [
        alpha for alpha in product(*axes)
        if gate(ideal, alpha, radical) != gate_vacuous(ideal, alpha, radical)
    ]
