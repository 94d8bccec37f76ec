"""Finite simplicial complexes and their reduced homology over Q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable


def _maximal(faces: Iterable[frozenset]) -> frozenset:
    faces = set(faces)
    return frozenset(f for f in faces if not any(f < g for g in faces))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.

    ``facets == frozenset()`` is the void complex (no faces at all), while
    ``facets == {frozenset()}`` is the complex whose only face is the empty
    set. The two have different reduced homology.
    """

    facets: frozenset

    def __post_init__(self):
        object.__setattr__(self, "facets", _maximal(frozenset(f) for f in self.facets))

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(frozenset())

    @classmethod
    def empty_face(cls) -> "SimplicialComplex":
        return cls(frozenset([frozenset()]))

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        return cls(frozenset(frozenset(f) for f in faces))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "SimplicialComplex":
        """Decode the bitmask encoding used by the kernels."""
        faces = []
        for face in range(1 << n):
            if mask >> face & 1:
                faces.append(frozenset(i + 1 for i in range(n) if face >> i & 1))
        return cls.from_faces(faces)

    def to_mask(self, n: int) -> int:
        mask = 0
        for f in self.faces():
            mask |= 1 << sum(1 << (i - 1) for i in f)
        return mask

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    @property
    def is_void(self) -> bool:
        return not self.facets

    def faces(self) -> frozenset:
        out = set()
        for facet in self.facets:
            for r in range(len(facet) + 1):
                out.update(frozenset(c) for c in combinations(sorted(facet), r))
        return frozenset(out)

    def __contains__(self, face) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def f_vector(self) -> dict[int, int]:
        """Number of faces of each dimension, including dimension -1."""
        counts: dict[int, int] = {}
        for f in self.faces():
            counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
        return counts

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(f)) for f in self.facets)

    def __repr__(self):
        return f"SimplicialComplex({self.sorted_facets()})"


def rank(rows: list[list[Fraction]]) -> int:
    """Rank of a small dense matrix by exact Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][col]:
                f = m[i][col] / m[r][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def _boundary_rank(by_dim: dict[int, list[tuple]], p: int) -> int:
    """Rank of the boundary map from p-faces to (p-1)-faces (augmented)."""
    src = by_dim.get(p, [])
    dst = by_dim.get(p - 1, [])
    if not src or not dst:
        return 0
    index = {f: i for i, f in enumerate(dst)}
    rows = []
    for face in src:
        row = [Fraction(0)] * len(dst)
        for k in range(len(face)):
            row[index[face[:k] + face[k + 1:]]] = Fraction((-1) ** k)
        rows.append(row)
    return rank(rows)


@lru_cache(maxsize=None)
def _homology(facets: frozenset) -> tuple[int, ...]:
    cx = SimplicialComplex(facets)
    by_dim: dict[int, list[tuple]] = {}
    for f in cx.faces():
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    for faces in by_dim.values():
        faces.sort()
    top = max(by_dim, default=-1)
    ranks = {p: _boundary_rank(by_dim, p) for p in range(-1, top + 2)}
    return tuple(
        len(by_dim.get(q, [])) - ranks[q] - ranks[q + 1] for q in range(-1, top + 1)
    )


def reduced_homology_dim(cx: SimplicialComplex, q: int) -> int:
    """dim of the q-th reduced homology over Q.

    The void complex has no homology at all; the complex ``{empty face}`` has
    a one-dimensional H_{-1} and nothing else.
    """
    if cx.is_void or q < -1:
        return 0
    dims = _homology(cx.facets)
    return dims[q + 1] if q + 1 < len(dims) else 0


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    return sum((-1) ** d * c for d, c in cx.f_vector().items())
