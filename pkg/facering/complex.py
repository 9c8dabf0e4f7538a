"""
Finite simplicial complexes and their combinatorial queries.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import math
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .typing import Face, Self

logger = logging.getLogger(__name__)


class FaceError(ValueError):
    """A query was made with a vertex set that is not a face of the complex."""


def maximal_faces(faces: Iterable[Iterable[int]]) -> List[Face]:
    """The inclusion-maximal members of ``faces``, as sorted tuples."""
    candidates = sorted({tuple(sorted(face)) for face in faces}, key=len, reverse=True)
    kept: List[Face] = []
    kept_sets: List[FrozenSet[int]] = []
    for face in candidates:
        as_set = frozenset(face)
        if any(as_set <= other for other in kept_sets):
            continue
        kept.append(face)
        kept_sets.append(as_set)
    return sorted(kept)


@dataclasses.dataclass(frozen=True)
class FVector:
    """
    Face numbers ``(f_{-1}, f_0, ..., f_{d-1})``.

    Indexing with ``fv[i]`` gives the number of ``i``-dimensional faces, so
    ``fv[-1]`` is the count of the empty face.
    """

    entries: Tuple[int, ...]

    def __getitem__(self, dim: int) -> int:
        idx = dim + 1
        if 0 <= idx < len(self.entries):
            return self.entries[idx]
        return 0

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def to_h(self) -> HVector:
        d = self.d
        return HVector(tuple(
            sum(
                (-1) ** (k - i) * math.comb(d - i, k - i) * self.entries[i]
                for i in range(k + 1)
            )
            for k in range(d + 1)
        ))


@dataclasses.dataclass(frozen=True)
class HVector:
    """The h-vector ``(h_0, ..., h_d)``; entries may be negative."""

    entries: Tuple[int, ...]

    def __getitem__(self, idx: int) -> int:
        if 0 <= idx < len(self.entries):
            return self.entries[idx]
        return 0

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    def to_f(self) -> FVector:
        d = self.d
        return FVector(tuple(
            sum(math.comb(d - i, k - i) * self.entries[i] for i in range(k + 1))
            for k in range(d + 1)
        ))


@dataclasses.dataclass(frozen=True)
class SimplicialComplex:
    """
    A finite simplicial complex given by its facets.

    Vertices carry string labels externally and ids ``0..n-1`` internally;
    the id of a vertex is its index into ``vertex_labels``.  Faces are sorted
    tuples of ids.  The complex ``{()}`` (only the empty face) and the void
    complex (no faces at all) are both representable.
    """

    vertex_labels: Tuple[str, ...]
    facets: FrozenSet[Face]
    name: str = dataclasses.field(default="", compare=False)

    def __post_init__(self):
        if len(set(self.vertex_labels)) != len(self.vertex_labels):
            raise ValueError("Vertex labels must be distinct")
        n = len(self.vertex_labels)
        seen: Set[int] = set()
        for facet in self.facets:
            if list(facet) != sorted(set(facet)):
                raise ValueError(f"Facet {facet} is not a strictly increasing id tuple")
            if facet and not (0 <= facet[0] and facet[-1] < n):
                raise ValueError(f"Facet {facet} refers to an unknown vertex")
            seen.update(facet)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise ValueError(
                f"Vertices {[self.vertex_labels[v] for v in missing]} lie in no facet"
            )
        as_sets = [frozenset(facet) for facet in self.facets]
        for first, second in itertools.permutations(as_sets, 2):
            if first < second:
                raise ValueError(f"Facet {sorted(first)} is contained in {sorted(second)}")

    @classmethod
    def from_facets(
        cls,
        facets: Iterable[Iterable[str]],
        name: str = "",
    ) -> Self:
        """
        Build a complex from facets given as label collections.

        Labels get ids in order of first appearance; non-maximal faces are
        absorbed.
        """
        labels: Dict[str, int] = {}
        id_faces = []
        for facet in facets:
            face = []
            for label in facet:
                label = str(label)
                if label not in labels:
                    labels[label] = len(labels)
                face.append(labels[label])
            id_faces.append(face)
        return cls(
            vertex_labels=tuple(labels),
            facets=frozenset(maximal_faces(id_faces)),
            name=name,
        )

    @classmethod
    def void(cls, name: str = "") -> Self:
        """The complex with no faces, not even the empty one."""
        return cls((), frozenset(), name=name)

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.vertex_labels)

    @property
    def d(self) -> int:
        """Largest facet size, so ``dim = d - 1``; -1 for the void complex."""
        if not self.facets:
            return -1
        return max(len(facet) for facet in self.facets)

    @property
    def dim(self) -> int:
        return self.d - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_pure(self) -> bool:
        return len({len(facet) for facet in self.facets}) <= 1

    @functools.cached_property
    def sorted_facets(self) -> Tuple[Face, ...]:
        return tuple(sorted(self.facets))

    @functools.cached_property
    def _faces_by_size(self) -> Tuple[Tuple[Face, ...], ...]:
        by_size: Dict[int, Set[Face]] = {}
        for facet in self.facets:
            for size in range(len(facet) + 1):
                by_size.setdefault(size, set()).update(
                    itertools.combinations(facet, size)
                )
        return tuple(
            tuple(sorted(by_size.get(size, ())))
            for size in range(self.d + 1)
        )

    @functools.cached_property
    def _face_set(self) -> FrozenSet[Face]:
        return frozenset(itertools.chain.from_iterable(self._faces_by_size))

    def faces(self, size: Optional[int] = None) -> Tuple[Face, ...]:
        """
        Faces with ``size`` vertices, in lexicographic order.

        Without ``size``, all faces ordered by size and then lexicographically.
        """
        if size is None:
            return tuple(itertools.chain.from_iterable(self._faces_by_size))
        if 0 <= size < len(self._faces_by_size):
            return self._faces_by_size[size]
        return ()

    def is_face(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self._face_set

    def __contains__(self, face) -> bool:
        return self.is_face(face)

    def vertex_id(self, label: str) -> int:
        try:
            return self._label_ids[str(label)]
        except KeyError:
            raise FaceError(f"Unknown vertex label {label!r}") from None

    @functools.cached_property
    def _label_ids(self) -> Dict[str, int]:
        return {label: idx for idx, label in enumerate(self.vertex_labels)}

    def face_from_labels(self, labels: Iterable[str]) -> Face:
        return tuple(sorted(self.vertex_id(label) for label in labels))

    def labels_of(self, face: Iterable[int]) -> Tuple[str, ...]:
        return tuple(self.vertex_labels[v] for v in face)

    def _check_face(self, tau: Iterable[int]) -> Face:
        tau = tuple(sorted(tau))
        if not self.is_face(tau):
            raise FaceError(f"{list(self.labels_of(tau))} is not a face of the complex")
        return tau

    def subcomplex(self, facets: Iterable[Iterable[int]], name: str = "") -> SimplicialComplex:
        """
        The complex generated by ``facets`` (given in this complex's ids).

        Vertices are renumbered in increasing parent-id order and keep their
        labels.
        """
        kept = maximal_faces(facets)
        vertices = sorted({v for facet in kept for v in facet})
        renumber = {v: idx for idx, v in enumerate(vertices)}
        return SimplicialComplex(
            vertex_labels=tuple(self.vertex_labels[v] for v in vertices),
            facets=frozenset(tuple(renumber[v] for v in facet) for facet in kept),
            name=name,
        )

    def link(self, tau: Iterable[int]) -> SimplicialComplex:
        """``{sigma : sigma & tau = {}, sigma | tau in K}``."""
        tau = self._check_face(tau)
        tau_set = set(tau)
        return self.subcomplex(
            (tuple(v for v in facet if v not in tau_set)
             for facet in self.facets if tau_set.issubset(facet)),
            name=f"lk {' '.join(self.labels_of(tau))}",
        )

    def star(self, tau: Iterable[int]) -> SimplicialComplex:
        """``{sigma : sigma | tau in K}``: generated by the facets containing tau."""
        tau = self._check_face(tau)
        return self.subcomplex(
            (facet for facet in self.facets if set(tau).issubset(facet)),
            name=f"st {' '.join(self.labels_of(tau))}",
        )

    def contrastar(self, tau: Iterable[int]) -> SimplicialComplex:
        """
        ``{sigma in K : tau not a subset of sigma}``.

        The contrastar of the empty face is the void complex.
        """
        tau = self._check_face(tau)
        name = f"cost {' '.join(self.labels_of(tau))}"
        if not tau:
            return SimplicialComplex.void(name=name)
        tau_set = set(tau)
        generators: List[Face] = []
        for facet in self.facets:
            if not tau_set.issubset(facet):
                generators.append(facet)
                continue
            for v in tau:
                generators.append(tuple(u for u in facet if u != v))
        return self.subcomplex(generators, name=name)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Vertices of ``lk v`` in increasing id order."""
        return tuple(sorted({
            u for facet in self.facets if v in facet for u in facet if u != v
        }))

    def star_vertices(self, tau: Iterable[int]) -> FrozenSet[int]:
        tau_set = set(tau)
        return frozenset(
            v for facet in self.facets if tau_set.issubset(facet) for v in facet
        )

    def f_vector(self) -> FVector:
        return FVector(tuple(len(self.faces(size)) for size in range(self.d + 1)))

    def h_vector(self) -> HVector:
        return self.f_vector().to_h()

    def facet_labels(self) -> List[List[str]]:
        return [list(self.labels_of(facet)) for facet in self.sorted_facets]

    def __str__(self) -> str:
        name = f"{self.name}: " if self.name else ""
        return f"<{name}{self.n} vertices, {len(self.facets)} facets, dim {self.dim}>"


def link(K: SimplicialComplex, tau: Sequence[int]) -> SimplicialComplex:
    return K.link(tau)


def star(K: SimplicialComplex, tau: Sequence[int]) -> SimplicialComplex:
    return K.star(tau)


def contrastar(K: SimplicialComplex, tau: Sequence[int]) -> SimplicialComplex:
    return K.contrastar(tau)


def f_vector(K: SimplicialComplex) -> FVector:
    return K.f_vector()


def h_vector(K: SimplicialComplex) -> HVector:
    return K.h_vector()
