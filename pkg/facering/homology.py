"""
Simplicial (co)homology over a field, classification of complexes, and graded
dimensions of local cohomology of face rings.
"""
from __future__ import annotations

import collections
import dataclasses
import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import FaceError, SimplicialComplex
from .linalg import ExactMatrix, FieldSpec, rank
from .typing import Face

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class BettiVector:
    """
    Reduced Betti numbers ``(beta_{-1}, beta_0, ..., beta_{d-1})``.

    ``betti[i]`` is the reduced Betti number in degree ``i``; degrees outside
    the stored range are 0.
    """

    field: FieldSpec
    values: Tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        idx = degree + 1
        if 0 <= idx < len(self.values):
            return self.values[idx]
        return 0

    @property
    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (idx - 1) * value for idx, value in enumerate(self.values))


def _boundary_matrix(
    field: FieldSpec,
    cells: Sequence[Face],
    facets_index: Dict[Face, int],
) -> ExactMatrix:
    """
    Boundary from ``cells`` to the faces of ``facets_index`` (one size
    smaller); boundary faces missing from the index are dropped, which is the
    boundary of the quotient chain complex.
    """
    one = field.one
    columns = []
    for cell in cells:
        column = {}
        for position in range(len(cell)):
            row = facets_index.get(cell[:position] + cell[position + 1:])
            if row is not None:
                column[row] = one if position % 2 == 0 else -one
        columns.append(column)
    return ExactMatrix.from_columns(field, columns, len(facets_index))


def chain_homology(
    field: FieldSpec, chains: Sequence[Sequence[Face]], cohomology: bool = False
) -> Dict[int, int]:
    """
    Homology dimensions of a chain complex of faces.

    ``chains[size]`` lists the cells with ``size`` vertices; a cell of size
    ``s`` sits in degree ``s - 1``.  Returns ``{degree: dimension}``.  With
    ``cohomology``, the ranks come from the transposed (coboundary) matrices.
    """
    indices = [{face: idx for idx, face in enumerate(level)} for level in chains]
    ranks: Dict[int, int] = {}
    for size in range(1, len(chains)):
        if not chains[size] or not chains[size - 1]:
            ranks[size] = 0
            continue
        matrix = _boundary_matrix(field, chains[size], indices[size - 1])
        ranks[size] = rank(matrix.transpose() if cohomology else matrix)
    return {
        size - 1: len(level) - ranks.get(size, 0) - ranks.get(size + 1, 0)
        for size, level in enumerate(chains)
    }


def betti(K: SimplicialComplex, field: FieldSpec) -> BettiVector:
    """Reduced Betti numbers of ``K`` from boundary-matrix ranks."""
    chains = [K.faces(size) for size in range(K.d + 1)]
    dims = chain_homology(field, chains)
    return BettiVector(field, tuple(dims.get(i, 0) for i in range(-1, K.d)))


def relative_cochain_dims(
    K: SimplicialComplex, tau: Sequence[int], field: FieldSpec
) -> Dict[int, int]:
    """
    ``{i: dim H^i(K, cost tau)}`` for every degree ``i``.

    The relative cochains are spanned by the faces containing ``tau``; the
    empty face ``tau = ()`` gives reduced cohomology of ``K``.
    """
    tau = tuple(sorted(tau))
    if not K.is_face(tau):
        raise FaceError(f"{list(K.labels_of(tau))} is not a face of the complex")
    tau_set = set(tau)
    chains = [
        [face for face in K.faces(size) if tau_set.issubset(face)]
        for size in range(K.d + 1)
    ]
    return chain_homology(field, chains, cohomology=True)


def relative_cohomology_dim(
    K: SimplicialComplex, tau: Sequence[int], i: int, field: FieldSpec
) -> int:
    """``dim H^i(K, cost tau)``, equal to ``dim H~_{i-|tau|}(lk tau)``."""
    return relative_cochain_dims(K, tau, field).get(i, 0)


@dataclasses.dataclass
class ClassificationWitness:
    face: Tuple[str, ...]
    degree: Optional[int]
    reason: str


@dataclasses.dataclass
class ClassificationReport:
    field: str
    is_pure: bool
    is_connected: bool
    is_strongly_connected: bool
    is_buchsbaum: bool
    is_homology_manifold: bool
    is_homology_sphere: bool
    is_orientable: bool
    witness: Optional[ClassificationWitness] = None


def _is_connected_graph(nodes: Sequence, adjacency: Dict) -> bool:
    if not nodes:
        return False
    seen = {nodes[0]}
    queue = collections.deque([nodes[0]])
    while queue:
        node = queue.popleft()
        for other in adjacency.get(node, ()):
            if other not in seen:
                seen.add(other)
                queue.append(other)
    return len(seen) == len(nodes)


def vertex_graph_connected(K: SimplicialComplex) -> bool:
    adjacency: Dict[int, List[int]] = collections.defaultdict(list)
    for u, v in K.faces(2):
        adjacency[u].append(v)
        adjacency[v].append(u)
    return _is_connected_graph(list(range(K.n)), adjacency)


def strongly_connected(K: SimplicialComplex) -> bool:
    """Facets connected through shared ridges (codimension-one faces)."""
    facets = list(K.sorted_facets)
    by_ridge: Dict[Face, List[Face]] = collections.defaultdict(list)
    for facet in facets:
        for position in range(len(facet)):
            by_ridge[facet[:position] + facet[position + 1:]].append(facet)
    adjacency: Dict[Face, List[Face]] = collections.defaultdict(list)
    for members in by_ridge.values():
        for facet in members:
            adjacency[facet].extend(other for other in members if other != facet)
    return _is_connected_graph(facets, adjacency)


def classify(K: SimplicialComplex, field: FieldSpec) -> ClassificationReport:
    """
    Classify ``K`` over ``field`` as Buchsbaum, homology manifold, homology
    sphere, and orientable.

    For each nonempty face tau (smallest first), the link must have vanishing
    reduced homology below degree ``d - |tau| - 1``; homology manifolds also
    need a one-dimensional homology in that degree.  The first failure is
    returned as the witness.
    """
    d = K.d
    is_pure = K.is_pure
    is_connected = vertex_graph_connected(K)
    witness = None

    if not is_pure:
        buchsbaum = manifold = False
        witness = ClassificationWitness((), None, "not pure")
    else:
        buchsbaum = manifold = True
        for tau in K.faces():
            if not tau:
                continue
            link_betti = betti(K.link(tau), field)
            top = d - len(tau) - 1
            for degree in range(-1, top):
                if link_betti[degree]:
                    buchsbaum = manifold = False
                    witness = ClassificationWitness(
                        K.labels_of(tau), degree,
                        "link homology below the top degree",
                    )
                    break
            if not buchsbaum:
                break
            if manifold and link_betti[top] != 1:
                manifold = False
                witness = ClassificationWitness(
                    K.labels_of(tau), top, "link top homology is not one-dimensional",
                )

    complex_betti = betti(K, field)
    if is_connected != (complex_betti[0] == 0 and K.n > 0):
        logger.warning(
            "Vertex-graph connectivity (%s) disagrees with beta_0 = %d",
            is_connected, complex_betti[0],
        )

    sphere = manifold and all(
        complex_betti[degree] == 0 for degree in range(-1, d - 1)
    ) and complex_betti[d - 1] == 1
    if manifold and not sphere and witness is None:
        witness = ClassificationWitness((), None, "the complex itself is not a homology sphere")

    return ClassificationReport(
        field=str(field),
        is_pure=is_pure,
        is_connected=is_connected,
        is_strongly_connected=strongly_connected(K),
        is_buchsbaum=buchsbaum,
        is_homology_manifold=manifold,
        is_homology_sphere=sphere,
        is_orientable=manifold and is_connected and complex_betti[d - 1] == 1,
        witness=witness,
    )


def compositions(total: int, parts: int) -> int:
    """Number of ways to write ``total`` as an ordered sum of ``parts`` positive integers."""
    if parts < 1 or total < parts:
        return 0
    return math.comb(total - 1, parts - 1)


@dataclasses.dataclass
class LocalCohomologyEntry:
    j: int
    degree: int
    dim: int


@dataclasses.dataclass
class RelativeCohomologyEntry:
    face: Tuple[str, ...]
    degree: int
    dim: int


@dataclasses.dataclass
class LocalCohomologyTable:
    """
    Graded dimensions ``dim H^j(k[K])_m`` over a window of degrees ``m``, and
    the nonzero relative cohomology dimensions ``dim H^i(K, cost sigma)`` they
    are assembled from.
    """

    field: str
    window: Tuple[int, int]
    entries: List[LocalCohomologyEntry]
    relative: List[RelativeCohomologyEntry]

    def dim(self, j: int, degree: int) -> int:
        if degree > 0:
            return 0
        for entry in self.entries:
            if entry.j == j and entry.degree == degree:
                return entry.dim
        raise KeyError(f"H^{j} in degree {degree} is outside the computed table")

    def row(self, j: int) -> Dict[int, int]:
        return {entry.degree: entry.dim for entry in self.entries if entry.j == j}


def default_window(K: SimplicialComplex) -> Tuple[int, int]:
    return (-K.d - 2, 0)


def local_cohomology_dims(
    K: SimplicialComplex,
    field: FieldSpec,
    j: Optional[int] = None,
    window: Optional[Tuple[int, int]] = None,
) -> LocalCohomologyTable:
    """
    Graded dimensions of the local cohomology of the face ring.

    For ``j = i + 1``, ``dim H^j(k[K])_m`` is the sum over nonempty faces
    sigma of ``compositions(-m, |sigma|) * dim H^i(K, cost sigma)``, plus
    ``dim H^i(K, cost {})`` when ``m = 0``.  Entries vanish for ``m > 0``.

    Parameters
    ----------
    j : int, optional
        Only compute this cohomological degree (default: ``0..d``).
    window : (int, int), optional
        Inclusive range of internal degrees (default ``(-d-2, 0)``).
    """
    low, high = window if window is not None else default_window(K)
    if low > high:
        raise ValueError(f"Empty degree window {low}..{high}")
    degrees = [j] if j is not None else list(range(K.d + 1))

    relative = {tau: relative_cochain_dims(K, tau, field) for tau in K.faces()}

    entries = []
    for cohomological in degrees:
        i = cohomological - 1
        for m in range(low, high + 1):
            total = 0
            if m <= 0:
                for tau, dims in relative.items():
                    contribution = dims.get(i, 0)
                    if not contribution:
                        continue
                    if tau:
                        total += compositions(-m, len(tau)) * contribution
                    elif m == 0:
                        total += contribution
            entries.append(LocalCohomologyEntry(cohomological, m, total))

    relative_entries = [
        RelativeCohomologyEntry(K.labels_of(tau), degree, dim)
        for tau, dims in relative.items()
        for degree, dim in sorted(dims.items())
        if dim
    ]
    return LocalCohomologyTable(
        field=str(field),
        window=(low, high),
        entries=entries,
        relative=relative_entries,
    )
