"""
Standard complexes for tests and the bundled corpus.
"""
from __future__ import annotations

import itertools
import logging
from typing import Callable, Dict, List, Sequence, Tuple

from .complex import SimplicialComplex

logger = logging.getLogger(__name__)


def _check_dimension(d: int) -> int:
    d = int(d)
    if d < 1:
        raise ValueError(f"Generator parameter d must be at least 1, got {d}")
    return d


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex: d+1 vertices, every d-subset a facet."""
    d = _check_dimension(d)
    labels = [str(v) for v in range(1, d + 2)]
    return SimplicialComplex.from_facets(
        itertools.combinations(labels, d), name=f"simplex_boundary_{d}"
    )


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope on vertices +i, -i."""
    d = _check_dimension(d)
    pairs = [(f"+{i}", f"-{i}") for i in range(1, d + 1)]
    return SimplicialComplex.from_facets(
        itertools.product(*pairs), name=f"cross_polytope_boundary_{d}"
    )


def _prefixed(
    first: SimplicialComplex, second: SimplicialComplex
) -> Tuple[List[str], List[str]]:
    labels1, labels2 = list(first.vertex_labels), list(second.vertex_labels)
    if set(labels1) & set(labels2):
        labels1 = [f"a.{label}" for label in labels1]
        labels2 = [f"b.{label}" for label in labels2]
    return labels1, labels2


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """The join: facets are unions of a facet of each complex."""
    labels1, labels2 = _prefixed(first, second)
    facets = [
        [labels1[v] for v in facet1] + [labels2[v] for v in facet2]
        for facet1 in first.sorted_facets
        for facet2 in second.sorted_facets
    ]
    return SimplicialComplex.from_facets(
        facets, name=f"join({first.name}, {second.name})"
    )


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """The join of ``K`` with two isolated points."""
    poles = SimplicialComplex.from_facets([["n"], ["s"]], name="S0")
    result = join(K, poles)
    return SimplicialComplex(result.vertex_labels, result.facets, name=f"susp({K.name})")


def disjoint_union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    labels1, labels2 = _prefixed(first, second)
    facets = [[labels1[v] for v in facet] for facet in first.sorted_facets]
    facets += [[labels2[v] for v in facet] for facet in second.sorted_facets]
    return SimplicialComplex.from_facets(
        facets, name=f"union({first.name}, {second.name})"
    )


GENERATORS: Dict[str, Callable[..., SimplicialComplex]] = {
    "simplex-boundary": simplex_boundary,
    "cross-polytope-boundary": cross_polytope_boundary,
    "suspension": suspension,
    "join": join,
    "disjoint-union": disjoint_union,
}


def generate(name: str, *params) -> SimplicialComplex:
    """
    Build a named standard complex.

    Parameters
    ----------
    name : str
        One of the keys of :data:`GENERATORS`.
    *params :
        An integer ``d`` for the boundary generators, complexes for the
        others.
    """
    try:
        generator = GENERATORS[name]
    except KeyError:
        options = ", ".join(sorted(GENERATORS))
        raise ValueError(
            f"Unknown generator {name!r}; available generators: {options}"
        ) from None

    logger.debug("Generating %s%r", name, tuple(params))
    return generator(*params)


def generate_from_strings(name: str, params: Sequence[str], loader) -> SimplicialComplex:
    """
    Build a named complex from command-line style parameters.

    Integer-valued parameters are converted; anything else is passed to
    ``loader`` (a path-to-complex function).
    """
    converted = []
    for param in params:
        try:
            converted.append(int(param))
        except ValueError:
            converted.append(loader(param))
    return generate(name, *converted)
