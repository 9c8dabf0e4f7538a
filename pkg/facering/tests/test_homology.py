import random

import pytest

from ..complex import FaceError, SimplicialComplex
from ..homology import (betti, classify, compositions, default_window,
                        local_cohomology_dims, relative_cohomology_dim,
                        strongly_connected, vertex_graph_connected)
from ..linalg import FieldSpec
from .conftest import load_corpus


@pytest.mark.parametrize(
    "name, field, expected",
    [
        pytest.param("simplex_boundary_3", "Q", (0, 0, 0, 1), id="sphere"),
        pytest.param("simplex_boundary_4", "F2", (0, 0, 0, 0, 1), id="sphere-4"),
        pytest.param("torus7", "Q", (0, 0, 2, 1), id="torus-Q"),
        pytest.param("torus7", "F2", (0, 0, 2, 1), id="torus-F2"),
        pytest.param("rp2_6", "Q", (0, 0, 0, 0), id="rp2-Q"),
        pytest.param("rp2_6", "F2", (0, 0, 1, 1), id="rp2-F2"),
        pytest.param("klein8", "Q", (0, 0, 1, 0), id="klein-Q"),
        pytest.param("klein8", "F2", (0, 0, 2, 1), id="klein-F2"),
        pytest.param("disjoint_spheres", "Q", (0, 1, 0, 2), id="two-spheres"),
    ],
)
def test_betti(name, field, expected):
    K = load_corpus(name)
    result = betti(K, FieldSpec.from_string(field))
    assert result.values == expected
    assert result.reduced_euler_characteristic == (
        sum((-1) ** i * count for i, count in enumerate(K.f_vector().entries)) * -1
    )


def test_betti_of_empty_face_complex(torus, rationals):
    facet = torus.sorted_facets[0]
    assert betti(torus.link(facet), rationals).values == (1,)
    assert betti(torus, rationals)[-2] == 0
    assert betti(torus, rationals)[7] == 0


@pytest.mark.parametrize("name, field", [
    pytest.param("torus7", "Q", id="torus"),
    pytest.param("rp2_6", "F2", id="rp2"),
    pytest.param("simplex_boundary_3", "F3", id="sphere"),
])
def test_relative_cohomology_matches_links(name, field):
    K = load_corpus(name)
    field = FieldSpec.from_string(field)
    for tau in K.faces():
        link_betti = betti(K.link(tau), field)
        for i in range(-1, K.d):
            assert relative_cohomology_dim(K, tau, i, field) == link_betti[i - len(tau)]


def test_relative_cohomology_bowtie(bowtie, rationals):
    center = (bowtie.vertex_id("1"),)
    assert relative_cohomology_dim(bowtie, center, 1, rationals) == 1
    with pytest.raises(FaceError):
        relative_cohomology_dim(bowtie, (1, 3), 1, rationals)


def test_classify_sphere(tetrahedron, rationals):
    report = classify(tetrahedron, rationals)
    assert report.is_pure
    assert report.is_buchsbaum
    assert report.is_homology_manifold
    assert report.is_homology_sphere
    assert report.is_orientable
    assert report.witness is None


def test_classify_torus(torus, rationals):
    report = classify(torus, rationals)
    assert report.is_homology_manifold
    assert not report.is_homology_sphere
    assert report.is_orientable
    assert report.is_strongly_connected
    assert report.witness.reason == "the complex itself is not a homology sphere"


@pytest.mark.parametrize("field, orientable", [("Q", False), ("F2", True)])
def test_classify_rp2(rp2, field, orientable):
    report = classify(rp2, FieldSpec.from_string(field))
    assert report.is_homology_manifold
    assert report.is_orientable is orientable


def test_classify_disjoint_spheres():
    report = classify(load_corpus("disjoint_spheres"), FieldSpec.rationals())
    assert report.is_buchsbaum
    assert not report.is_connected
    assert not report.is_orientable


def test_classify_bowtie(bowtie, rationals):
    report = classify(bowtie, rationals)
    assert report.is_pure
    assert report.is_connected
    assert not report.is_strongly_connected
    assert not report.is_buchsbaum
    assert report.witness.face == ("1",)
    assert report.witness.degree == 0


def test_classify_not_pure(rationals):
    K = SimplicialComplex.from_facets([["1", "2", "3"], ["3", "4"]])
    report = classify(K, rationals)
    assert not report.is_pure
    assert not report.is_buchsbaum
    assert report.witness.reason == "not pure"


def test_connectivity(bowtie):
    assert vertex_graph_connected(bowtie)
    assert not strongly_connected(bowtie)
    spheres = load_corpus("disjoint_spheres")
    assert not vertex_graph_connected(spheres)
    assert not strongly_connected(spheres)


def test_compositions():
    assert compositions(0, 1) == 0
    assert compositions(1, 1) == 1
    assert compositions(2, 2) == 1
    assert compositions(4, 2) == 3
    assert compositions(1, 3) == 0


def test_local_cohomology_torus(torus, rationals):
    table = local_cohomology_dims(torus, rationals)
    assert table.window == default_window(torus) == (-5, 0)
    assert table.dim(3, 0) == 1
    assert table.dim(3, -1) == 7
    assert table.dim(3, -2) == 28
    assert table.dim(2, 0) == 2
    assert table.dim(2, -1) == 0
    assert table.dim(1, 0) == 0
    assert table.dim(0, -3) == 0
    assert table.dim(3, 4) == 0
    with pytest.raises(KeyError):
        table.dim(3, -6)


def test_local_cohomology_single_degree(tetrahedron, f2):
    table = local_cohomology_dims(tetrahedron, f2, j=3, window=(-2, 0))
    assert sorted(table.row(3)) == [-2, -1, 0]
    assert table.row(2) == {}
    assert all(entry.j == 3 for entry in table.entries)
    with pytest.raises(ValueError):
        local_cohomology_dims(tetrahedron, f2, window=(0, -1))


@pytest.mark.parametrize(
    "name", ["simplex_boundary_3", "torus7", "rp2_6", "klein8", "disjoint_spheres"]
)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_field_betti_bounds_rational(name, p):
    K = load_corpus(name)
    over_q = betti(K, FieldSpec.rationals())
    over_p = betti(K, FieldSpec.prime_field(p))
    assert all(b_p >= b_q for b_p, b_q in zip(over_p.values, over_q.values))
    assert over_p.reduced_euler_characteristic == over_q.reduced_euler_characteristic


@pytest.mark.parametrize("name", ["torus7", "rp2_6", "klein8"])
@pytest.mark.parametrize("field_name", ["Q", "F2"])
def test_classification_chain_on_subcomplexes(name, field_name):
    K = load_corpus(name)
    field = FieldSpec.from_string(field_name)
    rng = random.Random(5)
    facets = K.sorted_facets
    for _ in range(12):
        kept = rng.sample(facets, rng.randint(1, len(facets)))
        sub = K.subcomplex(kept)
        report = classify(sub, field)
        if report.is_homology_sphere:
            assert report.is_homology_manifold
        if report.is_orientable:
            assert report.is_homology_manifold and report.is_connected
        if report.is_homology_manifold:
            assert report.is_buchsbaum
        if report.is_buchsbaum:
            assert report.is_pure
        if not report.is_homology_manifold:
            assert report.witness is not None
