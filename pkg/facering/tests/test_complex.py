import itertools

import pytest

from ..complex import FaceError, FVector, HVector, SimplicialComplex, maximal_faces
from ..generators import (cross_polytope_boundary, disjoint_union, join,
                          simplex_boundary, suspension)
from .conftest import load_corpus


def test_from_facets_labels_and_absorption():
    K = SimplicialComplex.from_facets([["a", "b", "c"], ["b", "c"], ["c", "d"]])
    assert K.vertex_labels == ("a", "b", "c", "d")
    assert K.facets == frozenset({(0, 1, 2), (2, 3)})
    assert K.n == 4
    assert K.d == 3
    assert not K.is_pure


def test_maximal_faces():
    assert maximal_faces([(2, 1), (1,), (3,), (1, 2)]) == [(1, 2), (3,)]


@pytest.mark.parametrize(
    "vertex_labels, facets",
    [
        pytest.param(("a", "a"), {(0, 1)}, id="repeated-label"),
        pytest.param(("a", "b"), {(1, 0)}, id="unsorted-facet"),
        pytest.param(("a", "b"), {(0, 2)}, id="unknown-vertex"),
        pytest.param(("a", "b", "c"), {(0, 1)}, id="unused-vertex"),
        pytest.param(("a", "b"), {(0, 1), (1,)}, id="non-maximal"),
    ],
)
def test_invalid_complexes(vertex_labels, facets):
    with pytest.raises(ValueError):
        SimplicialComplex(vertex_labels, frozenset(facets))


def test_void_and_empty_face_complexes():
    void = SimplicialComplex.void()
    assert void.is_void
    assert void.d == -1
    assert void.faces() == ()

    empty = SimplicialComplex((), frozenset({()}))
    assert empty.d == 0
    assert empty.faces() == ((),)
    assert empty.f_vector().entries == (1,)


@pytest.mark.parametrize(
    "name, f_vector, h_vector",
    [
        pytest.param("simplex_boundary_3", (1, 4, 6, 4), (1, 1, 1, 1), id="tetrahedron"),
        pytest.param("cross_polytope_boundary_3", (1, 6, 12, 8), (1, 3, 3, 1), id="octahedron"),
        pytest.param("torus7", (1, 7, 21, 14), (1, 4, 10, -1), id="torus"),
        pytest.param("rp2_6", (1, 6, 15, 10), (1, 3, 6, 0), id="rp2"),
        pytest.param("klein8", (1, 8, 24, 16), (1, 5, 11, -1), id="klein"),
    ],
)
def test_face_numbers(name, f_vector, h_vector):
    K = load_corpus(name)
    assert K.f_vector().entries == f_vector
    assert K.h_vector().entries == h_vector


def test_f_h_inverse():
    for name in ("torus7", "klein8", "disjoint_spheres", "simplex_boundary_4"):
        fv = load_corpus(name).f_vector()
        assert fv.to_h().to_f() == fv
    h = HVector((1, 2, -3, 4))
    assert h.to_f().to_h() == h
    assert FVector((1, 3, 3))[1] == 3
    assert FVector((1, 3, 3))[5] == 0


def test_faces_order(tetrahedron):
    assert tetrahedron.faces(0) == ((),)
    assert tetrahedron.faces(1) == ((0,), (1,), (2,), (3,))
    assert len(tetrahedron.faces()) == 15
    assert tetrahedron.faces(4) == ()
    assert (0, 1) in tetrahedron
    assert not tetrahedron.is_face((0, 1, 2, 3))


def test_link_of_vertex(tetrahedron, torus):
    lk = tetrahedron.link((0,))
    assert lk.n == 3
    assert len(lk.facets) == 3
    assert lk.vertex_labels == ("2", "3", "4")

    lk = torus.link((torus.vertex_id("1"),))
    assert lk.n == 6
    assert len(lk.facets) == 6
    assert all(len(facet) == 2 for facet in lk.facets)


def test_link_of_empty_face_and_facet(torus):
    assert torus.link(()) == torus
    facet = torus.sorted_facets[0]
    assert torus.link(facet).faces() == ((),)


def test_link_composition(torus):
    """lk_{lk v}(e) agrees with lk_K(v + e), as label sets."""
    for v in range(torus.n):
        lk_v = torus.link((v,))
        for face in lk_v.faces(1) + lk_v.faces(2):
            inner = lk_v.link(face)
            parent_face = (v,) + tuple(torus.vertex_id(label) for label in lk_v.labels_of(face))
            outer = torus.link(parent_face)
            assert sorted(inner.facet_labels()) == sorted(outer.facet_labels())


def test_link_of_non_face(torus):
    with pytest.raises(FaceError):
        torus.link((0, 1, 2, 3))


def test_star_and_contrastar(tetrahedron):
    assert tetrahedron.star((0,)).facets == tetrahedron.subcomplex(
        facet for facet in tetrahedron.facets if 0 in facet
    ).facets
    cost = tetrahedron.contrastar((0,))
    assert cost.facet_labels() == [["2", "3", "4"]]
    assert tetrahedron.contrastar(()).is_void


def test_contrastar_faces(torus):
    for tau in torus.faces(2)[:5]:
        cost = torus.contrastar(tau)
        expected = {
            torus.labels_of(face) for face in torus.faces() if not set(tau) <= set(face)
        }
        assert {cost.labels_of(face) for face in cost.faces()} == expected


def test_neighbors_and_star_vertices(tetrahedron):
    assert tetrahedron.neighbors(0) == (1, 2, 3)
    assert tetrahedron.star_vertices((0, 1)) == frozenset(range(4))


def test_vertex_id_unknown(torus):
    with pytest.raises(FaceError):
        torus.vertex_id("nope")


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_generators(d):
    assert simplex_boundary(d).h_vector().entries == (1,) * (d + 1)
    assert cross_polytope_boundary(d).h_vector().entries == tuple(
        len(list(itertools.combinations(range(d), i))) for i in range(d + 1)
    )


def test_generator_matches_corpus():
    for d in (2, 3, 4, 5):
        assert simplex_boundary(d) == load_corpus(f"simplex_boundary_{d}")


def test_join_and_suspension():
    square = cross_polytope_boundary(2)
    assert suspension(square).f_vector() == cross_polytope_boundary(3).f_vector()
    joined = join(simplex_boundary(2), simplex_boundary(1))
    assert joined.d == 3
    assert joined.n == 5


def test_disjoint_union():
    union = disjoint_union(simplex_boundary(3), simplex_boundary(3))
    assert union.n == 8
    assert union.f_vector() == load_corpus("disjoint_spheres").f_vector()


def test_bad_generator_dimension():
    with pytest.raises(ValueError):
        simplex_boundary(0)


@pytest.mark.parametrize(
    "first, second",
    [
        pytest.param("simplex_boundary_2", "simplex_boundary_1", id="triangle-pair"),
        pytest.param("cross_polytope_boundary_2", "simplex_boundary_2", id="square-triangle"),
        pytest.param("torus7", "simplex_boundary_1", id="torus-pair"),
    ],
)
def test_join_f_vector_is_convolution(first, second):
    complexes = {
        "simplex_boundary_1": simplex_boundary(1),
        "simplex_boundary_2": simplex_boundary(2),
        "cross_polytope_boundary_2": cross_polytope_boundary(2),
        "torus7": load_corpus("torus7"),
    }
    f1 = complexes[first].f_vector().entries
    f2 = complexes[second].f_vector().entries
    expected = [0] * (len(f1) + len(f2) - 1)
    for i, a in enumerate(f1):
        for j, b in enumerate(f2):
            expected[i + j] += a * b
    assert join(complexes[first], complexes[second]).f_vector().entries == tuple(expected)


@pytest.mark.parametrize("name", ["simplex_boundary_3", "torus7", "rp2_6", "klein8"])
def test_star_and_contrastar_cover(name):
    K = load_corpus(name)
    all_faces = {K.labels_of(face) for face in K.faces()}
    for tau in K.faces()[1:12]:
        star = K.star(tau)
        cost = K.contrastar(tau)
        covered = {star.labels_of(face) for face in star.faces()}
        covered |= {cost.labels_of(face) for face in cost.faces()}
        assert covered == all_faces
