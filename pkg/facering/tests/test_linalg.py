import fractions
import random

import pytest

from ..linalg import (ExactMatrix, FieldError, FieldKind, FieldSpec, QuotientSpace,
                      SubspaceBasis, compose, image_basis, kernel_basis, rank, rref)


@pytest.mark.parametrize(
    "text, kind, p",
    [
        pytest.param("Q", FieldKind.rationals, None, id="Q"),
        pytest.param("qq", FieldKind.rationals, None, id="qq"),
        pytest.param("Fp", FieldKind.prime, 32003, id="Fp"),
        pytest.param("Fp:101", FieldKind.prime, 101, id="Fp-colon"),
        pytest.param("F2", FieldKind.prime, 2, id="F2"),
        pytest.param("GF7", FieldKind.prime, 7, id="GF7"),
    ],
)
def test_field_from_string(text, kind, p):
    field = FieldSpec.from_string(text)
    assert field.kind == kind
    assert field.p == p


@pytest.mark.parametrize("text", ["R", "F4", "Fp:x", "F1", ""])
def test_field_from_string_invalid(text):
    with pytest.raises(FieldError):
        FieldSpec.from_string(text)


def test_field_properties():
    assert str(FieldSpec.rationals()) == "Q"
    assert str(FieldSpec.prime_field(5)) == "F5"
    assert FieldSpec.prime_field(2).is_small
    assert not FieldSpec.prime_field().is_small
    assert not FieldSpec.rationals().is_small
    assert FieldSpec.rationals().characteristic == 0


def test_random_element_requires_prime_field():
    with pytest.raises(FieldError):
        FieldSpec.rationals().random_element(random.Random(0))


def test_convert_fraction(rationals, fp):
    half = rationals.convert(fractions.Fraction(3, 6))
    assert rationals.to_python(half) == fractions.Fraction(1, 2)
    half = fp.convert(fractions.Fraction(1, 2))
    assert fp.to_python(half * fp.convert(2)) == 1


@pytest.mark.parametrize(
    "rows, rank_q, rank_f2",
    [
        pytest.param([[1, 1], [1, 1]], 1, 1, id="repeated-row"),
        pytest.param([[1, 1], [0, 2]], 2, 1, id="even-pivot"),
        pytest.param([[0, 0, 0]], 0, 0, id="zero"),
        pytest.param([[1, 0, 1], [0, 1, 1], [1, 1, 0]], 3, 2, id="f2-dependent"),
    ],
)
def test_rank(rows, rank_q, rank_f2, rationals, f2):
    assert rank(ExactMatrix.from_rows(rationals, rows)) == rank_q
    assert rank(ExactMatrix.from_rows(f2, rows)) == rank_f2


def _random_matrices(field: FieldSpec, count: int, seed: int = 7):
    rng = random.Random(seed)
    for _ in range(count):
        nrows, ncols = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.randint(-2, 2) for _ in range(ncols)] for _ in range(nrows)]
        yield ExactMatrix.from_rows(field, rows)


@pytest.mark.parametrize("field_name", ["Q", "F2", "F3", "Fp"])
def test_rank_nullity(field_name):
    field = FieldSpec.from_string(field_name)
    for matrix in _random_matrices(field, 200):
        ncols = matrix.ncols
        kernel = kernel_basis(matrix)
        assert rank(matrix) + kernel.dim == ncols
        assert image_basis(matrix).dim == rank(matrix)
        for vector in kernel.vectors:
            assert matrix.apply(vector) == {}


def test_rref_pivots(rationals):
    result = rref(ExactMatrix.from_rows(rationals, [[0, 2, 4], [0, 1, 3]]))
    assert result.rank == 2
    assert result.pivots == (1, 2)


def test_compose_and_matmul(rationals):
    a = ExactMatrix.from_rows(rationals, [[1, 2], [3, 4]])
    b = ExactMatrix.from_rows(rationals, [[0, 1], [1, 0]])
    assert (a @ b).to_lists() == [[2, 1], [4, 3]]
    assert compose(rationals, [a, b], 2).to_lists() == (b @ a).to_lists()
    assert compose(rationals, [], 2).to_lists() == ExactMatrix.identity(rationals, 2).to_lists()
    with pytest.raises(ValueError):
        a @ ExactMatrix.zeros(rationals, 3, 1)


def test_transpose_and_permute(rationals):
    a = ExactMatrix.from_rows(rationals, [[1, 2, 3]])
    assert a.transpose().to_lists() == [[1], [2], [3]]
    assert a.transpose().transpose().to_lists() == a.to_lists()


def test_quotient_space(rationals):
    one = rationals.one
    sub = SubspaceBasis.span(rationals, 3, [{0: one, 1: one}])
    quotient = QuotientSpace.of(sub)
    assert quotient.dim == 2
    assert quotient.coset_indices == (1, 2)
    # e_0 = -e_1 modulo the span of e_0 + e_1
    assert quotient.project({0: one}) == {0: -one}
    assert quotient.project({0: one, 1: one}) == {}
    assert sub.contains(quotient.lift({0: one}) | {0: one})
    assert quotient.projection_matrix().shape == (2, 3)


def test_subspace_full_and_zero(f2):
    assert SubspaceBasis.full(f2, 4).dim == 4
    assert SubspaceBasis.zero(f2, 4).dim == 0
    assert not SubspaceBasis.zero(f2, 4).contains({1: f2.one})


@pytest.mark.parametrize("field_name", ["Q", "F2", "F3", "Fp"])
def test_rank_of_transpose(field_name):
    field = FieldSpec.from_string(field_name)
    for matrix in _random_matrices(field, 200, seed=11):
        assert rank(matrix) == rank(matrix.transpose())


@pytest.mark.parametrize("field_name", ["Q", "F2", "F3", "Fp"])
def test_rref_idempotent(field_name):
    field = FieldSpec.from_string(field_name)
    for matrix in _random_matrices(field, 200, seed=13):
        once = rref(matrix)
        twice = rref(once.matrix)
        assert twice.matrix.to_lists() == once.matrix.to_lists()
        assert twice.pivots == once.pivots
        assert twice.rank == once.rank


@pytest.mark.parametrize("field_name", ["Q", "F2", "F3", "Fp"])
def test_field_axioms(field_name):
    field = FieldSpec.from_string(field_name)
    rng = random.Random(17)
    zero, one = field.zero, field.one
    for _ in range(200):
        a, b, c = (field.generic_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if a != zero:
            assert a * (one / a) == one
    if field.characteristic:
        assert field.convert(field.characteristic) == zero
