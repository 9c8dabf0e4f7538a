"""
Exact linear algebra over the rationals and over prime fields.

Matrices are stored sparse and row-major; elimination is delegated to
:class:`sympy.polys.matrices.DomainMatrix`, which is switched to its dense
representation when the input is more than 30% filled.
"""
from __future__ import annotations

import dataclasses
import enum
import fractions
import functools
import logging
import random
from typing import (Any, Dict, Iterable, List, Mapping, NamedTuple, Optional,
                    Sequence, Tuple)

import sympy
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .typing import Self

logger = logging.getLogger(__name__)

#: Default modulus for prime field runs.
DEFAULT_PRIME = 32003
#: Integer coefficients of "generic" choices over Q lie in [-bound, bound].
RATIONAL_SAMPLE_BOUND = 1000
#: Prime fields below this size are too small for random genericity sampling.
SMALL_FIELD_BOUND = 100
#: Fill ratio above which elimination runs on a dense matrix.
DENSE_FILL_THRESHOLD = 0.3

Scalar = Any
SparseVector = Dict[int, Scalar]


class FieldError(ValueError):
    """Invalid field specification, or an operation unsupported over a field."""


class FieldKind(str, enum.Enum):
    rationals = "Q"
    prime = "Fp"


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: the rationals or a prime field F_p."""

    kind: FieldKind = FieldKind.rationals
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == FieldKind.prime:
            if self.p is None or not sympy.isprime(self.p):
                raise FieldError(
                    f"A prime field requires a prime modulus, got {self.p!r}"
                )
        elif self.p is not None:
            raise FieldError("The rational field does not take a modulus")

    @classmethod
    def rationals(cls) -> Self:
        return cls(FieldKind.rationals)

    @classmethod
    def prime_field(cls, p: int = DEFAULT_PRIME) -> Self:
        return cls(FieldKind.prime, p)

    @classmethod
    def from_string(cls, value: str) -> Self:
        """
        Parse a field name.

        Accepted forms are ``Q``, ``Fp`` (with the default prime), ``Fp:<p>``
        and ``F<p>`` (e.g. ``F2``).
        """
        text = value.strip()
        lowered = text.lower()
        if lowered in ("q", "qq"):
            return cls.rationals()
        if lowered == "fp":
            return cls.prime_field()
        for prefix in ("fp:", "gf:", "gf", "f"):
            if lowered.startswith(prefix):
                try:
                    modulus = int(lowered[len(prefix):])
                except ValueError:
                    break
                return cls.prime_field(modulus)
        raise FieldError(
            f"Unrecognized field {value!r}; expected Q, Fp, Fp:<p> or F<p>"
        )

    def __str__(self) -> str:
        if self.kind == FieldKind.rationals:
            return "Q"
        return f"F{self.p}"

    @functools.cached_property
    def domain(self):
        """The sympy domain implementing this field."""
        if self.kind == FieldKind.rationals:
            return QQ
        return GF(self.p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == FieldKind.rationals else self.p

    @property
    def is_small(self) -> bool:
        """Prime fields too small for random genericity sampling."""
        return self.kind == FieldKind.prime and self.p < SMALL_FIELD_BOUND

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def convert(self, value: Any) -> Scalar:
        """Convert an int, Fraction or domain element into this field."""
        domain = self.domain
        if isinstance(value, fractions.Fraction):
            if self.kind == FieldKind.rationals:
                return QQ(value.numerator, value.denominator)
            return domain(value.numerator) / domain(value.denominator)
        if isinstance(value, int):
            return domain(value)
        if domain.of_type(value):
            return value
        return domain.convert(value)

    def to_python(self, value: Scalar):
        """An ``int`` (prime field) or ``Fraction`` (rationals) for display."""
        if self.kind == FieldKind.rationals:
            fraction = fractions.Fraction(
                int(value.numerator), int(value.denominator)
            )
            return int(fraction) if fraction.denominator == 1 else fraction
        return int(value) % self.p

    def random_element(self, rng: random.Random) -> Scalar:
        """A uniformly random element; prime fields only."""
        if self.kind == FieldKind.rationals:
            raise FieldError(
                "Uniform sampling is only defined over prime fields; use "
                "generic_vector for rational genericity sampling"
            )
        return self.domain(rng.randrange(self.p))

    def generic_element(self, rng: random.Random) -> Scalar:
        """Uniform over F_p, or an integer in the sampling range over Q."""
        if self.kind == FieldKind.rationals:
            return QQ(rng.randint(-RATIONAL_SAMPLE_BOUND, RATIONAL_SAMPLE_BOUND))
        return self.random_element(rng)


def axpy(y: Mapping[int, Scalar], a: Scalar, x: Mapping[int, Scalar]) -> SparseVector:
    """Return ``y + a * x`` as a new sparse vector without zero entries."""
    result = dict(y)
    if not a:
        return result
    for idx, value in x.items():
        total = result.get(idx)
        total = a * value if total is None else total + a * value
        if total:
            result[idx] = total
        else:
            result.pop(idx, None)
    return result


def scale(a: Scalar, x: Mapping[int, Scalar]) -> SparseVector:
    if not a:
        return {}
    return {idx: a * value for idx, value in x.items()}


@dataclasses.dataclass(frozen=True)
class ExactMatrix:
    """
    A sparse row-major matrix over a :class:`FieldSpec`.

    ``entries`` maps row index to ``{column: nonzero scalar}``; zero rows and
    zero entries are never stored.
    """

    field: FieldSpec
    nrows: int
    ncols: int
    entries: Mapping[int, Mapping[int, Scalar]] = dataclasses.field(
        default_factory=dict, repr=False
    )

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> Self:
        return cls(field, nrows, ncols, {})

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> Self:
        return cls(field, size, size, {idx: {idx: field.one} for idx in range(size)})

    @classmethod
    def from_rows(
        cls,
        field: FieldSpec,
        rows: Sequence[Sequence[Any]],
        ncols: Optional[int] = None,
    ) -> Self:
        """Build a matrix from dense rows of ints, Fractions or scalars."""
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        entries = {}
        for row_idx, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError(f"Row {row_idx} has {len(row)} entries, expected {ncols}")
            converted = {
                col: field.convert(value) for col, value in enumerate(row)
            }
            converted = {col: value for col, value in converted.items() if value}
            if converted:
                entries[row_idx] = converted
        return cls(field, len(rows), ncols, entries)

    @classmethod
    def from_sparse_rows(
        cls, field: FieldSpec, rows: Sequence[Mapping[int, Scalar]], ncols: int
    ) -> Self:
        entries = {}
        for row_idx, row in enumerate(rows):
            cleaned = {col: value for col, value in row.items() if value}
            if cleaned:
                entries[row_idx] = cleaned
        return cls(field, len(rows), ncols, entries)

    @classmethod
    def from_columns(
        cls, field: FieldSpec, columns: Sequence[Mapping[int, Scalar]], nrows: int
    ) -> Self:
        """Build the matrix of a linear map from the images of basis vectors."""
        entries: Dict[int, Dict[int, Scalar]] = {}
        for col_idx, column in enumerate(columns):
            for row_idx, value in column.items():
                if value:
                    entries.setdefault(row_idx, {})[col_idx] = value
        return cls(field, nrows, len(columns), entries)

    @classmethod
    def from_domain_matrix(cls, field: FieldSpec, matrix: DomainMatrix) -> Self:
        nrows, ncols = matrix.shape
        sparse = matrix.to_sparse().rep
        entries = {
            row_idx: dict(row) for row_idx, row in sparse.items() if row
        }
        return cls(field, nrows, ncols, entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self.entries.values())

    @property
    def density(self) -> float:
        if not self.nrows or not self.ncols:
            return 0.0
        return self.nnz / (self.nrows * self.ncols)

    def to_domain_matrix(self) -> DomainMatrix:
        matrix = DomainMatrix(
            {row_idx: dict(row) for row_idx, row in self.entries.items()},
            self.shape,
            self.field.domain,
        )
        if self.density > DENSE_FILL_THRESHOLD:
            matrix = matrix.to_dense()
        return matrix

    def row(self, idx: int) -> SparseVector:
        return dict(self.entries.get(idx, {}))

    def rows(self) -> List[SparseVector]:
        return [self.row(idx) for idx in range(self.nrows)]

    def column(self, idx: int) -> SparseVector:
        return {
            row_idx: row[idx]
            for row_idx, row in self.entries.items()
            if idx in row
        }

    def columns(self) -> List[SparseVector]:
        result: List[SparseVector] = [{} for _ in range(self.ncols)]
        for row_idx, row in self.entries.items():
            for col_idx, value in row.items():
                result[col_idx][row_idx] = value
        return result

    def transpose(self) -> ExactMatrix:
        return ExactMatrix.from_columns(self.field, self.rows(), self.ncols)

    def apply(self, vector: Mapping[int, Scalar]) -> SparseVector:
        """The product of this matrix with a sparse column vector."""
        result = {}
        for row_idx, row in self.entries.items():
            total = self.field.zero
            for col_idx, value in row.items():
                other = vector.get(col_idx)
                if other:
                    total += value * other
            if total:
                result[row_idx] = total
        return result

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"Cannot compose {self.shape} with {other.shape}")
        if not self.nnz or not other.nnz:
            return ExactMatrix.zeros(self.field, self.nrows, other.ncols)
        product = self.to_domain_matrix().to_sparse().matmul(
            other.to_domain_matrix().to_sparse()
        )
        return ExactMatrix.from_domain_matrix(self.field, product)

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if self.shape != other.shape:
            raise ValueError(f"Cannot add {self.shape} and {other.shape}")
        rows = [
            axpy(self.entries.get(idx, {}), self.field.one, other.entries.get(idx, {}))
            for idx in range(self.nrows)
        ]
        return ExactMatrix.from_sparse_rows(self.field, rows, self.ncols)

    def scaled(self, factor: Any) -> ExactMatrix:
        factor = self.field.convert(factor)
        rows = [scale(factor, self.entries.get(idx, {})) for idx in range(self.nrows)]
        return ExactMatrix.from_sparse_rows(self.field, rows, self.ncols)

    def permute_columns(self, order: Sequence[int]) -> ExactMatrix:
        """Column ``j`` of the result is column ``order[j]`` of this matrix."""
        position = {old: new for new, old in enumerate(order)}
        rows = [
            {position[col]: value for col, value in self.entries.get(idx, {}).items()}
            for idx in range(self.nrows)
        ]
        return ExactMatrix.from_sparse_rows(self.field, rows, self.ncols)

    def permute_rows(self, order: Sequence[int]) -> ExactMatrix:
        rows = [self.row(idx) for idx in order]
        return ExactMatrix.from_sparse_rows(self.field, rows, self.ncols)

    def to_lists(self) -> List[List[Any]]:
        """Dense rows of ints or Fractions."""
        result = []
        for idx in range(self.nrows):
            row = self.entries.get(idx, {})
            result.append([
                self.field.to_python(row[col]) if col in row else 0
                for col in range(self.ncols)
            ])
        return result

    @staticmethod
    def vstack(field: FieldSpec, matrices: Sequence[ExactMatrix], ncols: int) -> ExactMatrix:
        rows: List[SparseVector] = []
        for matrix in matrices:
            if matrix.ncols != ncols:
                raise ValueError(f"Cannot stack {matrix.shape} with {ncols} columns")
            rows.extend(matrix.rows())
        return ExactMatrix.from_sparse_rows(field, rows, ncols)

    @staticmethod
    def hstack(field: FieldSpec, matrices: Sequence[ExactMatrix], nrows: int) -> ExactMatrix:
        columns: List[SparseVector] = []
        for matrix in matrices:
            if matrix.nrows != nrows:
                raise ValueError(f"Cannot join {matrix.shape} with {nrows} rows")
            columns.extend(matrix.columns())
        return ExactMatrix.from_columns(field, columns, nrows)

    def rank(self) -> int:
        return rref(self).rank


class RrefResult(NamedTuple):
    matrix: ExactMatrix
    rank: int
    pivots: Tuple[int, ...]


def rref(matrix: ExactMatrix) -> RrefResult:
    """Reduced row echelon form, rank and pivot columns of ``matrix``."""
    if not matrix.nnz:
        return RrefResult(
            ExactMatrix.zeros(matrix.field, matrix.nrows, matrix.ncols), 0, ()
        )
    reduced, pivots = matrix.to_domain_matrix().rref()
    result = ExactMatrix.from_domain_matrix(matrix.field, reduced)
    return RrefResult(result, len(pivots), tuple(pivots))


def rank(matrix: ExactMatrix) -> int:
    return rref(matrix).rank


def compose(field: FieldSpec, maps: Sequence[ExactMatrix], dim: int) -> ExactMatrix:
    """
    Compose ``maps[0]`` first, then ``maps[1]``, and so on.

    An empty sequence is the identity on a space of dimension ``dim``.
    """
    result = ExactMatrix.identity(field, dim)
    for step in maps:
        result = step @ result
    return result


@dataclasses.dataclass(frozen=True)
class SubspaceBasis:
    """
    A subspace of ``field ** ambient_dim`` held as the nonzero rows of its
    reduced row echelon form.
    """

    field: FieldSpec
    ambient_dim: int
    vectors: Tuple[SparseVector, ...] = ()
    pivots: Tuple[int, ...] = ()

    @classmethod
    def span(
        cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Mapping[int, Scalar]]
    ) -> Self:
        matrix = ExactMatrix.from_sparse_rows(field, list(vectors), ambient_dim)
        result = rref(matrix)
        rows = tuple(result.matrix.row(idx) for idx in range(result.rank))
        return cls(field, ambient_dim, rows, result.pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> Self:
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> Self:
        rows = tuple({idx: field.one} for idx in range(ambient_dim))
        return cls(field, ambient_dim, rows, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def reduce(self, vector: Mapping[int, Scalar]) -> SparseVector:
        """Reduce ``vector`` modulo the subspace; pivot coordinates vanish."""
        result = dict(vector)
        for row, pivot in zip(self.vectors, self.pivots):
            coefficient = result.get(pivot)
            if coefficient:
                result = axpy(result, -coefficient, row)
        return result

    def contains(self, vector: Mapping[int, Scalar]) -> bool:
        return not self.reduce(vector)

    def matrix(self) -> ExactMatrix:
        return ExactMatrix.from_sparse_rows(self.field, self.vectors, self.ambient_dim)


@dataclasses.dataclass(frozen=True)
class QuotientSpace:
    """
    ``field ** ambient_dim`` modulo a subspace, with the unit vectors of the
    non-pivot coordinates as the coset basis.
    """

    sub: SubspaceBasis
    coset_indices: Tuple[int, ...]

    @classmethod
    def of(cls, sub: SubspaceBasis) -> Self:
        return cls(sub, tuple(quotient_coset_basis(sub.ambient_dim, sub)))

    @property
    def field(self) -> FieldSpec:
        return self.sub.field

    @property
    def ambient_dim(self) -> int:
        return self.sub.ambient_dim

    @property
    def dim(self) -> int:
        return len(self.coset_indices)

    @functools.cached_property
    def _positions(self) -> Dict[int, int]:
        return {ambient: pos for pos, ambient in enumerate(self.coset_indices)}

    def project(self, vector: Mapping[int, Scalar]) -> SparseVector:
        """Coordinates of the coset of ``vector`` in the coset basis."""
        reduced = self.sub.reduce(vector)
        positions = self._positions
        return {positions[idx]: value for idx, value in reduced.items()}

    def lift(self, coordinates: Mapping[int, Scalar]) -> SparseVector:
        """The representative of a coset supported on the coset indices."""
        return {
            self.coset_indices[pos]: value
            for pos, value in coordinates.items()
            if value
        }

    def projection_matrix(self) -> ExactMatrix:
        columns = [self.project({idx: self.field.one}) for idx in range(self.ambient_dim)]
        return ExactMatrix.from_columns(self.field, columns, self.dim)


def kernel_basis(matrix: ExactMatrix) -> SubspaceBasis:
    """Basis of the null space ``{x : M x = 0}``."""
    field = matrix.field
    result = rref(matrix)
    pivot_set = set(result.pivots)
    vectors = []
    for free in range(matrix.ncols):
        if free in pivot_set:
            continue
        vector = {free: field.one}
        for row_idx, pivot in enumerate(result.pivots):
            value = result.matrix.entries.get(row_idx, {}).get(free)
            if value:
                vector[pivot] = -value
        vectors.append(vector)
    return SubspaceBasis.span(field, matrix.ncols, vectors)


def image_basis(matrix: ExactMatrix) -> SubspaceBasis:
    """Basis of the column space of ``matrix``."""
    return SubspaceBasis.span(matrix.field, matrix.nrows, matrix.columns())


def quotient_coset_basis(ambient_dim: int, sub: SubspaceBasis) -> List[int]:
    """The non-pivot coordinates of ``sub``, indexing a basis of the quotient."""
    if sub.ambient_dim != ambient_dim:
        raise ValueError(
            f"Subspace lives in dimension {sub.ambient_dim}, not {ambient_dim}"
        )
    pivots = set(sub.pivots)
    return [idx for idx in range(ambient_dim) if idx not in pivots]


def random_vector(field: FieldSpec, dim: int, rng: random.Random) -> List[Scalar]:
    """A uniformly random vector over a prime field."""
    return [field.random_element(rng) for _ in range(dim)]


def generic_vector(field: FieldSpec, dim: int, rng: random.Random) -> List[Scalar]:
    """A random vector for genericity sampling over either kind of field."""
    return [field.generic_element(rng) for _ in range(dim)]


def random_linear_combo(
    field: FieldSpec, rows: Sequence[Mapping[int, Scalar]], rng: random.Random
) -> SparseVector:
    """A uniformly random linear combination of ``rows`` over a prime field."""
    result: SparseVector = {}
    for row in rows:
        result = axpy(result, field.random_element(rng), row)
    return result
