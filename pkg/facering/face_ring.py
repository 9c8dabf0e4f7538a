"""
The face ring k[K] degree by degree and its Artinian reductions
k(K) = k[K] / (theta_1, ..., theta_d).

Every graded piece is handled by linear algebra on monomial bases: k[K]_i is
spanned by the degree-i monomials whose support is a face, and k(K)_i is the
quotient of k[K]_i by the span of ``theta_t * m`` for monomials ``m`` of degree
``i - 1``.  Cosets are represented by standard monomials: the non-pivot
columns of the row-reduced image.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import math
import operator
import random
from typing import (Dict, Iterable, Iterator, List, Mapping, Optional,
                    Sequence, Tuple)

from sympy.polys.monomials import monomial_mul
from sympy.polys.rings import ring

from .complex import FaceError, SimplicialComplex
from .homology import (BettiVector, ClassificationReport,
                       LocalCohomologyTable, betti, classify)
from .linalg import (ExactMatrix, FieldSpec, QuotientSpace, Scalar,
                     SparseVector, SubspaceBasis, generic_vector,
                     kernel_basis, rank, rref)
from .report import ReportInputs, VerificationReport
from .typing import Face, Monomial, Self, VerifyMethod

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 3
#: Largest number of candidate columns the small-field search will try.
SEARCH_COLUMN_LIMIT = 4096


class LsopError(RuntimeError):
    """No linear system of parameters could be certified."""

    def __init__(self, message: str, seeds: Iterable[int] = ()):
        self.seeds = tuple(seeds)
        if self.seeds:
            message = f"{message} (seeds tried: {', '.join(map(str, self.seeds))})"
        super().__init__(message)


class SingularMinorError(ValueError):
    """The forms restricted to a facet's columns are not invertible."""


class NotBuchsbaumError(ValueError):
    """A formula valid for Buchsbaum complexes was requested for another complex."""

    def __init__(self, message: str, classification: Optional[ClassificationReport] = None):
        witness = classification.witness if classification is not None else None
        if witness is not None:
            message = (
                f"{message}: face {list(witness.face)}, degree {witness.degree} "
                f"({witness.reason})"
            )
        super().__init__(message)
        self.classification = classification


def compositions_of(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered ways to write ``total`` as a sum of ``parts`` positive integers."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0, *cuts, total)
        yield tuple(high - low for low, high in zip(bounds, bounds[1:]))


def support(monomial: Monomial) -> Face:
    return tuple(v for v, exponent in enumerate(monomial) if exponent)


def unit_monomial(n: int, v: int) -> Monomial:
    return tuple(1 if idx == v else 0 for idx in range(n))


@dataclasses.dataclass(frozen=True)
class MonomialBasis:
    """Degree-``i`` monomials of k[K] (face support), in decreasing lex order."""

    degree: int
    monomials: Tuple[Monomial, ...]

    @functools.cached_property
    def index(self) -> Dict[Monomial, int]:
        return {monomial: idx for idx, monomial in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)


@functools.lru_cache(maxsize=256)
def monomial_basis(K: SimplicialComplex, i: int) -> MonomialBasis:
    """
    All degree-``i`` monomials whose support is a face of ``K``.

    Their number is ``sum_j f_{j-1} * C(i-1, j-1)``.
    """
    if i < 0:
        raise ValueError(f"Degree must be nonnegative, got {i}")
    n = K.n
    if i == 0:
        return MonomialBasis(0, ((0,) * n,))
    monomials = []
    for size in range(1, min(i, K.d) + 1):
        for face in K.faces(size):
            for exponents in compositions_of(i, size):
                monomial = [0] * n
                for v, exponent in zip(face, exponents):
                    monomial[v] = exponent
                monomials.append(tuple(monomial))
    return MonomialBasis(i, tuple(sorted(monomials, reverse=True)))


@dataclasses.dataclass(frozen=True)
class LinearForm:
    """A linear form ``sum_v c_v x_v`` over a field."""

    field: FieldSpec
    coefficients: Tuple[Scalar, ...]

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> Self:
        return cls(field, (field.zero,) * n)

    @classmethod
    def variable(cls, field: FieldSpec, n: int, v: int) -> Self:
        return cls(field, tuple(field.one if idx == v else field.zero for idx in range(n)))

    @classmethod
    def from_values(cls, field: FieldSpec, values: Sequence) -> Self:
        return cls(field, tuple(field.convert(value) for value in values))

    @classmethod
    def generic(cls, field: FieldSpec, n: int, rng: random.Random) -> Self:
        return cls(field, tuple(generic_vector(field, n, rng)))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @functools.cached_property
    def sparse(self) -> SparseVector:
        return {v: value for v, value in enumerate(self.coefficients) if value}

    def __add__(self, other: LinearForm) -> LinearForm:
        return LinearForm(
            self.field, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self) -> LinearForm:
        return LinearForm(self.field, tuple(-value for value in self.coefficients))

    def scaled(self, factor) -> LinearForm:
        factor = self.field.convert(factor)
        return LinearForm(self.field, tuple(factor * value for value in self.coefficients))

    def restricted(self, vertices: Sequence[int]) -> LinearForm:
        """This form on the variables ``vertices`` only, re-indexed 0..len-1."""
        return LinearForm(self.field, tuple(self.coefficients[v] for v in vertices))

    def values(self) -> List:
        return [self.field.to_python(value) for value in self.coefficients]


@dataclasses.dataclass(frozen=True)
class Lsop:
    """
    Candidate linear system of parameters.

    ``normalized_facet`` is set when the forms have been row-reduced so that
    ``theta_i = x_{sigma_i} + (terms outside sigma)`` for that ordered facet.
    """

    forms: Tuple[LinearForm, ...]
    seed: Optional[int] = None
    normalized_facet: Optional[Face] = None

    @property
    def field(self) -> FieldSpec:
        return self.forms[0].field

    @property
    def n(self) -> int:
        return self.forms[0].n if self.forms else 0

    def matrix(self) -> ExactMatrix:
        rows = [form.sparse for form in self.forms]
        return ExactMatrix.from_sparse_rows(self.field, rows, self.n)

    @classmethod
    def from_matrix(
        cls,
        matrix: ExactMatrix,
        seed: Optional[int] = None,
        normalized_facet: Optional[Face] = None,
    ) -> Self:
        field = matrix.field
        forms = tuple(
            LinearForm(field, tuple(
                matrix.entries.get(row, {}).get(col, field.zero)
                for col in range(matrix.ncols)
            ))
            for row in range(matrix.nrows)
        )
        return cls(forms, seed=seed, normalized_facet=normalized_facet)


def sample_lsop(
    K: SimplicialComplex,
    field: FieldSpec,
    rng: random.Random,
    seed: Optional[int] = None,
) -> Lsop:
    """``d`` random linear forms (not yet verified)."""
    return Lsop(
        tuple(LinearForm.generic(field, K.n, rng) for _ in range(K.d)),
        seed=seed,
    )


def facet_criterion(K: SimplicialComplex, theta: Lsop) -> bool:
    """Every facet's columns of the form matrix have full column rank."""
    matrix = theta.matrix()
    for facet in K.sorted_facets:
        columns = [matrix.column(v) for v in facet]
        minor = ExactMatrix.from_columns(theta.field, columns, matrix.nrows)
        if rank(minor) < len(facet):
            return False
    return True


def eliminated_hilbert_function(
    K: SimplicialComplex, theta: Lsop, degrees: Optional[Iterable[int]] = None
) -> Dict[int, int]:
    """
    ``{i: dim k(K)_i}`` through the eliminated presentation.

    The pivot variables of the row-reduced forms are substituted by linear
    forms in the remaining variables ``y``, so that k(K) becomes
    ``k[y] / phi(I_K)``; ``(I_K)_i`` is spanned by the degree-i monomials with
    non-face support.
    """
    field = theta.field
    n = K.n
    if degrees is None:
        degrees = range(K.d + 2)
    degrees = list(degrees)

    reduced = rref(theta.matrix())
    pivot_set = set(reduced.pivots)
    free = [v for v in range(n) if v not in pivot_set]
    if not free:
        return {i: int(i == 0) for i in degrees}

    position = {v: pos for pos, v in enumerate(free)}
    ring_, *_ = ring(",".join(f"y{v}" for v in free), field.domain)

    def unit(v: int) -> Monomial:
        return unit_monomial(len(free), position[v])

    images = {v: ring_.from_dict({unit(v): field.one}) for v in free}
    for row_idx, pivot in enumerate(reduced.pivots):
        row = reduced.matrix.entries.get(row_idx, {})
        images[pivot] = ring_.from_dict({
            unit(col): -value for col, value in row.items() if col != pivot
        })

    result = {}
    for i in degrees:
        ambient = math.comb(len(free) + i - 1, i) if i >= 0 else 0
        if i <= 0:
            result[i] = ambient
            continue
        index: Dict[Monomial, int] = {}
        rows = []
        for variables in itertools.combinations_with_replacement(range(n), i):
            if K.is_face(set(variables)):
                continue
            poly = functools.reduce(operator.mul, (images[v] for v in variables), ring_.one)
            row = {}
            for monomial, value in poly.items():
                row[index.setdefault(monomial, len(index))] = value
            rows.append(row)
        generated = rank(ExactMatrix.from_sparse_rows(field, rows, ambient)) if rows else 0
        result[i] = ambient - generated
    return result


def verify_lsop(
    K: SimplicialComplex, theta: Lsop, method: VerifyMethod = "vanishing"
) -> bool:
    """
    Whether ``theta`` is a linear system of parameters for k[K].

    ``vanishing`` accepts iff ``dim k(K)_{d+1} = 0``; ``facets`` accepts iff
    every facet's minor has full rank.
    """
    if len(theta.forms) != K.d or theta.n != K.n:
        return False
    if method == "facets":
        return facet_criterion(K, theta)
    if method != "vanishing":
        raise ValueError(f"Unknown verification method {method!r}")
    top = K.d + 1
    return eliminated_hilbert_function(K, theta, [top])[top] == 0


def search_lsop(
    K: SimplicialComplex,
    field: FieldSpec,
    rng: random.Random,
    seed: Optional[int] = None,
) -> Optional[Lsop]:
    """
    Backtracking search for an l.s.o.p. over a small prime field.

    Columns of the form matrix are assigned vertex by vertex (candidates in a
    seeded random order); a facet is checked as soon as its last vertex is
    assigned.  Returns None when no l.s.o.p. exists over the field.
    """
    d, n, p = K.d, K.n, field.p
    if p is None or p ** d > SEARCH_COLUMN_LIMIT:
        return None
    candidates = [
        vector for vector in itertools.product(range(p), repeat=d) if any(vector)
    ]
    rng.shuffle(candidates)
    closing: Dict[int, List[Face]] = {}
    for facet in K.sorted_facets:
        closing.setdefault(facet[-1], []).append(facet)

    columns: List[Optional[Tuple[int, ...]]] = [None] * n

    def independent(facet: Face) -> bool:
        minor = ExactMatrix.from_columns(
            field,
            [{row: field.convert(value) for row, value in enumerate(columns[v]) if value}
             for v in facet],
            d,
        )
        return rank(minor) == len(facet)

    def assign(v: int) -> bool:
        if v == n:
            return True
        for candidate in candidates:
            columns[v] = candidate
            if all(independent(facet) for facet in closing.get(v, ())):
                if assign(v + 1):
                    return True
        columns[v] = None
        return False

    if not assign(0):
        return None
    rows = [[columns[v][row] for v in range(n)] for row in range(d)]
    forms = tuple(LinearForm.from_values(field, row) for row in rows)
    logger.debug("Found an l.s.o.p. over %s by search", field)
    return Lsop(forms, seed=seed)


def certify_lsop(
    K: SimplicialComplex,
    field: FieldSpec,
    seed: int,
    attempts: int = DEFAULT_TRIALS,
) -> Lsop:
    """
    Sample and verify an l.s.o.p. from ``seed``.

    Up to ``attempts`` random draws are tried; over small prime fields a
    seeded search follows.  Raises :class:`LsopError` otherwise.
    """
    rng = random.Random(seed)
    for attempt in range(attempts):
        theta = sample_lsop(K, field, rng, seed=seed)
        if verify_lsop(K, theta):
            return theta
        logger.debug("Seed %d, attempt %d: sample is not an l.s.o.p.", seed, attempt)
    if field.is_small:
        theta = search_lsop(K, field, rng, seed=seed)
        if theta is not None and verify_lsop(K, theta):
            return theta
    raise LsopError(
        f"Could not certify a linear system of parameters over {field}", seeds=[seed]
    )


def normalize_lsop(K: SimplicialComplex, theta: Lsop, sigma: Sequence[int]) -> Lsop:
    """
    Row-reduce ``theta`` against the ordered facet ``sigma``.

    The result spans the same space and satisfies
    ``theta_i = x_{sigma_i} + sum_{j not in sigma} c_ij x_j``.

    Raises
    ------
    FaceError
        If ``sigma`` is not a facet with ``d`` vertices.
    SingularMinorError
        If the columns of ``sigma`` are not invertible; resample ``theta``.
    """
    sigma = tuple(sigma)
    if tuple(sorted(sigma)) not in K.facets or len(sigma) != K.d:
        raise FaceError(f"{list(K.labels_of(sigma))} is not a facet with {K.d} vertices")
    order = list(sigma) + [v for v in range(K.n) if v not in set(sigma)]
    permuted = theta.matrix().permute_columns(order)
    reduced = rref(permuted)
    if reduced.pivots != tuple(range(len(sigma))):
        raise SingularMinorError(
            f"Forms are singular on the columns of {list(K.labels_of(sigma))}"
        )
    restored = reduced.matrix.permute_columns(
        [order.index(v) for v in range(K.n)]
    )
    return Lsop.from_matrix(restored, seed=theta.seed, normalized_facet=sigma)


@dataclasses.dataclass
class ArtinianReduction:
    """
    k(K) = k[K] / (Theta) in degrees 0..d.

    ``quotients[i]`` is k[K]_i modulo the image of ``Theta * k[K]_{i-1}``,
    with coordinates indexed by the standard monomials of degree ``i``.
    """

    complex: SimplicialComplex
    field: FieldSpec
    lsop: Lsop
    bases: Tuple[MonomialBasis, ...]
    quotients: Tuple[QuotientSpace, ...]
    _maps: Dict = dataclasses.field(default_factory=dict, repr=False, compare=False)

    @property
    def d(self) -> int:
        return self.complex.d

    @property
    def n(self) -> int:
        return self.complex.n

    @property
    def hilbert_function(self) -> Tuple[int, ...]:
        return tuple(quotient.dim for quotient in self.quotients)

    def dim(self, i: int) -> int:
        if 0 <= i < len(self.quotients):
            return self.quotients[i].dim
        return 0

    def standard_monomials(self, i: int) -> Tuple[Monomial, ...]:
        basis = self.bases[i]
        return tuple(basis.monomials[idx] for idx in self.quotients[i].coset_indices)

    def with_lsop(self, lsop: Lsop) -> ArtinianReduction:
        """The same quotient presented by forms spanning the same space."""
        return dataclasses.replace(self, lsop=lsop, _maps=self._maps)

    def times_form(self, form: LinearForm, monomial: Monomial) -> SparseVector:
        """``form * monomial`` in the ambient coordinates of k[K] (unreduced)."""
        target = self.bases[sum(monomial) + 1].index
        result: SparseVector = {}
        for v, value in form.sparse.items():
            idx = target.get(monomial_mul(monomial, unit_monomial(self.n, v)))
            if idx is None:
                continue
            total = result.get(idx, self.field.zero) + value
            if total:
                result[idx] = total
            else:
                result.pop(idx, None)
        return result

    def reduce(self, vector: Mapping[int, Scalar], degree: int) -> SparseVector:
        """Coordinates in k(K)_degree of an ambient vector of k[K]_degree."""
        if degree > self.d:
            return {}
        return self.quotients[degree].project(vector)

    def monomial_coordinates(self, monomial: Monomial) -> SparseVector:
        degree = sum(monomial)
        if degree > self.d:
            return {}
        idx = self.bases[degree].index.get(tuple(monomial))
        if idx is None:
            return {}
        return self.reduce({idx: self.field.one}, degree)

    def multiplication_map(self, form: LinearForm, i: int) -> ExactMatrix:
        """Matrix of ``* form`` from k(K)_i to k(K)_{i+1} in coset coordinates."""
        if not 0 <= i <= self.d:
            raise ValueError(f"Degree {i} is outside 0..{self.d}")
        key = (form.coefficients, i)
        cached = self._maps.get(key)
        if cached is not None:
            return cached
        if i == self.d:
            matrix = ExactMatrix.zeros(self.field, 0, self.dim(i))
        else:
            columns = []
            for monomial in self.standard_monomials(i):
                columns.append(self.reduce(self.times_form(form, monomial), i + 1))
            matrix = ExactMatrix.from_columns(self.field, columns, self.dim(i + 1))
        self._maps[key] = matrix
        return matrix

    def variable_map(self, v: int, i: int) -> ExactMatrix:
        return self.multiplication_map(LinearForm.variable(self.field, self.n, v), i)


def artinian_reduction(K: SimplicialComplex, field: FieldSpec, theta: Lsop) -> ArtinianReduction:
    """
    Build k(K) = k[K]/(Theta) degree by degree.

    ``theta`` must already be verified as an l.s.o.p.
    """
    if theta.field != field:
        raise ValueError(f"Forms live over {theta.field}, not {field}")
    bases = [monomial_basis(K, i) for i in range(K.d + 1)]
    quotients = [QuotientSpace.of(SubspaceBasis.zero(field, 1))]
    reduction = ArtinianReduction(K, field, theta, tuple(bases), ())
    for i in range(1, K.d + 1):
        rows = [
            reduction.times_form(form, monomial)
            for form in theta.forms
            for monomial in bases[i - 1].monomials
        ]
        image = SubspaceBasis.span(field, len(bases[i]), rows)
        quotients.append(QuotientSpace.of(image))
        logger.debug(
            "Degree %d: %d monomials, image rank %d, quotient dim %d",
            i, len(bases[i]), image.dim, quotients[-1].dim,
        )
    return dataclasses.replace(reduction, quotients=tuple(quotients))


def multiplication_map(R: ArtinianReduction, form: LinearForm, i: int) -> ExactMatrix:
    return R.multiplication_map(form, i)


def trial_seeds(seed: int, trials: int) -> List[int]:
    """Per-trial seeds derived from a master seed."""
    rng = random.Random(seed)
    return [rng.randrange(2 ** 31) for _ in range(trials)]


def derived_rng(seed: int, purpose: str) -> random.Random:
    """An rng for ``purpose`` that never replays the l.s.o.p. draws of ``seed``."""
    return random.Random(f"{purpose}:{seed}")


@dataclasses.dataclass
class GenericReduction:
    """
    The retained reduction of several generic trials.

    The retained trial has the smallest Hilbert function, i.e. the largest
    image ranks; ``agrees`` is False when trials disagreed.
    """

    reduction: ArtinianReduction
    seed: int
    trials: int
    trial_seeds: Tuple[int, ...]
    hilbert_functions: Tuple[Tuple[int, ...], ...]

    @property
    def agrees(self) -> bool:
        return len(set(self.hilbert_functions)) <= 1

    def notes(self) -> List[str]:
        notes = [
            "genericity is certified by the maximum rank over "
            f"{self.trials} trial(s) from master seed {self.seed}"
        ]
        if not self.agrees:
            notes.append(
                "genericity warning: Hilbert functions differ across trials: "
                + "; ".join(str(list(hf)) for hf in self.hilbert_functions)
            )
        if self.reduction.field.is_small:
            notes.append(
                f"{self.reduction.field} is too small for random genericity sampling"
            )
        return notes


def generic_reduction(
    K: SimplicialComplex,
    field: FieldSpec,
    seed: int,
    trials: int = DEFAULT_TRIALS,
) -> GenericReduction:
    """Artinian reductions for ``trials`` certified samples; keep the smallest."""
    if trials < 1:
        raise ValueError("At least one trial is required")
    seeds = trial_seeds(seed, trials)
    reductions = []
    for trial_seed in seeds:
        theta = certify_lsop(K, field, trial_seed, attempts=trials)
        reductions.append(artinian_reduction(K, field, theta))
    hilbert_functions = tuple(reduction.hilbert_function for reduction in reductions)
    if len(set(hilbert_functions)) > 1:
        logger.warning(
            "Hilbert functions of %s differ across trials: %s", K.name or "complex",
            hilbert_functions,
        )
    best = min(range(len(reductions)), key=lambda idx: (sum(hilbert_functions[idx]), idx))
    return GenericReduction(
        reduction=reductions[best],
        seed=seed,
        trials=trials,
        trial_seeds=tuple(seeds),
        hilbert_functions=hilbert_functions,
    )


def schenzel_hilbert(
    K: SimplicialComplex,
    field: FieldSpec,
    classification: Optional[ClassificationReport] = None,
    betti_numbers: Optional[BettiVector] = None,
) -> Tuple[int, ...]:
    """
    Hilbert function of k(K) for a Buchsbaum complex from face and Betti numbers:
    ``h'_i = h_i + C(d,i) * sum_{j=1}^{i-1} (-1)^(i-j-1) beta_{j-1}``.

    Raises
    ------
    NotBuchsbaumError
        With the classification witness, when ``K`` is not Buchsbaum.
    """
    if classification is None:
        classification = classify(K, field)
    if not classification.is_buchsbaum:
        raise NotBuchsbaumError("Schenzel's formula needs a Buchsbaum complex", classification)
    if betti_numbers is None:
        betti_numbers = betti(K, field)
    d = K.d
    h = K.h_vector()
    return tuple(
        h[i] + math.comb(d, i) * sum(
            (-1) ** (i - j - 1) * betti_numbers[j - 1] for j in range(1, i)
        )
        for i in range(d + 1)
    )


@dataclasses.dataclass
class SocleDecomposition:
    """
    The graded socle of k(K): per degree, a basis of the kernel of all
    variable multiplications (in coset coordinates).
    """

    bases: Tuple[SubspaceBasis, ...]
    predicted: Optional[Tuple[int, ...]] = None

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(basis.dim for basis in self.bases)


def predicted_socle_dims(d: int, betti_numbers: BettiVector) -> Tuple[int, ...]:
    """``C(d,i) * beta_{i-1}`` per degree; the top degree is ``beta_{d-1}``."""
    return tuple(math.comb(d, i) * betti_numbers[i - 1] for i in range(d + 1))


def socle(R: ArtinianReduction, betti_numbers: Optional[BettiVector] = None) -> SocleDecomposition:
    """Kernel of ``k(K)_i -> sum_v k(K)_{i+1}``; all of k(K)_d in the top degree."""
    bases = []
    for i in range(R.d + 1):
        if i == R.d:
            bases.append(SubspaceBasis.full(R.field, R.dim(i)))
            continue
        stacked = ExactMatrix.vstack(
            R.field,
            [R.variable_map(v, i) for v in range(R.n)],
            R.dim(i),
        )
        bases.append(kernel_basis(stacked))
    predicted = None
    if betti_numbers is not None:
        predicted = predicted_socle_dims(R.d, betti_numbers)
    return SocleDecomposition(tuple(bases), predicted)


def decomposition_socle_dims(
    d: int, table: LocalCohomologyTable, top_extra: int = 0
) -> Tuple[int, ...]:
    """
    Socle dimensions assembled from local cohomology:
    ``sum_{j<d} C(d,j) dim H^j(k[K])_{i-j}``, plus ``top_extra`` in degree d.
    """
    result = []
    for i in range(d + 1):
        total = 0
        for j in range(d):
            degree = i - j
            if degree > 0:
                continue
            total += math.comb(d, j) * table.dim(j, degree)
        if i == d:
            total += top_extra
        result.append(total)
    return tuple(result)


def top_module_dims(socle_: SocleDecomposition, table: LocalCohomologyTable) -> Tuple[int, ...]:
    """
    What the local cohomology part leaves of each socle degree: ``dim S_{i-d}``
    for the submodule S of Soc H^d(k[K]).
    """
    d = len(socle_.bases) - 1
    assembled = decomposition_socle_dims(d, table)
    return tuple(observed - part for observed, part in zip(socle_.dims, assembled))


def verify_schenzel(
    R: ArtinianReduction,
    classification: ClassificationReport,
    betti_numbers: BettiVector,
    inputs: ReportInputs,
) -> VerificationReport:
    """Direct Hilbert function against Schenzel's formula and the eliminated presentation."""
    report = VerificationReport("schenzel-hilbert", inputs)
    K = R.complex
    report.check("dim k(K)_1 = n - d", K.n - K.d, R.dim(1))
    eliminated = eliminated_hilbert_function(K, R.lsop)
    report.check(
        "eliminated presentation",
        list(R.hilbert_function) + [0],
        [eliminated[i] for i in range(K.d + 2)],
    )
    if not classification.is_buchsbaum:
        report.note("complex is not Buchsbaum; the formula is not asserted")
        report.conclude(applicable=False)
        return report
    expected = schenzel_hilbert(K, R.field, classification, betti_numbers)
    report.check("hilbert function", expected, R.hilbert_function)
    report.conclude()
    return report


def verify_socle(
    R: ArtinianReduction,
    socle_: SocleDecomposition,
    classification: ClassificationReport,
    betti_numbers: BettiVector,
    inputs: ReportInputs,
) -> VerificationReport:
    """
    Socle dimensions of k(K) for connected orientable homology manifolds:
    ``C(d,i) * beta_{i-1}`` below the top degree and 1 on top.
    """
    report = VerificationReport("socle-dimensions", inputs)
    d = R.d
    dims = socle_.dims
    report.check("top degree is all socle", R.dim(d), dims[d])
    report.check("top socle = beta_{d-1}", betti_numbers[d - 1], dims[d])
    report.check("socle dims", predicted_socle_dims(d, betti_numbers), dims)
    report.conclude(applicable=classification.is_orientable)
    return report


def verify_socle_decomposition(
    socle_: SocleDecomposition,
    classification: ClassificationReport,
    betti_numbers: BettiVector,
    table: Optional[LocalCohomologyTable],
    inputs: ReportInputs,
) -> VerificationReport:
    """
    Socle dimensions of a Buchsbaum complex against local cohomology.

    Below the top degree the socle is ``sum_{j<d} C(d,j) H^j(k[K])_{i-j}`` plus
    a piece ``S_{i-d}`` of Soc H^d(k[K]).  Schenzel's formula fixes
    ``dim S_0 = beta_{d-1}``; for connected orientable homology manifolds S is
    one-dimensional and sits in degree 0.
    """
    report = VerificationReport("socle-decomposition", inputs)
    if not classification.is_buchsbaum or table is None:
        report.note("complex is not Buchsbaum; no decomposition is asserted")
        report.conclude(applicable=False)
        return report

    d = len(socle_.bases) - 1
    dims = socle_.dims
    top = top_module_dims(socle_, table)
    report.check("dim S_0 = beta_{d-1}", betti_numbers[d - 1], top[d])
    for i in range(d):
        bound = table.dim(d, i - d)
        report.check(
            f"S_{i - d} fits in H^{d}(k[K])_{i - d}",
            f"0..{bound}",
            top[i],
            passed=0 <= top[i] <= bound,
        )

    if classification.is_orientable:
        report.check(
            "socle dims = local cohomology part + [i=d]",
            decomposition_socle_dims(d, table, top_extra=1),
            dims,
        )
        collapsed = all(
            table.dim(j, degree) == (betti_numbers[j - 1] if degree == 0 else 0)
            for j in range(1, d)
            for degree in range(table.window[0], table.window[1] + 1)
        )
        report.check("H^j(k[K]) concentrated in degree 0 for j < d", True, collapsed)
        report.check(
            "H^d(k[K])_0 has beta_{d-1} from the empty face",
            True,
            table.dim(d, 0) >= betti_numbers[d - 1],
        )
    report.conclude()
    return report
