"""
Quotients of k(K) by parts of its socle, and the rank checks run on them.

``truncated_quotient(R, i)`` divides by the socle in degrees ``0..i``;
``gorenstein_quotient(R)`` is the case ``i = d - 1``, the quotient by every
socle element below the top degree.
"""
from __future__ import annotations

import dataclasses
import logging
import math
from typing import List, Optional, Sequence, Tuple

from .complex import SimplicialComplex
from .face_ring import (ArtinianReduction, LinearForm, SocleDecomposition,
                        derived_rng, schenzel_hilbert, socle,
                        trial_seeds)
from .homology import BettiVector, ClassificationReport
from .linalg import (ExactMatrix, FieldSpec, QuotientSpace, SubspaceBasis,
                     compose, kernel_basis, rank)
from .macaulay import check_mvector
from .report import ReportInputs, VerificationReport

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class TruncatedQuotient:
    """
    k(K, level) = k(K) / (Soc_0 + ... + Soc_level).

    ``quotients[i]`` presents the degree-``i`` piece in the coset
    coordinates of k(K)_i.
    """

    reduction: ArtinianReduction
    socle: SocleDecomposition
    level: int
    quotients: Tuple[QuotientSpace, ...]

    @property
    def d(self) -> int:
        return self.reduction.d

    @property
    def field(self) -> FieldSpec:
        return self.reduction.field

    @property
    def complex(self) -> SimplicialComplex:
        return self.reduction.complex

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(quotient.dim for quotient in self.quotients)

    def dim(self, i: int) -> int:
        if 0 <= i < len(self.quotients):
            return self.quotients[i].dim
        return 0

    def projection(self, i: int) -> ExactMatrix:
        """k(K)_i onto the degree-i piece of this quotient."""
        return self.quotients[i].projection_matrix()

    def multiplication_map(self, form: LinearForm, i: int) -> ExactMatrix:
        """Matrix of ``* form`` between degrees ``i`` and ``i + 1`` of the quotient."""
        if i >= self.d:
            return ExactMatrix.zeros(self.field, 0, self.dim(i))
        ambient = self.reduction.multiplication_map(form, i)
        source, target = self.quotients[i], self.quotients[i + 1]
        columns = [
            target.project(ambient.apply(source.lift({pos: self.field.one})))
            for pos in range(source.dim)
        ]
        return ExactMatrix.from_columns(self.field, columns, target.dim)

    def socle_dims(self) -> Tuple[int, ...]:
        """Socle of the quotient: kernel of all variable maps; everything on top."""
        result = []
        n = self.reduction.n
        for i in range(self.d + 1):
            if i == self.d:
                result.append(self.dim(i))
                continue
            stacked = ExactMatrix.vstack(
                self.field,
                [self.multiplication_map(LinearForm.variable(self.field, n, v), i)
                 for v in range(n)],
                self.dim(i),
            )
            result.append(kernel_basis(stacked).dim)
        return tuple(result)


def truncated_quotient(
    R: ArtinianReduction, i: int, socle_: Optional[SocleDecomposition] = None
) -> TruncatedQuotient:
    """The quotient of k(K) by its socle in degrees ``0..i`` (``0 <= i <= d - 1``)."""
    if not 0 <= i <= R.d - 1:
        raise ValueError(f"Truncation level must be in 0..{R.d - 1}, got {i}")
    if socle_ is None:
        socle_ = socle(R)
    quotients = []
    for degree in range(R.d + 1):
        if degree <= i:
            sub = socle_.bases[degree]
        else:
            sub = SubspaceBasis.zero(R.field, R.dim(degree))
        quotients.append(QuotientSpace.of(sub))
    return TruncatedQuotient(R, socle_, i, tuple(quotients))


class GorensteinQuotient(TruncatedQuotient):
    """bar-k(K): k(K) modulo the socle below the top degree."""

    @property
    def h2(self) -> Tuple[int, ...]:
        """The h''-vector: Hilbert function of bar-k(K)."""
        return self.dims


def gorenstein_quotient(
    R: ArtinianReduction, socle_: Optional[SocleDecomposition] = None
) -> GorensteinQuotient:
    truncated = truncated_quotient(R, R.d - 1, socle_)
    return GorensteinQuotient(**{
        field.name: getattr(truncated, field.name)
        for field in dataclasses.fields(truncated)
    })


def verify_gorenstein(
    Q: GorensteinQuotient,
    classification: ClassificationReport,
    inputs: ReportInputs,
) -> VerificationReport:
    """The socle of bar-k(K) is one-dimensional and sits in the top degree."""
    report = VerificationReport("gorenstein-quotient", inputs)
    expected = [0] * Q.d + [1]
    report.check("bar socle dims", expected, Q.socle_dims())
    if classification.is_homology_sphere:
        report.check("I = 0 for a homology sphere", list(Q.reduction.hilbert_function), Q.h2)
    if not classification.is_orientable:
        report.note("not a connected orientable homology manifold over this field")
    report.conclude(applicable=classification.is_orientable)
    return report


def predicted_h2(
    Q: GorensteinQuotient, classification: ClassificationReport, betti_numbers: BettiVector
) -> Tuple[int, ...]:
    """``h'_i - C(d,i) beta_{i-1}`` below the top degree; ``h'_d`` on top."""
    d = Q.d
    h1 = schenzel_hilbert(Q.complex, Q.field, classification, betti_numbers)
    return tuple(
        h1[i] - (math.comb(d, i) * betti_numbers[i - 1] if 0 < i < d else 0)
        for i in range(d + 1)
    )


def verify_symmetry(
    Q: GorensteinQuotient,
    classification: ClassificationReport,
    betti_numbers: BettiVector,
    inputs: ReportInputs,
) -> VerificationReport:
    """``h''_i = h''_{d-i}``, and h'' agrees with the formula prediction."""
    report = VerificationReport("hilbert-symmetry", inputs)
    h2 = Q.h2
    d = Q.d
    for i in range(d // 2 + 1):
        report.check(f"h''_{i} = h''_{d - i}", h2[i], h2[d - i])
    if classification.is_orientable:
        report.check("h'' from Schenzel and socle formulas",
                     predicted_h2(Q, classification, betti_numbers), h2)
    else:
        report.note("not a connected orientable homology manifold over this field")
    report.conclude(applicable=classification.is_orientable)
    return report


GENERIC = None


@dataclasses.dataclass
class LefschetzRanks:
    """Rank of ``* omega^(d-2i)`` from degree ``i`` to ``d - i`` of bar-k(K)."""

    i: int
    rank: int
    dim_source: int
    dim_target: int
    trial_ranks: List[int]

    @property
    def is_isomorphism(self) -> bool:
        return self.rank == self.dim_source == self.dim_target

    @property
    def trials_agree(self) -> bool:
        verdicts = {
            rank == self.dim_source == self.dim_target for rank in self.trial_ranks
        }
        return len(verdicts) <= 1


def _forms(
    Q: TruncatedQuotient,
    omega: Optional[LinearForm],
    seed: int,
    trials: int,
) -> List[LinearForm]:
    if omega is not None:
        return [omega]
    return [
        LinearForm.generic(Q.field, Q.reduction.n, derived_rng(trial_seed, "omega"))
        for trial_seed in trial_seeds(seed, trials)
    ]


def power_map(Q: TruncatedQuotient, omega: LinearForm, i: int, j: int) -> ExactMatrix:
    """``* omega^(j-i)`` from degree ``i`` to degree ``j`` of the quotient."""
    steps = [Q.multiplication_map(omega, degree) for degree in range(i, j)]
    return compose(Q.field, steps, Q.dim(i))


def lefschetz_ranks(
    Q: TruncatedQuotient,
    omega: Optional[LinearForm] = GENERIC,
    i: int = 1,
    seed: int = 0,
    trials: int = 3,
) -> LefschetzRanks:
    """
    Rank of ``omega^(d-2i)``: bar_i -> bar_(d-i), composed step by step.

    With ``omega = GENERIC``, ``trials`` random forms are drawn from ``seed``
    and the maximum rank is kept.
    """
    d = Q.d
    if not 0 <= 2 * i <= d:
        raise ValueError(f"Lefschetz degree must satisfy 0 <= i <= d/2, got {i}")
    ranks = [
        rank(power_map(Q, form, i, d - i))
        for form in _forms(Q, omega, seed, trials)
    ]
    return LefschetzRanks(i, max(ranks), Q.dim(i), Q.dim(d - i), ranks)


@dataclasses.dataclass
class LefschetzStep:
    degree: int
    rank: int
    dim_source: int
    dim_target: int
    trial_ranks: List[int] = dataclasses.field(default_factory=list)

    @property
    def injective(self) -> bool:
        return self.rank == self.dim_source

    @property
    def surjective(self) -> bool:
        return self.rank == self.dim_target

    @property
    def trials_agree(self) -> bool:
        """Every trial gives the same injective and surjective verdicts."""
        verdicts = {
            (rank == self.dim_source, rank == self.dim_target) for rank in self.trial_ranks
        }
        return len(verdicts) <= 1


@dataclasses.dataclass
class LefschetzProfile:
    """Single-step ranks of ``* omega`` through every degree."""

    d: int
    steps: List[LefschetzStep]

    @property
    def injective(self) -> List[bool]:
        return [step.injective for step in self.steps]

    @property
    def surjective(self) -> List[bool]:
        return [step.surjective for step in self.steps]

    def g_pattern_holds(self) -> bool:
        """Injective below ``floor(d/2)`` and surjective from ``ceil(d/2)`` on."""
        low, high = self.d // 2, (self.d + 1) // 2
        return all(
            (step.injective if step.degree < low else True)
            and (step.surjective if step.degree >= high else True)
            for step in self.steps
        )

    def rank(self, degree: int) -> int:
        return self.steps[degree].rank

    @property
    def trials_agree(self) -> bool:
        return all(step.trials_agree for step in self.steps)

    def genericity_warnings(self) -> List[str]:
        return [
            f"genericity warning: trial ranks {step.trial_ranks} disagree at degree {step.degree}"
            for step in self.steps
            if not step.trials_agree
        ]


def weak_lefschetz_profile(
    Q: TruncatedQuotient,
    omega: Optional[LinearForm] = GENERIC,
    seed: int = 0,
    trials: int = 3,
) -> LefschetzProfile:
    """
    Injectivity and surjectivity of ``* omega`` at each degree ``0..d-1``.

    With ``omega = GENERIC``, every step keeps its maximum rank over the
    trials and records the per-trial ranks; trials whose verdicts differ are
    reported by :meth:`LefschetzProfile.genericity_warnings`.
    """
    forms = _forms(Q, omega, seed, trials)
    steps = []
    for degree in range(Q.d):
        ranks = [rank(Q.multiplication_map(form, degree)) for form in forms]
        steps.append(
            LefschetzStep(degree, max(ranks), Q.dim(degree), Q.dim(degree + 1), ranks)
        )
    profile = LefschetzProfile(Q.d, steps)
    for warning in profile.genericity_warnings():
        logger.warning("%s", warning)
    return profile


def verify_lefschetz(
    Q: GorensteinQuotient,
    classification: ClassificationReport,
    inputs: ReportInputs,
    degrees: Optional[Sequence[int]] = None,
    omega: Optional[LinearForm] = GENERIC,
) -> VerificationReport:
    """Strong and weak Lefschetz checks on bar-k(K), plus the rank duality."""
    report = VerificationReport("lefschetz", inputs)
    d = Q.d
    seed = inputs.seed or 0
    trials = inputs.trials or 1
    if degrees is None:
        degrees = range(d // 2 + 1)
    for i in degrees:
        result = lefschetz_ranks(Q, omega, i, seed=seed, trials=trials)
        report.check(
            f"omega^{d - 2 * i}: bar_{i} -> bar_{d - i}",
            [result.dim_source, result.dim_target],
            [result.rank, result.rank],
        )
        if not result.trials_agree:
            report.note(
                f"genericity warning: trial ranks {result.trial_ranks} disagree at i = {i}"
            )
    profile = weak_lefschetz_profile(Q, omega, seed=seed, trials=trials)
    report.check("weak Lefschetz pattern", True, profile.g_pattern_holds())
    for warning in profile.genericity_warnings():
        report.note(warning)
    report.check(
        "rank duality",
        [profile.rank(d - i - 1) for i in range(d)],
        [profile.rank(i) for i in range(d)],
    )
    if Q.field.characteristic:
        report.note("characteristic-p evidence")
    if Q.field.is_small:
        report.note(f"{Q.field} is too small for random genericity sampling")
    report.conclude(applicable=classification.is_orientable and not Q.field.is_small)
    return report


def mvector_consequences(
    h2: Sequence[int],
    betti_numbers: BettiVector,
    d: int,
    inputs: ReportInputs,
    truncated_dims: Optional[Sequence[Sequence[int]]] = None,
) -> VerificationReport:
    """
    Consequences of the manifold g-conjecture for an h''-vector.

    (a) ``h''_0 <= ... <= h''_{floor(d/2)}``; (b) the g-vector is an M-vector;
    (c) for each ``i < floor(d/2)``, the g-vector cut at ``i`` and extended
    by ``h''_{i+1} - h''_i + C(d, i+1) beta_i`` is an M-vector.
    ``truncated_dims[i]``, when given, is the Hilbert function of k(K, i) and
    is compared with the entries of (c).
    """
    report = VerificationReport("mvector-consequences", inputs)
    half = d // 2
    h2 = [int(value) for value in h2]
    chain = h2[: half + 1]
    report.check(
        "h'' nondecreasing to floor(d/2)",
        True,
        all(first <= second for first, second in zip(chain, chain[1:])),
    )
    g = [chain[0]] + [second - first for first, second in zip(chain, chain[1:])]
    result = check_mvector(g)
    report.check(f"g = {g} is an M-vector", True, result.is_mvector)
    if not result:
        report.note(result.describe())
    for i in range(half):
        candidate = g[: i + 1] + [h2[i + 1] - h2[i] + math.comb(d, i + 1) * betti_numbers[i]]
        result = check_mvector(candidate)
        report.check(f"k(K, {i}) candidate {candidate} is an M-vector", True, result.is_mvector)
        if not result:
            report.note(result.describe())
        if truncated_dims is not None:
            dims = list(truncated_dims[i])
            differences = [dims[0]] + [dims[j] - dims[j - 1] for j in range(1, i + 2)]
            report.check(f"k(K, {i}) first differences", candidate, differences)
    report.conclude()
    return report


def g_mvector_consequences(
    Q: GorensteinQuotient,
    betti_numbers: BettiVector,
    inputs: ReportInputs,
    classification: Optional[ClassificationReport] = None,
) -> VerificationReport:
    """:func:`mvector_consequences` on the h''-vector of ``Q``."""
    truncated = None
    if classification is not None and classification.is_orientable:
        truncated = [
            truncated_quotient(Q.reduction, i, Q.socle).dims
            for i in range(Q.d // 2)
        ]
    report = mvector_consequences(Q.h2, betti_numbers, Q.d, inputs, truncated)
    if classification is not None and not classification.is_orientable:
        report.note("not a connected orientable homology manifold over this field")
        report.conclude(applicable=False)
    return report
