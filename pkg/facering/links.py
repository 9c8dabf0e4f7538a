"""
Reductions of vertex links and the verifiers built on them.

For a vertex ``v`` and an ordered facet ``sigma = (v, s_2, ..., s_d)``, the
forms of k(K) are row-reduced so that ``theta_i = x_{s_i} + (terms off sigma)``.
Dropping every summand outside ``lk v`` from ``theta_2 .. theta_d`` gives an
l.s.o.p. ``Theta'`` for k[lk v], and the same truncation of ``theta_1 - x_v``
gives the form whose negative acts as ``x_v`` on k(lk v).  Multiplication by
``x_v`` is then an isomorphism ``k(lk v)_i -> x_v * k(K)_i``.
"""
from __future__ import annotations

import dataclasses
import functools
import logging
import operator
import random
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.rings import ring

from .complex import FaceError, SimplicialComplex
from .face_ring import (ArtinianReduction, LinearForm, Lsop, LsopError,
                        SingularMinorError, artinian_reduction, certify_lsop,
                        derived_rng, normalize_lsop, socle, trial_seeds,
                        unit_monomial, verify_lsop)
from .homology import ClassificationReport
from .linalg import (ExactMatrix, FieldSpec, Scalar, SparseVector, axpy,
                     compose, rank)
from .quotients import GENERIC, GorensteinQuotient, lefschetz_ranks, weak_lefschetz_profile
from .report import ReportInputs, VerificationReport
from .typing import Face, Monomial

logger = logging.getLogger(__name__)

#: Builds the form multiplied on a link reduction; used to force non-generic forms.
LinkFormFactory = Callable[[SimplicialComplex, random.Random], LinearForm]


def default_facet(K: SimplicialComplex, v: int) -> Face:
    """The smallest facet containing ``v``, reordered to start with ``v``."""
    for facet in K.sorted_facets:
        if v in facet:
            return (v,) + tuple(u for u in facet if u != v)
    raise FaceError(f"Vertex {v} lies in no facet")


@dataclasses.dataclass
class LinkReduction:
    """
    The Artinian reduction of ``lk v`` induced by a normalized l.s.o.p. of K.

    ``link_vertices[j]`` is the parent id of link vertex ``j``.
    """

    parent: ArtinianReduction
    vertex: int
    facet: Face
    link: SimplicialComplex
    link_vertices: Tuple[int, ...]
    lsop: Lsop
    vertex_action: LinearForm
    reduction: ArtinianReduction
    _phi: Dict[int, ExactMatrix] = dataclasses.field(default_factory=dict, repr=False, compare=False)

    @property
    def field(self) -> FieldSpec:
        return self.parent.field

    @property
    def label(self) -> str:
        return self.parent.complex.vertex_labels[self.vertex]

    @property
    def hilbert_function(self) -> Tuple[int, ...]:
        return self.reduction.hilbert_function

    def lift(self, monomial: Monomial) -> Monomial:
        """``x_v`` times a link monomial, in parent variables."""
        lifted = [0] * self.parent.n
        for position, exponent in enumerate(monomial):
            if exponent:
                lifted[self.link_vertices[position]] = exponent
        lifted[self.vertex] += 1
        return tuple(lifted)

    def ambient_phi(self, vector: Mapping[int, Scalar], i: int) -> SparseVector:
        """
        ``x_v * z`` in k(K)_{i+1} for ``z`` given in the (unreduced) monomial
        coordinates of k[lk v]_i.
        """
        if i + 1 > self.parent.d:
            return {}
        basis = self.reduction.bases[i]
        target = self.parent.bases[i + 1].index
        ambient: SparseVector = {}
        for idx, value in vector.items():
            position = target.get(self.lift(basis.monomials[idx]))
            if position is not None:
                ambient = axpy(ambient, value, {position: self.field.one})
        return self.parent.reduce(ambient, i + 1)

    def phi_matrix(self, i: int) -> ExactMatrix:
        """``phi: k(lk v)_i -> k(K)_{i+1}`` in coset coordinates."""
        if i in self._phi:
            return self._phi[i]
        field = self.field
        basis = self.reduction.bases[i]
        columns = [
            self.ambient_phi({basis.index[monomial]: field.one}, i)
            for monomial in self.reduction.standard_monomials(i)
        ]
        self._phi[i] = ExactMatrix.from_columns(field, columns, self.parent.dim(i + 1))
        return self._phi[i]

    def well_defined(self, i: int) -> bool:
        """``x_v`` kills every generator ``theta'_t * m`` of (Theta') in degree i."""
        if i == 0:
            return True
        return all(
            not self.ambient_phi(self.reduction.times_form(form, monomial), i)
            for form in self.lsop.forms
            for monomial in self.reduction.bases[i - 1].monomials
        )

    @functools.cached_property
    def _recipe_ring(self):
        ring_, *generators = ring(
            ",".join(f"z{j}" for j in range(self.link.n)), self.field.domain
        )
        images = {parent: generators[j] for j, parent in enumerate(self.link_vertices)}
        images[self.vertex] = ring_.from_dict({
            unit_monomial(self.link.n, j): value
            for j, value in self.vertex_action.sparse.items()
        })
        return ring_, images

    def recipe(self, monomial: Monomial) -> SparseVector:
        """
        A preimage of ``x_v * monomial`` under phi, in coset coordinates of
        k(lk v): ``x_v`` becomes ``-theta'_1`` and variables outside the link
        vanish.
        """
        ring_, images = self._recipe_ring
        i = sum(monomial)
        factors = []
        for variable, exponent in enumerate(monomial):
            if not exponent:
                continue
            image = images.get(variable)
            if image is None:
                return {}
            factors.append(image ** exponent)
        poly = functools.reduce(operator.mul, factors, ring_.one)
        index = self.reduction.bases[i].index
        ambient: SparseVector = {}
        for link_monomial, value in poly.items():
            position = index.get(tuple(link_monomial))
            if position is not None:
                ambient = axpy(ambient, value, {position: self.field.one})
        return self.reduction.reduce(ambient, i)


def link_reduction(
    R: ArtinianReduction, v: int, sigma: Optional[Sequence[int]] = None
) -> LinkReduction:
    """
    Build ``Theta'`` and k(lk v) from ``R``.

    ``sigma`` is an ordered facet starting with ``v`` (default: the smallest
    facet containing ``v``).

    Raises
    ------
    LsopError
        If ``Theta'`` is not an l.s.o.p. for k[lk v]; see
        :func:`resampled_link_reduction`.
    """
    K = R.complex
    if K.d < 2:
        raise ValueError("Link reductions need d >= 2")
    if not 0 <= v < K.n:
        raise FaceError(f"Unknown vertex id {v}")
    sigma = tuple(sigma) if sigma is not None else default_facet(K, v)
    if not sigma or sigma[0] != v:
        raise FaceError(f"The facet must start with vertex {K.vertex_labels[v]!r}")
    theta = normalize_lsop(K, R.lsop, sigma)
    parent = R.with_lsop(theta)

    link = K.link((v,))
    link_vertices = K.neighbors(v)
    forms = tuple(form.restricted(link_vertices) for form in theta.forms[1:])
    lsop = Lsop(forms, seed=theta.seed)
    if not verify_lsop(link, lsop):
        raise LsopError(
            f"Derived forms are not an l.s.o.p. for the link of {K.vertex_labels[v]!r}",
            seeds=[theta.seed] if theta.seed is not None else (),
        )
    vertex_action = -theta.forms[0].restricted(link_vertices)
    logger.debug(
        "Link of %s: %d vertices, derived forms %s",
        K.vertex_labels[v], link.n, [form.values() for form in forms],
    )
    return LinkReduction(
        parent=parent,
        vertex=v,
        facet=sigma,
        link=link,
        link_vertices=link_vertices,
        lsop=lsop,
        vertex_action=vertex_action,
        reduction=artinian_reduction(link, R.field, lsop),
    )


def resampled_link_reduction(
    R: ArtinianReduction, v: int, seed: int = 0, attempts: int = 3
) -> LinkReduction:
    """
    :func:`link_reduction`, redrawing the parent l.s.o.p. while the facet
    minor is singular or ``Theta'`` is not an l.s.o.p. for the link.

    Up to ``attempts`` certified forms are drawn from seeds derived from
    ``seed`` and ``v``.

    Raises
    ------
    LsopError
        When every attempt is degenerate.
    """
    try:
        return link_reduction(R, v)
    except (LsopError, SingularMinorError) as ex:
        logger.warning("Link of %s: %s; resampling", R.complex.vertex_labels[v], ex)

    K = R.complex
    rng = derived_rng(seed, f"resample-link-{v}")
    tried = []
    for _ in range(attempts):
        attempt_seed = rng.randrange(2 ** 31)
        tried.append(attempt_seed)
        try:
            theta = certify_lsop(K, R.field, attempt_seed, attempts=attempts)
            return link_reduction(artinian_reduction(K, R.field, theta), v)
        except (LsopError, SingularMinorError) as ex:
            logger.debug("Resample %d for the link of %s: %s", attempt_seed, K.vertex_labels[v], ex)
    raise LsopError(
        f"No l.s.o.p. with a usable link reduction at {K.vertex_labels[v]!r} "
        f"after {attempts} resample(s)",
        seeds=tried,
    )


def principal_ideal_dims(R: ArtinianReduction, v: int) -> Tuple[int, ...]:
    """Graded dimensions of ``(x_v)`` in degrees ``1..d+1``."""
    return tuple(rank(R.variable_map(v, i)) for i in range(R.d + 1))


def _same(field: FieldSpec, first: Mapping[int, Scalar], second: Mapping[int, Scalar]) -> bool:
    return not axpy(first, -field.one, second)


def _link_checks(
    report: VerificationReport,
    L: LinkReduction,
    classification: ClassificationReport,
) -> None:
    R = L.parent
    field = R.field
    d = R.d
    prefix = f"lk {L.label}"
    for i in range(d):
        phi = L.phi_matrix(i)
        multiplication = R.variable_map(L.vertex, i)
        phi_rank = rank(phi)
        report.check(f"{prefix}: phi well defined in degree {i}", True, L.well_defined(i))
        report.check(f"{prefix}: rank phi_{i} = dim k(lk v)_{i}", L.reduction.dim(i), phi_rank)
        joint = rank(ExactMatrix.hstack(field, [phi, multiplication], R.dim(i + 1)))
        report.check(
            f"{prefix}: image phi_{i} = x_v k(K)_{i}",
            True,
            joint == phi_rank == rank(multiplication),
        )
        round_trips = all(
            _same(
                field,
                phi.apply(L.recipe(monomial)),
                multiplication.apply({position: field.one}),
            )
            for position, monomial in enumerate(R.standard_monomials(i))
        )
        report.check(f"{prefix}: substitution recipe inverts phi in degree {i}", True, round_trips)
    report.check(
        f"{prefix}: (x_v) graded dims",
        list(L.hilbert_function) + [0],
        principal_ideal_dims(R, L.vertex),
    )
    if classification.is_homology_manifold:
        report.check(
            f"{prefix}: link socle",
            [0] * (d - 1) + [1],
            socle(L.reduction).dims,
        )


def verify_link_isomorphism(
    L: LinkReduction,
    classification: ClassificationReport,
    inputs: ReportInputs,
) -> VerificationReport:
    """``phi: k(lk v) -> x_v k(K)`` is well defined, injective and onto."""
    report = VerificationReport("link-isomorphism", inputs)
    _link_checks(report, L, classification)
    if not classification.is_orientable:
        report.note("not a connected orientable homology manifold over this field")
    report.conclude(applicable=classification.is_orientable)
    return report


def verify_all_links(
    R: ArtinianReduction,
    classification: ClassificationReport,
    inputs: ReportInputs,
    vertices: Optional[Sequence[int]] = None,
    attempts: Optional[int] = None,
) -> VerificationReport:
    """
    :func:`verify_link_isomorphism` over several vertices in one report.

    A degenerate parent l.s.o.p. is redrawn up to ``attempts`` times (default:
    the number of trials); links left without a reduction make the report
    INCONCLUSIVE.
    """
    report = VerificationReport("link-isomorphism", inputs)
    if not classification.is_pure or R.d < 2:
        report.note("link reductions need a pure complex with d >= 2")
        report.conclude(applicable=False)
        return report
    if vertices is None:
        vertices = range(R.n)
    if attempts is None:
        attempts = inputs.trials or 1
    certified = True
    for v in vertices:
        try:
            L = resampled_link_reduction(R, v, seed=inputs.seed or 0, attempts=attempts)
        except LsopError as ex:
            report.note(f"lk {R.complex.vertex_labels[v]}: {ex}")
            certified = False
            continue
        _link_checks(report, L, classification)
    if not classification.is_orientable:
        report.note("not a connected orientable homology manifold over this field")
    report.conclude(applicable=classification.is_orientable, certified=certified)
    return report


def qualifying_faces(K: SimplicialComplex) -> List[Face]:
    """Faces with ``d - 2`` vertices whose star contains every vertex of K."""
    everything = frozenset(range(K.n))
    return [
        tau for tau in K.faces(K.d - 2)
        if K.star_vertices(tau) == everything
    ]


def verify_gthm_special_case(
    Q: GorensteinQuotient,
    classification: ClassificationReport,
    inputs: ReportInputs,
) -> VerificationReport:
    """
    ``omega^(d-2): bar_1 -> bar_(d-1)`` is an isomorphism when some face with
    ``d - 2`` vertices has every vertex in its star.

    For each such face ``tau`` and ``v`` in it, the non-generic element
    ``x_v`` is checked directly.

    Raises
    ------
    ValueError
        If ``d < 3``.
    """
    R = Q.reduction
    K = R.complex
    d = K.d
    if d < 3:
        raise ValueError(f"The codimension-two face criterion needs d >= 3, got {d}")
    report = VerificationReport("codim-two-face-lefschetz", inputs)
    faces = qualifying_faces(K)
    if not faces:
        report.note(f"no face with {d - 2} vertices has every vertex in its star")
        report.conclude(hypothesis_met=False)
        return report

    field = R.field
    projection = Q.projection(d - 1)
    for tau in faces:
        name = " ".join(K.labels_of(tau))
        for v in tau:
            label = K.vertex_labels[v]
            power = compose(field, [R.variable_map(v, i) for i in range(1, d - 1)], R.dim(1))
            report.check(
                f"tau {name}: x_{label}^{d - 2} on k(K)_1 -> k(K)_{d - 1}",
                R.dim(1),
                rank(power),
            )
            report.check(
                f"tau {name}: x_{label}^{d - 2} on k(K)_1 -> bar_{d - 1}",
                R.dim(1),
                rank(projection @ power),
            )
            if d > 3:
                link = K.link((v,))
                rest = link.face_from_labels(K.labels_of(u for u in tau if u != v))
                report.check(
                    f"tau {name}: star of tau - {label} in lk {label} has every link vertex",
                    link.n,
                    len(link.star_vertices(rest)),
                )

    if field.is_small:
        report.note(f"{field} is too small for random genericity sampling")
    else:
        result = lefschetz_ranks(Q, GENERIC, 1, seed=inputs.seed or 0, trials=inputs.trials or 1)
        report.check(
            f"generic omega^{d - 2}: bar_1 -> bar_{d - 1}",
            [result.dim_source, result.dim_target],
            [result.rank, result.rank],
        )
    if not classification.is_orientable:
        report.note("not a connected orientable homology manifold over this field")
    report.conclude(applicable=classification.is_orientable)
    return report


def _link_forms(
    L: LinkReduction,
    seed: int,
    trials: int,
    link_form: Optional[LinkFormFactory],
) -> List[LinearForm]:
    rngs = [derived_rng(trial_seed, "link-omega") for trial_seed in trial_seeds(seed, trials)]
    if link_form is not None:
        return [link_form(L.link, rng) for rng in rngs]
    return [LinearForm.generic(L.field, L.link.n, rng) for rng in rngs]


def middle_link_ranks(
    L: LinkReduction,
    seed: int = 0,
    trials: int = 1,
    link_form: Optional[LinkFormFactory] = None,
) -> List[int]:
    """Per-trial ranks of ``* omega: k(lk v)_m -> k(lk v)_(m+1)``, ``m = floor((d-1)/2)``."""
    middle = (L.parent.d - 1) // 2
    return [
        rank(L.reduction.multiplication_map(form, middle))
        for form in _link_forms(L, seed, trials, link_form)
    ]


def middle_link_rank(
    L: LinkReduction,
    seed: int = 0,
    trials: int = 1,
    link_form: Optional[LinkFormFactory] = None,
) -> Tuple[int, int]:
    """
    Best rank of ``* omega: k(lk v)_m -> k(lk v)_(m+1)`` with
    ``m = floor((d-1)/2)``, and the target dimension.
    """
    middle = (L.parent.d - 1) // 2
    best = max(middle_link_ranks(L, seed, trials, link_form))
    return best, L.reduction.dim(middle + 1)


def verify_connection(
    Q: GorensteinQuotient,
    classification: ClassificationReport,
    inputs: ReportInputs,
    link_form: Optional[LinkFormFactory] = None,
) -> VerificationReport:
    """
    Surjective middle maps on at least ``n - d`` vertex links imply the weak
    Lefschetz pattern on bar-k(K).

    The premise is scanned on every vertex; the conclusion is only asserted
    when the passing count reaches ``n - d``.
    """
    report = VerificationReport("link-lefschetz-criterion", inputs)
    R = Q.reduction
    K = R.complex
    if not classification.is_orientable or K.d < 2:
        report.note("not a connected orientable homology manifold over this field")
        report.conclude(applicable=False)
        return report

    seed = inputs.seed or 0
    trials = inputs.trials or 1
    passing = 0
    certified = True
    for v in range(K.n):
        try:
            L = resampled_link_reduction(R, v, seed=seed, attempts=trials)
        except LsopError as ex:
            report.note(f"lk {K.vertex_labels[v]}: {ex}")
            certified = False
            continue
        ranks = middle_link_ranks(L, seed, trials, link_form)
        best, target = max(ranks), L.reduction.dim((K.d - 1) // 2 + 1)
        if best == target:
            passing += 1
        report.note(f"lk {L.label}: middle rank {best} of {target}")
        if len({r == target for r in ranks}) > 1:
            report.note(
                f"genericity warning: lk {L.label} middle trial ranks {ranks} disagree"
            )
    threshold = K.n - K.d
    premise = passing >= threshold
    report.check("vertices with surjective middle link map >= n - d",
                 threshold, passing, passed=premise)
    if not premise:
        report.conclude(hypothesis_met=False)
        return report

    profile = weak_lefschetz_profile(Q, GENERIC, seed=seed, trials=trials)
    report.check("weak Lefschetz pattern on bar-k(K)", True, profile.g_pattern_holds())
    for warning in profile.genericity_warnings():
        report.note(warning)
    upper = (K.d + 1) // 2
    if upper < K.d:
        forms = [
            LinearForm.generic(R.field, R.n, derived_rng(trial_seed, "omega"))
            for trial_seed in trial_seeds(seed, trials)
        ]
        ranks = [rank(R.multiplication_map(form, upper)) for form in forms]
        report.check(
            f"omega: k(K)_{upper} -> k(K)_{upper + 1} surjective", R.dim(upper + 1), max(ranks)
        )
        if len({r == R.dim(upper + 1) for r in ranks}) > 1:
            report.note(f"genericity warning: trial ranks {ranks} disagree at degree {upper}")
    if R.field.is_small:
        report.note(f"{R.field} is too small for random genericity sampling")
    report.conclude(applicable=not R.field.is_small, certified=certified)
    return report
