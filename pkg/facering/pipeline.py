"""
One complex, one configuration: the shared computations behind every command.
"""
from __future__ import annotations

import dataclasses
import functools
import logging
from typing import List, Optional, Sequence

from .complex import SimplicialComplex
from .config import RunConfig
from .face_ring import (GenericReduction, SocleDecomposition, generic_reduction,
                        schenzel_hilbert, socle, verify_schenzel, verify_socle,
                        verify_socle_decomposition)
from .homology import (BettiVector, ClassificationReport, LocalCohomologyTable,
                       betti, classify, local_cohomology_dims)
from .links import verify_all_links, verify_connection, verify_gthm_special_case
from .quotients import (GorensteinQuotient, g_mvector_consequences,
                        gorenstein_quotient, verify_gorenstein,
                        verify_lefschetz, verify_symmetry)
from .report import ReportInputs, VerificationReport

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class VectorSummary:
    """Face numbers, Betti numbers and the Hilbert functions of k(K) and bar-k(K)."""

    complex: str
    field: str
    f_vector: List[int]
    h_vector: List[int]
    betti: List[int]
    h_prime: List[int]
    h_double_prime: List[int]
    schenzel: Optional[List[int]] = None


@dataclasses.dataclass
class Analysis:
    """
    Lazily computed invariants of ``complex`` under ``config``.

    Each property is computed once; reports built from the same analysis
    share one generic reduction.
    """

    complex: SimplicialComplex
    config: RunConfig

    @property
    def field(self):
        return self.config.field

    @property
    def name(self) -> str:
        return self.complex.name or "complex"

    @property
    def inputs(self) -> ReportInputs:
        return self.config.inputs(self.name)

    @functools.cached_property
    def classification(self) -> ClassificationReport:
        return classify(self.complex, self.field)

    @functools.cached_property
    def betti(self) -> BettiVector:
        return betti(self.complex, self.field)

    @functools.cached_property
    def generic(self) -> GenericReduction:
        logger.debug("Sampling %d generic reductions of %s", self.config.trials, self.name)
        return generic_reduction(self.complex, self.field, self.config.seed, self.config.trials)

    @property
    def reduction(self):
        return self.generic.reduction

    @functools.cached_property
    def socle(self) -> SocleDecomposition:
        return socle(self.reduction, self.betti)

    @functools.cached_property
    def gorenstein(self) -> GorensteinQuotient:
        return gorenstein_quotient(self.reduction, self.socle)

    def _finish(self, report: VerificationReport) -> VerificationReport:
        for note in self.generic.notes():
            report.note(note)
        return report

    def vectors(self) -> VectorSummary:
        schenzel = None
        if self.classification.is_buchsbaum:
            schenzel = list(schenzel_hilbert(
                self.complex, self.field, self.classification, self.betti
            ))
        return VectorSummary(
            complex=self.name,
            field=str(self.field),
            f_vector=list(self.complex.f_vector().entries),
            h_vector=list(self.complex.h_vector().entries),
            betti=list(self.betti.values),
            h_prime=list(self.reduction.hilbert_function),
            h_double_prime=list(self.gorenstein.h2),
            schenzel=schenzel,
        )

    def schenzel_report(self) -> VerificationReport:
        return self._finish(verify_schenzel(
            self.reduction, self.classification, self.betti, self.inputs
        ))

    @functools.cached_property
    def local_cohomology(self) -> Optional[LocalCohomologyTable]:
        if not self.classification.is_buchsbaum:
            return None
        return local_cohomology_dims(self.complex, self.field)

    def socle_report(self) -> VerificationReport:
        return self._finish(verify_socle(
            self.reduction, self.socle, self.classification, self.betti, self.inputs
        ))

    def decomposition_report(self) -> VerificationReport:
        return self._finish(verify_socle_decomposition(
            self.socle, self.classification, self.betti, self.local_cohomology, self.inputs
        ))

    def gorenstein_report(self) -> VerificationReport:
        return self._finish(verify_gorenstein(self.gorenstein, self.classification, self.inputs))

    def symmetry_report(self) -> VerificationReport:
        return self._finish(verify_symmetry(
            self.gorenstein, self.classification, self.betti, self.inputs
        ))

    def lefschetz_report(self, degrees: Optional[Sequence[int]] = None) -> VerificationReport:
        return self._finish(verify_lefschetz(
            self.gorenstein, self.classification, self.inputs, degrees=degrees
        ))

    def mvector_report(self) -> VerificationReport:
        return self._finish(g_mvector_consequences(
            self.gorenstein, self.betti, self.inputs, self.classification
        ))

    def link_report(self, vertices: Optional[Sequence[int]] = None) -> VerificationReport:
        return self._finish(verify_all_links(
            self.reduction, self.classification, self.inputs, vertices
        ))

    def special_case_report(self) -> VerificationReport:
        return self._finish(verify_gthm_special_case(
            self.gorenstein, self.classification, self.inputs
        ))

    def connection_report(self) -> VerificationReport:
        return self._finish(verify_connection(self.gorenstein, self.classification, self.inputs))

    def suite(self) -> List[VerificationReport]:
        """Every verifier that applies to a complex of this dimension."""
        reports = [
            self.schenzel_report(),
            self.socle_report(),
            self.decomposition_report(),
            self.gorenstein_report(),
            self.symmetry_report(),
            self.mvector_report(),
        ]
        if self.complex.d >= 2 and self.classification.is_pure:
            reports.append(self.link_report())
            reports.append(self.connection_report())
        if self.complex.d >= 3:
            reports.append(self.special_case_report())
        if not self.field.is_small:
            reports.append(self.lefschetz_report())
        return reports


def analyze(K: SimplicialComplex, config: Optional[RunConfig] = None) -> Analysis:
    return Analysis(K, config or RunConfig())
