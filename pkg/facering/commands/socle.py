"""
`facering socle` computes the graded socle of a generic Artinian reduction
k(K), compares it with C(d,i) * beta_{i-1}, and checks it against the local
cohomology of the face ring.
"""
from __future__ import annotations

import logging
from typing import Optional

from ..config import RunConfig, add_run_config_arguments
from ..face_ring import predicted_socle_dims
from ..parse import load_complex
from ..pipeline import analyze
from ..summary import format_vector
from . import add_filename_argument, emit_reports, new_arg_parser

DESCRIPTION = __doc__

logger = logging.getLogger(__name__)


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    add_filename_argument(argparser)
    add_run_config_arguments(argparser)
    argparser.add_argument(
        "--schenzel",
        action="store_true",
        help="Also check the Hilbert function against Schenzel's formula",
    )
    return argparser


def main(
    filename: str,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
    schenzel: bool = False,
) -> int:
    config = RunConfig.from_options(field=field, seed=seed, trials=trials, use_json=use_json)
    analysis = analyze(load_complex(filename), config)
    report = analysis.socle_report()
    reports = [report, analysis.decomposition_report()]
    if schenzel:
        reports.insert(0, analysis.schenzel_report())
    predicted = predicted_socle_dims(analysis.complex.d, analysis.betti)
    headline = (
        f"Soc dims {format_vector(analysis.socle.dims)}; "
        f"predicted C(d,i)*beta[i-1]: {format_vector(predicted)} -- {report.verdict}"
    )
    return emit_reports(reports, config, headline)
