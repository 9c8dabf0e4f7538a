"""
`facering gcheck` runs the two link-based criteria for the manifold
g-conjecture: the codimension-two face criterion (d >= 3) and the
surjective-middle-link criterion.
"""
from __future__ import annotations

import logging
from typing import Optional

from ..config import RunConfig, add_run_config_arguments
from ..links import qualifying_faces
from ..parse import load_complex
from ..pipeline import analyze
from . import add_filename_argument, emit_reports, new_arg_parser

DESCRIPTION = __doc__

logger = logging.getLogger(__name__)


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    add_filename_argument(argparser)
    add_run_config_arguments(argparser)
    return argparser


def main(
    filename: str,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
) -> int:
    config = RunConfig.from_options(field=field, seed=seed, trials=trials, use_json=use_json)
    analysis = analyze(load_complex(filename), config)
    K = analysis.complex
    reports = []
    headline = None
    if K.d >= 3:
        special = analysis.special_case_report()
        reports.append(special)
        faces = qualifying_faces(K)
        headline = (
            f"faces with {K.d - 2} vertices and every vertex in the star: "
            f"{len(faces)} -- {special.verdict}"
        )
    else:
        logger.info("Skipping the codimension-two face criterion for d = %d", K.d)
    reports.append(analysis.connection_report())
    return emit_reports(reports, config, headline)
