"""
`facering gorenstein` builds the quotient of k(K) by its socle below the top
degree, checks that its socle is one-dimensional in the top degree, and that
its Hilbert function h'' is symmetric.
"""
from __future__ import annotations

from typing import Optional

from ..config import RunConfig, add_run_config_arguments
from ..parse import load_complex
from ..pipeline import analyze
from ..summary import format_vector
from . import add_filename_argument, emit_reports, new_arg_parser

DESCRIPTION = __doc__


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
    reports = [analysis.gorenstein_report(), analysis.symmetry_report()]
    headline = f"h'' = {format_vector(analysis.gorenstein.h2)}"
    return emit_reports(reports, config, headline)
