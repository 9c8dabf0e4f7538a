"""
`facering lefschetz` checks generic Lefschetz elements on the Gorenstein
quotient: ranks of omega^(d-2i) and of single multiplication steps.
"""
from __future__ import annotations

from typing import List, Optional

from ..config import ConfigError, RunConfig, add_run_config_arguments
from ..parse import load_complex
from ..pipeline import analyze
from . import add_filename_argument, emit_reports, new_arg_parser

DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    add_filename_argument(argparser)
    add_run_config_arguments(argparser)
    argparser.add_argument(
        "-i",
        "--degree",
        dest="degrees",
        type=int,
        action="append",
        help="Degree i of omega^(d-2i): bar_i -> bar_(d-i); repeatable (default: all)",
    )
    return argparser


def main(
    filename: str,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
    degrees: Optional[List[int]] = None,
) -> int:
    config = RunConfig.from_options(field=field, seed=seed, trials=trials, use_json=use_json)
    analysis = analyze(load_complex(filename), config)
    d = analysis.complex.d
    for i in degrees or ():
        if not 0 <= 2 * i <= d:
            raise ConfigError(f"Lefschetz degree must satisfy 0 <= 2i <= {d}, got {i}")
    return emit_reports([analysis.lefschetz_report(degrees)], config)
