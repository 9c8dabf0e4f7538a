"""
`facering linkiso` checks that multiplication by x_v maps k(lk v) isomorphically
onto the principal ideal (x_v) of k(K), one degree up.
"""
from __future__ import annotations

from typing import List, Optional

from ..config import RunConfig, add_run_config_arguments
from ..parse import load_complex
from ..pipeline import analyze
from . import add_filename_argument, emit_reports, new_arg_parser

DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    add_filename_argument(argparser)
    add_run_config_arguments(argparser)
    argparser.add_argument(
        "-v",
        "--vertex",
        dest="vertices",
        type=str,
        action="append",
        help="Vertex label to check; repeatable (default: every vertex)",
    )
    return argparser


def main(
    filename: str,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
    vertices: Optional[List[str]] = None,
) -> int:
    config = RunConfig.from_options(field=field, seed=seed, trials=trials, use_json=use_json)
    K = load_complex(filename)
    ids = None if not vertices else [K.vertex_id(label) for label in vertices]
    analysis = analyze(K, config)
    return emit_reports([analysis.link_report(ids)], config)
