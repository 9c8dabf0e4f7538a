"""
`facering hvectors` prints the f-, h- and Betti vectors of a complex next to
the Hilbert functions h' of k(K) and h'' of its Gorenstein quotient.
"""
from __future__ import annotations

from typing import Optional

from ..config import RunConfig, add_run_config_arguments
from ..parse import load_complex
from ..pipeline import VectorSummary, analyze
from ..report import dump_json
from ..summary import format_table
from . import add_filename_argument, new_arg_parser

DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    add_filename_argument(argparser)
    add_run_config_arguments(argparser)
    return argparser


def format_vectors(vectors: VectorSummary) -> str:
    rows = [
        ["f", vectors.f_vector],
        ["h", vectors.h_vector],
        ["beta", vectors.betti],
        ["h'", vectors.h_prime],
        ["h''", vectors.h_double_prime],
        ["schenzel", vectors.schenzel],
    ]
    return format_table([f"{vectors.complex} over {vectors.field}", ""], rows)


def main(
    filename: str,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
) -> int:
    config = RunConfig.from_options(field=field, seed=seed, trials=trials, use_json=use_json)
    vectors = analyze(load_complex(filename), config).vectors()
    if config.use_json:
        print(dump_json(VectorSummary, vectors))
    else:
        print(format_vectors(vectors))
    return 0
