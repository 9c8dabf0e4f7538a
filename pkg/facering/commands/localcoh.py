"""
`facering localcoh` tabulates dim H^j(k[K])_m of the local cohomology of the
face ring, assembled from relative cohomology of (K, cost sigma).
"""
from __future__ import annotations

from typing import Optional

from ..config import RunConfig, add_run_config_arguments
from ..homology import LocalCohomologyTable, local_cohomology_dims
from ..parse import load_complex
from ..report import dump_json
from ..summary import format_table
from . import add_filename_argument, new_arg_parser

DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    add_filename_argument(argparser)
    add_run_config_arguments(argparser, window=True)
    argparser.add_argument(
        "-j",
        type=int,
        default=None,
        help="Only this cohomological degree (default: 0..d)",
    )
    argparser.add_argument(
        "--relative",
        action="store_true",
        help="Also list the nonzero dim H^i(K, cost sigma)",
    )
    return argparser


def format_local_cohomology(table: LocalCohomologyTable, relative: bool = False) -> str:
    low, high = table.window
    degrees = list(range(low, high + 1))
    js = sorted({entry.j for entry in table.entries})
    rows = [[f"H^{j}"] + [table.dim(j, m) for m in degrees] for j in js]
    text = format_table(["j \\ m"] + [str(m) for m in degrees], rows)
    if relative:
        lines = [
            f"H^{entry.degree}(K, cost {{{' '.join(entry.face)}}}) = {entry.dim}"
            for entry in table.relative
        ]
        text = "\n".join([text, ""] + lines)
    return text


def main(
    filename: str,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
    window: Optional[str] = None,
    j: Optional[int] = None,
    relative: bool = False,
) -> int:
    config = RunConfig.from_options(
        field=field, seed=seed, trials=trials, window=window, use_json=use_json
    )
    K = load_complex(filename)
    table = local_cohomology_dims(K, config.field, j=j, window=config.window)
    if config.use_json:
        print(dump_json(LocalCohomologyTable, table))
    else:
        print(format_local_cohomology(table, relative=relative))
    return 0
