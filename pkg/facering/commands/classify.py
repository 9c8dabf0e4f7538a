"""
`facering classify` reports whether a complex is Buchsbaum, a homology
manifold or sphere, and orientable over a field, with its f-, h- and Betti
numbers.
"""
from __future__ import annotations

import dataclasses
import logging
from typing import List, Optional

from ..config import RunConfig, add_run_config_arguments
from ..homology import ClassificationReport, betti, classify
from ..parse import load_complex
from ..report import dump_json
from ..summary import text_outline
from . import add_filename_argument, new_arg_parser

DESCRIPTION = __doc__

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class ClassifyResult:
    complex: str
    classification: ClassificationReport
    f_vector: List[int]
    h_vector: List[int]
    betti: List[int]


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
    K = load_complex(filename)
    result = ClassifyResult(
        complex=K.name,
        classification=classify(K, config.field),
        f_vector=list(K.f_vector().entries),
        h_vector=list(K.h_vector().entries),
        betti=list(betti(K, config.field).values),
    )
    if config.use_json:
        print(dump_json(ClassifyResult, result))
    else:
        print(text_outline(result))
    return 0
