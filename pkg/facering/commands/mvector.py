"""
`facering mvector` tests Macaulay's conditions on an integer sequence.
"""
from __future__ import annotations

import dataclasses
from typing import List

from ..macaulay import MVectorResult, check_mvector
from ..report import dump_json
from . import new_arg_parser

DESCRIPTION = __doc__


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    argparser.add_argument(
        "sequence",
        type=int,
        nargs="+",
        help="The sequence, e.g. 1 3 6 10",
    )
    argparser.add_argument(
        "--json",
        dest="use_json",
        action="store_true",
        help="Output JSON",
    )
    return argparser


def main(sequence: List[int], use_json: bool = False) -> int:
    result = check_mvector(sequence)
    if use_json:
        print(dump_json(MVectorResult, dataclasses.replace(result, sequence=tuple(sequence))))
    else:
        print(result.describe())
    return 0 if result else 1
