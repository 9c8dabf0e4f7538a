"""
`facering generate` writes a standard complex as a .cplx facet list.

Boundary generators take a dimension parameter; the others take .cplx paths:

    $ facering generate simplex-boundary 3
    $ facering generate disjoint-union a.cplx b.cplx
"""
from __future__ import annotations

import logging
from typing import List, Optional

from ..generators import GENERATORS, generate_from_strings
from ..parse import dump_complex, load_complex
from . import new_arg_parser

DESCRIPTION = __doc__

logger = logging.getLogger(__name__)


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    argparser.add_argument(
        "name",
        type=str,
        help=f"Generator name: {', '.join(sorted(GENERATORS))}",
    )
    argparser.add_argument(
        "params",
        type=str,
        nargs="*",
        help="Generator parameters",
    )
    argparser.add_argument(
        "-o",
        "--output",
        type=str,
        default=None,
        help="Write to this file instead of standard output",
    )
    return argparser


def main(name: str, params: Optional[List[str]] = None, output: Optional[str] = None) -> int:
    try:
        K = generate_from_strings(name, params or [], load_complex)
    except (TypeError, ValueError) as ex:
        logger.error("%s", ex)
        return 2
    command = " ".join(["facering generate", name, *(params or [])])
    text = dump_complex(K, header=f"generated by: {command}")
    if output is None:
        print(text, end="")
    else:
        with open(output, "wt", encoding="utf-8") as fp:
            fp.write(text)
        logger.info("Wrote %s to %s", K, output)
    return 0
