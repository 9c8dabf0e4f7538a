"""
Subcommands of the ``facering`` entry point.

Each module provides ``build_arg_parser(argparser=None)`` and
``main(**kwargs) -> int``, where the integer is the process exit code.
"""
from __future__ import annotations

import argparse
from typing import List, Optional

from ..config import RunConfig
from ..report import VerificationReport, dump_json, exit_code
from ..summary import format_report


def new_arg_parser(argparser: Optional[argparse.ArgumentParser], description: str):
    if argparser is None:
        argparser = argparse.ArgumentParser()

    argparser.description = description
    argparser.formatter_class = argparse.RawTextHelpFormatter
    return argparser


def add_filename_argument(argparser: argparse.ArgumentParser) -> None:
    argparser.add_argument(
        "filename",
        type=str,
        help="Path to a .cplx facet-list file",
    )


def emit_reports(
    reports: List[VerificationReport],
    config: RunConfig,
    headline: Optional[str] = None,
) -> int:
    """Print reports as text (or JSON) and return the exit code."""
    if config.use_json:
        print(dump_json(List[VerificationReport], reports))
    else:
        if headline:
            print(headline)
        for report in reports:
            print(format_report(report))
    return exit_code(reports)
