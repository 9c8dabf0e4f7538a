"""
`facering batch` runs every applicable verifier on each .cplx file of a
directory, and optionally writes one JSON report per file plus summary.json.
"""
from __future__ import annotations

import concurrent.futures
import dataclasses
import logging
import pathlib
from typing import Dict, List, Optional

from ..config import RunConfig, add_run_config_arguments
from ..homology import ClassificationReport
from ..parse import load_complex
from ..pipeline import analyze
from ..report import VerificationReport, dump_json, exit_code
from ..summary import format_table
from ..util import find_complex_files, get_file_sha256
from . import new_arg_parser

DESCRIPTION = __doc__

logger = logging.getLogger(__name__)

SUMMARY_FILENAME = "summary.json"


@dataclasses.dataclass
class BatchFileReport:
    filename: str
    sha256: str
    complex: str
    field: str
    seed: int
    trials: int
    classification: Optional[ClassificationReport] = None
    f_vector: List[int] = dataclasses.field(default_factory=list)
    h_vector: List[int] = dataclasses.field(default_factory=list)
    betti: List[int] = dataclasses.field(default_factory=list)
    reports: List[VerificationReport] = dataclasses.field(default_factory=list)
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None or exit_code(self.reports) != 0


@dataclasses.dataclass
class BatchEntry:
    filename: str
    sha256: str
    verdicts: Dict[str, str]
    error: Optional[str] = None


@dataclasses.dataclass
class BatchSummary:
    directory: str
    field: str
    seed: int
    trials: int
    files: List[BatchEntry]
    failures: List[str]


def process_file(filename: str, field: str, seed: int, trials: int) -> BatchFileReport:
    """
    Run the verification suite on one file.

    Takes primitive arguments so it can run in a worker process; errors are
    recorded on the result instead of raised.
    """
    config = RunConfig.from_options(field=field, seed=seed, trials=trials)
    path = pathlib.Path(filename)
    result = BatchFileReport(
        filename=path.name,
        sha256=get_file_sha256(path),
        complex=path.stem,
        field=str(config.field),
        seed=config.seed,
        trials=config.trials,
    )
    try:
        analysis = analyze(load_complex(path), config)
        result.classification = analysis.classification
        result.f_vector = list(analysis.complex.f_vector().entries)
        result.h_vector = list(analysis.complex.h_vector().entries)
        result.betti = list(analysis.betti.values)
        result.reports = analysis.suite()
    except Exception as ex:
        logger.exception("Failed to process %s", filename)
        result.error = f"{type(ex).__name__}: {ex}"
    return result


def summarize(directory: str, config: RunConfig, results: List[BatchFileReport]) -> BatchSummary:
    return BatchSummary(
        directory=directory,
        field=str(config.field),
        seed=config.seed,
        trials=config.trials,
        files=[
            BatchEntry(
                filename=result.filename,
                sha256=result.sha256,
                verdicts={report.theorem: str(report.verdict) for report in result.reports},
                error=result.error,
            )
            for result in results
        ],
        failures=[result.filename for result in results if result.failed],
    )


def format_summary(summary: BatchSummary) -> str:
    theorems = sorted({theorem for entry in summary.files for theorem in entry.verdicts})
    rows = [
        [entry.filename] + [entry.verdicts.get(theorem, "-") for theorem in theorems]
        + [entry.error or ""]
        for entry in summary.files
    ]
    header = f"field {summary.field}, seed {summary.seed}, trials {summary.trials}"
    return "\n".join([header, format_table(["file"] + theorems + [""], rows)])


def build_arg_parser(argparser=None):
    argparser = new_arg_parser(argparser, DESCRIPTION)
    argparser.add_argument(
        "directory",
        type=str,
        nargs="?",
        default=None,
        help="Directory of .cplx files (default: the bundled corpus)",
    )
    add_run_config_arguments(argparser)
    argparser.add_argument(
        "-o",
        "--output-dir",
        type=str,
        default=None,
        help="Write <name>.json per file and summary.json here",
    )
    argparser.add_argument(
        "-j",
        "--jobs",
        type=int,
        default=1,
        help="Number of worker processes",
    )
    return argparser


def main(
    directory: Optional[str] = None,
    field: Optional[str] = None,
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    use_json: bool = False,
    output_dir: Optional[str] = None,
    jobs: int = 1,
) -> int:
    config = RunConfig.from_options(
        field=field, seed=seed, trials=trials, use_json=use_json, corpus=directory
    )
    filenames = [str(path) for path in find_complex_files(config.corpus)]
    if not filenames:
        logger.error("No .cplx files found in %s", config.corpus)
        return 2

    args = [(name, str(config.field), config.seed, config.trials) for name in filenames]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(process_file, *zip(*args)))
    else:
        results = [process_file(*arg) for arg in args]

    summary = summarize(str(config.corpus), config, results)
    if output_dir is not None:
        output = pathlib.Path(output_dir)
        output.mkdir(parents=True, exist_ok=True)
        for result in results:
            path = output / f"{pathlib.Path(result.filename).stem}.json"
            path.write_text(dump_json(BatchFileReport, result) + "\n", encoding="utf-8")
        (output / SUMMARY_FILENAME).write_text(
            dump_json(BatchSummary, summary) + "\n", encoding="utf-8"
        )
        logger.info("Wrote %d report(s) to %s", len(results), output)

    if config.use_json:
        print(dump_json(BatchSummary, summary))
    else:
        print(format_summary(summary))

    if summary.failures:
        logger.warning("Failures: %s", ", ".join(summary.failures))
        return 1
    return 0

