"""
Run configuration: environment defaults and the shared command-line options.
"""
from __future__ import annotations

import argparse
import dataclasses
import os
import pathlib
from typing import Optional, Tuple

from .linalg import FieldError, FieldSpec
from .report import ReportInputs
from .typing import OutputFormat

MODULE_PATH = pathlib.Path(__file__).parent

FACERING_FIELD = os.environ.get("FACERING_FIELD", "Q")
FACERING_SEED = int(os.environ.get("FACERING_SEED", "1"))
FACERING_TRIALS = int(os.environ.get("FACERING_TRIALS", "3"))
FACERING_CORPUS = os.environ.get("FACERING_CORPUS", str(MODULE_PATH / "corpus"))


class ConfigError(ValueError):
    """Invalid run configuration."""


def field_from_string(value: str) -> FieldSpec:
    try:
        return FieldSpec.from_string(value)
    except FieldError as ex:
        raise ConfigError(str(ex)) from ex


def default_field() -> FieldSpec:
    """The field named by ``FACERING_FIELD`` at call time (default: Q)."""
    return field_from_string(os.environ.get("FACERING_FIELD", "Q"))


def parse_window(value: Optional[str]) -> Optional[Tuple[int, int]]:
    """Parse a degree window such as ``-5..0``."""
    if value is None:
        return None
    low, sep, high = value.partition("..")
    try:
        if not sep:
            raise ValueError(value)
        window = (int(low), int(high))
    except ValueError:
        raise ConfigError(f"Degree window must look like LOW..HIGH, got {value!r}") from None
    if window[0] > window[1]:
        raise ConfigError(f"Empty degree window {value!r}")
    return window


@dataclasses.dataclass(frozen=True)
class RunConfig:
    field: FieldSpec = dataclasses.field(default_factory=default_field)
    seed: int = FACERING_SEED
    trials: int = FACERING_TRIALS
    window: Optional[Tuple[int, int]] = None
    output_format: OutputFormat = "table"
    corpus: pathlib.Path = pathlib.Path(FACERING_CORPUS)

    def __post_init__(self):
        if self.trials < 1:
            raise ConfigError(f"At least one trial is required, got {self.trials}")

    @classmethod
    def from_options(
        cls,
        field: Optional[str] = None,
        seed: Optional[int] = None,
        trials: Optional[int] = None,
        window: Optional[str] = None,
        use_json: bool = False,
        corpus: Optional[str] = None,
    ) -> RunConfig:
        """Build a configuration from command-line values, falling back to the environment."""
        return cls(
            field=field_from_string(field) if field else default_field(),
            seed=FACERING_SEED if seed is None else seed,
            trials=FACERING_TRIALS if trials is None else trials,
            window=parse_window(window),
            output_format="json" if use_json else "table",
            corpus=pathlib.Path(corpus or FACERING_CORPUS),
        )

    @property
    def use_json(self) -> bool:
        return self.output_format == "json"

    def inputs(self, name: str) -> ReportInputs:
        return ReportInputs(complex=name, field=str(self.field), seed=self.seed, trials=self.trials)


def add_run_config_arguments(argparser: argparse.ArgumentParser, window: bool = False) -> None:
    """Options shared by every command that computes a reduction."""
    argparser.add_argument(
        "--field",
        "-F",
        type=str,
        default=None,
        help=f"Coefficient field: Q, Fp, Fp:<p> or F<p> (default: {FACERING_FIELD})",
    )
    argparser.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"Master seed for generic choices (default: {FACERING_SEED})",
    )
    argparser.add_argument(
        "--trials",
        type=int,
        default=None,
        help=f"Number of generic trials (default: {FACERING_TRIALS})",
    )
    argparser.add_argument(
        "--json",
        dest="use_json",
        action="store_true",
        help="Output JSON reports",
    )
    if window:
        argparser.add_argument(
            "--window",
            type=str,
            default=None,
            help="Internal degree window, as --window=LOW..HIGH (default: -d-2..0)",
        )


def config_from_kwargs(kwargs: dict) -> RunConfig:
    """Pop the shared options out of command keyword arguments."""
    return RunConfig.from_options(
        field=kwargs.pop("field", None),
        seed=kwargs.pop("seed", None),
        trials=kwargs.pop("trials", None),
        window=kwargs.pop("window", None),
        use_json=kwargs.pop("use_json", False),
        corpus=kwargs.pop("corpus", None),
    )
