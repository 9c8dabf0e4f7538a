"""
Structured pass/fail evidence emitted by the verifiers, and its JSON form.
"""
from __future__ import annotations

import dataclasses
import enum
import json
import logging
from typing import Any, List, Optional, Type, TypeVar, Union

import apischema

logger = logging.getLogger(__name__)

T = TypeVar("T")

CheckValue = Union[bool, int, str, List[int], List[str], None]


class Verdict(str, enum.Enum):
    passed = "PASS"
    failed = "FAIL"
    not_applicable = "N-A"
    hypothesis_not_met = "HYPOTHESIS-NOT-MET"
    inconclusive = "INCONCLUSIVE"

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass
class ReportInputs:
    complex: str
    field: str
    seed: Optional[int] = None
    trials: Optional[int] = None


@dataclasses.dataclass
class Check:
    name: str
    expected: CheckValue
    observed: CheckValue
    passed: bool = dataclasses.field(metadata=apischema.alias("pass"))


def _normalize(value: Any) -> CheckValue:
    if isinstance(value, tuple):
        return list(value)
    return value


@dataclasses.dataclass
class VerificationReport:
    """
    Evidence for one theorem on one input.

    Build it with :meth:`check` and settle the verdict with :meth:`conclude`.
    The verdict is PASS only when every check passed.
    """

    theorem: str
    inputs: ReportInputs
    checks: List[Check] = dataclasses.field(default_factory=list)
    verdict: Optional[Verdict] = None
    notes: List[str] = dataclasses.field(default_factory=list)

    def check(
        self,
        name: str,
        expected: Any,
        observed: Any,
        passed: Optional[bool] = None,
    ) -> bool:
        """Record a check; by default it passes when expected == observed."""
        expected = _normalize(expected)
        observed = _normalize(observed)
        if passed is None:
            passed = expected == observed
        self.checks.append(Check(name, expected, observed, bool(passed)))
        if not passed:
            logger.debug("%s: check %r failed (expected %r, observed %r)",
                         self.theorem, name, expected, observed)
        return bool(passed)

    def note(self, message: str) -> None:
        if message not in self.notes:
            self.notes.append(message)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def conclude(
        self,
        applicable: bool = True,
        hypothesis_met: bool = True,
        certified: bool = True,
    ) -> Verdict:
        """
        Settle the verdict.  ``certified=False`` marks evidence that could not
        be computed (no l.s.o.p. within the attempt budget); it only matters
        when every recorded check passed.
        """
        if not hypothesis_met:
            self.verdict = Verdict.hypothesis_not_met
        elif not applicable:
            self.verdict = Verdict.not_applicable
        elif not self.all_passed:
            self.verdict = Verdict.failed
        elif not certified:
            self.verdict = Verdict.inconclusive
        else:
            self.verdict = Verdict.passed
        return self.verdict

    def get_check(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def exit_code(reports: List[VerificationReport]) -> int:
    """0 when nothing failed, 1 when any report has a FAIL verdict."""
    return 1 if any(report.verdict == Verdict.failed for report in reports) else 0


def serialize(type_: Type[T], obj: T) -> Any:
    return apischema.serialize(type_, obj, no_copy=True)


def dump_json(type_: Type[T], obj: T, indent: Optional[int] = 2) -> str:
    """
    Dump object ``obj`` as type ``type_`` with apischema and serialize to a string.

    Parameters
    ----------
    type_ : Type[T]
        The type of ``obj``.
    obj : T
        The object to serialize.
    indent : int or None
        Make the JSON output prettier with indentation.

    Returns
    -------
    str
    """
    return json.dumps(serialize(type_, obj), indent=indent)


def load_report(text: str) -> VerificationReport:
    return apischema.deserialize(VerificationReport, json.loads(text))
