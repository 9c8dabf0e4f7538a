"""
Plain-text rendering of classifications, reports and vector tables.
"""
from __future__ import annotations

import enum
import logging
import textwrap
from dataclasses import fields, is_dataclass
from typing import Any, List, Optional, Sequence

from .report import VerificationReport

logger = logging.getLogger(__name__)


def _indented_outline(item: Any, indent: str = "    ") -> Optional[str]:
    """Outline and indent the given item."""
    text = text_outline(item)
    if text is None:
        return None
    result = textwrap.indent(text, indent)
    if "\n" in result:
        return "\n" + result
    return result.lstrip()


def text_outline(item: Any) -> Optional[str]:
    """
    Get a generic multiline string representation of the given object.

    Dataclass fields go on their own lines, list items are bulleted, and
    nested values are indented.

    Parameters
    ----------
    item : Any
        The item to outline.

    Returns
    -------
    formatted : str or None
        The formatted result.
    """
    if item is None:
        return None

    if isinstance(item, enum.Enum):
        return str(item.value)

    if is_dataclass(item):
        result = [f"<{item.__class__.__name__}>"]
        for fld in fields(item):
            if fld.name.startswith("_"):
                continue
            value = _indented_outline(getattr(item, fld.name, None))
            if value is not None:
                result.append(f"{fld.name}: {value}")
        return "\n".join(result)

    if isinstance(item, (list, tuple)):
        if all(isinstance(value, (int, str)) for value in item):
            return format_vector(item)
        result = []
        for value in item:
            value = _indented_outline(value)
            if value is not None:
                result.append(f"- {value.lstrip()}")
        if not result:
            return None
        return "\n".join(result)

    if isinstance(item, dict):
        result = []
        for key, value in item.items():
            value = _indented_outline(value)
            if value is not None:
                result.append(f"- {key}: {value}")
        return "\n".join(result)

    return str(item)


def format_vector(values: Sequence[Any]) -> str:
    """Comma-separated entries in parentheses, as in ``(1, 4, 10, 1)`` or ``(1)``."""
    return "(" + ", ".join(str(value) for value in values) + ")"


def format_report(report: VerificationReport) -> str:
    """One line per check, then notes, then the verdict."""
    lines = [f"{report.theorem} [{report.inputs.complex}, {report.inputs.field}]"]
    for check in report.checks:
        mark = "ok" if check.passed else "FAILED"
        if check.passed:
            lines.append(f"  {check.name}: {_value(check.observed)} -- {mark}")
        else:
            lines.append(
                f"  {check.name}: expected {_value(check.expected)}, "
                f"observed {_value(check.observed)} -- {mark}"
            )
    for note in report.notes:
        lines.append(f"  note: {note}")
    lines.append(f"  verdict: {report.verdict}")
    return "\n".join(lines)


def _value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return format_vector(value)
    return str(value)


def format_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    """Left-aligned columns separated by two spaces."""
    cells: List[List[str]] = [list(header)] + [
        [_value(cell) if cell is not None else "-" for cell in row] for row in rows
    ]
    widths = [max(len(row[col]) for row in cells) for col in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in cells
    )
