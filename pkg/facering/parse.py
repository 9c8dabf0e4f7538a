"""
Reading and writing ``.cplx`` facet-list documents.
"""
from __future__ import annotations

import dataclasses
import logging
import pathlib
from typing import List, Optional, Tuple

import lark

from .complex import SimplicialComplex
from .typing import AnyPath

logger = logging.getLogger(__name__)

MODULE_PATH = pathlib.Path(__file__).parent
GRAMMAR_FILENAME = MODULE_PATH / "cplx.lark"

_PARSER = None


class ComplexParseError(ValueError):
    """A facet-list document could not be turned into a complex."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclasses.dataclass(frozen=True)
class FacetLine:
    labels: Tuple[str, ...]
    line: Optional[int] = None


class FacetListTransformer(lark.visitors.Transformer):
    """Turn the parse tree of a facet-list document into :class:`FacetLine` items."""

    def facet(self, labels: List[lark.Token]) -> FacetLine:
        return FacetLine(
            labels=tuple(str(label) for label in labels),
            line=getattr(labels[0], "line", None),
        )

    def start(self, facets: List[FacetLine]) -> List[FacetLine]:
        return list(facets)


def new_parser(**kwargs) -> lark.Lark:
    """
    Get a new parser for facet-list documents.

    Parameters
    ----------
    **kwargs :
        See :class:`lark.lark.LarkOptions`.
    """
    return lark.Lark.open_from_package(
        "facering",
        GRAMMAR_FILENAME.name,
        parser="lalr",
        propagate_positions=True,
        **kwargs,
    )


def get_parser() -> lark.Lark:
    """Get a cached lark.Lark parser for facet-list documents."""
    global _PARSER

    if _PARSER is None:
        _PARSER = new_parser()
    return _PARSER


def parse_facet_lines(text: str) -> List[FacetLine]:
    try:
        tree = get_parser().parse(text)
    except lark.UnexpectedInput as ex:
        raise ComplexParseError(
            f"Unexpected input: {ex.__class__.__name__}", line=ex.line
        ) from ex
    except lark.LarkError as ex:
        raise ComplexParseError(str(ex)) from ex
    return FacetListTransformer().transform(tree)


def parse_complex(text: str, name: str = "") -> SimplicialComplex:
    """
    Parse a facet-list document.

    Parameters
    ----------
    text : str
        The document: one facet per line, ``#`` comments.
    name : str, optional
        A name to attach to the complex (used in reports).

    Returns
    -------
    SimplicialComplex
        The complex generated by the listed facets.  Lines that are contained
        in other lines are absorbed.

    Raises
    ------
    ComplexParseError
        For an empty document or a line repeating a vertex label.
    """
    lines = parse_facet_lines(text)
    if not lines:
        raise ComplexParseError("Empty facet list")

    for facet in lines:
        seen = set()
        for label in facet.labels:
            if label in seen:
                raise ComplexParseError(
                    f"Vertex label {label!r} repeated in a facet", line=facet.line
                )
            seen.add(label)

    complex_ = SimplicialComplex.from_facets(
        (facet.labels for facet in lines), name=name
    )
    absorbed = len(lines) - len(complex_.facets)
    if absorbed:
        logger.debug("Absorbed %d non-maximal or duplicate lines in %s", absorbed, name or "input")
    return complex_


def load_complex(filename: AnyPath) -> SimplicialComplex:
    """Load a ``.cplx`` file; the complex is named after the file stem."""
    path = pathlib.Path(filename)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as ex:
        raise ComplexParseError(
            f"Invalid UTF-8 at byte {ex.start}", line=data.count(b"\n", 0, ex.start) + 1
        ) from ex
    logger.debug("Loading complex from %s", path)
    return parse_complex(text, name=path.stem)


def dump_complex(K: SimplicialComplex, header: Optional[str] = None) -> str:
    """A facet-list document that parses back to ``K``."""
    lines = []
    if header:
        lines.extend(f"# {line}" for line in header.splitlines())
    if K.name:
        lines.append(f"# {K.name}")
    lines.extend(" ".join(labels) for labels in K.facet_labels())
    return "\n".join(lines) + "\n"
