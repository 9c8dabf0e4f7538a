import pathlib

from ._version import __version__
from .complex import SimplicialComplex
from .linalg import FieldSpec
from .parse import get_parser, load_complex, new_parser, parse_complex
from .pipeline import Analysis, analyze

MODULE_PATH = pathlib.Path(__file__).parent
del pathlib

GRAMMAR_FILENAME = MODULE_PATH / "cplx.lark"
CORPUS_PATH = MODULE_PATH / "corpus"

__all__ = [
    "Analysis",
    "CORPUS_PATH",
    "FieldSpec",
    "GRAMMAR_FILENAME",
    "SimplicialComplex",
    "__version__",
    "analyze",
    "get_parser",
    "load_complex",
    "new_parser",
    "parse_complex",
]
