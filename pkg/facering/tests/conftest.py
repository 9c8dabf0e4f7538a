import functools
import pathlib

import pytest

from .. import CORPUS_PATH
from ..complex import SimplicialComplex
from ..config import RunConfig
from ..linalg import FieldSpec
from ..parse import load_complex
from ..pipeline import Analysis, analyze

TEST_PATH = pathlib.Path(__file__).parent

corpus_filenames = sorted(str(path) for path in CORPUS_PATH.glob("*.cplx"))


@functools.lru_cache(maxsize=None)
def load_corpus(name: str) -> SimplicialComplex:
    """A bundled complex by file stem, e.g. ``torus7``."""
    return load_complex(CORPUS_PATH / f"{name}.cplx")


@functools.lru_cache(maxsize=None)
def analysis_of(name: str, field: str = "Q", seed: int = 1, trials: int = 3) -> Analysis:
    """A shared analysis of a bundled complex, so tests reuse one reduction."""
    config = RunConfig(field=FieldSpec.from_string(field), seed=seed, trials=trials)
    return analyze(load_corpus(name), config)


@pytest.fixture(params=corpus_filenames)
def corpus_filename(request) -> str:
    return request.param


@pytest.fixture
def torus() -> SimplicialComplex:
    return load_corpus("torus7")


@pytest.fixture
def rp2() -> SimplicialComplex:
    return load_corpus("rp2_6")


@pytest.fixture
def klein() -> SimplicialComplex:
    return load_corpus("klein8")


@pytest.fixture
def tetrahedron() -> SimplicialComplex:
    return load_corpus("simplex_boundary_3")


@pytest.fixture
def bowtie() -> SimplicialComplex:
    """Two triangles sharing a vertex: pure, connected, not Buchsbaum."""
    return SimplicialComplex.from_facets([["1", "2", "3"], ["1", "4", "5"]], name="bowtie")


@pytest.fixture
def rationals() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def f2() -> FieldSpec:
    return FieldSpec.prime_field(2)


@pytest.fixture
def fp() -> FieldSpec:
    return FieldSpec.prime_field()
