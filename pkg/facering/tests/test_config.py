import pathlib

import pytest

from .. import CORPUS_PATH
from ..config import ConfigError, RunConfig, config_from_kwargs, parse_window
from ..linalg import FieldSpec


@pytest.mark.parametrize(
    "value, expected",
    [
        pytest.param(None, None, id="none"),
        pytest.param("-5..0", (-5, 0), id="negative"),
        pytest.param("0..0", (0, 0), id="single"),
    ],
)
def test_parse_window(value, expected):
    assert parse_window(value) == expected


@pytest.mark.parametrize("value", ["-5", "a..b", "0..-1", "..", "1...2"])
def test_parse_window_invalid(value):
    with pytest.raises(ConfigError):
        parse_window(value)


def test_from_options():
    config = RunConfig.from_options(field="F2", seed=9, trials=2, window="-3..0", use_json=True)
    assert config.field == FieldSpec.prime_field(2)
    assert config.seed == 9
    assert config.trials == 2
    assert config.window == (-3, 0)
    assert config.use_json
    assert config.output_format == "json"


def test_defaults():
    config = RunConfig.from_options()
    assert config.corpus == pathlib.Path(CORPUS_PATH) or config.corpus.is_dir()
    assert not config.use_json
    assert config.window is None


def test_invalid_options():
    with pytest.raises(ConfigError):
        RunConfig.from_options(field="F4")
    with pytest.raises(ConfigError):
        RunConfig.from_options(trials=0)


def test_config_from_kwargs():
    kwargs = {"filename": "x.cplx", "field": "Q", "seed": 3, "use_json": False}
    config = config_from_kwargs(kwargs)
    assert kwargs == {"filename": "x.cplx"}
    assert config.seed == 3


def test_inputs():
    inputs = RunConfig(seed=4, trials=2).inputs("torus7")
    assert (inputs.complex, inputs.field, inputs.seed, inputs.trials) == ("torus7", "Q", 4, 2)


def test_field_default_reads_environment(monkeypatch):
    monkeypatch.setenv("FACERING_FIELD", "F2")
    assert RunConfig().field == FieldSpec.prime_field(2)
    assert RunConfig.from_options().field == FieldSpec.prime_field(2)
    monkeypatch.delenv("FACERING_FIELD")
    assert RunConfig().field == FieldSpec.rationals()


def test_invalid_field_environment(monkeypatch):
    monkeypatch.setenv("FACERING_FIELD", "F4")
    with pytest.raises(ConfigError):
        RunConfig()
