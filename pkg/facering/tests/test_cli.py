from __future__ import annotations

import json
import shlex
import shutil
import sys
from typing import List

import pytest
from pytest import param

from .. import CORPUS_PATH, MODULE_PATH
from ..commands.batch import SUMMARY_FILENAME
from ..commands.batch import main as batch_main
from ..generators import simplex_boundary
from ..main import MODULES
from ..main import main as facering_main
from ..parse import load_complex

README_PATH = MODULE_PATH.parent / "README.md"

TORUS = str(CORPUS_PATH / "torus7.cplx")
RP2 = str(CORPUS_PATH / "rp2_6.cplx")
TETRAHEDRON = str(CORPUS_PATH / "simplex_boundary_3.cplx")


def get_readme_lines() -> list[str]:
    if not README_PATH.exists():
        return []

    with open(README_PATH) as fp:
        lines = fp.read().splitlines()

    return [
        line.lstrip("$ ")
        for line in lines if line.lstrip().startswith("$ facering")
    ]


@pytest.fixture(params=get_readme_lines())
def readme_line(request):
    return request.param


def run_main(monkeypatch, args: List[str]) -> int:
    monkeypatch.setattr(sys, "argv", ["facering", *args])
    try:
        facering_main()
    except SystemExit as ex:
        return ex.code
    return 0


@pytest.mark.parametrize(
    "args",
    [param(["--help"], id="top-help"), param([], id="no-command")]
    + [param([module, "--help"], id=f"{module}-help") for module in MODULES],
)
def test_facering_main_help(monkeypatch, args: List[str]):
    assert run_main(monkeypatch, args) == 0


@pytest.mark.parametrize(
    "args",
    [
        param(["classify", TORUS], id="classify"),
        param(["classify", "--json", "-F", "F2", RP2], id="classify-json"),
        param(["hvectors", TETRAHEDRON], id="hvectors"),
        param(["hvectors", "--json", TORUS], id="hvectors-json"),
        param(["socle", "--schenzel", TORUS], id="socle"),
        param(["gorenstein", "--field", "F2", RP2], id="gorenstein"),
        param(["lefschetz", "-i", "1", TORUS], id="lefschetz"),
        param(["linkiso", "-v", "1", "-v", "2", TORUS], id="linkiso"),
        param(["gcheck", "--trials", "1", TORUS], id="gcheck"),
        param(["localcoh", "--relative", "--window=-3..0", TETRAHEDRON], id="localcoh"),
        param(["localcoh", "--json", "-j", "2", TORUS], id="localcoh-json"),
        param(["mvector", "1", "3", "6", "10"], id="mvector"),
        param(["generate", "cross-polytope-boundary", "3"], id="generate"),
        param(["generate", "suspension", TETRAHEDRON], id="generate-suspension"),
    ],
)
def test_facering_main(monkeypatch, args: List[str]):
    assert run_main(monkeypatch, args) == 0


@pytest.mark.parametrize(
    "args, code",
    [
        param(["mvector", "1", "2", "4"], 1, id="not-mvector"),
        param(["socle", "--field", "F4", TORUS], 2, id="bad-field"),
        param(["socle", "--trials", "0", TORUS], 2, id="bad-trials"),
        param(["classify", "no-such-file.cplx"], 2, id="missing-file"),
        param(["linkiso", "-v", "nope", TORUS], 2, id="unknown-vertex"),
        param(["lefschetz", "-i", "2", TORUS], 2, id="bad-degree"),
        param(["localcoh", "--window=0..-3", TORUS], 2, id="bad-window"),
        param(["generate", "no-such-generator"], 2, id="unknown-generator"),
        param(["generate", "simplex-boundary", "0"], 2, id="bad-parameter"),
    ],
)
def test_exit_codes(monkeypatch, args: List[str], code: int):
    assert run_main(monkeypatch, args) == code


def test_parse_error_exit_code(monkeypatch, tmp_path, caplog):
    bad = tmp_path / "bad.cplx"
    bad.write_text("1 2 3\n\n2 4 2\n")
    assert run_main(monkeypatch, ["classify", str(bad)]) == 2
    assert "line 3" in caplog.text


def test_invalid_utf8_exit_code(monkeypatch, tmp_path, caplog):
    bad = tmp_path / "bad.cplx"
    bad.write_bytes(b"1 2\n\xff\xfe 3\n")
    assert run_main(monkeypatch, ["classify", str(bad)]) == 2
    assert "line 2: Invalid UTF-8 at byte 4" in caplog.text


def test_mvector_output(monkeypatch, capsys):
    run_main(monkeypatch, ["mvector", "1", "2", "4"])
    assert capsys.readouterr().out.strip() == "FAIL at i=2: 2^<1> = 3 < 4"


def test_socle_output(monkeypatch, capsys):
    assert run_main(monkeypatch, ["socle", TORUS]) == 0
    headline = capsys.readouterr().out.splitlines()[0]
    assert headline == (
        "Soc dims (0, 0, 6, 1); predicted C(d,i)*beta[i-1]: (0, 0, 6, 1) -- PASS"
    )


@pytest.mark.parametrize(
    "field, orientable",
    [param("Q", False, id="Q"), param("F2", True, id="F2")],
)
def test_classify_json(monkeypatch, capsys, field: str, orientable: bool):
    assert run_main(monkeypatch, ["classify", "--json", "--field", field, RP2]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["complex"] == "rp2_6"
    assert result["classification"]["is_orientable"] is orientable
    assert result["classification"]["is_homology_manifold"] is True


def test_json_reports(monkeypatch, capsys):
    assert run_main(monkeypatch, ["gorenstein", "--json", TORUS]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [report["theorem"] for report in reports] == [
        "gorenstein-quotient", "hilbert-symmetry"
    ]
    assert all(report["verdict"] == "PASS" for report in reports)
    assert reports[0]["inputs"] == {"complex": "torus7", "field": "Q", "seed": 1, "trials": 3}


def test_generate_output(monkeypatch, tmp_path):
    output = tmp_path / "sphere.cplx"
    assert run_main(monkeypatch, ["generate", "simplex-boundary", "3", "-o", str(output)]) == 0
    assert output.read_text().startswith("# generated by: facering generate simplex-boundary 3")
    assert load_complex(output) == simplex_boundary(3)


def _small_corpus(directory):
    directory.mkdir()
    for name in ("simplex_boundary_2", "cross_polytope_boundary_2"):
        shutil.copy(CORPUS_PATH / f"{name}.cplx", directory)
    return directory


def test_batch(tmp_path, capsys):
    directory = _small_corpus(tmp_path / "input")
    output = tmp_path / "output"
    assert batch_main(str(directory), trials=1, output_dir=str(output)) == 0
    assert sorted(path.name for path in output.iterdir()) == [
        "cross_polytope_boundary_2.json", "simplex_boundary_2.json", SUMMARY_FILENAME,
    ]
    summary = json.loads((output / SUMMARY_FILENAME).read_text())
    assert summary["failures"] == []
    assert [entry["filename"] for entry in summary["files"]] == [
        "cross_polytope_boundary_2.cplx", "simplex_boundary_2.cplx",
    ]
    report = json.loads((output / "simplex_boundary_2.json").read_text())
    assert report["error"] is None
    assert "FAIL" not in {item["verdict"] for item in report["reports"]}
    assert "simplex_boundary_2.cplx" in capsys.readouterr().out


def test_batch_records_errors(tmp_path):
    directory = _small_corpus(tmp_path / "input")
    (directory / "broken.cplx").write_text("# nothing here\n")
    output = tmp_path / "output"
    assert batch_main(str(directory), trials=1, output_dir=str(output)) == 1
    summary = json.loads((output / SUMMARY_FILENAME).read_text())
    assert summary["failures"] == ["broken.cplx"]
    broken = json.loads((output / "broken.json").read_text())
    assert broken["error"].startswith("ComplexParseError")


def test_batch_is_deterministic(tmp_path):
    directory = _small_corpus(tmp_path / "input")
    texts = []
    for jobs in (1, 2):
        output = tmp_path / f"output-{jobs}"
        assert batch_main(str(directory), trials=1, output_dir=str(output), jobs=jobs) == 0
        texts.append((output / SUMMARY_FILENAME).read_text())
    assert texts[0] == texts[1]


def test_batch_empty_directory(tmp_path):
    assert batch_main(str(tmp_path)) == 2


def test_readme_examples(monkeypatch, readme_line: str):
    monkeypatch.chdir(MODULE_PATH.parent)
    monkeypatch.setattr(sys, "argv", shlex.split(readme_line))
    try:
        facering_main()
    except SystemExit as ex:
        assert ex.code == 0
