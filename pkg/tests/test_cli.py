import os
import json

import pytest
from qsufficiency.cli import main

data_dir = os.path.join(os.path.dirname(os.path.realpath(__file__)), "data")


def _data(filename):
    return os.path.join(data_dir, filename)


def _run(capsys, argv):
    exit_code = main(argv)
    captured = capsys.readouterr()
    return exit_code, captured


def _run_json(capsys, argv):
    exit_code, captured = _run(capsys, argv)
    return exit_code, json.loads(captured.out)


def test_minsuff_command(capsys):
    exit_code, report = _run_json(capsys, ["minsuff", _data("qubit_local.json")])
    assert exit_code == 0
    assert report["command"] == "minsuff"
    assert report["results"]["dimension"] == 4
    assert report["all_checks_pass"]
    exit_code, report = _run_json(
        capsys, ["minsuff", _data("qubit_local.json"), "--scalars=complex"]
    )
    assert exit_code == 0
    assert report["results"]["dimension"] == 8


def test_jordan_command(capsys):
    exit_code, report = _run_json(capsys, ["jordan", _data("qubit_local.json")])
    assert exit_code == 0
    assert report["results"]["dimension"] == 3
    assert report["results"]["star_dimension"] == 4


def test_restrict_and_ratios_commands(capsys):
    exit_code, report = _run_json(capsys, ["restrict", _data("block_embedded.json")])
    assert exit_code == 0
    assert report["results"]["dim"] == 4
    assert report["results"]["dim H_S"] == 2
    exit_code, report = _run_json(capsys, ["ratios", _data("commuting.json")])
    assert exit_code == 0
    assert sorted(report["results"]["ratios"]) == ["X", "reference"]


def test_ce_and_pipeline_commands(capsys):
    exit_code, report = _run_json(capsys, ["ce", _data("commuting.json")])
    assert exit_code == 0
    assert report["results"]["algebra_dimension"] == 2
    exit_code, report = _run_json(capsys, ["pipeline", _data("qubit_local.json")])
    assert exit_code == 0
    dimensions = report["results"]["certificate"]["dimensions"]
    assert dimensions == {"A_J": 3, "A_R": 4, "A_C": 8}


def test_structure_and_ki_commands(capsys):
    exit_code, report = _run_json(capsys, ["structure", _data("ki_constructed.json")])
    assert exit_code == 0
    blocks = report["results"]["structure"]["blocks"]
    assert blocks == [{"kind": "C", "n": 2, "m": 2}]
    exit_code, report = _run_json(capsys, ["ki", _data("ki_constructed.json")])
    assert exit_code == 0
    assert report["results"]["ki"]["P_diagonals"][0] == pytest.approx([1.5, 0.5])


def test_bound_command(capsys):
    exit_code, report = _run_json(
        capsys, ["bound", _data("qubit_local.json"), "--params=2"]
    )
    assert exit_code == 0
    assert report["results"]["jordan_dim"] == 3
    assert report["results"]["support_size_bound"] == 5
    exit_code, report = _run_json(
        capsys, ["bound", _data("qubit_local.json"), "--setting=bayesian"]
    )
    assert report["results"]["support_size_bound"] == 3


def test_fisher_command(capsys):
    argv = ["fisher", _data("qubit_local.json"), "--povm=%s" % _data("povm_z.json")]
    exit_code, report = _run_json(capsys, argv)
    assert exit_code == 0
    assert report["results"]["parameters"] == ["d_x", "d_z"]
    assert report["results"]["classical_fisher"] == [
        [pytest.approx(0), pytest.approx(0)],
        [pytest.approx(0), pytest.approx(1)],
    ]


def test_failing_check_gives_exit_code_1(capsys):
    argv = ["fisher", _data("qubit_local.json"), "--povm=%s" % _data("povm_incomplete.json")]
    exit_code, report = _run_json(capsys, argv)
    assert exit_code == 1
    assert not report["all_checks_pass"]
    assert report["residual_table"][0]["check"] == "POVM resolves the identity"


@pytest.mark.parametrize(
    "argv",
    [
        ["minsuff", _data("bad_reference.json")],
        ["minsuff", _data("malformed.json")],
        ["minsuff", _data("no_such_file.json")],
        ["minsuff", _data("qubit_local.json"), "--scalars=quaternion"],
        ["minsuff", _data("qubit_local.json"), "--seed=abc"],
        ["minsuff", _data("qubit_local.json"), "--tol=small"],
        ["minsuff", _data("qubit_local.json"), "--format=xml"],
        ["bound", _data("qubit_local.json"), "--params=0"],
        ["fisher", _data("commuting.json"), "--povm=%s" % _data("povm_z.json")],
        ["minsuff", _data("qubit_local.json"), "--unknown-option"],
        ["decompose", _data("qubit_local.json")],
    ],
)
def test_input_errors_give_exit_code_2(capsys, argv):
    exit_code, captured = _run(capsys, argv)
    assert exit_code == 2
    assert captured.out == ""


def test_bad_reference_message(capsys):
    _, captured = _run(capsys, ["minsuff", _data("bad_reference.json")])
    assert "reference not PSD" in captured.err


def test_text_format(capsys):
    exit_code, captured = _run(
        capsys, ["jordan", _data("commuting.json"), "--format=text"]
    )
    assert exit_code == 0
    assert "command: jordan" in captured.out
    assert "SUCCESS" in captured.out


def test_report_to_folder(tmpdir, capsys):
    target = os.path.join(str(tmpdir), "report") + os.sep
    exit_code, captured = _run(
        capsys, ["minsuff", _data("commuting.json"), "--out=%s" % target]
    )
    assert exit_code == 0
    assert captured.out == ""
    assert "report.json" in os.listdir(target)
    with open(os.path.join(target, "report.json"), "r", encoding="utf-8") as f:
        assert json.load(f)["results"]["dimension"] == 2


def test_tolerance_options(capsys):
    exit_code, report = _run_json(
        capsys, ["minsuff", _data("commuting.json"), "--tol=1e-6", "--rank-tol=1e-8"]
    )
    assert exit_code == 0
    assert report["tolerances"]["sufficiency_tol"] == pytest.approx(1e-6)
    assert report["tolerances"]["member_tol"] == pytest.approx(1e-6)
    assert report["tolerances"]["rank_tol"] == pytest.approx(1e-8)


def test_selftest_command(capsys):
    exit_code, report = _run_json(capsys, ["selftest", "--dims=2", "--seed=4"])
    assert exit_code == 0
    assert report["inputs_digest"] is None
    assert len(report["results"]) == 5
