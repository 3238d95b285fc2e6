"""These tests enforce the contract that the master seed determines the
reports byte for byte: two runs with the same input and seed must write
identical report files.
"""

import os

import pytest
from qsufficiency.cli import main
from qsufficiency import random_model, write_model

data_dir = os.path.join(
    os.path.dirname(os.path.dirname(os.path.realpath(__file__))), "data"
)


def _report_bytes(argv, target):
    assert main(argv + ["--out=%s" % target]) in (0, 1)
    with open(target, "rb") as f:
        return f.read()


@pytest.mark.parametrize("command", ["pipeline", "structure", "ki", "verify"])
def test_reports_are_deterministic(tmpdir, command):
    model_path = os.path.join(data_dir, "ki_constructed.json")
    argv = [command, model_path, "--seed=3"]
    first = _report_bytes(argv, os.path.join(str(tmpdir), "first.json"))
    second = _report_bytes(argv, os.path.join(str(tmpdir), "second.json"))
    assert first == second


def test_random_model_reports_are_deterministic(tmpdir):
    model_path = os.path.join(str(tmpdir), "model.json")
    write_model(random_model(3, setting="degenerate", seed=5), model_path)
    argv = ["verify", model_path, "--seed=11"]
    first = _report_bytes(argv, os.path.join(str(tmpdir), "first.json"))
    second = _report_bytes(argv, os.path.join(str(tmpdir), "second.json"))
    assert first == second


def test_selftest_is_deterministic(tmpdir):
    argv = ["selftest", "--dims=2,3", "--seed=7"]
    first = _report_bytes(argv, os.path.join(str(tmpdir), "first.json"))
    second = _report_bytes(argv, os.path.join(str(tmpdir), "second.json"))
    assert first == second
