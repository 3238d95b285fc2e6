import os
import json
import zipfile
import io

import numpy as np
import pytest
from qsufficiency import (
    ModelFileError,
    Report,
    ResidualChecks,
    SufficiencyError,
    Tolerances,
    parse_model,
    parse_povm,
    write_model,
    write_report,
)
from qsufficiency.reports import file_digest, model_from_dict
from qsufficiency.fixtures import ki_constructed_model, qubit_local_model

data_dir = os.path.join(os.path.dirname(os.path.realpath(__file__)), "data")


def _data(filename):
    return os.path.join(data_dir, filename)


def _report():
    checks = ResidualChecks(title="checks")
    checks.add("sufficient for X", 1e-14, 1e-9)
    return Report(
        "minsuff",
        results={"dimension": 2, "matrix": np.eye(2), "value": np.float64(0.5)},
        checks=checks,
        seed=3,
        inputs_digest="abc",
    )


def test_parse_qubit_model():
    model = parse_model(_data("qubit_local.json"))
    assert model.dim == 2
    assert [e.label for e in model.elements] == ["reference", "d_x", "d_z"]
    expected = qubit_local_model("xz")
    for element, expected_element in zip(model.elements, expected.elements):
        assert np.allclose(element.X, expected_element.X)


def test_parse_complex_model():
    model = parse_model(_data("ki_constructed.json"))
    expected = ki_constructed_model()
    assert model.reference_index == 0
    assert [e.label for e in model.elements] == ["X0", "X1", "X2"]
    for element, expected_element in zip(model.elements, expected.elements):
        assert np.allclose(element.X, expected_element.X)


def test_model_file_errors():
    with pytest.raises(ModelFileError) as err:
        parse_model(_data("bad_reference.json"))
    assert "reference not PSD" in str(err.value)
    with pytest.raises(ModelFileError) as err:
        parse_model(_data("malformed.json"))
    assert "Malformed JSON" in str(err.value)
    with pytest.raises(ModelFileError) as err:
        parse_model(_data("not_hermitian.json"))
    assert "not Hermitian" in str(err.value)
    with pytest.raises(ModelFileError):
        parse_model(_data("no_such_file.json"))


@pytest.mark.parametrize(
    "data, message",
    [
        ({"dim": 2, "elements": []}, "missing field 'reference'"),
        ({"dim": 0, "reference": [[1]], "elements": []}, "positive integer"),
        ({"dim": 2, "reference": [[1, 0], [0, 0]], "elements": [{}]}, "'matrix'"),
        (
            {"dim": 2, "reference": [[1]], "elements": []},
            "dimension mismatch",
        ),
        (
            {
                "dim": 1,
                "reference": [[1]],
                "elements": [{"kind": "score", "matrix": [[1]]}],
            },
            "unknown kind",
        ),
    ],
)
def test_model_from_dict_errors(data, message):
    with pytest.raises(ModelFileError) as err:
        model_from_dict(data)
    assert message in str(err.value)


def test_model_file_error_is_a_sufficiency_error():
    assert issubclass(ModelFileError, SufficiencyError)


def test_write_then_parse_model(tmpdir):
    path = os.path.join(str(tmpdir), "model.json")
    write_model(ki_constructed_model(), path)
    model = parse_model(path)
    assert model.dim == 4
    assert np.allclose(model.rho, ki_constructed_model().rho)
    with open(path, "r") as f:
        assert json.load(f)["dim"] == 4


def test_parse_povm():
    povm = parse_povm(_data("povm_z.json"))
    assert len(povm) == 2
    assert np.allclose(sum(povm), np.eye(2))
    with pytest.raises(ModelFileError):
        parse_povm(_data("povm_z.json"), dim=3)
    with pytest.raises(ModelFileError):
        parse_povm(_data("qubit_local.json"))


def test_file_digest():
    path = _data("commuting.json")
    with open(path, "rb") as f:
        content = f.read()
    assert file_digest(path) == file_digest(content=content)
    assert len(file_digest(path)) == 32


def test_report_json_is_deterministic():
    first, second = _report().to_json(), _report().to_json()
    assert first == second
    data = json.loads(first)
    assert data["command"] == "minsuff"
    assert data["all_checks_pass"]
    assert data["residual_table"][0]["check"] == "sufficient for X"
    assert data["tolerances"] == json.loads(json.dumps(Tolerances().to_dict()))
    assert _report().exit_code == 0


def test_report_with_failing_check():
    report = _report()
    report.checks.add("sufficient for Y", float("inf"), 1e-9, passes=False)
    assert report.exit_code == 1
    assert '"inf"' in report.to_json()
    text = report.to_text()
    assert "command: minsuff" in text
    assert "FAILURE: 1 checks out of 2 failed" in text


def test_write_report_to_file(tmpdir):
    target = os.path.join(str(tmpdir), "report.json")
    write_report(_report(), target)
    with open(target, "r") as f:
        assert f.read() == _report().to_json()
    target = os.path.join(str(tmpdir), "report.txt")
    write_report(_report(), target, output_format="text")
    with open(target, "r", encoding="utf-8") as f:
        assert f.read() == _report().to_text()


def test_write_report_to_folder(tmpdir):
    target = os.path.join(str(tmpdir), "report_folder") + os.sep
    input_path = _data("commuting.json")
    write_report(_report(), target, input_path=input_path)
    files = sorted(os.listdir(target))
    digest = file_digest(input_path)[:8]
    assert files == sorted([digest + "_commuting.json", "report.json", "report.txt"])


def test_write_report_in_memory():
    data = write_report(_report(), "@memory")
    archive = zipfile.ZipFile(io.BytesIO(data))
    assert sorted(archive.namelist()) == ["report.json", "report.txt"]
    report_json = archive.read("report.json").decode("utf-8")
    assert report_json == _report().to_json()
