"""Reading and writing model files.

A model file is a JSON object::

    {
      "dim": 2,
      "reference": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]],
      "elements": [{"kind": "derivative", "label": "d_theta", "matrix": ...}],
      "metadata": {"source": "..."}
    }

Matrices are row-major nested lists of [re, im] pairs (plain real numbers
are accepted too).
"""

import json

import numpy as np

from ..Tolerances import Tolerances
from ..SufficiencyError import ModelFileError
from ..Model import Model, ModelElement, ELEMENT_KINDS
from ..matcore import hermitian_residual, hermitize, matrix_from_json, to_canonical_json


def _read_json(path):
    try:
        with open(path, "r") as f:
            return json.load(f)
    except (IOError, OSError) as err:
        raise ModelFileError("Cannot read %s: %s" % (path, err))
    except ValueError as err:
        raise ModelFileError("Malformed JSON in %s: %s" % (path, err))


def _parse_matrix(data, name, dim, tolerances):
    try:
        matrix = matrix_from_json(data, name=name)
    except ValueError as err:
        raise ModelFileError(str(err))
    if matrix.shape != (dim, dim):
        raise ModelFileError(
            "dimension mismatch: %s has shape %s, the model has dim %d"
            % (name, matrix.shape, dim)
        )
    if not np.all(np.isfinite(matrix)):
        raise ModelFileError("%s has non-finite entries" % name)
    residual = hermitian_residual(matrix)
    if residual > tolerances.hermitian_tol * max(1, np.abs(matrix).max()):
        raise ModelFileError(
            "%s is not Hermitian (||A - A*|| = %.3e)" % (name, residual)
        )
    return hermitize(matrix)


def model_from_dict(data, tolerances=None):
    """Return a Model (not restricted) from a model-file dict.

    Raises a ModelFileError with a specific message for missing fields,
    dimension mismatches, non-Hermitian matrices, unknown element kinds
    and a non-PSD reference ("reference not PSD").
    """
    tolerances = Tolerances.from_any(tolerances)
    if not isinstance(data, dict):
        raise ModelFileError("A model file should contain a JSON object")
    for field in ("dim", "reference", "elements"):
        if field not in data:
            raise ModelFileError("missing field '%s'" % field)
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ModelFileError("'dim' should be a positive integer, got %s" % dim)
    reference = _parse_matrix(data["reference"], "reference", dim, tolerances)
    elements = []
    for i, element_data in enumerate(data["elements"]):
        if not isinstance(element_data, dict) or "matrix" not in element_data:
            raise ModelFileError("element %d should be an object with a 'matrix'" % i)
        label = element_data.get("label", "X%d" % (i + 1))
        kind = element_data.get("kind", "state")
        if kind not in ELEMENT_KINDS:
            raise ModelFileError(
                "element %s has unknown kind '%s' (use one of %s)"
                % (label, kind, ", ".join(ELEMENT_KINDS))
            )
        matrix = _parse_matrix(element_data["matrix"], "element %s" % label, dim, tolerances)
        try:
            elements.append(ModelElement(kind, matrix, label=label, tolerances=tolerances))
        except ValueError as err:
            raise ModelFileError("element %s: %s" % (label, err))
    try:
        return Model(
            rho=reference,
            elements=elements,
            metadata=data.get("metadata", {}),
            tolerances=tolerances,
        )
    except ValueError as err:
        if "positive semi-definite" in str(err):
            raise ModelFileError("reference not PSD: %s" % err)
        raise ModelFileError(str(err))


def parse_model(path, tolerances=None):
    """Read a model file and return the validated (unrestricted) Model."""
    return model_from_dict(_read_json(path), tolerances=tolerances)


def parse_povm(path, dim=None, tolerances=None):
    """Read a POVM file, a JSON object {"elements": [matrix, ...]}, and
    return the list of Hermitian matrices."""
    tolerances = Tolerances.from_any(tolerances)
    data = _read_json(path)
    if not isinstance(data, dict) or "elements" not in data:
        raise ModelFileError("A POVM file should contain an 'elements' list")
    if len(data["elements"]) == 0:
        raise ModelFileError("The POVM file has no elements")
    if dim is None:
        dim = len(data["elements"][0])
    return [
        _parse_matrix(element, "POVM element %d" % i, dim, tolerances)
        for i, element in enumerate(data["elements"])
    ]


def write_model(model, path):
    """Write a Model to a model file (canonical JSON)."""
    with open(path, "w") as f:
        f.write(to_canonical_json(model.to_dict()))
