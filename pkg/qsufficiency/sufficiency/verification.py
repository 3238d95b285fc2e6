"""Sufficiency of a real-linear map for a model."""

import numpy as np

from ..Tolerances import Tolerances
from ..ResidualCheck import ResidualChecks
from ..matcore import as_operator, hs_norm, vectorize


def model_operators(model):
    """Return (operators, labels) from a Model or a list of operators."""
    if hasattr(model, "elements"):
        return (
            [element.X for element in model.elements],
            [element.label for element in model.elements],
        )
    operators = [as_operator(X, name="model element") for X in model]
    return operators, ["X%d" % i for i in range(len(operators))]


def sufficiency_residuals(model, alpha):
    """Return, for each model element X, max_B |<X, B> - <X, alpha(B)>| over
    the orthonormal operator basis B (real Hilbert-Schmidt products).

    By linearity this covers all operators B: the differences are the
    coordinates of X - alpha^T(X).
    """
    operators, _ = model_operators(model)
    residuals = []
    for X in operators:
        if X.shape != (alpha.dim, alpha.dim):
            raise ValueError(
                "Dimension mismatch: model element of shape %s, map on dim %d"
                % (X.shape, alpha.dim)
            )
        vector = vectorize(X)
        residuals.append(float(np.abs(vector - alpha.matrix.T @ vector).max()))
    return residuals


def sufficiency_checks(model, alpha, tolerances=None):
    """Return a ResidualChecks with one check per model element.

    Each check compares max_B |Re Tr XB - Re Tr X alpha(B)| to
    sufficiency_tol * (1 + ||X||)."""
    tolerances = Tolerances.from_any(tolerances)
    operators, labels = model_operators(model)
    checks = ResidualChecks(title="sufficiency checks")
    for X, label, residual in zip(operators, labels, sufficiency_residuals(model, alpha)):
        checks.add(
            "sufficient for %s" % label,
            residual,
            tolerances.sufficiency_tol * (1 + hs_norm(X)),
        )
    return checks


def verify_sufficient(model, alpha, tolerances=None):
    """Return (is_sufficient, max_residual).

    The map alpha is sufficient for the model when Re Tr XB equals
    Re Tr X alpha(B) for every element X and every operator B.

    Examples
    --------

    >>> passes, residual = verify_sufficient(model, Superoperator.identity(2))
    >>> passes, residual
    (True, 0.0)

    Parameters
    ----------

    model
      A Model, or a list of Hermitian operators.

    alpha
      A Superoperator acting on the model's space.

    tolerances
      A Tolerances instance (or dict of overrides, or None for defaults).
    """
    checks = sufficiency_checks(model, alpha, tolerances=tolerances)
    return checks.all_checks_pass(), checks.max_residual()
