"""Elementary real-linear maps used as sufficient (or insufficient)
candidates: pinchings and trace replacement."""

import numpy as np

from ..Superoperator import Superoperator
from ..matcore import as_operator


def pinching(projections, label="pinching"):
    """Return B -> sum_i P_i B P_i for orthogonal projections P_i."""
    projections = [as_operator(P, name="projection") for P in projections]
    dim = projections[0].shape[0]
    return Superoperator.from_function(
        dim, lambda B: sum(P @ B @ P for P in projections), label=label
    )


def diagonal_pinching(dim, unitary=None):
    """Return the pinching on the basis given by the columns of ``unitary``
    (by default the canonical basis), i.e. the diagonal extraction."""
    U = np.eye(dim, dtype=complex) if unitary is None else np.asarray(unitary)
    projections = [np.outer(U[:, i], U[:, i].conj()) for i in range(dim)]
    return pinching(projections, label="diagonal pinching")


def trace_replacement(dim):
    """Return B -> (Tr B / dim) I."""
    identity = np.eye(dim, dtype=complex)
    return Superoperator.from_function(
        dim, lambda B: np.trace(B) / dim * identity, label="trace replacement"
    )
