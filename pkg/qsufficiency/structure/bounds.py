"""Dimension formula, support-size bounds and Fisher information matrices."""

import numpy as np

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..StructureDecomposition import BlockDescriptor
from ..Model import sld
from ..matcore import as_operator, check_psd, hs_norm

SETTINGS = ("local", "bayesian")


def jordan_dim(blocks):
    """Return the real dimension of the Jordan algebra with these blocks.

    Examples
    --------

    >>> jordan_dim([("R", 3, 2), ("H", 1, 1)])
    7
    """
    return sum(BlockDescriptor.from_any(block).jordan_dimension for block in blocks)


def support_size_bound(blocks, d=1, setting="local"):
    """Return the bound on the number of outcomes of an optimal POVM.

    For ``setting="local"`` (d parameters, local estimation) the bound is
    dim A_J + d(d+1)/2 - 1, for ``setting="bayesian"`` it is dim A_J.
    """
    if setting not in SETTINGS:
        raise ValueError("setting should be 'local' or 'bayesian', got %s" % setting)
    dimension = jordan_dim(blocks)
    if setting == "bayesian":
        return dimension
    if int(d) != d or d < 1:
        raise ValueError("The number of parameters must be a positive integer, got %s" % d)
    d = int(d)
    return dimension + d * (d + 1) // 2 - 1


def _check_povm(povm, dim, tolerances):
    povm = [as_operator(M, name="POVM element") for M in povm]
    if len(povm) == 0:
        raise ValueError("The POVM has no elements")
    for i, M in enumerate(povm):
        if M.shape != (dim, dim):
            raise ValueError(
                "Dimension mismatch: POVM element %d has shape %s, state has dim %d"
                % (i, M.shape, dim)
            )
    povm = [
        check_psd(M, name="POVM element %d" % i, psd_tol=tolerances.psd_tol)
        for i, M in enumerate(povm)
    ]
    residual = hs_norm(sum(povm) - np.eye(dim))
    if residual > tolerances.recon_tol * (1 + np.sqrt(dim)):
        raise SufficiencyError(
            "The POVM elements do not sum to the identity (residual %.3e)" % residual,
            check="POVM resolves the identity",
            residual=residual,
        )
    return povm


def classical_fisher(rho, derivs, povm, tolerances=None):
    """Return the classical Fisher information matrix of a measurement.

    J_ij = sum_x Tr(d_i M_x) Tr(d_j M_x) / Tr(rho M_x), where outcomes with
    probability Tr(rho M_x) <= fisher_floor are left out.

    Examples
    --------

    >>> p = 0.3
    >>> classical_fisher(np.diag([p, 1 - p]), [np.diag([1, -1])],
    >>>                  [np.diag([1, 0]), np.diag([0, 1])])
    array([[4.76190476]])  # 1/p + 1/(1-p)
    """
    tolerances = Tolerances.from_any(tolerances)
    rho = check_psd(rho, name="state", psd_tol=tolerances.psd_tol)
    derivs = [as_operator(D, name="derivative") for D in derivs]
    povm = _check_povm(povm, rho.shape[0], tolerances)
    fisher = np.zeros((len(derivs), len(derivs)))
    for M in povm:
        probability = np.trace(rho @ M).real
        if probability <= tolerances.fisher_floor:
            continue
        gradient = np.array([np.trace(D @ M).real for D in derivs])
        fisher += np.outer(gradient, gradient) / probability
    return fisher


def sld_fisher(rho, derivs, tolerances=None):
    """Return the SLD Fisher information matrix Re Tr(rho L_i L_j), where
    L_i is the symmetric logarithmic derivative of the i-th derivative."""
    tolerances = Tolerances.from_any(tolerances)
    rho = check_psd(rho, name="state", psd_tol=tolerances.psd_tol)
    slds = [sld(D, rho, tolerances=tolerances) for D in derivs]
    fisher = np.array(
        [[np.trace(rho @ Li @ Lj).real for Lj in slds] for Li in slds]
    )
    return (fisher + fisher.T) / 2
