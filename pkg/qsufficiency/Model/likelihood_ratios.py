"""Square-root likelihood ratios and symmetric logarithmic derivatives."""

import numpy as np

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..matcore import (
    check_psd,
    check_hermitian,
    herm_eig,
    hermitize,
    hs_norm,
    psd_sqrt,
    psd_inv_sqrt,
)


def sqrt_likelihood_ratio(X, rho, tolerances=None):
    """Return the minimal-norm PSD solution R of X = R rho R.

    R = X^1/2 (X^1/2 rho X^1/2)^-1/2 X^1/2, with generalized inverses.

    Raises a SufficiencyError when X is not absolutely continuous with
    respect to rho (the reconstruction residual exceeds recon_tol).
    """
    tolerances = Tolerances.from_any(tolerances)
    X = check_psd(X, name="X", psd_tol=tolerances.psd_tol)
    rho = check_psd(rho, name="rho", psd_tol=tolerances.psd_tol)
    X_half = psd_sqrt(X, rank_tol=tolerances.rank_tol)
    middle = hermitize(X_half @ rho @ X_half)
    R = hermitize(
        X_half
        @ psd_inv_sqrt(middle, rank_tol=tolerances.rank_tol, psd_tol=np.inf)
        @ X_half
    )
    residual = hs_norm(R @ rho @ R - X)
    if residual > tolerances.recon_tol * (1 + hs_norm(X)):
        raise SufficiencyError(
            "X is not absolutely continuous with respect to rho "
            "(||R rho R - X|| = %.3e)" % residual,
            check="sqrt likelihood ratio",
            residual=residual,
        )
    return R


def sld(X, rho, tolerances=None):
    """Return the minimal-norm Hermitian solution L of X = (L rho + rho L)/2.

    In the eigenbasis of rho (eigenvalues p_i), L_ij = 2 X_ij / (p_i + p_j)
    when p_i + p_j is above rank_tol, and 0 otherwise, which puts L in the
    orthogonal complement of the kernel of J_rho.

    Raises a SufficiencyError when X is not in the range of J_rho.
    """
    tolerances = Tolerances.from_any(tolerances)
    X = check_hermitian(X, name="X", hermitian_tol=tolerances.hermitian_tol)
    rho = check_psd(rho, name="rho", psd_tol=tolerances.psd_tol)
    p, U = herm_eig(rho)
    X_eigenbasis = U.conj().T @ X @ U
    denominators = p[:, None] + p[None, :]
    kept = denominators > tolerances.rank_tol * max(p.max(), 1e-300)
    L_eigenbasis = np.zeros_like(X_eigenbasis)
    L_eigenbasis[kept] = 2 * X_eigenbasis[kept] / denominators[kept]
    L = hermitize(U @ L_eigenbasis @ U.conj().T)
    residual = hs_norm((L @ rho + rho @ L) / 2 - X)
    if residual > tolerances.recon_tol * (1 + hs_norm(X)):
        raise SufficiencyError(
            "X not in range of J_rho (||rho o L - X|| = %.3e)" % residual,
            check="symmetric logarithmic derivative",
            residual=residual,
        )
    return L


def likelihood_ratio(element, rho, tolerances=None):
    """Return R_X for state-kind elements and L_X for derivative-kind ones."""
    if element.kind == "state":
        return sqrt_likelihood_ratio(element.X, rho, tolerances=tolerances)
    return sld(element.X, rho, tolerances=tolerances)
