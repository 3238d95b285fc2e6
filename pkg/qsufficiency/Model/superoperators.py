"""Superoperators attached to a reference operator rho: the modular map,
the Jordan multiplication J_rho, and the operators D~_rho and D_rho."""

import numpy as np

from ..Tolerances import Tolerances
from ..matcore import check_psd, herm_eig
from ..RealSubspace import modular_conjugation
from ..Superoperator import Superoperator


def modular_superop(rho, tolerances=None):
    """Return the real-linear map B -> rho B rho^-1 (generalized inverse,
    so operators supported off supp(rho) are sent to 0)."""
    tolerances = Tolerances.from_any(tolerances)
    rho = check_psd(rho, name="rho", psd_tol=tolerances.psd_tol)
    conjugation = modular_conjugation(rho, rank_tol=tolerances.rank_tol)
    return Superoperator.from_function(rho.shape[0], conjugation, label="modular")


def jordan_superop(rho):
    """Return J_rho: B -> rho o B = (rho B + B rho)/2."""
    rho = np.asarray(rho, dtype=complex)
    return Superoperator.from_function(
        rho.shape[0], lambda B: (rho @ B + B @ rho) / 2, label="J_rho"
    )


def d_tilde_function(rho, tolerances=None):
    """Return the function B -> D~_rho(B).

    In the eigenbasis of rho, the matrix unit |i><j| is multiplied by
    (p_i - p_j) / (p_i + p_j), and by 0 when p_i + p_j vanishes.
    """
    tolerances = Tolerances.from_any(tolerances)
    rho = check_psd(rho, name="rho", psd_tol=tolerances.psd_tol)
    p, U = herm_eig(rho)
    sums = p[:, None] + p[None, :]
    kept = sums > tolerances.rank_tol * max(p.max(), 1e-300)
    multiplier = np.zeros(sums.shape)
    multiplier[kept] = (p[:, None] - p[None, :])[kept] / sums[kept]

    def d_tilde_map(B):
        return U @ (multiplier * (U.conj().T @ B @ U)) @ U.conj().T

    return d_tilde_map


def d_tilde(rho, tolerances=None):
    """Return D~_rho = (L_rho - R_rho) / (L_rho + R_rho) as a Superoperator,
    L_rho and R_rho being the left and right multiplications by rho."""
    rho = np.asarray(rho, dtype=complex)
    return Superoperator.from_function(
        rho.shape[0], d_tilde_function(rho, tolerances=tolerances), label="D~_rho"
    )


def d_rho(rho, tolerances=None):
    """Return D_rho = i D~_rho as a Superoperator."""
    rho = np.asarray(rho, dtype=complex)
    function = d_tilde_function(rho, tolerances=tolerances)
    return Superoperator.from_function(
        rho.shape[0], lambda B: 1j * function(B), label="D_rho"
    )
