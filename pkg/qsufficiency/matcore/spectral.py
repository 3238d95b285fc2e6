"""Hermitian eigendecomposition and the matrix functions built on it."""

import numpy as np
import scipy.linalg

from ..Tolerances import Tolerances
from .hilbert_schmidt import as_operator, hs_norm


def hermitian_residual(A):
    """Return ||A - A*||_F."""
    return hs_norm(A - A.conj().T)


def is_hermitian(A, hermitian_tol=Tolerances.hermitian_tol):
    """Return True iff ||A - A*|| <= hermitian_tol * (1 + ||A||)."""
    A = as_operator(A)
    return hermitian_residual(A) <= hermitian_tol * (1 + hs_norm(A))


def hermitize(A):
    """Return the Hermitian part (A + A*)/2."""
    A = np.asarray(A, dtype=complex)
    return (A + A.conj().T) / 2


def check_hermitian(A, name="operator", hermitian_tol=Tolerances.hermitian_tol):
    """Return the hermitized A, or raise a ValueError if A is not Hermitian
    within tolerance."""
    A = as_operator(A, name=name)
    if not is_hermitian(A, hermitian_tol=hermitian_tol):
        raise ValueError(
            "%s is not Hermitian (residual %.3e)" % (name, hermitian_residual(A))
        )
    return hermitize(A)


def herm_eig(A, hermitian_tol=Tolerances.hermitian_tol):
    """Return (eigenvalues, eigenvectors) of Hermitian A, eigenvalues sorted
    in descending order and eigenvectors as the columns of a unitary.

    Examples
    --------

    >>> eigenvalues, U = herm_eig(np.diag([1, -1]))
    >>> eigenvalues
    array([ 1., -1.])
    """
    A = check_hermitian(A, hermitian_tol=hermitian_tol)
    eigenvalues, eigenvectors = scipy.linalg.eigh(A)
    order = np.argsort(-eigenvalues, kind="stable")
    return eigenvalues[order], eigenvectors[:, order]


def retained_mask(eigenvalues, rank_tol=Tolerances.rank_tol):
    """Mask of the eigenvalues considered nonzero (|l| > rank_tol * max|l|)."""
    scale = np.max(np.abs(eigenvalues)) if len(eigenvalues) else 0.0
    if scale == 0:
        return np.zeros(len(eigenvalues), dtype=bool)
    return np.abs(eigenvalues) > rank_tol * scale


def matfun(A, f, on_kernel="zero", rank_tol=Tolerances.rank_tol):
    """Apply a scalar function to the spectrum of a Hermitian operator.

    Parameters
    ----------

    A
      A Hermitian matrix.

    f
      A vectorized function of real numbers (e.g. ``np.sqrt``).

    on_kernel
      Either "zero" (``f`` is only applied to eigenvalues above
      ``rank_tol * max|eigenvalue|``, and the kernel is mapped to 0, which is
      the generalized-inverse convention), "identity" (same, but the kernel
      is mapped to 1), or "apply" (``f`` applied to every eigenvalue).

    rank_tol
      Relative threshold below which eigenvalues form the kernel.
    """
    eigenvalues, U = herm_eig(A)
    if on_kernel == "apply":
        mask = np.ones(len(eigenvalues), dtype=bool)
    elif on_kernel in ("zero", "identity"):
        mask = retained_mask(eigenvalues, rank_tol=rank_tol)
    else:
        raise ValueError("Unknown on_kernel option: %s" % on_kernel)
    values = np.zeros(len(eigenvalues))
    if on_kernel == "identity":
        values[:] = 1.0
    with np.errstate(all="ignore"):
        values[mask] = f(eigenvalues[mask])
    if not np.all(np.isfinite(values)):
        bad = eigenvalues[mask][~np.isfinite(values[mask])]
        raise ValueError("Function undefined on eigenvalue(s) %s" % bad)
    return hermitize((U * values) @ U.conj().T)


def min_eigenvalue(A):
    return herm_eig(A)[0][-1]


def check_psd(A, name="operator", psd_tol=Tolerances.psd_tol):
    """Return the hermitized A, or raise a ValueError if A has an eigenvalue
    below ``-psd_tol * ||A||``."""
    A = check_hermitian(A, name=name)
    lowest = min_eigenvalue(A)
    if lowest < -psd_tol * max(np.linalg.norm(A, 2), 1e-300):
        raise ValueError(
            "%s is not positive semi-definite (negative eigenvalue %.3e)"
            % (name, lowest)
        )
    return A


def is_psd(A, psd_tol=Tolerances.psd_tol):
    try:
        check_psd(A, psd_tol=psd_tol)
        return True
    except ValueError:
        return False


def geninv(A, rank_tol=Tolerances.rank_tol):
    """Moore-Penrose inverse of a Hermitian operator (zero on the kernel)."""
    return matfun(A, lambda t: 1 / t, rank_tol=rank_tol)


def psd_sqrt(A, rank_tol=Tolerances.rank_tol, psd_tol=Tolerances.psd_tol):
    """Square root of a PSD operator (eigenvalues below tolerance set to 0)."""
    A = check_psd(A, psd_tol=psd_tol)
    return matfun(A, lambda t: np.sqrt(np.maximum(t, 0)), rank_tol=rank_tol)


def psd_inv_sqrt(A, rank_tol=Tolerances.rank_tol, psd_tol=Tolerances.psd_tol):
    """Generalized inverse square root of a PSD operator."""
    A = check_psd(A, psd_tol=psd_tol)
    return matfun(A, lambda t: 1 / np.sqrt(t), rank_tol=rank_tol)


def support_basis(A, rank_tol=Tolerances.rank_tol, psd_tol=Tolerances.psd_tol):
    """Return an isometry whose columns span the support of PSD A."""
    A = check_psd(A, psd_tol=psd_tol)
    eigenvalues, U = herm_eig(A)
    mask = retained_mask(eigenvalues, rank_tol=rank_tol) & (eigenvalues > 0)
    return U[:, mask]


def support_proj(A, rank_tol=Tolerances.rank_tol, psd_tol=Tolerances.psd_tol):
    """Return the orthogonal projection onto the support of PSD A.

    Examples
    --------

    >>> support_proj(np.diag([0.7, 0.3, 0]))  # -> diag(1, 1, 0)
    """
    V = support_basis(A, rank_tol=rank_tol, psd_tol=psd_tol)
    return V @ V.conj().T


def eigenprojections(A, cluster_tol, hermitian_tol=Tolerances.hermitian_tol, scale=None):
    """Return (eigenvalues, projections) for the distinct eigenvalues of A.

    Eigenvalues closer than ``cluster_tol`` (relative to ``scale``, by
    default the largest absolute eigenvalue) are merged. Eigenvalues are
    listed in descending order.
    """
    eigenvalues, U = herm_eig(A, hermitian_tol=hermitian_tol)
    if scale is None:
        scale = max(np.max(np.abs(eigenvalues)), 1e-300)
    groups = [[0]]
    for i in range(1, len(eigenvalues)):
        if eigenvalues[groups[-1][-1]] - eigenvalues[i] > cluster_tol * scale:
            groups.append([i])
        else:
            groups[-1].append(i)
    values = [np.mean(eigenvalues[group]) for group in groups]
    projections = [U[:, group] @ U[:, group].conj().T for group in groups]
    return values, projections


def jordan_product(A, B):
    """Return A o B = (AB + BA)/2."""
    return (A @ B + B @ A) / 2


def commutator(A, B):
    return A @ B - B @ A


def is_unitary(U, tol=Tolerances.ortho_tol):
    U = np.asarray(U)
    return hs_norm(U.conj().T @ U - np.eye(U.shape[1])) <= tol * (1 + U.shape[1])
