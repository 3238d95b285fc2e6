"""Conditional expectations onto real *-subalgebras, preserving the
pairings with a reference operator rho."""

import numpy as np

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..Superoperator import Superoperator
from ..SufficiencyCertificate.FaithfulExtension import FaithfulExtension
from ..RealSubspace import closure_residuals, is_modular_invariant
from ..matcore import (
    check_psd,
    hermitize,
    herm_eig,
    min_eigenvalue,
    psd_inv_sqrt,
    psd_sqrt,
    retained_mask,
)


def _check_star_algebra(subspace, tolerances):
    flags = subspace.flags
    if all(flags[name] for name in ("contains_identity", "star_closed", "mult_closed")):
        return
    residuals = closure_residuals(subspace)
    for name in ("contains_identity", "star_closed", "mult_closed"):
        if residuals[name] > tolerances.member_tol:
            raise ValueError(
                "The subspace is not a *-subalgebra (%s residual %.3e)"
                % (name, residuals[name])
            )


def _check_modular_invariance(subspace, rho, tolerances, name="rho"):
    invariant, worst, index = is_modular_invariant(
        subspace, rho, tolerances=tolerances, return_details=True
    )
    if not invariant:
        raise SufficiencyError(
            "The algebra is not invariant under B -> %s B %s^-1: basis "
            "element %d is sent outside (residual %.3e)" % (name, name, index, worst),
            check="modular invariance",
            residual=worst,
        )


def _check_support_in_algebra(subspace, support, tolerances):
    is_member, residual = subspace.member(support, tolerances=tolerances)
    if not is_member:
        raise SufficiencyError(
            "rho is degenerate and its support projection is not in the "
            "algebra (residual %.3e)" % residual,
            check="support in algebra",
            residual=residual,
        )


def _corner_basis(corners, span_tol):
    """Return (basis, complex_basis) for the real span of the rectangular
    blocks G (kernel rows, support columns).

    The basis is complex-orthonormal when the span is closed under
    multiplication by i (real rank twice the complex rank), and
    real-orthonormal otherwise."""
    shape = corners[0].shape
    complex_rows = np.array([G.reshape(-1) for G in corners])
    real_rows = np.hstack([complex_rows.real, complex_rows.imag])

    def rank_and_rows(rows):
        # the corners of an orthonormal basis have singular values 0 or 1
        _, singular_values, Vh = np.linalg.svd(rows, full_matrices=False)
        if len(singular_values) == 0:
            return 0, Vh
        scale = max(singular_values.max(), 1.0)
        return int(np.sum(singular_values > span_tol * scale)), Vh

    real_rank, real_Vh = rank_and_rows(real_rows)
    if real_rank == 0:
        return [], False
    complex_rank, complex_Vh = rank_and_rows(complex_rows)
    if real_rank == 2 * complex_rank:
        return [complex_Vh[i].reshape(shape) for i in range(complex_rank)], True
    n = shape[0] * shape[1]
    return [
        (real_Vh[i, :n] + 1j * real_Vh[i, n:]).reshape(shape) for i in range(real_rank)
    ], False


def faithful_extension(subspace, rho, tolerances=None):
    """Return the FaithfulExtension sigma = rho + delta + kappa_tilde.

    With s = supp(rho) and kappa = I - s, delta = sum_k F_k rho F_k* where
    (F_k) is an orthonormal basis of kappa A s. The basis is taken
    complex-orthonormal when kappa A s is closed under multiplication by i,
    real-orthonormal otherwise. kappa_tilde is the part of kappa orthogonal
    to supp(delta).

    Everything is computed in an eigenbasis of rho, where F_k only has a
    (kernel, support) corner, so delta and kappa_tilde live in kappa.

    Examples
    --------

    >>> extension = faithful_extension(RealSubspace.full(2), np.diag([1, 0]))
    >>> extension.delta  # -> diag(0, 1)

    Parameters
    ----------

    subspace
      A real *-subalgebra invariant under B -> rho B rho^-1 and containing
      supp(rho).

    rho
      A PSD operator.

    tolerances
      A Tolerances instance (or dict of overrides, or None for defaults).
    """
    tolerances = Tolerances.from_any(tolerances)
    rho = check_psd(rho, name="rho", psd_tol=tolerances.psd_tol)
    dim = rho.shape[0]
    eigenvalues, U = herm_eig(rho)
    in_support = retained_mask(eigenvalues, rank_tol=tolerances.rank_tol) & (eigenvalues > 0)
    if in_support.all():
        zero = np.zeros((dim, dim), dtype=complex)
        return FaithfulExtension(rho, rho, zero, zero)
    V_s, V_k = U[:, in_support], U[:, ~in_support]
    s = V_s @ V_s.conj().T
    _check_modular_invariance(subspace, rho, tolerances)
    _check_support_in_algebra(subspace, s, tolerances)

    rho_s = hermitize(V_s.conj().T @ rho @ V_s)
    corners = [V_k.conj().T @ b @ V_s for b in subspace.basis]
    if len(corners):
        corner_basis, complex_basis = _corner_basis(corners, tolerances.span_tol)
    else:
        corner_basis, complex_basis = [], False
    delta_k = np.zeros((V_k.shape[1], V_k.shape[1]), dtype=complex)
    for G in corner_basis:
        delta_k += G @ rho_s @ G.conj().T
    delta_k = hermitize(delta_k)
    delta_values, W = herm_eig(delta_k)
    threshold = tolerances.rank_tol * max(eigenvalues[0], delta_values[0], 1.0)
    reached = W[:, delta_values > threshold]
    kappa_tilde_k = np.eye(V_k.shape[1]) - reached @ reached.conj().T

    delta = hermitize(V_k @ delta_k @ V_k.conj().T)
    kappa_tilde = hermitize(V_k @ kappa_tilde_k @ V_k.conj().T)
    sigma = hermitize(rho + delta + kappa_tilde)
    basis_Fk = [V_k @ G @ V_s.conj().T for G in corner_basis]
    extension = FaithfulExtension(
        rho, sigma, delta, kappa_tilde, basis_Fk=basis_Fk, complex_basis=complex_basis
    )

    checks = extension.verify(tolerances=tolerances)
    if not checks.all_checks_pass():
        failing = checks.filter("failing").checks[0]
        raise SufficiencyError(
            "Internal consistency error in the faithful extension: check "
            "'%s' failed (value %.3e)" % (failing.check, failing.value),
            check=failing.check,
            residual=failing.value,
        )
    invariant, worst, index = is_modular_invariant(
        subspace, sigma, tolerances=tolerances, return_details=True
    )
    if not invariant:
        raise SufficiencyError(
            "Internal consistency error in the faithful extension: sigma B "
            "sigma^-1 leaves the algebra for basis element %d (residual %.3e)"
            % (index, worst),
            check="sigma modular invariance",
            residual=worst,
        )
    return extension


def conditional_expectation(subspace, rho, tolerances=None, return_extension=False):
    """Return the real conditional expectation onto the subspace which
    preserves the pairings with rho (Re Tr rho B = Re Tr rho alpha(B)).

    For rho > 0 the map is B -> rho0^-1/2 P(rho^1/2 B rho^1/2) rho0^-1/2 with
    P the orthogonal projection on the subspace and rho0 = P(rho). For a
    degenerate rho (whose support must belong to the subspace), the same
    formula is applied to the faithful extension sigma of rho, which has
    the same compression on supp(rho).

    When the subspace is closed under multiplication by i, the result is
    complex-linear.

    Examples
    --------

    >>> alpha = conditional_expectation(diagonal_algebra, np.diag([0.3, 0.7]))
    >>> alpha(np.array([[1, 2], [2, 1]]))  # -> identity

    Raises a SufficiencyError if B -> rho B rho^-1 sends a basis element out
    of the subspace (the message gives the element index), or if rho is
    degenerate and supp(rho) is not in the subspace.
    """
    tolerances = Tolerances.from_any(tolerances)
    rho = check_psd(rho, name="rho", psd_tol=tolerances.psd_tol)
    _check_star_algebra(subspace, tolerances)
    _check_modular_invariance(subspace, rho, tolerances)
    extension = faithful_extension(subspace, rho, tolerances=tolerances)
    sigma = extension.sigma
    rho0 = hermitize(subspace.project(sigma))
    relative_lowest = min_eigenvalue(rho0) / np.linalg.norm(rho0, 2)
    if relative_lowest <= tolerances.rank_tol:
        raise SufficiencyError(
            "The projection of the (extended) reference on the algebra is "
            "not faithful (relative lowest eigenvalue %.3e)" % relative_lowest,
            check="projected reference support",
            residual=relative_lowest,
        )
    sigma_half = psd_sqrt(sigma, rank_tol=tolerances.rank_tol)
    rho0_inv_half = psd_inv_sqrt(rho0, rank_tol=tolerances.rank_tol)

    def expectation(B):
        return rho0_inv_half @ subspace.project(sigma_half @ B @ sigma_half) @ rho0_inv_half

    alpha = Superoperator.from_function(
        rho.shape[0],
        expectation,
        label="conditional expectation onto %s" % (subspace.label or "subspace"),
    )
    if return_extension:
        return alpha, extension
    return alpha
