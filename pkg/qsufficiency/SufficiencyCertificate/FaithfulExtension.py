"""Implements the FaithfulExtension class."""

import numpy as np

from ..Tolerances import Tolerances
from ..ResidualCheck import ResidualChecks
from ..matcore import hs_norm, matrix_to_json, min_eigenvalue


class FaithfulExtension:
    """Strictly positive extension sigma = rho + delta + kappa_tilde of a
    degenerate reference rho, adapted to a *-subalgebra A.

    With s = supp(rho) and kappa = I - s, delta = sum_k F_k rho F_k* where
    the F_k form a basis of kappa A s, and kappa_tilde is the projection
    on the part of kappa not reached by delta. The three terms have
    mutually orthogonal supports and A stays invariant under
    B -> sigma B sigma^-1.

    Parameters
    ----------

    rho, sigma, delta, kappa_tilde
      The reference, its extension, and the two added terms.

    basis_Fk
      The list of operators F_k used to build delta.

    complex_basis
      Whether the F_k form a complex-orthonormal basis (when kappa A s is
      closed under multiplication by i) or a real-orthonormal one.
    """

    def __init__(self, rho, sigma, delta, kappa_tilde, basis_Fk=(), complex_basis=False):
        """Initialize."""
        self.rho = rho
        self.sigma = sigma
        self.delta = delta
        self.kappa_tilde = kappa_tilde
        self.basis_Fk = list(basis_Fk)
        self.complex_basis = complex_basis

    @property
    def is_trivial(self):
        """True when rho was already faithful (sigma = rho)."""
        return hs_norm(self.sigma - self.rho) == 0

    def verify(self, tolerances=None):
        """Return a ResidualChecks for the extension invariants."""
        tolerances = Tolerances.from_any(tolerances)
        checks = ResidualChecks(title="faithful extension checks")
        reconstruction = hs_norm(self.sigma - self.rho - self.delta - self.kappa_tilde)
        checks.add("sigma = rho + delta + kappa_tilde", reconstruction, tolerances.recon_tol)
        checks.add(
            "sigma strictly positive (relative)",
            min_eigenvalue(self.sigma) / np.linalg.norm(self.sigma, 2),
            tolerances.rank_tol,
            comparison="min",
        )
        scale = 1 + hs_norm(self.sigma)
        orthogonality = max(
            hs_norm(self.rho @ self.delta),
            hs_norm(self.delta @ self.kappa_tilde),
            hs_norm(self.rho @ self.kappa_tilde),
        )
        checks.add("orthogonal supports", orthogonality / scale, tolerances.recon_tol)
        idempotence = hs_norm(self.kappa_tilde @ self.kappa_tilde - self.kappa_tilde)
        checks.add("kappa_tilde projection", idempotence, tolerances.recon_tol)
        return checks

    def to_dict(self):
        return {
            "sigma": matrix_to_json(self.sigma),
            "delta": matrix_to_json(self.delta),
            "kappa_tilde": matrix_to_json(self.kappa_tilde),
            "basis_Fk": [matrix_to_json(F) for F in self.basis_Fk],
            "complex_basis": self.complex_basis,
        }

    def __repr__(self):
        return "FaithfulExtension(dim=%d, %d F_k%s)" % (
            self.sigma.shape[0],
            len(self.basis_Fk),
            ", complex basis" if self.complex_basis else "",
        )
