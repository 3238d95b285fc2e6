"""Equivalent forms of the rho-modular invariance of a *-subalgebra."""

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..RealSubspace import RealSubspace, is_modular_invariant, modular_conjugation
from ..Model import d_tilde_function
from ..matcore import hermitize, hs_norm
from .conditional_expectations import conditional_expectation
from .map_properties import bimodule_residual
from .verification import sufficiency_residuals


def d_tilde_invariance(subspace, rho, tolerances=None, return_details=False):
    """Return True iff D~_rho maps every basis element into the subspace.

    With ``return_details=True``, return (is_invariant, worst_residual).
    """
    tolerances = Tolerances.from_any(tolerances)
    d_tilde_map = d_tilde_function(rho, tolerances=tolerances)
    worst = 0.0
    for b in subspace.basis:
        image = d_tilde_map(b)
        worst = max(worst, subspace.membership_residual(image) / (1 + hs_norm(image)))
    invariant = worst <= tolerances.member_tol
    if return_details:
        return invariant, worst
    return invariant


def _span_distance(first, second):
    """Largest relative membership residual of each basis in the other."""
    residuals = [
        space.membership_residual(b) / (1 + hs_norm(b))
        for space, other in ((first, second), (second, first))
        for b in other.basis
    ]
    return max(residuals + [0.0])


def modular_equivalence_checks(subspace, rho, tolerances=None):
    """Return a ResidualChecks comparing the equivalent conditions for a
    *-subalgebra A and a PSD rho (whose support is in A when degenerate):

    - rho A rho^-1 is included in A;
    - rho A rho^-1 equals rho0 A rho0^-1, with rho0 the projection of rho;
    - D~_rho(A) is included in A;
    - a conditional expectation onto A preserving the rho pairings exists.

    Each check records a boolean outcome; the conditions agree when all
    checks have the same pass status.
    """
    tolerances = Tolerances.from_any(tolerances)
    checks = ResidualChecks(title="modular invariance conditions")
    dim = subspace.dim
    _, worst, _ = is_modular_invariant(
        subspace, rho, tolerances=tolerances, return_details=True
    )
    checks.add("rho A rho^-1 in A", worst, tolerances.member_tol)

    rho0 = hermitize(subspace.project(rho))
    images = [
        RealSubspace.span(
            [conjugation(b) for b in subspace.basis], dim=dim, span_tol=tolerances.span_tol
        )
        for conjugation in (
            modular_conjugation(rho, rank_tol=tolerances.rank_tol),
            modular_conjugation(rho0, rank_tol=tolerances.rank_tol),
        )
    ]
    checks.add(
        "rho A rho^-1 = rho0 A rho0^-1",
        _span_distance(*images),
        tolerances.member_tol,
    )
    _, d_tilde_worst = d_tilde_invariance(
        subspace, rho, tolerances=tolerances, return_details=True
    )
    checks.add("D~_rho(A) in A", d_tilde_worst, tolerances.member_tol)

    try:
        alpha = conditional_expectation(subspace, rho, tolerances=tolerances)
        pairing = sufficiency_residuals([rho], alpha)[0]
        residual = max(pairing, bimodule_residual(alpha, subspace))
        checks.add("conditional expectation exists", residual, tolerances.recon_tol)
    except SufficiencyError as err:
        checks.add(
            "conditional expectation exists", float("inf"), tolerances.recon_tol, message=str(err)
        )
    return checks
