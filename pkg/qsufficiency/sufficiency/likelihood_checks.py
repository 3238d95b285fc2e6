"""Membership of likelihood ratios in sufficient algebras."""

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..Model import sqrt_likelihood_ratio, sld
from ..matcore import geninv, hermitize, hs_norm


def likelihood_in_algebra_check(certificate, model, tolerances=None):
    """Return a ResidualChecks with the membership of every likelihood
    ratio in the certificate's Jordan algebra A_J.

    The ratios are computed from X0 = X omega^-1 and rho0 = rho omega^-1,
    which commute with omega and belong to A_J, so that R_X and L_X are
    functions of elements of A_J. Elements whose ratio cannot be computed
    give a failing check (this is a report, nothing is raised).
    """
    tolerances = Tolerances.from_any(tolerances)
    omega_inverse = geninv(certificate.omega, rank_tol=tolerances.rank_tol)
    rho0 = hermitize(model.rho @ omega_inverse)
    checks = ResidualChecks(title="likelihood ratio memberships")
    for element in model.elements:
        name = "%s ratio of %s in A_J" % (
            "R" if element.kind == "state" else "L",
            element.label,
        )
        X0 = hermitize(element.X @ omega_inverse)
        try:
            if element.kind == "state":
                ratio = sqrt_likelihood_ratio(X0, rho0, tolerances=tolerances)
            else:
                ratio = sld(X0, rho0, tolerances=tolerances)
        except (SufficiencyError, ValueError) as err:
            checks.add(name, float("inf"), tolerances.member_tol, message=str(err))
            continue
        residual = certificate.A_J.membership_residual(ratio) / (1 + hs_norm(ratio))
        checks.add(name, residual, tolerances.member_tol)
    return checks


def likelihood_ratio_residuals(subspace, model, tolerances=None):
    """Return a ResidualChecks with the relative membership residuals of
    the model's likelihood ratios in any subspace (the model does not need
    to be restricted)."""
    tolerances = Tolerances.from_any(tolerances)
    checks = ResidualChecks(title="likelihood ratio memberships")
    for element, ratio in zip(model.elements, model.likelihood_ratio_set()):
        residual = subspace.membership_residual(ratio) / (1 + hs_norm(ratio))
        checks.add("ratio of %s" % element.label, residual, tolerances.member_tol)
    return checks
