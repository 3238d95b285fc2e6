"""Full property suite on one model: every construction of the package is run
and cross-checked, and all residuals are gathered in one ResidualChecks."""

from proglog import default_bar_logger

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..matcore import derive_seeds, hs_norm
from ..sufficiency import (
    adjoint_preservation_residual,
    bimodule_residual,
    conditional_expectation,
    modular_orbit_star,
    fixed_point_pipeline,
    likelihood_in_algebra_check,
    likelihood_ratio_residuals,
    minimal_sufficient_jordan,
    minimal_sufficient_star,
    modular_equivalence_checks,
    schwarz_residual,
    sufficiency_checks,
    sufficient_enlargements,
    support_residual,
)
from ..structure import identify_structure, jordan_dim, ki_decompose


def _span_distance(first, second):
    residuals = [
        space.membership_residual(b) / (1 + hs_norm(b))
        for space, other in ((first, second), (second, first))
        for b in other.basis
    ]
    return max(residuals + [0.0])


def verify_model(model, tolerances=None, seed=0, n_enlargements=4, logger=None):
    """Run the property suite on a model and return (checks, results).

    The model is restricted to H_S, then:

    - the minimal sufficient *-algebra contains every likelihood ratio,
      agrees with the *-algebra of the modular orbit generators and is
      contained in a catalogue of sufficient enlargements;
    - the conditional expectation onto it is sufficient, Schwarz, preserves
      adjoints and satisfies the bimodule law;
    - the modular invariance conditions agree and the supports of rho and
      its projection are compared;
    - the minimal sufficient Jordan algebra is computed (with its witness)
      and its identified structure matches its dimension;
    - the fixed-point pipeline certificate is verified, the likelihood
      ratios lie in A_J, and the Koashi-Imoto decomposition reassembles
      the model.

    A construction raising a SufficiencyError gives a failing check.
    """
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, min_time_interval=0.2)
    seeds = derive_seeds(seed, 4)
    checks = ResidualChecks(title="model properties")
    results = {}

    def failed(stage, error):
        checks.add(stage, float("inf"), 0, message="%s: %s" % (stage, error))
        logger(message="%s failed: %s" % (stage, error))

    restricted = model.restrict_to_HS()
    results["dim"] = model.dim
    results["dim H_S"] = restricted.dim
    results["mixed model"] = restricted.is_mixed()

    logger(message="Minimal sufficient *-algebra")
    try:
        algebra = minimal_sufficient_star(restricted, tolerances=tolerances)
    except SufficiencyError as error:
        failed("minimal sufficient *-algebra", error)
        return checks, results
    results["dim A_min"] = algebra.dimension
    checks.extend(likelihood_ratio_residuals(algebra, restricted, tolerances), prefix="A_min")
    checks.add(
        "modular orbit generators give A_min",
        _span_distance(algebra, modular_orbit_star(restricted, tolerances=tolerances)),
        tolerances.member_tol,
    )
    enlargements = sufficient_enlargements(
        algebra, restricted, n_enlargements=n_enlargements, seed=seeds[0], tolerances=tolerances
    )
    for enlargement in enlargements:
        checks.add(
            "A_min in %s" % enlargement.label,
            max(
                [enlargement.membership_residual(b) for b in algebra.basis] + [0.0]
            ),
            tolerances.member_tol,
        )

    logger(message="Conditional expectation onto A_min")
    try:
        alpha = conditional_expectation(algebra, restricted.rho, tolerances=tolerances)
    except SufficiencyError as error:
        failed("conditional expectation", error)
        return checks, results
    checks.extend(sufficiency_checks(restricted, alpha, tolerances))
    checks.add(
        "Schwarz inequality",
        schwarz_residual(alpha, seed=seeds[1], tolerances=tolerances),
        -tolerances.sufficiency_tol,
        comparison="min",
    )
    checks.add(
        "adjoint preserved",
        adjoint_preservation_residual(alpha, seed=seeds[2], tolerances=tolerances),
        tolerances.recon_tol,
    )
    checks.add("bimodule law", bimodule_residual(alpha, algebra), tolerances.sufficiency_tol)
    checks.extend(modular_equivalence_checks(algebra, restricted.rho, tolerances))
    supports = support_residual(algebra, restricted.rho, tolerances)
    checks.add("supp rho0 >= supp rho", supports["inclusion"], tolerances.recon_tol)

    logger(message="Minimal sufficient Jordan algebra")
    try:
        jordan_algebra, _ = minimal_sufficient_jordan(
            restricted, tolerances=tolerances, star_algebra=algebra
        )
        jordan_structure = identify_structure(
            jordan_algebra, mode="jordan", tolerances=tolerances, seed=seeds[3]
        )
    except SufficiencyError as error:
        failed("minimal sufficient Jordan algebra", error)
        return checks, results
    results["dim A_J min"] = jordan_algebra.dimension
    results["A_J blocks"] = [str(block) for block in jordan_structure.blocks]
    checks.add(
        "jordan_dim of the blocks = dim A_J",
        abs(jordan_dim(jordan_structure.blocks) - jordan_algebra.dimension),
        0,
    )

    logger(message="Fixed-point pipeline")
    try:
        certificate = fixed_point_pipeline(restricted, alpha, tolerances=tolerances, seed=seed)
        ki = ki_decompose(restricted, certificate, tolerances=tolerances, seed=seed)
    except SufficiencyError as error:
        failed("fixed-point pipeline", error)
        return checks, results
    results["certificate"] = certificate.to_dict(with_bases=False)
    results["KI blocks"] = [str(block) for block in ki.blocks]
    checks.extend(certificate.checks, prefix="certificate")
    checks.extend(likelihood_in_algebra_check(certificate, restricted, tolerances))
    checks.extend(ki.checks, prefix="KI")
    return checks, results
