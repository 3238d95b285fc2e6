"""From a sufficient positive unital map to the fixed-point Jordan algebra,
the supporting operator omega and the sufficient conditional expectations.
"""

import numpy as np
import scipy.linalg
from proglog import default_bar_logger

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..Superoperator import Superoperator
from ..SufficiencyCertificate import SufficiencyCertificate
from ..RealSubspace import RealSubspace, generate_star, closure_residuals
from ..matcore import (
    as_generator,
    devectorize,
    vectorize,
    geninv,
    hermitian_basis_matrix,
    hermitize,
    herm_eig,
    hs_norm,
    psd_sqrt,
)
from .map_properties import (
    faithfulness_residual,
    hermiticity_residual,
    is_positive_sampled,
    is_unital,
    jordan_ce_residuals,
    bimodule_residual,
    operator_norm_sampled,
    schwarz_residual,
)
from .verification import model_operators, sufficiency_checks


def fixed_point_projection(T, tolerances=None):
    """Return (P, fixed_vectors): the spectral projection of the real matrix
    T onto its eigenvalue 1 (along the other generalized eigenspaces), and
    an orthonormal basis (columns) of the fixed points.

    With R and L the right and left null spaces of T - I, the projection is
    R (L^T R)^-1 L^T. Singular values of T - I below
    fixed_point_tol * max(1, ||T||) count as zero (an absolute threshold:
    T - I may be pure rounding noise). Raises a SufficiencyError if the
    eigenvalue 1 is missing or not semisimple.
    """
    tolerances = Tolerances.from_any(tolerances)
    shifted = T - np.eye(T.shape[0])
    U, singular_values, Vh = scipy.linalg.svd(shifted)
    threshold = tolerances.fixed_point_tol * max(1.0, np.linalg.norm(T, 2))
    null = singular_values <= threshold
    right = Vh[null].T
    left = U[:, null]
    pairing = left.T @ right
    if right.shape[1] == 0:
        raise SufficiencyError(
            "The eigenvalue 1 of (id + alpha)/2 is missing (smallest singular "
            "value of T - I: %.3e)" % singular_values.min(),
            check="fixed-point projection",
        )
    lowest = np.linalg.svd(pairing, compute_uv=False).min()
    if lowest < tolerances.fixed_point_tol:
        raise SufficiencyError(
            "The eigenvalue 1 of (id + alpha)/2 is not semisimple (multiplicity "
            "%d, left-right pairing %.3e)" % (right.shape[1], lowest),
            check="fixed-point projection",
            residual=lowest,
        )
    return right @ np.linalg.solve(pairing, left.T), right


def power_limit(T, tolerances=None):
    """Return (limit, n_squarings): the limit of the powers T^n computed by
    repeated squaring, stopped when two successive squares differ by less
    than power_tol (entrywise) or after power_max_iterations squarings."""
    tolerances = Tolerances.from_any(tolerances)
    M = np.array(T, dtype=float)
    for iteration in range(1, int(tolerances.power_max_iterations) + 1):
        square = M @ M
        change = np.abs(square - M).max()
        M = square
        if change < tolerances.power_tol:
            return M, iteration
    return M, int(tolerances.power_max_iterations)


def pipeline_prechecks(model, alpha, tolerances=None, seed=0):
    """Return the ResidualChecks that a map must pass to enter the
    pipeline: sufficiency for the model, sampled positivity, unitality and
    preservation of Hermitian operators."""
    tolerances = Tolerances.from_any(tolerances)
    checks = ResidualChecks(title="pipeline pre-checks")
    checks.extend(sufficiency_checks(model, alpha, tolerances=tolerances))
    _, lowest = is_positive_sampled(alpha, seed=seed, tolerances=tolerances)
    checks.add("positive (sampled)", lowest, -tolerances.psd_tol, comparison="min")
    _, unital_residual = is_unital(alpha, tolerances=tolerances)
    checks.add("unital", unital_residual, tolerances.recon_tol * (1 + np.sqrt(alpha.dim)))
    checks.add("Hermitian to Hermitian", hermiticity_residual(alpha), tolerances.recon_tol)
    return checks


def verify_certificate(certificate, model, tolerances=None, seed=0):
    """Return a ResidualChecks with every invariant of the certificate.

    Checks cover omega (strict positivity, centrality in A_C, projections
    equal to I, the pairing Re Tr omega B = Re Tr omega beta_J(B)), the model
    elements (X omega^-1 in A_J and equal to the projections of X), beta_J
    (idempotent, positive, faithful, fixed on A_J, sufficient, Jordan
    conditional expectation laws), the norm and Schwarz inequality of
    alpha, the bimodule laws and sufficiency for the model and omega of
    beta_R and beta_C, the Jordan closure of A_J and the power-iteration
    cross-check.
    """
    tolerances = Tolerances.from_any(tolerances)
    rng = as_generator(seed)
    cert = certificate
    dim = cert.dim
    identity = np.eye(dim)
    omega = cert.omega
    omega_norm = hs_norm(omega)
    checks = ResidualChecks(title="certificate checks")

    lowest = herm_eig(omega)[0][-1]
    checks.add(
        "omega strictly positive", lowest, tolerances.omega_min_eigenvalue, comparison="min"
    )
    commutation = max([hs_norm(omega @ b - b @ omega) for b in cert.A_C.basis] + [0.0])
    checks.add(
        "omega commutes with A_C",
        commutation,
        tolerances.commutation_tol * (1 + omega_norm),
    )
    for name, algebra in (("A_J", cert.A_J), ("A_R", cert.A_R), ("A_C", cert.A_C)):
        residual = hs_norm(algebra.project(omega) - identity)
        checks.add("projection of omega on %s = I" % name, residual, tolerances.recon_tol)
    omega_vector = vectorize(omega)
    pairing = np.abs(omega_vector - cert.beta_J.matrix.T @ omega_vector).max()
    checks.add(
        "Re Tr omega B = Re Tr omega beta_J(B)",
        pairing,
        tolerances.sufficiency_tol * (1 + omega_norm),
    )

    omega_inverse = geninv(omega, rank_tol=tolerances.rank_tol)
    operators, labels = model_operators(model)
    for X, label in zip(operators, labels):
        Y = X @ omega_inverse
        scale = 1 + hs_norm(Y)
        checks.add(
            "X omega^-1 in A_J (%s)" % label,
            cert.A_J.membership_residual(Y) / scale,
            tolerances.member_tol,
        )
        projections_gap = max(
            hs_norm(algebra.project(X) - Y) for algebra in (cert.A_J, cert.A_R, cert.A_C)
        )
        checks.add(
            "projections of X equal X omega^-1 (%s)" % label,
            projections_gap / scale,
            tolerances.member_tol,
        )
        checks.add(
            "omega commutes with X (%s)" % label,
            hs_norm(omega @ X - X @ omega),
            tolerances.commutation_tol * (1 + omega_norm) * (1 + hs_norm(X)),
        )

    beta_J = cert.beta_J
    idempotence = np.abs(beta_J.matrix @ beta_J.matrix - beta_J.matrix).max()
    checks.add("beta_J idempotent", idempotence, tolerances.sufficiency_tol)
    _, beta_lowest = is_positive_sampled(beta_J, seed=rng, tolerances=tolerances)
    checks.add("beta_J positive (sampled)", beta_lowest, -tolerances.psd_tol, comparison="min")
    checks.add(
        "beta_J faithful",
        faithfulness_residual(beta_J),
        tolerances.omega_min_eigenvalue,
        comparison="min",
    )
    fixed = max([hs_norm(beta_J(b) - b) for b in cert.A_J.basis] + [0.0])
    checks.add("beta_J fixes A_J", fixed, tolerances.recon_tol)
    checks.extend(sufficiency_checks(model, beta_J, tolerances=tolerances), prefix="beta_J")
    laws = jordan_ce_residuals(beta_J, cert.A_J, seed=rng, tolerances=tolerances)
    for law, value in sorted(laws.items()):
        checks.add("beta_J Jordan %s law" % law, value, tolerances.recon_tol)
    checks.add(
        "beta_J Schwarz inequality (sampled)",
        schwarz_residual(beta_J, seed=rng, tolerances=tolerances),
        -tolerances.commutation_tol,
        comparison="min",
    )

    alpha = cert.alpha
    checks.add(
        "alpha Schwarz inequality (sampled)",
        schwarz_residual(alpha, seed=rng, tolerances=tolerances),
        -tolerances.commutation_tol,
        comparison="min",
    )
    norm = operator_norm_sampled(alpha, seed=rng, tolerances=tolerances)
    checks.add("alpha_h has norm 1 (sampled)", abs(norm - 1), tolerances.recon_tol)

    extended_model = operators + [omega]
    for name, beta, algebra in (
        ("beta_R", cert.beta_R, cert.A_R),
        ("beta_C", cert.beta_C, cert.A_C),
    ):
        checks.add("%s bimodule law" % name, bimodule_residual(beta, algebra), tolerances.recon_tol)
        sufficiency = sufficiency_checks(extended_model, beta, tolerances=tolerances)
        checks.add(
            "%s sufficient for the model and omega" % name,
            sufficiency.max_residual(),
            tolerances.sufficiency_tol * (1 + max(hs_norm(X) for X in extended_model)),
        )

    checks.add(
        "A_J Jordan closed",
        closure_residuals(cert.A_J)["jordan_closed"],
        tolerances.member_tol,
    )
    if cert.power_gap is not None:
        checks.add(
            "power iteration agrees with spectral projection",
            cert.power_gap,
            tolerances.fixed_point_tol,
        )
    return checks


def fixed_point_pipeline(model, alpha, tolerances=None, seed=0, logger=None):
    """Build the SufficiencyCertificate of a sufficient positive unital map.

    Steps:

    1. Reject alpha unless it is sufficient for the model, positive on
       sampled PSD inputs, unital, and maps Hermitian operators to
       Hermitian operators.
    2. beta_J is the spectral projection of (id + alpha_h)/2 on eigenvalue
       1, alpha_h being alpha restricted to Hermitian operators, extended
       complex-linearly. The limit of the powers is computed as well, as a
       cross-check.
    3. A_J is the fixed-point space, A_R and A_C the real and complex
       *-algebras it generates.
    4. omega is the HS-adjoint of beta_J applied to I. Eigenvalues above
       -omega_clip * ||omega|| and below 0 are set to 0, then omega must be
       strictly positive (above omega_min_eigenvalue) or a SufficiencyError
       is raised.
    5. beta_R and beta_C map B to the projections of omega^1/2 B omega^1/2
       on A_R and A_C.

    All invariants are then checked and recorded in ``certificate.checks``.

    Examples
    --------

    >>> alpha = conditional_expectation(algebra, model.rho)
    >>> certificate = fixed_point_pipeline(model, alpha)
    >>> certificate.is_valid()
    True
    """
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, min_time_interval=0.2)
    if alpha.dim != model.dim:
        raise ValueError(
            "Dimension mismatch: map on dim %d, model on dim %d" % (alpha.dim, model.dim)
        )
    dim = model.dim
    logger(message="Checking that the map is sufficient, positive and unital")
    prechecks = pipeline_prechecks(model, alpha, tolerances=tolerances, seed=seed)
    if not prechecks.all_checks_pass():
        failing = prechecks.filter("failing").checks
        raise SufficiencyError(
            "The map is rejected before the pipeline: %s"
            % ", ".join(check.check for check in failing),
            model=model,
            check=failing[0].check,
            residual=failing[0].value,
        )

    alpha_h, _ = alpha.hermitian_restriction()
    T = (np.eye(len(alpha_h)) + alpha_h) / 2
    logger(message="Spectral projection of (id + alpha)/2 on its fixed points")
    P, fixed_vectors = fixed_point_projection(T, tolerances=tolerances)
    P_power, iterations = power_limit(T, tolerances=tolerances)
    power_gap = float(np.abs(P_power - P).max())
    H = hermitian_basis_matrix(dim)
    beta_J = Superoperator.from_hermitian_matrix(dim, P, label="beta_J")

    A_J = RealSubspace.span(
        [devectorize(H @ vector, dim) for vector in fixed_vectors.T],
        dim=dim,
        span_tol=tolerances.span_tol,
        label="fixed-point Jordan algebra",
    )
    A_J.flags.update(contains_identity=True, jordan_closed=True)
    logger(message="Generating the *-algebras of the %d-dim fixed-point space" % len(A_J))
    A_R = generate_star(A_J.basis, scalars="real", dim=dim, tolerances=tolerances)
    A_R.label = "generated real *-algebra"
    A_C = generate_star(A_J.basis, scalars="complex", dim=dim, tolerances=tolerances)
    A_C.label = "generated complex *-algebra"

    omega = hermitize(devectorize(H @ (P.T @ (H.T @ vectorize(np.eye(dim)))), dim))
    eigenvalues, U = herm_eig(omega)
    clipped = (eigenvalues < 0) & (eigenvalues > -tolerances.omega_clip * max(eigenvalues))
    eigenvalues[clipped] = 0
    omega = hermitize((U * eigenvalues) @ U.conj().T)
    if eigenvalues[-1] <= tolerances.omega_min_eigenvalue:
        raise SufficiencyError(
            "The supporting operator omega is not strictly positive (lowest "
            "eigenvalue %.3e)" % eigenvalues[-1],
            model=model,
            check="omega strictly positive",
            residual=eigenvalues[-1],
        )
    omega_half = psd_sqrt(omega, rank_tol=tolerances.rank_tol)

    def sandwich_expectation(algebra, label):
        return Superoperator.from_function(
            dim, lambda B: algebra.project(omega_half @ B @ omega_half), label=label
        )

    certificate = SufficiencyCertificate(
        alpha=alpha,
        A_J=A_J,
        A_R=A_R,
        A_C=A_C,
        beta_J=beta_J,
        beta_R=sandwich_expectation(A_R, "beta_R"),
        beta_C=sandwich_expectation(A_C, "beta_C"),
        omega=omega,
        rho0=hermitize(A_R.project(model.rho)),
        power_iterations=iterations,
        power_gap=power_gap,
    )
    logger(message="Verifying the certificate invariants")
    certificate.checks = verify_certificate(
        certificate, model, tolerances=tolerances, seed=seed
    )
    logger(message=certificate.checks.text_summary_message())
    return certificate
