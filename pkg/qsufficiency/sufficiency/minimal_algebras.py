"""Minimal sufficient real / complex *-algebras and real Jordan algebras of
a model, built from its likelihood ratios."""

import numpy as np
from proglog import default_bar_logger

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..RealSubspace import (
    RealSubspace,
    generate_star,
    generate_jordan,
    modular_conjugation,
)
from ..matcore import (
    as_generator,
    hermitize,
    random_complex_matrix,
    support_proj,
    eigenprojections,
)
from .conditional_expectations import conditional_expectation
from .verification import verify_sufficient


def _check_restricted(model, operation):
    if not model.restricted:
        raise ValueError(
            "%s requires a model restricted to H_S (use model.restrict_to_HS())"
            % operation
        )


def minimal_sufficient_star(model, scalars="real", tolerances=None, logger=None):
    """Return the minimal sufficient real (or complex) *-algebra of the model.

    This is the smallest *-algebra containing every likelihood ratio of the
    model (R_X for states, L_X for derivatives) and invariant under
    B -> rho B rho^-1.

    Examples
    --------

    >>> model = Model(np.eye(2) / 2, [ModelElement("derivative", sigma_z / 2)])
    >>> algebra = minimal_sufficient_star(model.restrict_to_HS())
    >>> algebra.dimension
    2

    Parameters
    ----------

    model
      A Model restricted to H_S.

    scalars
      Either "real" or "complex".

    tolerances
      A Tolerances instance (or dict of overrides, or None for defaults).

    logger
      Either None for no logger, 'bar' for a progress bar, or any ProgLog
      progress bar logger.
    """
    _check_restricted(model, "minimal_sufficient_star")
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, min_time_interval=0.2)
    logger(message="Computing the likelihood ratios of %s" % model)
    ratios = model.likelihood_ratio_set()
    algebra = generate_star(
        ratios,
        scalars=scalars,
        modular_rho=model.rho,
        dim=model.dim,
        tolerances=tolerances,
        logger=logger,
    )
    algebra.label = "minimal sufficient %s *-algebra" % scalars
    return algebra


def _modular_orbit(operators, modular, dim, tolerances):
    """Basis of the span of all rho^n B rho^-n (n >= 0) for B in the list."""
    space = RealSubspace.span(operators, dim=dim, span_tol=tolerances.span_tol)
    new = space.basis
    while len(new):
        before = len(space)
        space = space.extended([modular(b) for b in new], span_tol=tolerances.span_tol)
        new = space.basis[before:]
    return space.basis


def modular_orbit_generators(model, tolerances=None):
    """Return generators whose real *-algebra (without modular closure) is
    the minimal sufficient real *-algebra.

    The generators span the operators rho^n R rho^-n (n >= 0) and
    rho^n R1 kappa R2 rho^-n (n >= 1) for likelihood ratios R, R1, R2, with
    kappa = I - supp(rho). The powers are accumulated one modular step at a
    time on an orthonormal basis, so large n never appear explicitly.
    """
    _check_restricted(model, "modular_orbit_generators")
    tolerances = Tolerances.from_any(tolerances)
    ratios = model.likelihood_ratio_set()
    modular = modular_conjugation(model.rho, rank_tol=tolerances.rank_tol)
    generators = _modular_orbit(ratios, modular, model.dim, tolerances)
    kappa = np.eye(model.dim) - support_proj(model.rho, rank_tol=tolerances.rank_tol)
    if np.linalg.norm(kappa) > 0.5:
        cross_terms = [modular(R1 @ kappa @ R2) for R1 in ratios for R2 in ratios]
        generators += _modular_orbit(cross_terms, modular, model.dim, tolerances)
    return generators


def modular_orbit_star(model, scalars="real", tolerances=None):
    """Return the *-algebra generated by ``modular_orbit_generators(model)``."""
    tolerances = Tolerances.from_any(tolerances)
    algebra = generate_star(
        modular_orbit_generators(model, tolerances=tolerances),
        scalars=scalars,
        dim=model.dim,
        tolerances=tolerances,
    )
    algebra.label = "modular orbit %s *-algebra" % scalars
    return algebra


def jordan_witness(model, jordan_algebra, star_algebra, tolerances=None):
    """Return (beta_J, is_sufficient, residual) where beta_J is the
    projection onto the Jordan algebra composed with the sufficient
    conditional expectation onto the *-algebra."""
    tolerances = Tolerances.from_any(tolerances)
    beta_R = conditional_expectation(star_algebra, model.rho, tolerances=tolerances)
    beta_J = jordan_algebra.projection_superop() @ beta_R
    beta_J.label = "beta_J"
    passes, residual = verify_sufficient(model, beta_J, tolerances=tolerances)
    return beta_J, passes, residual


def minimal_sufficient_jordan(model, tolerances=None, logger=None, star_algebra=None):
    """Return (A_J, rho0), the minimal sufficient real Jordan algebra of the
    model and the projection rho0 of the reference on the minimal
    sufficient real *-algebra.

    A_J is generated by the likelihood ratios and rho0. Its sufficiency is
    witnessed by beta_J = P_J o beta_R (P_J the projection on A_J, beta_R
    the sufficient conditional expectation onto the *-algebra), checked
    with ``verify_sufficient``; a failure raises a SufficiencyError.

    Examples
    --------

    >>> jordan_algebra, rho0 = minimal_sufficient_jordan(restricted_model)
    """
    _check_restricted(model, "minimal_sufficient_jordan")
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, min_time_interval=0.2)
    if star_algebra is None:
        star_algebra = minimal_sufficient_star(model, tolerances=tolerances, logger=logger)
    rho0 = hermitize(star_algebra.project(model.rho))
    ratios = [hermitize(R) for R in model.likelihood_ratio_set()]
    logger(message="Generating the Jordan algebra of the ratios and rho0")
    jordan_algebra = generate_jordan(
        ratios + [rho0], dim=model.dim, tolerances=tolerances, logger=logger
    )
    jordan_algebra.label = "minimal sufficient Jordan algebra"
    _, passes, residual = jordan_witness(
        model, jordan_algebra, star_algebra, tolerances=tolerances
    )
    if not passes:
        raise SufficiencyError(
            "The projection onto the generated Jordan algebra is not "
            "sufficient (residual %.3e)" % residual,
            model=model,
            check="Jordan sufficiency witness",
            residual=residual,
        )
    return jordan_algebra, rho0


ENLARGEMENT_KINDS = (
    "spectral projections",
    "rho-commuting element",
    "complexification",
    "random element",
)


def sufficient_enlargements(algebra, model, n_enlargements=10, seed=None, tolerances=None):
    """Return a catalogue of sufficient *-algebras containing ``algebra``.

    Each enlargement is the modular closure (with respect to the model's
    reference) of the algebra plus one extra generator, cycling through:
    the spectral projections of rho, a random operator commuting with rho,
    the complex unit iI, and a fully random operator. All of them contain
    the likelihood ratios and are rho-modular invariant whenever
    ``algebra`` is, so they are sufficient.
    """
    tolerances = Tolerances.from_any(tolerances)
    rng = as_generator(seed)
    dim = model.dim
    _, projections = eigenprojections(model.rho, cluster_tol=tolerances.rank_tol)
    enlargements = []
    for i in range(n_enlargements):
        kind = ENLARGEMENT_KINDS[i % len(ENLARGEMENT_KINDS)]
        scalars = "real"
        if kind == "spectral projections":
            extra = list(projections)
        elif kind == "rho-commuting element":
            Z = random_complex_matrix(dim, seed=rng)
            extra = [sum(P @ Z @ P for P in projections)]
        elif kind == "complexification":
            extra, scalars = [], "complex"
        else:
            extra = [random_complex_matrix(dim, seed=rng)]
        enlargement = generate_star(
            algebra.basis + extra,
            scalars=scalars,
            modular_rho=model.rho,
            dim=dim,
            tolerances=tolerances,
        )
        enlargement.label = "enlargement %d (%s)" % (i, kind)
        enlargements.append(enlargement)
    return enlargements
