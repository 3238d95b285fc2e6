"""Residual tests of the properties of real-linear maps (positivity,
unitality, Schwarz inequality, conditional expectation laws...).

Sampled tests draw their inputs from ``seed`` and return the worst value
found, so that the caller decides the tolerance.
"""

import numpy as np

from ..Tolerances import Tolerances
from ..Superoperator import Superoperator
from ..matcore import (
    as_generator,
    herm_eig,
    hermitize,
    hs_norm,
    jordan_product,
    min_eigenvalue,
    random_hermitian,
    random_psd,
)


def _spectral_norm(A):
    return float(np.linalg.norm(A, 2))


def is_positive_sampled(alpha, n_samples=None, seed=None, tolerances=None):
    """Return (is_positive, lowest_relative_eigenvalue) where the lowest
    eigenvalue of alpha(B) is taken over random PSD inputs B of random
    ranks, relative to ||alpha(B)||."""
    tolerances = Tolerances.from_any(tolerances)
    n_samples = tolerances.n_samples if n_samples is None else n_samples
    rng = as_generator(seed)
    lowest = np.inf
    for _ in range(n_samples):
        rank = int(rng.integers(1, alpha.dim + 1))
        B = random_psd(alpha.dim, rank=rank, seed=rng)
        image = hermitize(alpha(B / np.trace(B).real))
        scale = 1 + _spectral_norm(image)
        lowest = min(lowest, min_eigenvalue(image) / scale)
    return lowest >= -tolerances.psd_tol, float(lowest)


def is_unital(alpha, tolerances=None):
    """Return (is_unital, ||alpha(I) - I||)."""
    tolerances = Tolerances.from_any(tolerances)
    identity = np.eye(alpha.dim)
    residual = hs_norm(alpha(identity) - identity)
    return residual <= tolerances.recon_tol * (1 + hs_norm(identity)), residual


def hermiticity_residual(alpha):
    """Return how far alpha sends Hermitian operators out of the Hermitian
    operators (0 for a map commuting with the adjoint)."""
    return alpha.hermitian_restriction()[1]


def schwarz_residual(alpha, n_samples=None, seed=None, tolerances=None):
    """Return the lowest eigenvalue of alpha(B^2) - alpha(B)^2 over random
    Hermitian B of unit norm. Unital positive maps give values >= 0."""
    tolerances = Tolerances.from_any(tolerances)
    n_samples = tolerances.n_samples if n_samples is None else n_samples
    rng = as_generator(seed)
    lowest = np.inf
    for _ in range(n_samples):
        B = random_hermitian(alpha.dim, seed=rng)
        B = B / _spectral_norm(B)
        image = hermitize(alpha(B))
        gap = hermitize(alpha(B @ B)) - image @ image
        lowest = min(lowest, min_eigenvalue(hermitize(gap)))
    return float(lowest)


def jordan_ce_residuals(beta, subspace, n_samples=None, seed=None, tolerances=None):
    """Return the worst residuals of the two Jordan conditional expectation
    laws for A in the subspace basis and random Hermitian B:

    - "jordan product": ||beta(A o B) - A o beta(B)||
    - "triple product": ||A beta(B) A - beta(A B A)||
    """
    tolerances = Tolerances.from_any(tolerances)
    n_samples = tolerances.n_samples if n_samples is None else n_samples
    rng = as_generator(seed)
    worst = {"jordan product": 0.0, "triple product": 0.0}
    samples = [random_hermitian(beta.dim, seed=rng) for _ in range(n_samples)]
    for A in subspace.basis:
        for B in samples:
            B = B / hs_norm(B)
            image = beta(B)
            worst["jordan product"] = max(
                worst["jordan product"],
                hs_norm(beta(jordan_product(A, B)) - jordan_product(A, image)),
            )
            worst["triple product"] = max(
                worst["triple product"],
                hs_norm(A @ image @ A - beta(A @ B @ A)),
            )
    return worst


def bimodule_residual(alpha, subspace):
    """Return max ||A alpha(B) - alpha(AB)|| and ||alpha(B) A - alpha(BA)||
    over A in the subspace basis and B in the full operator basis."""
    worst = 0.0
    for A in subspace.basis:
        for side in ("left", "right"):
            if side == "left":
                multiply = Superoperator.from_function(alpha.dim, lambda B: A @ B)
            else:
                multiply = Superoperator.from_function(alpha.dim, lambda B: B @ A)
            difference = multiply.matrix @ alpha.matrix - alpha.matrix @ multiply.matrix
            worst = max(worst, float(np.abs(difference).max()))
    return worst


def faithfulness_residual(alpha):
    """Return the lowest eigenvalue of alpha*(I), the HS-adjoint of alpha
    applied to the identity.

    For a positive map, Re Tr alpha(B) = Re Tr alpha*(I) B, so alpha is
    faithful (B >= 0 and alpha(B) = 0 imply B = 0) exactly when this value
    is strictly positive.
    """
    return min_eigenvalue(hermitize(alpha.adjoint()(np.eye(alpha.dim))))


def operator_norm_sampled(alpha, n_samples=None, seed=None, tolerances=None):
    """Return the largest ratio ||alpha(B)|| / ||B|| (spectral norms) over
    the identity and random Hermitian operators B."""
    tolerances = Tolerances.from_any(tolerances)
    n_samples = tolerances.n_samples if n_samples is None else n_samples
    rng = as_generator(seed)
    identity = np.eye(alpha.dim)
    largest = _spectral_norm(alpha(identity))
    for _ in range(n_samples):
        B = random_hermitian(alpha.dim, seed=rng)
        largest = max(largest, _spectral_norm(alpha(B)) / _spectral_norm(B))
    return float(largest)


def adjoint_preservation_residual(alpha, seed=None, n_samples=None, tolerances=None):
    """Return max ||alpha(B*) - alpha(B)*|| over random operators B."""
    tolerances = Tolerances.from_any(tolerances)
    n_samples = tolerances.n_samples if n_samples is None else n_samples
    rng = as_generator(seed)
    worst = 0.0
    for _ in range(n_samples):
        B = random_hermitian(alpha.dim, seed=rng) + 1j * random_hermitian(
            alpha.dim, seed=rng
        )
        B = B / hs_norm(B)
        worst = max(worst, hs_norm(alpha(B.conj().T) - alpha(B).conj().T))
    return worst


def support_residual(subspace, rho, tolerances=None):
    """Compare the supports of rho and of its projection rho0 = P(rho).

    Returns a dict with:

    - "inclusion": ||s - s0 s|| (0 iff supp rho0 >= supp rho)
    - "equality": ||s - s0|| (0 iff the supports agree, which holds when
      supp rho belongs to the subspace)
    - "rho0 min eigenvalue": the lowest eigenvalue of rho0 (>= 0 for a
      *-subalgebra projection of a PSD operator).
    """
    tolerances = Tolerances.from_any(tolerances)
    rho0 = hermitize(subspace.project(rho))
    s = _support(rho, tolerances)
    s0 = _support(rho0, tolerances)
    return {
        "inclusion": hs_norm(s - s0 @ s),
        "equality": hs_norm(s - s0),
        "rho0 min eigenvalue": min_eigenvalue(rho0),
    }


def _support(A, tolerances):
    eigenvalues, U = herm_eig(A)
    scale = max(np.abs(eigenvalues).max(), 1e-300)
    kept = np.abs(eigenvalues) > tolerances.rank_tol * scale
    return U[:, kept] @ U[:, kept].conj().T
