"""Residual tests of the closure properties of a RealSubspace."""

import numpy as np

from ..Tolerances import Tolerances
from ..ResidualCheck import ResidualChecks
from ..matcore import as_generator, hs_norm, herm_eig, random_complex_matrix
from .RealSubspace import FLAG_NAMES


def _relative_membership(subspace, operator):
    return subspace.membership_residual(operator) / (1 + hs_norm(operator))


def _max_membership(subspace, operators):
    return max([_relative_membership(subspace, op) for op in operators] + [0.0])


def closure_residuals(subspace):
    """Return a dict {flag_name: worst relative membership residual}."""
    basis = subspace.basis
    identity = np.eye(subspace.dim)
    return {
        "contains_identity": _relative_membership(subspace, identity),
        "star_closed": _max_membership(subspace, [b.conj().T for b in basis]),
        "mult_closed": _max_membership(
            subspace, [a @ b for a in basis for b in basis]
        ),
        "jordan_closed": _max_membership(
            subspace, [(a @ b + b @ a) / 2 for a in basis for b in basis]
        ),
        "complex_closed": _max_membership(subspace, [1j * b for b in basis]),
    }


def real_cp_residual(subspace, n_samples=50, max_collection_size=3, seed=None):
    """Return the lowest (relative) eigenvalue of sum_ij A_i* P(B_i* B_j) A_j
    over random collections, where P is the projection on the subspace and
    A_i, B_i are random operators of the whole operator space."""
    rng = as_generator(seed)
    lowest = np.inf
    for _ in range(n_samples):
        n = rng.integers(1, max_collection_size + 1)
        A = [random_complex_matrix(subspace.dim, seed=rng) for _ in range(n)]
        B = [random_complex_matrix(subspace.dim, seed=rng) for _ in range(n)]
        total = sum(
            A[i].conj().T @ subspace.project(B[i].conj().T @ B[j]) @ A[j]
            for i in range(n)
            for j in range(n)
        )
        total = (total + total.conj().T) / 2
        lowest = min(lowest, herm_eig(total)[0][-1] / (1 + hs_norm(total)))
    return float(lowest)


def jordan_triple_residual(subspace, n_samples=50, seed=None):
    """Return the worst relative membership residual of (ABC + CBA)/2 for
    random elements A, B, C of the subspace."""
    rng = as_generator(seed)
    worst = 0.0
    for _ in range(n_samples):
        A, B, C = [subspace.random_element(seed=rng) for _ in range(3)]
        worst = max(worst, _relative_membership(subspace, (A @ B @ C + C @ B @ A) / 2))
    return worst


def verify_predicates(subspace, tolerances=None, seed=0):
    """Return a ResidualChecks with one check per closure predicate.

    Every predicate is tested on all basis elements (or pairs of basis
    elements). Checks pass when the property holds, so a real algebra like
    M2(R) has a passing "star_closed" and a failing "complex_closed". When
    the subspace is a *-algebra, the real complete positivity of the
    orthogonal projection is also sampled, and for Jordan algebras the
    Jordan triple product closure is sampled.
    """
    tolerances = Tolerances.from_any(tolerances)
    checks = ResidualChecks(title="subspace predicates")
    checks.add(
        "orthonormal basis", subspace.orthonormality_residual(), tolerances.ortho_tol
    )
    residuals = closure_residuals(subspace)
    for name in FLAG_NAMES:
        checks.add(name, residuals[name], tolerances.member_tol)
    star_algebra = all(
        checks[name].passes for name in ("contains_identity", "star_closed", "mult_closed")
    )
    if star_algebra:
        checks.add(
            "projection real CP (sampled)",
            real_cp_residual(subspace, n_samples=tolerances.n_samples, seed=seed),
            -tolerances.psd_tol,
            comparison="min",
        )
    if checks["jordan_closed"].passes:
        checks.add(
            "Jordan triple closure (sampled)",
            jordan_triple_residual(subspace, n_samples=tolerances.n_samples, seed=seed),
            tolerances.member_tol,
        )
    return checks


def with_verified_flags(subspace, tolerances=None):
    """Return a copy of the subspace whose flags are set by residual tests."""
    tolerances = Tolerances.from_any(tolerances)
    residuals = closure_residuals(subspace)
    result = subspace.__class__(subspace.dim, subspace.vectors, label=subspace.label)
    result.flags = {
        name: residuals[name] <= tolerances.member_tol for name in FLAG_NAMES
    }
    return result
