"""Identification of the block structure of real *-algebras and real
Jordan algebras.

The algebra is split into simple ideals by refining the eigenspaces of
the Hermitian elements of a basis of its center. Each simple block is
classified from its real dimension, its center dimension and the number
of distinct eigenvalues (degree) of a random Hermitian element, then
mapped to its canonical form with matrix units built from the spectral
projections of that element.
Spin factors are mapped to their canonical generators by a Clifford
recursion. Random draws are retried when the result does not match the
canonical algebra.
"""

import numpy as np
from proglog import default_bar_logger

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..RealSubspace import RealSubspace, center, closure_residuals, generate_star
from ..StructureDecomposition import BlockDescriptor, StructureDecomposition
from ..matcore import (
    as_generator,
    eigenprojections,
    herm_eig,
    hermitize,
    hs_norm,
    is_unitary,
    spin_factor,
)
from .canonical_algebras import canonical_jordan_algebra, canonical_star_algebra

MODES = ("star", "jordan")
REQUIRED_FLAGS = {
    "star": ("contains_identity", "star_closed", "mult_closed"),
    "jordan": ("contains_identity", "jordan_closed"),
}


def _check_mode_flags(subspace, mode, tolerances):
    if mode not in MODES:
        raise ValueError("mode should be 'star' or 'jordan', got %s" % mode)
    required = REQUIRED_FLAGS[mode]
    if all(subspace.flags[name] for name in required):
        return
    residuals = closure_residuals(subspace)
    missing = [name for name in required if residuals[name] > tolerances.member_tol]
    if missing:
        raise ValueError(
            "Cannot identify the %s structure: the subspace is not %s"
            % (mode, ", ".join(missing))
        )


def _classification_error(message, residual=None):
    return SufficiencyError(message, check="structure classification", residual=residual)


def _range_isometry(projection):
    values, vectors = herm_eig(hermitize(projection))
    return vectors[:, values > 0.5]


def _compress(subspace, isometry, tolerances):
    return RealSubspace.span(
        [isometry.conj().T @ b @ isometry for b in subspace.basis],
        dim=isometry.shape[1],
        span_tol=tolerances.span_tol,
    )


def _central_isometries(subspace, tolerances):
    """Return the list of (isometry, compressed_center) of the minimal
    central projections.

    The ranges are refined by the eigenspaces of each Hermitian element of
    a basis of the center, so that every block ends with a one-dimensional
    Hermitian center."""
    center_space = center(subspace, tolerances=tolerances)
    hermitian_center = RealSubspace.span(
        [hermitize(z) for z in center_space.basis],
        dim=subspace.dim,
        span_tol=tolerances.span_tol,
    )
    isometries = [np.eye(subspace.dim, dtype=complex)]
    for z in hermitian_center.basis:
        scale = max(1.0, np.linalg.norm(z, 2))
        refined = []
        for isometry in isometries:
            compressed = hermitize(isometry.conj().T @ z @ isometry)
            _, projections = eigenprojections(
                compressed, cluster_tol=tolerances.struct_tol, scale=scale
            )
            refined += [isometry @ _range_isometry(p) for p in projections]
        isometries = refined
    if len(isometries) != len(hermitian_center):
        raise _classification_error(
            "%d central blocks for a Hermitian center of dimension %d"
            % (len(isometries), len(hermitian_center))
        )
    return [
        (isometry, _compress(center_space, isometry, tolerances))
        for isometry in isometries
    ]


def _spectral_projections(subspace, rng, tolerances):
    element = subspace.random_element(seed=rng, hermitian=True)
    return eigenprojections(element, cluster_tol=tolerances.struct_tol)[1]


def _matrix_units(subspace, projections, rng):
    """Partial isometries u_j from range(F_j) to range(F_1), u_1 = F_1."""
    element = subspace.random_element(seed=rng)
    first = projections[0]
    rank = np.trace(first).real
    units = [first]
    for projection in projections[1:]:
        corner = first @ element @ projection
        units.append(corner * np.sqrt(rank) / hs_norm(corner))
    return units


def _check_complex_center(center_space, tolerances):
    """The center of a complex block must be spanned by I and +-iI."""
    dim = center_space.dim
    identity = np.eye(dim)
    skew = [(z - z.conj().T) / 2 for z in center_space.basis]
    skew = [K for K in skew if hs_norm(K) > tolerances.struct_tol]
    if len(skew) == 0:
        raise _classification_error("Complex block without imaginary center")
    J = skew[0] * np.sqrt(dim) / hs_norm(skew[0])
    residual = min(hs_norm(J - 1j * identity), hs_norm(J + 1j * identity))
    if residual > tolerances.struct_tol * np.sqrt(dim):
        raise _classification_error(
            "Complex block whose center is not spanned by I and iI (the "
            "representation mixes a block and its conjugate)",
            residual=residual,
        )


def _quaternion_frame(subspace, first, tolerances):
    """Return (J1, J3): imaginary units of the corner F_1 A F_1 with
    J^2 = -F_1, J3 = -J1 J2."""
    rank = np.trace(first).real
    corner = [first @ b @ first for b in subspace.basis]
    skew = RealSubspace.span(
        [(c - c.conj().T) / 2 for c in corner], dim=subspace.dim, span_tol=tolerances.span_tol
    )
    if len(skew) != 3:
        raise _classification_error(
            "Quaternionic corner with %d imaginary units instead of 3" % len(skew)
        )
    K1, K2 = skew.basis[:2]
    J1 = K1 * np.sqrt(rank) / hs_norm(K1)
    J2 = K2 * np.sqrt(rank) / hs_norm(K2)
    return J1, -J1 @ J2


def _identify_simple_star(subspace, center_space, rng, tolerances):
    """Return (BlockDescriptor, W) for a simple *-algebra on C^r, with W
    unitary and W* A W = A_canonical (x) I_m."""
    r, k = subspace.dim, len(subspace)
    projections = _spectral_projections(subspace, rng, tolerances)
    degree, center_dim = len(projections), len(center_space)
    if center_dim == 2:
        kind, n = "C", degree
    elif center_dim == 1 and k == degree ** 2:
        kind, n = "R", degree
    elif center_dim == 1 and k == 4 * degree ** 2:
        kind, n = "H", degree
    else:
        raise _classification_error(
            "Unclassified simple block (dimension %d, center dimension %d, "
            "degree %d)" % (k, center_dim, degree)
        )
    block_rep = {"C": n, "R": n, "H": 2 * n}[kind]
    if (kind == "C" and k != 2 * n * n) or r % block_rep:
        raise _classification_error(
            "Inconsistent %s block: dimension %d, degree %d on C^%d" % (kind, k, n, r)
        )
    if kind == "C":
        _check_complex_center(center_space, tolerances)
    block = BlockDescriptor(kind, n, r // block_rep)
    units = _matrix_units(subspace, projections, rng)
    first = projections[0]
    if kind == "H":
        J1, J3 = _quaternion_frame(subspace, first, tolerances)
        values, vectors = herm_eig(hermitize(-1j * J3))
        f = vectors[:, values > 0.5]
        frames = [f, -1j * J1 @ f]
    else:
        frames = [_range_isometry(first)]
    columns = [u.conj().T @ frame for u in units for frame in frames]
    return block, np.hstack(columns)


def _traceless_generators(subspace):
    r = subspace.dim
    identity = np.eye(r)
    traceless = RealSubspace.span(
        [b - np.trace(b) / r * identity for b in subspace.basis], dim=r
    )
    return [np.sqrt(r) * hermitize(b) for b in traceless.basis]


def _clifford_unitary(gammas):
    """Return W with W* g_i W = gamma_i (x) I_m (canonical spin_factor(n)
    generators) for anticommuting Hermitian g_i with g_i^2 = I."""
    n = len(gammas)
    last = gammas[-1] if n <= 3 else gammas[-2]
    values, vectors = herm_eig(hermitize(last))
    F = vectors[:, values > 0]
    if n <= 3:
        return np.hstack([F, gammas[0] @ F])
    G = -1j * gammas[-1] @ F
    sub_gammas = [hermitize(G.conj().T @ g @ F) for g in gammas[:-2]]
    W = _clifford_unitary(sub_gammas)
    return np.hstack([F @ W, G @ W])


def _identify_spin_factor(generators, tolerances):
    """Return (BlockDescriptor, W) for spin factor generators."""
    n, r = len(generators), generators[0].shape[0]
    identity = np.eye(r)
    worst = max(
        hs_norm((gi @ gj + gj @ gi) / 2 - (i == j) * identity)
        for i, gi in enumerate(generators)
        for j, gj in enumerate(generators)
    )
    if worst > tolerances.struct_tol * r:
        raise _classification_error(
            "The traceless part of the block does not anticommute (spin "
            "factor residual %.3e)" % worst,
            residual=worst,
        )
    rep_dim = 2 ** (n // 2)
    if r % rep_dim:
        raise _classification_error("Spin factor Gamma_%d on C^%d" % (n, r))
    if n % 2:
        canonical = spin_factor(n)
        target = np.trace(canonical.chirality()) / canonical.dim
        product = generators[0]
        for g in generators[1:]:
            product = product @ g
        value = np.trace(product) / r
        mixed = hs_norm(product - value * identity)
        if mixed > tolerances.struct_tol * r:
            raise _classification_error(
                "Spin factor representation with mixed chirality", residual=mixed
            )
        if abs(value - target) > 0.5:
            generators = [-generators[0]] + generators[1:]
    return BlockDescriptor("Gamma", n, r // rep_dim), _clifford_unitary(generators)


def _identify_star_blocks(subspace, rng, tolerances):
    blocks = []
    for isometry, block_center in _central_isometries(subspace, tolerances):
        block_algebra = _compress(subspace, isometry, tolerances)
        block, W = _identify_simple_star(block_algebra, block_center, rng, tolerances)
        blocks.append((block, isometry @ W))
    return blocks


def _identify_jordan_blocks(subspace, rng, tolerances):
    blocks = []
    for isometry, _ in _central_isometries(subspace, tolerances):
        block_algebra = _compress(subspace, isometry, tolerances)
        r, k = block_algebra.dim, len(block_algebra)
        if k == 1:
            blocks.append((BlockDescriptor("R", 1, r), isometry))
            continue
        generated = generate_star(block_algebra.basis, dim=r, tolerances=tolerances)
        star_blocks = _identify_star_blocks(generated, rng, tolerances)
        if len(star_blocks) != 1:
            raise _classification_error(
                "The *-algebra generated by a simple Jordan block has %d "
                "simple blocks" % len(star_blocks)
            )
        block, W = star_blocks[0]
        if k != block.jordan_dimension:
            if k - 1 < 4:
                raise _classification_error(
                    "Unclassified Jordan block of dimension %d" % k
                )
            block, W = _identify_spin_factor(
                _traceless_generators(block_algebra), tolerances
            )
        blocks.append((block, isometry @ W))
    return blocks


def _span_distance(first, second):
    """Largest relative membership residual of each basis in the other."""
    residuals = [
        space.membership_residual(b) / (1 + hs_norm(b))
        for space, other in ((first, second), (second, first))
        for b in other.basis
    ]
    return max(residuals + [0.0])


def structure_checks(subspace, decomposition, tolerances=None):
    """Return the ResidualChecks of a decomposition: U unitary and
    U* A U equal to the canonical algebra of the blocks."""
    tolerances = Tolerances.from_any(tolerances)
    U = decomposition.U
    checks = ResidualChecks(title="structure checks")
    checks.add(
        "U unitary",
        hs_norm(U.conj().T @ U - np.eye(U.shape[1])),
        tolerances.struct_tol,
        passes=is_unitary(U, tol=tolerances.struct_tol),
    )
    build = canonical_star_algebra if decomposition.mode == "star" else canonical_jordan_algebra
    canonical = build(decomposition.blocks)
    transformed = _compress(subspace, U, tolerances)
    checks.add(
        "canonical form",
        _span_distance(transformed, canonical),
        tolerances.struct_tol,
    )
    return checks


def identify_structure(subspace, mode="star", tolerances=None, seed=0, max_attempts=5, logger=None):
    """Return the StructureDecomposition of a real *-algebra or Jordan
    algebra.

    Examples
    --------

    >>> M2R = RealSubspace.span([I, sigma_x, 1j * sigma_y, sigma_z])
    >>> identify_structure(M2R, mode="star").blocks
    [(R,2,1)]

    Parameters
    ----------

    subspace
      A RealSubspace closed under products and adjoints (mode "star") or
      Hermitian and closed under the Jordan product (mode "jordan").

    mode
      Either "star" or "jordan". In Jordan mode, the spin factors Gamma_2,
      Gamma_3 and Gamma_5 are reported as (R,2), (C,2) and (H,2) since
      they are the Hermitian parts of these algebras; Gamma_n blocks are
      reported for n = 4 and n >= 6.

    seed
      Seed (or numpy Generator) for the random elements.

    max_attempts
      Number of random draws tried before giving up.

    Raises a ValueError if the subspace lacks the required closure and a
    SufficiencyError if no classification matches within struct_tol.
    """
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, bars=("attempt",), min_time_interval=0.2)
    _check_mode_flags(subspace, mode, tolerances)
    rng = as_generator(seed)
    identify_blocks = _identify_star_blocks if mode == "star" else _identify_jordan_blocks
    last_error = None
    for _ in logger.iter_bar(attempt=range(max_attempts)):
        try:
            found = identify_blocks(subspace, rng, tolerances)
        except SufficiencyError as error:
            last_error = error
            continue
        found = sorted(
            found,
            key=lambda item: (
                item[0].key(),
                tuple(np.round(np.abs(item[1][:, 0]), 8)),
            ),
        )
        decomposition = StructureDecomposition(
            blocks=[block for block, _ in found],
            U=np.hstack([W for _, W in found]),
            mode=mode,
        )
        decomposition.checks = structure_checks(subspace, decomposition, tolerances)
        if decomposition.checks.all_checks_pass():
            return decomposition
        failing = decomposition.checks.filter("failing").checks[0]
        last_error = _classification_error(
            "Structure identification residual %.3e above struct_tol" % failing.value,
            residual=failing.value,
        )
        logger(message="Structure identification attempt failed, retrying")
    raise last_error
