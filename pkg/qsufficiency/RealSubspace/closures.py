"""Closure generation for real *-algebras and real Jordan algebras, and the
commutant / center / modular invariance computations."""

import numpy as np
import scipy.linalg
from proglog import default_bar_logger

from ..Tolerances import Tolerances
from ..matcore import (
    as_operator,
    check_hermitian,
    geninv,
    jordan_product,
    vectorize,
    devectorize,
    operator_space_dim,
    hs_norm,
)
from .RealSubspace import RealSubspace, canonicalize_signs

SCALARS = ("real", "complex")


def _infer_dim(operators, dim):
    if dim is not None:
        return dim
    if len(operators) == 0:
        raise ValueError("The dim is required when no generator is given")
    return as_operator(operators[0]).shape[0]


def modular_conjugation(rho, rank_tol=Tolerances.rank_tol):
    """Return the function B -> rho B rho^+ (generalized inverse)."""
    rho = check_hermitian(rho, name="rho")
    rho_inverse = geninv(rho, rank_tol=rank_tol)
    return lambda B: rho @ B @ rho_inverse


def generate_star(
    generators,
    scalars="real",
    modular_rho=None,
    dim=None,
    tolerances=None,
    logger=None,
):
    """Return the real (or complex) *-algebra generated by the operators.

    The result is the smallest real subspace containing the generators and
    the identity, closed under products and adjoints (and multiplication by
    i if ``scalars="complex"``). If ``modular_rho`` is given, the algebra is
    also closed under B -> rho B rho^-1 (generalized inverse).

    The span of all words in the generators and their adjoints is built by
    left-multiplying new basis elements by the generators, which produces
    exactly the generated algebra. Modular images which are not yet members
    are then added to the generators and the closure resumes, until stable.

    Parameters
    ----------

    generators
      List of complex matrices.

    scalars
      Either "real" or "complex".

    modular_rho
      Optional PSD reference operator for the modular closure.

    dim
      Required only if ``generators`` is empty.

    tolerances
      A Tolerances instance (or dict of overrides, or None for defaults).

    logger
      Either None for no logger, 'bar' for a tqdm progress bar logger, or
      any ProgLog progress bar logger.
    """
    if scalars not in SCALARS:
        raise ValueError("scalars should be 'real' or 'complex', got %s" % scalars)
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, bars=("round",), min_time_interval=0.2)
    generators = [as_operator(g, name="generator") for g in generators]
    dim = _infer_dim(generators, dim)
    identity = np.eye(dim, dtype=complex)
    letters = generators + [g.conj().T for g in generators]
    if scalars == "complex":
        letters.append(1j * identity)
    modular = None
    if modular_rho is not None:
        modular = modular_conjugation(modular_rho, rank_tol=tolerances.rank_tol)

    algebra = RealSubspace.span(
        [identity] + letters, dim=dim, span_tol=tolerances.span_tol
    )
    letters_done, basis_done = 0, 0
    max_rounds = 2 * operator_space_dim(dim) + 2
    for _ in logger.iter_bar(round=range(max_rounds)):
        basis = algebra.basis
        candidates = [
            letter @ b for letter in letters[:letters_done] for b in basis[basis_done:]
        ] + [letter @ b for letter in letters[letters_done:] for b in basis]
        letters_done, basis_done = len(letters), len(basis)
        algebra = algebra.extended(candidates, span_tol=tolerances.span_tol)
        if len(algebra) > basis_done:
            continue
        if modular is None:
            break
        images = [modular(b) for b in algebra.basis]
        missing = [
            image
            for image in images
            if not algebra.member(image, tolerances=tolerances)[0]
        ]
        if len(missing) == 0:
            break
        logger(message="Adding %d modular images" % len(missing))
        letters += missing + [m.conj().T for m in missing]
        algebra = algebra.extended(
            missing + [m.conj().T for m in missing], span_tol=tolerances.span_tol
        )
    algebra.flags.update(
        contains_identity=True,
        star_closed=True,
        mult_closed=True,
        jordan_closed=True,
        complex_closed=(scalars == "complex"),
    )
    return algebra


def generate_jordan(generators, dim=None, tolerances=None, logger=None):
    """Return the real Jordan algebra generated by Hermitian operators.

    The result is the smallest real span containing the generators and the
    identity, closed under the Jordan product A o B = (AB + BA)/2. Each round
    multiplies the newly added basis elements with the whole current basis.

    Raises a ValueError if a generator is not Hermitian.
    """
    tolerances = Tolerances.from_any(tolerances)
    logger = default_bar_logger(logger, bars=("round",), min_time_interval=0.2)
    generators = [
        check_hermitian(g, name="generator %d" % i, hermitian_tol=tolerances.hermitian_tol)
        for i, g in enumerate(generators)
    ]
    dim = _infer_dim(generators, dim)
    algebra = RealSubspace.span(
        [np.eye(dim, dtype=complex)] + generators, dim=dim, span_tol=tolerances.span_tol
    )
    basis_done = 0
    for _ in logger.iter_bar(round=range(dim * dim + 2)):
        basis = algebra.basis
        new = basis[basis_done:]
        if len(new) == 0:
            break
        candidates = [jordan_product(a, b) for a in new for b in basis]
        basis_done = len(basis)
        algebra = algebra.extended(
            [(c + c.conj().T) / 2 for c in candidates], span_tol=tolerances.span_tol
        )
    algebra.flags.update(contains_identity=True, jordan_closed=True)
    return algebra


def _commutator_matrix(operator):
    """Real matrix of X -> XB - BX in vectorized coordinates."""
    dim = operator.shape[0]
    identity = np.eye(dim)
    complex_matrix = np.kron(identity, operator.T) - np.kron(operator, identity)
    # vec(X) stacks (Re, Im) of the row-major entries
    return np.block(
        [
            [complex_matrix.real, -complex_matrix.imag],
            [complex_matrix.imag, complex_matrix.real],
        ]
    )


def _null_space_of_gram(gram, null_tol):
    # a zero gram (commutative algebra) has only rounding-noise eigenvalues
    eigenvalues, eigenvectors = scipy.linalg.eigh(gram)
    scale = max(eigenvalues.max(), 1.0) if len(eigenvalues) else 1.0
    return eigenvectors[:, eigenvalues <= null_tol * scale]


def commutant(subspace, tolerances=None):
    """Return the subspace of all operators commuting with every basis
    element, computed as the null space of the stacked commutator maps."""
    tolerances = Tolerances.from_any(tolerances)
    size = operator_space_dim(subspace.dim)
    gram = np.zeros((size, size))
    for b in subspace.basis:
        M = _commutator_matrix(b)
        gram += M.T @ M
    if len(subspace) == 0:
        null_vectors = np.eye(size)
    else:
        null_vectors = _null_space_of_gram(gram, tolerances.span_tol)
    vectors = canonicalize_signs(
        scipy.linalg.qr(null_vectors, mode="economic")[0].T
        if null_vectors.shape[1]
        else null_vectors.T
    )
    result = RealSubspace(subspace.dim, vectors)
    result.flags.update(
        contains_identity=True, star_closed=True, mult_closed=True,
    )
    return result


def center(subspace, tolerances=None):
    """Return the elements of the subspace commuting with all its elements."""
    tolerances = Tolerances.from_any(tolerances)
    basis = subspace.basis
    k = len(basis)
    if k == 0:
        return RealSubspace(subspace.dim)
    gram = np.zeros((k, k))
    for b_j in basis:
        A = np.array([vectorize(b_i @ b_j - b_j @ b_i) for b_i in basis]).T
        gram += A.T @ A
    coefficients = _null_space_of_gram(gram, tolerances.span_tol)
    return RealSubspace.span(
        [devectorize(c @ subspace.vectors, subspace.dim) for c in coefficients.T],
        dim=subspace.dim,
        span_tol=tolerances.span_tol,
    )


def modular_invariance_residuals(subspace, rho, tolerances=None):
    """Return, for each basis element b, the relative membership residual
    of rho b rho^-1 (normalized by 1 + ||rho b rho^-1||)."""
    tolerances = Tolerances.from_any(tolerances)
    modular = modular_conjugation(rho, rank_tol=tolerances.rank_tol)
    residuals = []
    for b in subspace.basis:
        image = modular(b)
        residual = subspace.membership_residual(image)
        residuals.append(residual / (1 + hs_norm(image)))
    return residuals


def is_modular_invariant(subspace, rho, tolerances=None, return_details=False):
    """Return True iff rho b rho^-1 is in the subspace for every basis
    element b (linearity makes the basis check exhaustive).

    With ``return_details=True``, return (is_invariant, worst_residual,
    index_of_worst_basis_element).
    """
    tolerances = Tolerances.from_any(tolerances)
    residuals = modular_invariance_residuals(subspace, rho, tolerances)
    if len(residuals) == 0:
        worst, index = 0.0, None
    else:
        index = int(np.argmax(residuals))
        worst = residuals[index]
    invariant = worst <= tolerances.member_tol
    if return_details:
        return invariant, worst, index
    return invariant
