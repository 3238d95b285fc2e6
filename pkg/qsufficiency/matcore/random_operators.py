"""Random operators for tests, sampled checks and the self-test.

All functions take a ``seed`` which is either None, an integer, or a
``numpy.random.Generator`` (which is then used and advanced in place).
"""

import numpy as np
import scipy.linalg


def as_generator(seed=None):
    """Return a numpy Generator from a seed or an existing Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def derive_seeds(seed, n):
    """Return ``n`` integer seeds deterministically derived from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(n)
    return [int(child.generate_state(1)[0]) for child in children]


def random_complex_matrix(dim, seed=None, cols=None):
    rng = as_generator(seed)
    cols = dim if cols is None else cols
    return rng.normal(size=(dim, cols)) + 1j * rng.normal(size=(dim, cols))


def random_hermitian(dim, seed=None):
    """Random Hermitian matrix (GUE-like normalization)."""
    A = random_complex_matrix(dim, seed=seed)
    return (A + A.conj().T) / 2


def random_psd(dim, rank=None, seed=None):
    """Random PSD matrix of the given rank (full rank by default)."""
    A = random_complex_matrix(dim, seed=seed, cols=dim if rank is None else rank)
    return A @ A.conj().T


def random_density_matrix(dim, rank=None, seed=None):
    """Random density matrix (PSD, unit trace) of the given rank."""
    rho = random_psd(dim, rank=rank, seed=seed)
    return rho / np.trace(rho).real


def random_unitary(dim, seed=None):
    """Haar-random unitary, from the QR decomposition of a Ginibre matrix."""
    Q, R = scipy.linalg.qr(random_complex_matrix(dim, seed=seed))
    phases = np.diag(R) / np.abs(np.diag(R))
    return Q * phases
