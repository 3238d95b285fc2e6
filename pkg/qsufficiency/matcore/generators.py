"""Canonical generators: Pauli matrices, quaternions and spin factors."""

from functools import reduce

import numpy as np

PAULI_I = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def pauli_matrices():
    """Return (sigma_x, sigma_y, sigma_z)."""
    return PAULI_X.copy(), PAULI_Y.copy(), PAULI_Z.copy()


def quaternion_multiply(p, q):
    """Product of quaternions stored as (w, x, y, z) arrays.

    The product rule is the one carried by ``quaternion_embed``, i.e. the
    embedding is a ring homomorphism: with p = (w1, v1), q = (w2, v2),
    pq = (w1 w2 - v1.v2, w1 v2 + w2 v1 - v1 x v2).
    """
    p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
    w1, v1 = p[..., 0], p[..., 1:]
    w2, v2 = q[..., 0], q[..., 1:]
    w = w1 * w2 - np.sum(v1 * v2, axis=-1)
    v = w1[..., None] * v2 + w2[..., None] * v1 - np.cross(v1, v2)
    return np.concatenate([w[..., None], v], axis=-1)


def quaternion_conjugate(q):
    q = np.array(q, dtype=float)
    q[..., 1:] *= -1
    return q


def quaternion_matrix_product(A, B):
    """Product of two quaternion matrices of shapes (n, k, 4) and (k, m, 4)."""
    A, B = np.asarray(A, dtype=float), np.asarray(B, dtype=float)
    result = np.zeros((A.shape[0], B.shape[1], 4))
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            result[i, j] = quaternion_multiply(A[i], B[:, j]).sum(axis=0)
    return result


def quaternion_embed(W):
    """Return the complex 2n x 2n realization of an n x n quaternion matrix.

    Each quaternion entry (w, x, y, z) is replaced by the 2x2 block
    ``w I + i (x X + y Y + z Z)``.

    Parameters
    ----------

    W
      Array of shape (n, n, 4), or (4,) for a single quaternion.
    """
    W = np.asarray(W, dtype=float)
    if W.ndim == 1:
        W = W.reshape((1, 1, 4))
    n = W.shape[0]
    blocks = (
        np.einsum("ij,ab->iajb", W[..., 0], PAULI_I)
        + 1j * np.einsum("ij,ab->iajb", W[..., 1], PAULI_X)
        + 1j * np.einsum("ij,ab->iajb", W[..., 2], PAULI_Y)
        + 1j * np.einsum("ij,ab->iajb", W[..., 3], PAULI_Z)
    )
    return blocks.reshape((2 * n, 2 * n))


class SpinFactorGenerators:
    """Hermitian generators gamma_1..gamma_n with gamma_i o gamma_j = d_ij I.

    Parameters
    ----------

    gammas
      List of Hermitian matrices, all of dimension 2**(n // 2).
    """

    def __init__(self, gammas):
        """Initialize."""
        self.gammas = [np.asarray(g, dtype=complex) for g in gammas]
        self.n = len(self.gammas)

    @property
    def dim(self):
        return self.gammas[0].shape[0]

    def __iter__(self):
        return iter(self.gammas)

    def __len__(self):
        return self.n

    def __getitem__(self, index):
        return self.gammas[index]

    def anticommutation_residual(self):
        """Return max_ij ||gamma_i o gamma_j - d_ij I||_F."""
        identity = np.eye(self.dim)
        return max(
            np.linalg.norm((gi @ gj + gj @ gi) / 2 - (i == j) * identity)
            for i, gi in enumerate(self.gammas)
            for j, gj in enumerate(self.gammas)
        )

    def chirality(self):
        """Return the product gamma_1 ... gamma_n."""
        return reduce(np.matmul, self.gammas)

    def __repr__(self):
        return "SpinFactorGenerators(n=%d, dim=%d)" % (self.n, self.dim)


def spin_factor(n):
    """Return the canonical generators of the spin factor Gamma_n.

    Base cases: n=1 is (1,), n=2 is (X, Z) and n=3 the Pauli matrices
    (X, Y, Z). For n >= 4 the generators of Gamma_{n-2} are lifted as
    X (x) gamma_i and completed with Z (x) I and Y (x) I, so the dimension
    doubles every two steps (2**(n // 2)).
    """
    if n < 1:
        raise ValueError("Spin factors are defined for n >= 1, got %s" % n)
    if n == 1:
        return SpinFactorGenerators([np.eye(1, dtype=complex)])
    if n == 2:
        return SpinFactorGenerators([PAULI_X, PAULI_Z])
    if n == 3:
        return SpinFactorGenerators([PAULI_X, PAULI_Y, PAULI_Z])
    previous = spin_factor(n - 2)
    identity = np.eye(previous.dim, dtype=complex)
    gammas = [np.kron(PAULI_X, gamma) for gamma in previous]
    gammas += [np.kron(PAULI_Z, identity), np.kron(PAULI_Y, identity)]
    return SpinFactorGenerators(gammas)
