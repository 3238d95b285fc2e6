"""Real Hilbert-Schmidt geometry of complex matrices.

Operators are mapped to real vectors of length ``2 * dim**2`` (real parts
first, then imaginary parts, row-major). The real Hilbert-Schmidt inner
product ``Re Tr A*B`` becomes the Euclidean dot product of these vectors,
which is what makes superoperators plain real matrices.
"""

import numpy as np


def as_operator(matrix, name="operator"):
    """Return ``matrix`` as a square complex array, or raise a ValueError."""
    array = np.asarray(matrix, dtype=complex)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError(
            "%s should be a square matrix, got shape %s" % (name, array.shape)
        )
    if not np.all(np.isfinite(array)):
        raise ValueError("%s has non-finite entries" % name)
    return array


def check_same_dims(A, B):
    if A.shape != B.shape:
        raise ValueError(
            "Dimension mismatch between operators of shapes %s and %s"
            % (A.shape, B.shape)
        )


def hs_inner(A, B):
    """Return the real Hilbert-Schmidt inner product Re Tr A*B."""
    A, B = as_operator(A), as_operator(B)
    check_same_dims(A, B)
    return float(np.real(np.vdot(A, B)))


def hs_norm(A):
    """Return the Frobenius norm sqrt(Re Tr A*A)."""
    return float(np.linalg.norm(A))


def vectorize(A):
    """Return the real vector (Re A, Im A) flattened row-major."""
    A = np.asarray(A, dtype=complex)
    return np.concatenate([A.real.ravel(), A.imag.ravel()])


def devectorize(vector, dim):
    """Inverse of ``vectorize`` for a ``dim x dim`` operator."""
    vector = np.asarray(vector, dtype=float)
    n = dim * dim
    return (vector[:n] + 1j * vector[n:]).reshape((dim, dim))


def vectorize_all(operators):
    """Stack the vectorizations of a list of operators as rows."""
    return np.array([vectorize(op) for op in operators])


def operator_space_dim(dim):
    """Real dimension of the space of all dim x dim complex operators."""
    return 2 * dim * dim


def operator_basis(dim):
    """Return the real-orthonormal basis E_ij, iE_ij in vectorization order."""
    N = operator_space_dim(dim)
    return [devectorize(e, dim) for e in np.eye(N)]


def hermitian_basis(dim):
    """Return an orthonormal basis of the Hermitian dim x dim operators.

    The order is: diagonal units, then for each pair i < j the symmetric
    unit (E_ij + E_ji)/sqrt(2) and the antisymmetric one i(E_ij - E_ji)/sqrt(2).
    """
    basis = []
    for i in range(dim):
        E = np.zeros((dim, dim), dtype=complex)
        E[i, i] = 1
        basis.append(E)
    for i in range(dim):
        for j in range(i + 1, dim):
            S = np.zeros((dim, dim), dtype=complex)
            S[i, j] = S[j, i] = 1 / np.sqrt(2)
            A = np.zeros((dim, dim), dtype=complex)
            A[i, j] = 1j / np.sqrt(2)
            A[j, i] = -1j / np.sqrt(2)
            basis += [S, A]
    return basis


def hermitian_basis_matrix(dim):
    """Return the (2 dim^2) x (dim^2) matrix whose columns are the
    vectorized elements of ``hermitian_basis(dim)``."""
    return vectorize_all(hermitian_basis(dim)).T
