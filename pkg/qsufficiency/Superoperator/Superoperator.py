"""Implements the Superoperator class (real-linear maps on operators)."""

import numpy as np

from ..matcore import (
    as_operator,
    vectorize,
    devectorize,
    operator_space_dim,
    hermitian_basis_matrix,
)


def complex_unit_matrix(dim):
    """Real matrix of the map B -> iB in the vectorized coordinates."""
    n = dim * dim
    zero, identity = np.zeros((n, n)), np.eye(n)
    return np.block([[zero, -identity], [identity, zero]])


class Superoperator:
    """Real-linear map on the dim x dim complex operators.

    The map is stored as a real (2 dim^2) x (2 dim^2) matrix acting on the
    vectorizations of ``matcore.vectorize`` (real parts, then imaginary
    parts). This basis is orthonormal for the real Hilbert-Schmidt inner
    product, so the adjoint of a superoperator is its transpose.

    Examples
    --------

    >>> transpose = Superoperator.from_function(2, lambda B: B.T)
    >>> transpose(np.array([[0, 1], [0, 0]]))

    Parameters
    ----------

    dim
      Dimension of the Hilbert space the operators act on.

    matrix
      The real (2 dim^2) x (2 dim^2) matrix of the map.

    label
      Optional name, used in reports and error messages.
    """

    def __init__(self, dim, matrix, label=None):
        """Initialize."""
        matrix = np.asarray(matrix, dtype=float)
        size = operator_space_dim(dim)
        if matrix.shape != (size, size):
            raise ValueError(
                "A superoperator on dim %d needs a %dx%d matrix, got %s"
                % (dim, size, size, matrix.shape)
            )
        self.dim = dim
        self.matrix = matrix
        self.label = label

    @staticmethod
    def from_function(dim, function, label=None):
        """Build the superoperator of a real-linear Python function on
        operators, by applying it to every operator basis element."""
        size = operator_space_dim(dim)
        columns = [
            vectorize(function(devectorize(unit, dim))) for unit in np.eye(size)
        ]
        return Superoperator(dim, np.array(columns).T, label=label)

    @staticmethod
    def identity(dim):
        return Superoperator(dim, np.eye(operator_space_dim(dim)), "identity")

    @staticmethod
    def from_hermitian_matrix(dim, matrix, label=None):
        """Complex-linear extension of a map given on the Hermitian operators.

        ``matrix`` acts on coordinates in ``hermitian_basis(dim)``; the result
        maps B = H1 + i H2 (H1, H2 Hermitian) to f(H1) + i f(H2).
        """
        H = hermitian_basis_matrix(dim)
        K = complex_unit_matrix(dim)
        on_hermitian = H @ matrix @ H.T
        return Superoperator(dim, on_hermitian - K @ on_hermitian @ K, label)

    @property
    def size(self):
        return self.matrix.shape[0]

    def __call__(self, operator):
        operator = as_operator(operator)
        if operator.shape != (self.dim, self.dim):
            raise ValueError(
                "Dimension mismatch: operator of shape %s, superoperator on "
                "dim %d" % (operator.shape, self.dim)
            )
        return devectorize(self.matrix @ vectorize(operator), self.dim)

    def __matmul__(self, other):
        """Composition: (self @ other)(B) = self(other(B))."""
        if other.dim != self.dim:
            raise ValueError("Cannot compose superoperators of different dims")
        return Superoperator(self.dim, self.matrix @ other.matrix)

    def adjoint(self):
        """Adjoint for the real Hilbert-Schmidt inner product."""
        return Superoperator(self.dim, self.matrix.T, label=self.label)

    def distance(self, other):
        """Spectral-norm distance between the two matrices."""
        return float(np.linalg.norm(self.matrix - other.matrix, 2))

    def complex_linearity_residual(self):
        """Return ||S(iB) - iS(B)|| as a matrix norm (0 iff complex-linear)."""
        K = complex_unit_matrix(self.dim)
        return float(np.linalg.norm(self.matrix @ K - K @ self.matrix))

    def hermitian_restriction(self):
        """Return (alpha_h, leak) where alpha_h is the matrix of the map
        restricted to Hermitian operators, in ``hermitian_basis`` coordinates,
        and ``leak`` measures how far Hermitian inputs leave the Hermitian
        subspace (0 for maps sending Hermitian to Hermitian)."""
        H = hermitian_basis_matrix(self.dim)
        image = self.matrix @ H
        leak = float(np.linalg.norm(image - H @ (H.T @ image)))
        return H.T @ image, leak

    def __repr__(self):
        return "Superoperator(dim=%d%s)" % (
            self.dim,
            "" if self.label is None else ", %s" % self.label,
        )
