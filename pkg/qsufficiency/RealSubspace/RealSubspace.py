"""Implements the RealSubspace class."""

import numpy as np
import scipy.linalg

from ..Tolerances import Tolerances
from ..matcore import (
    as_operator,
    vectorize,
    vectorize_all,
    devectorize,
    hs_norm,
    operator_space_dim,
    matrix_to_json,
    as_generator,
)
from ..Superoperator import Superoperator

FLAG_NAMES = (
    "contains_identity",
    "star_closed",
    "mult_closed",
    "jordan_closed",
    "complex_closed",
)


def canonicalize_signs(rows, threshold=1e-8):
    """Flip each row so that its first significant coefficient is positive."""
    rows = np.array(rows, dtype=float)
    for row in rows:
        significant = np.flatnonzero(np.abs(row) > threshold * np.abs(row).max())
        if len(significant) and row[significant[0]] < 0:
            row *= -1
    return rows


def extend_orthonormal_rows(Q, candidates, span_tol, chunk_size=1024):
    """Return Q extended with an orthonormal basis of the candidates' span
    modulo span(Q).

    Candidates with a norm below ``span_tol`` times the largest candidate
    norm are rounding noise and are dropped. The others are normalized,
    orthogonalized twice against Q, then a rank-revealing (column-pivoted)
    QR keeps the directions whose residual exceeds ``span_tol``. Existing
    rows of Q are never modified.
    """
    Q = np.asarray(Q, dtype=float)
    candidates = np.asarray(candidates, dtype=float)
    full_dim = Q.shape[1]
    if len(candidates):
        norms = np.linalg.norm(candidates, axis=1)
        candidates = candidates[norms > span_tol * norms.max()]
    for start in range(0, len(candidates), chunk_size):
        if len(Q) >= full_dim:
            break
        C = candidates[start : start + chunk_size]
        norms = np.linalg.norm(C, axis=1)
        C = C[norms > 0] / norms[norms > 0, None]
        if len(C) == 0:
            continue
        for _ in range(2):
            C = C - (C @ Q.T) @ Q
        q, r, _ = scipy.linalg.qr(C.T, mode="economic", pivoting=True)
        rank = int(np.sum(np.abs(np.diag(r)) > span_tol))
        if rank == 0:
            continue
        new = q[:, :rank].T
        new = new - (new @ Q.T) @ Q
        new = scipy.linalg.qr(new.T, mode="economic")[0].T
        Q = np.vstack([Q, canonicalize_signs(new)])
    return Q


class RealSubspace:
    """Real-linear subspace of the dim x dim complex operators.

    The subspace is stored through an orthonormal basis (for the real
    Hilbert-Schmidt inner product ``Re Tr A*B``), itself stored as the rows
    of a real matrix of vectorized operators.

    Examples
    --------

    >>> M2R = RealSubspace.span([I, X, 1j * Y, Z])
    >>> M2R.project(np.array([[0, 0], [1j, 0]]))  # -> 0

    Parameters
    ----------

    dim
      Dimension of the Hilbert space the operators act on.

    vectors
      Real matrix whose rows are the orthonormal vectorized basis elements.

    flags
      Dict of closure flags (see ``FLAG_NAMES``), usually set by the
      closure generators or by ``verify_predicates``.

    label
      Optional name used in reports.
    """

    def __init__(self, dim, vectors=None, flags=None, label=None):
        """Initialize."""
        self.dim = dim
        if vectors is None:
            vectors = np.zeros((0, operator_space_dim(dim)))
        self.vectors = np.asarray(vectors, dtype=float).reshape(
            (-1, operator_space_dim(dim))
        )
        self.flags = {name: False for name in FLAG_NAMES}
        self.flags.update(flags or {})
        self.label = label

    @staticmethod
    def span(operators, dim=None, span_tol=Tolerances.span_tol, label=None):
        """Return the real span of a list of operators.

        Operators whose residual (after normalization) against the previous
        ones is below ``span_tol`` are dropped.
        """
        operators = [as_operator(op) for op in operators]
        if dim is None:
            if len(operators) == 0:
                raise ValueError("The dim is required to span an empty list")
            dim = operators[0].shape[0]
        empty = RealSubspace(dim, label=label)
        return empty.extended(operators, span_tol=span_tol)

    @staticmethod
    def full(dim, label=None):
        """Return the space of all dim x dim operators (real dim 2 dim^2)."""
        return RealSubspace(
            dim,
            np.eye(operator_space_dim(dim)),
            flags={name: True for name in FLAG_NAMES},
            label=label,
        )

    def extended(self, operators, span_tol=Tolerances.span_tol, flags=None):
        """Return the span of this subspace and the new operators. The
        current basis is kept as the first basis elements."""
        operators = [as_operator(op) for op in operators]
        for op in operators:
            if op.shape != (self.dim, self.dim):
                raise ValueError(
                    "Dimension mismatch: operator of shape %s in a subspace "
                    "of %dx%d operators" % (op.shape, self.dim, self.dim)
                )
        if len(operators) == 0:
            vectors = self.vectors
        else:
            vectors = extend_orthonormal_rows(
                self.vectors, vectorize_all(operators), span_tol=span_tol
            )
        return RealSubspace(self.dim, vectors, flags=flags, label=self.label)

    def __len__(self):
        return self.vectors.shape[0]

    @property
    def dimension(self):
        """Real dimension of the subspace."""
        return len(self)

    @property
    def basis(self):
        """List of the orthonormal basis operators."""
        return [devectorize(v, self.dim) for v in self.vectors]

    def coordinates(self, operator):
        """Return the coordinates <b_i, B> of the projection of B."""
        return self.vectors @ vectorize(as_operator(operator))

    def project(self, operator):
        """Orthogonal projection (real Hilbert-Schmidt) onto the subspace."""
        operator = as_operator(operator)
        if operator.shape != (self.dim, self.dim):
            raise ValueError(
                "Dimension mismatch: cannot project a %s operator on a "
                "subspace of %dx%d operators" % (operator.shape, self.dim, self.dim)
            )
        vector = vectorize(operator)
        return devectorize(self.vectors.T @ (self.vectors @ vector), self.dim)

    def membership_residual(self, operator):
        """Return ||B - project(B)||_F."""
        operator = as_operator(operator)
        return hs_norm(operator - self.project(operator))

    def member(self, operator, tolerances=None):
        """Return (is_member, residual).

        B is a member when ||B - project(B)|| <= member_tol * (1 + ||B||).
        """
        tolerances = Tolerances.from_any(tolerances)
        operator = as_operator(operator)
        residual = self.membership_residual(operator)
        passes = residual <= tolerances.member_tol * (1 + hs_norm(operator))
        return passes, residual

    def contains(self, other, tolerances=None):
        """Return True iff every basis element of ``other`` is a member."""
        return all(self.member(b, tolerances=tolerances)[0] for b in other.basis)

    def projection_superop(self):
        """Return the orthogonal projection as a Superoperator."""
        return Superoperator(
            self.dim,
            self.vectors.T @ self.vectors,
            label="projection onto %s" % (self.label or "subspace"),
        )

    def orthonormality_residual(self):
        """Return max |<b_i, b_j> - d_ij|."""
        if len(self) == 0:
            return 0.0
        gram = self.vectors @ self.vectors.T
        return float(np.max(np.abs(gram - np.eye(len(self)))))

    def hermitian_part(self, span_tol=Tolerances.span_tol):
        """Return the span of the Hermitian parts of the basis elements."""
        return RealSubspace.span(
            [(b + b.conj().T) / 2 for b in self.basis],
            dim=self.dim,
            span_tol=span_tol,
        )

    def compressed(self, isometry, span_tol=Tolerances.span_tol):
        """Return the span of V* b V for an isometry V (columns)."""
        V = np.asarray(isometry, dtype=complex)
        return RealSubspace.span(
            [V.conj().T @ b @ V for b in self.basis],
            dim=V.shape[1],
            span_tol=span_tol,
        )

    def conjugated(self, unitary, span_tol=Tolerances.span_tol):
        """Return the subspace U* V U (flags are preserved)."""
        result = self.compressed(unitary, span_tol=span_tol)
        result.flags = dict(self.flags)
        result.label = self.label
        return result

    def random_element(self, seed=None, hermitian=False):
        """Return a random (Gaussian) combination of the basis elements."""
        rng = as_generator(seed)
        coefficients = rng.normal(size=len(self))
        element = devectorize(coefficients @ self.vectors, self.dim)
        if hermitian:
            element = (element + element.conj().T) / 2
        return element

    def to_dict(self):
        """Return a JSON-serializable description of the subspace."""
        return {
            "dim_ambient": self.dim,
            "dimension": self.dimension,
            "flags": dict(self.flags),
            "basis": [matrix_to_json(b) for b in self.basis],
        }

    def __repr__(self):
        flags = [name for name, value in self.flags.items() if value]
        return "RealSubspace(dim_ambient=%d, dimension=%d%s)" % (
            self.dim,
            self.dimension,
            (", " + ", ".join(flags)) if flags else "",
        )
