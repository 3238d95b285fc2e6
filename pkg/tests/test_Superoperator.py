import numpy as np
import pytest
from qsufficiency import Superoperator
from qsufficiency.matcore import hs_inner, random_complex_matrix


def test_superoperator_from_function():
    transpose = Superoperator.from_function(2, lambda B: B.T, label="transpose")
    B = np.array([[0, 1], [0, 0]])
    assert np.allclose(transpose(B), B.T)
    assert transpose.size == 8
    assert "transpose" in repr(transpose)


def test_superoperator_dimension_checks():
    with pytest.raises(ValueError):
        Superoperator(2, np.eye(4))
    with pytest.raises(ValueError):
        Superoperator.identity(2)(np.eye(3))


def test_composition_and_adjoint():
    A = random_complex_matrix(2, seed=1)
    left = Superoperator.from_function(2, lambda B: A @ B)
    conjugation = Superoperator.from_function(2, lambda B: B.conj().T)
    composed = left @ conjugation
    B, C = random_complex_matrix(2, seed=2), random_complex_matrix(2, seed=3)
    assert np.allclose(composed(B), A @ B.conj().T)
    assert hs_inner(C, left(B)) == pytest.approx(hs_inner(left.adjoint()(C), B))
    assert np.allclose(left.adjoint()(C), A.conj().T @ C)
    assert Superoperator.identity(2).distance(Superoperator.identity(2)) == 0


def test_complex_linearity_residual():
    transpose = Superoperator.from_function(3, lambda B: B.T)
    conjugate = Superoperator.from_function(3, lambda B: B.conj())
    assert transpose.complex_linearity_residual() < 1e-12
    assert conjugate.complex_linearity_residual() > 1


def test_hermitian_restriction_and_extension():
    identity = Superoperator.from_hermitian_matrix(2, np.eye(4))
    assert identity.distance(Superoperator.identity(2)) < 1e-12
    matrix, leak = Superoperator.from_function(2, lambda B: 2 * B).hermitian_restriction()
    assert np.allclose(matrix, 2 * np.eye(4))
    assert leak < 1e-12
    _, leak = Superoperator.from_function(2, lambda B: 1j * B).hermitian_restriction()
    assert leak > 1
