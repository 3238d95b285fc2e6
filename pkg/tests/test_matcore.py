import numpy as np
import pytest
from qsufficiency.matcore import (
    hs_inner,
    hs_norm,
    vectorize,
    devectorize,
    operator_basis,
    hermitian_basis,
    herm_eig,
    matfun,
    check_hermitian,
    check_psd,
    geninv,
    psd_sqrt,
    support_proj,
    eigenprojections,
    quaternion_multiply,
    quaternion_embed,
    spin_factor,
    random_unitary,
    random_density_matrix,
    derive_seeds,
    matrix_to_json,
    matrix_from_json,
    to_canonical_json,
)


def test_hs_inner_is_real_part_of_trace():
    A = np.array([[1, 2j], [0, 1]])
    B = np.array([[1j, 1], [3, 2]])
    assert hs_inner(A, B) == pytest.approx(np.real(np.trace(A.conj().T @ B)))
    assert hs_inner(A, B) == pytest.approx(vectorize(A) @ vectorize(B))


def test_hs_inner_dimension_mismatch():
    with pytest.raises(ValueError):
        hs_inner(np.eye(2), np.eye(3))


def test_operator_basis_is_orthonormal():
    basis = operator_basis(2)
    assert len(basis) == 8
    gram = np.array([[hs_inner(a, b) for b in basis] for a in basis])
    assert np.allclose(gram, np.eye(8))
    A = np.array([[1 + 1j, 2], [-1j, 0.5]])
    assert np.allclose(devectorize(vectorize(A), 2), A)


def test_hermitian_basis():
    basis = hermitian_basis(3)
    assert len(basis) == 9
    for b in basis:
        assert np.allclose(b, b.conj().T)
    gram = np.array([[hs_inner(a, b) for b in basis] for a in basis])
    assert np.allclose(gram, np.eye(9))


def test_herm_eig_descending_order():
    eigenvalues, U = herm_eig(np.diag([0.2, 3.0, -1.0]))
    assert np.allclose(eigenvalues, [3.0, 0.2, -1.0])
    assert np.allclose(U.conj().T @ U, np.eye(3))


def test_check_hermitian_rejects_non_hermitian():
    with pytest.raises(ValueError) as err:
        check_hermitian(np.array([[0, 1], [0, 0]]), name="X")
    assert "not Hermitian" in str(err.value)


def test_check_psd_rejects_negative_eigenvalue():
    with pytest.raises(ValueError) as err:
        check_psd(np.diag([1, -1e-3]), name="reference")
    assert "positive semi-definite" in str(err.value)


def test_matfun_kernel_conventions():
    A = np.diag([4.0, 0.0])
    assert np.allclose(matfun(A, np.sqrt), np.diag([2, 0]))
    assert np.allclose(matfun(A, np.sqrt, on_kernel="identity"), np.diag([2, 1]))
    assert np.allclose(geninv(A), np.diag([0.25, 0]))
    with pytest.raises(ValueError):
        matfun(A, np.sqrt, on_kernel="unknown")


def test_psd_sqrt_and_support():
    rho = random_density_matrix(4, rank=2, seed=1)
    root = psd_sqrt(rho)
    assert np.allclose(root @ root, rho)
    P = support_proj(rho)
    assert np.allclose(P @ P, P)
    assert np.trace(P).real == pytest.approx(2)
    assert np.allclose(P @ rho, rho)


def test_eigenprojections_cluster_degenerate_eigenvalues():
    U = random_unitary(3, seed=2)
    A = U @ np.diag([2.0, 2.0 + 1e-12, -1.0]) @ U.conj().T
    values, projections = eigenprojections(A, cluster_tol=1e-8)
    assert np.allclose(values, [2.0, -1.0])
    assert np.trace(projections[0]).real == pytest.approx(2)
    assert np.allclose(sum(projections), np.eye(3))


def test_quaternion_embedding_is_a_ring_homomorphism():
    rng = np.random.default_rng(0)
    p, q = rng.normal(size=4), rng.normal(size=4)
    product = quaternion_embed(quaternion_multiply(p, q))
    assert np.allclose(quaternion_embed(p) @ quaternion_embed(q), product)


def test_quaternion_units():
    i, j, k = [quaternion_embed(unit) for unit in np.eye(4)[1:]]
    minus_one = -np.eye(2)
    for unit in (i, j, k):
        assert np.allclose(unit @ unit, minus_one)
    assert np.allclose(i @ j, -k)
    assert np.allclose(j @ k, -i)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_spin_factor_generators(n):
    generators = spin_factor(n)
    assert len(generators) == n
    assert generators.dim == 2 ** (n // 2)
    assert generators.anticommutation_residual() < 1e-12


def test_spin_factor_invalid():
    with pytest.raises(ValueError):
        spin_factor(0)


def test_derive_seeds_is_deterministic():
    assert derive_seeds(3, 4) == derive_seeds(3, 4)
    assert len(set(derive_seeds(3, 4))) == 4


def test_matrix_json_conversions():
    A = np.array([[1, 2j], [-2j, 0.5]])
    assert np.allclose(matrix_from_json(matrix_to_json(A)), A)
    assert np.allclose(matrix_from_json([[1, 0], [0, 2]]), np.diag([1, 2]))
    with pytest.raises(ValueError):
        matrix_from_json([[1, 2], [3]])


def test_canonical_json_is_deterministic():
    data = {"b": np.float64(0.1), "a": [np.int64(2), float("inf")], "c": True}
    text = to_canonical_json(data)
    assert text == to_canonical_json(dict(reversed(list(data.items()))))
    assert text.index('"a"') < text.index('"b"')
    assert '"inf"' in text
    assert hs_norm(np.eye(2)) == pytest.approx(np.sqrt(2))
