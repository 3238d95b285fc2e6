import numpy as np
import pytest
from qsufficiency import Model, ModelElement, SufficiencyError, likelihood_ratio, sld
from qsufficiency.Model import (
    sqrt_likelihood_ratio,
    d_tilde,
    d_rho,
    modular_superop,
    jordan_superop,
)
from qsufficiency.fixtures import qubit_local_model, commuting_model, block_embedded_model
from qsufficiency.verification import random_model
from qsufficiency.matcore import (
    PAULI_X,
    PAULI_Z,
    random_density_matrix,
    random_hermitian,
    support_proj,
)


def test_reference_is_inserted_first():
    model = qubit_local_model("xz")
    assert [e.label for e in model.elements] == ["reference", "d_x", "d_z"]
    assert model.reference_index == 0
    assert [e.label for e in model.non_reference_elements()] == ["d_x", "d_z"]


def test_reference_found_among_elements():
    model = block_embedded_model()
    assert model.reference_index == 0
    assert len(model.elements) == 2


def test_dimension_mismatch():
    with pytest.raises(ValueError) as err:
        Model(np.eye(2) / 2, [ModelElement("state", np.eye(3) / 3)])
    assert "Dimension mismatch" in str(err.value)


def test_state_element_must_be_psd():
    with pytest.raises(ValueError):
        ModelElement("state", np.diag([1, -0.5]))
    with pytest.raises(ValueError):
        ModelElement("unknown", np.eye(2))


def test_mixed_model_flag():
    model = Model(
        np.eye(2) / 2,
        [
            ModelElement("state", np.diag([0.7, 0.3])),
            ModelElement("derivative", PAULI_X / 2),
        ],
    )
    assert model.is_mixed()
    assert not qubit_local_model("xz").is_mixed()


def test_restrict_to_HS_full_rank_is_unchanged():
    model = commuting_model()
    restricted = model.restrict_to_HS()
    assert restricted.dim == 2
    assert np.allclose(restricted.isometry, np.eye(2))
    assert np.allclose(restricted.rho, model.rho)


def test_restrict_to_HS_leading_block():
    model = block_embedded_model()
    restricted = model.restrict_to_HS()
    assert restricted.restricted
    assert restricted.dim == 2
    assert np.allclose(np.linalg.eigvalsh(restricted.rho), [0.4, 0.6])
    V = restricted.isometry
    for element, original in zip(restricted.elements, model.elements):
        assert np.allclose(V @ element.X @ V.conj().T, original.X)


def test_restrict_to_HS_is_idempotent():
    restricted = block_embedded_model().restrict_to_HS()
    assert restricted.restrict_to_HS() is restricted


def test_restrict_to_HS_empty_support():
    model = Model(np.zeros((2, 2)))
    with pytest.raises(SufficiencyError):
        model.restrict_to_HS()


def test_sqrt_likelihood_ratio():
    model = commuting_model()
    R = sqrt_likelihood_ratio(np.diag([0.75, 0.25]), model.rho)
    assert np.allclose(R, np.diag([np.sqrt(1.5), np.sqrt(0.5)]))
    rho = random_density_matrix(3, seed=4)
    X = random_density_matrix(3, seed=5)
    R = sqrt_likelihood_ratio(X, rho)
    assert np.allclose(R @ rho @ R, X)
    assert np.min(np.linalg.eigvalsh(R)) > -1e-10


def test_sqrt_likelihood_ratio_not_absolutely_continuous():
    with pytest.raises(SufficiencyError) as err:
        sqrt_likelihood_ratio(np.eye(2) / 2, np.diag([1.0, 0.0]))
    assert "absolutely continuous" in str(err.value)


def test_sld_qubit():
    model = qubit_local_model("z")
    L = sld(PAULI_Z / 2, model.rho)
    assert np.allclose(L, PAULI_Z)
    element = model.elements[1]
    assert np.allclose(likelihood_ratio(element, model.rho), PAULI_Z)


def test_sld_not_in_range():
    with pytest.raises(SufficiencyError):
        sld(np.diag([0.0, 1.0]), np.diag([1.0, 0.0]))


def test_likelihood_ratio_set_of_reference_is_support():
    model = block_embedded_model().restrict_to_HS()
    ratios = model.likelihood_ratio_set()
    assert np.allclose(ratios[0], np.eye(2))


def test_model_superoperators():
    rho = np.diag([0.75, 0.25])
    E12 = np.array([[0, 1], [0, 0]])
    assert np.allclose(d_tilde(rho)(E12), 0.5 * E12)
    assert np.allclose(modular_superop(rho)(E12), 3 * E12)
    assert np.allclose(jordan_superop(rho)(E12), 0.5 * E12)


def test_model_to_dict():
    data = qubit_local_model("z").to_dict()
    assert data["dim"] == 2
    assert len(data["elements"]) == 1
    assert data["elements"][0]["label"] == "d_z"


def test_d_rho_is_i_times_d_tilde():
    rho = np.diag([0.75, 0.25])
    E12 = np.array([[0, 1], [0, 0]])
    assert np.allclose(d_rho(rho)(E12), 0.5j * E12)
    assert d_rho(rho).complex_linearity_residual() < 1e-12


def test_transformed_element_keeps_tolerances():
    loose = {"psd_tol": 1e-4}
    X = np.diag([1.0, -1e-6])
    element = ModelElement("state", X, label="almost psd", tolerances=loose)
    moved = element.transformed(2 * X)
    assert moved.tolerances is element.tolerances
    assert moved.label == "almost psd"
    with pytest.raises(ValueError):
        element.transformed(2 * X, tolerances={"psd_tol": 1e-10})


@pytest.mark.parametrize("dim, rank, seed", [(2, None, 0), (3, None, 1), (3, 2, 2), (4, 2, 3)])
def test_d_tilde_spectrum_and_modular_relation(dim, rank, seed):
    rho = random_density_matrix(dim, rank=rank, seed=seed)
    D = d_tilde(rho).matrix
    assert np.allclose(D, D.T, atol=1e-10)
    eigenvalues = np.linalg.eigvalsh((D + D.T) / 2)
    assert eigenvalues.min() >= -1 - 1e-10
    assert eigenvalues.max() <= 1 + 1e-10
    if rank is None:
        identity = np.eye(D.shape[0])
        Delta = modular_superop(rho).matrix
        residual = np.linalg.norm(Delta @ (identity - D) - (identity + D))
        assert residual <= 1e-8 * (1 + np.linalg.norm(Delta))


@pytest.mark.parametrize("seed", range(4))
def test_restrict_to_HS_preserves_pairings(seed):
    model = random_model(4, n_elements=2, setting="states", seed=seed)
    V = np.linalg.qr(
        np.random.default_rng(seed).normal(size=(6, 4))
        + 1j * np.random.default_rng(seed + 10).normal(size=(6, 4))
    )[0]
    embedded = Model(
        V @ model.rho @ V.conj().T,
        [e.transformed(V @ e.X @ V.conj().T) for e in model.elements],
    )
    restricted = embedded.restrict_to_HS()
    assert restricted.dim == 4
    for X, X_r in zip(embedded.operators, restricted.operators):
        for Y, Y_r in zip(embedded.operators, restricted.operators):
            assert np.isclose(np.trace(X_r @ Y_r), np.trace(X @ Y), atol=1e-10)


@pytest.mark.parametrize("dim, rank, seed", [(2, 1, 0), (3, 1, 1), (3, 2, 2), (4, 3, 3)])
def test_sld_is_minimal_for_degenerate_reference(dim, rank, seed):
    rho = random_density_matrix(dim, rank=rank, seed=seed)
    kappa = np.eye(dim) - support_proj(rho)
    L0 = random_hermitian(dim, seed=seed + 100)
    X = (L0 @ rho + rho @ L0) / 2
    L = sld(X, rho)
    assert np.allclose((L @ rho + rho @ L) / 2, X, atol=1e-10)
    # the kernel of J_rho is kappa B kappa, so the minimal solution drops it
    assert np.allclose(kappa @ L @ kappa, 0, atol=1e-10)
    assert np.allclose(L, L0 - kappa @ L0 @ kappa, atol=1e-8)
    assert np.linalg.norm(L) <= np.linalg.norm(L0) + 1e-10
