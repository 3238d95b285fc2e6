import numpy as np
import pytest
from qsufficiency import (
    BlockDescriptor,
    RealSubspace,
    canonical_blocks,
    canonical_jordan_algebra,
    center,
    conditional_expectation,
    fixed_point_pipeline,
    generate_jordan,
    identify_structure,
    jordan_dim,
    ki_decompose,
    minimal_sufficient_star,
    scrambled_algebra,
)
from qsufficiency.structure import (
    diagonalizing_unitary,
    random_blocks,
    structure_checks,
)
from qsufficiency.verification import constructed_ki_model, structure_round_trip
from qsufficiency.fixtures import (
    KI_QUBIT_STATES,
    KI_WEIGHTS,
    block_embedded_model,
    commuting_model,
    gamma4_generators,
    gamma4_quadruple_product,
    ki_constructed_model,
)
from qsufficiency.matcore import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z, spin_factor


def _certificate(model):
    restricted = model.restrict_to_HS()
    algebra = minimal_sufficient_star(restricted)
    alpha = conditional_expectation(algebra, restricted.rho)
    return restricted, fixed_point_pipeline(restricted, alpha)


def test_block_descriptor_dimensions():
    block = BlockDescriptor("H", n=2, m=1)
    assert (block.rep_dim, block.jordan_dimension, block.star_dimension) == (4, 6, 16)
    assert BlockDescriptor("Gamma", 4).rep_dim == 4
    assert BlockDescriptor("R", 3, 2).space_dim == 6
    with pytest.raises(ValueError):
        BlockDescriptor("Gamma", 4).star_dimension
    with pytest.raises(ValueError):
        BlockDescriptor("Q", 1)
    with pytest.raises(ValueError):
        BlockDescriptor("R", 0)
    with pytest.raises(ValueError):
        BlockDescriptor("Gamma", 1)


def test_block_canonicalization():
    assert canonical_blocks([("Gamma", 3, 2)]) == [BlockDescriptor("C", 2, 2)]
    assert canonical_blocks([("Gamma", 2, 1)]) == [BlockDescriptor("R", 2, 1)]
    assert canonical_blocks([("Gamma", 5, 1)]) == [BlockDescriptor("H", 2, 1)]
    assert canonical_blocks([("H", 1, 1)]) == [BlockDescriptor("R", 1, 2)]
    assert canonical_blocks([("C", 1, 3)], mode="star") == [BlockDescriptor("C", 1, 3)]
    assert BlockDescriptor.from_any({"kind": "C", "n": 2}) == BlockDescriptor("C", 2, 1)


def test_identify_real_matrix_algebra():
    M2R = RealSubspace.span([PAULI_I, PAULI_X, 1j * PAULI_Y, PAULI_Z])
    M2R.flags.update(contains_identity=True, star_closed=True, mult_closed=True)
    decomposition = identify_structure(M2R, mode="star")
    assert decomposition.blocks == [BlockDescriptor("R", 2, 1)]
    assert decomposition.checks.all_checks_pass()


def test_identify_spin_factor_gamma4():
    algebra = generate_jordan(list(spin_factor(4)))
    assert algebra.dimension == 5
    decomposition = identify_structure(algebra, mode="jordan")
    assert decomposition.blocks == [BlockDescriptor("Gamma", 4, 1)]
    assert jordan_dim(decomposition.blocks) == algebra.dimension


def test_gamma4_quadruple_product_is_outside():
    algebra = generate_jordan(gamma4_generators())
    assert algebra.dimension == 5
    product = gamma4_quadruple_product()
    assert np.allclose(product, np.kron(PAULI_Y, PAULI_I))
    assert algebra.membership_residual(product) > 0.9


def test_identify_scrambled_direct_sum():
    blocks = [("C", 2, 2), ("R", 1, 1)]
    algebra, _ = scrambled_algebra(blocks, mode="star", seed=4)
    decomposition = identify_structure(algebra, mode="star", seed=1)
    assert decomposition.descriptor_multiset() == [("C", 2, 2), ("R", 1, 1)]
    assert decomposition.checks.all_checks_pass()
    assert structure_checks(algebra, decomposition).all_checks_pass()


@pytest.mark.parametrize(
    "blocks",
    [
        [("R", 3, 1)],
        [("H", 1, 1), ("C", 1, 1)],
        [("H", 2, 1)],
        [("C", 2, 1), ("R", 2, 1)],
        [("R", 1, 2), ("R", 1, 1)],
    ],
)
def test_star_structure_round_trip(blocks):
    found, expected = structure_round_trip(blocks, mode="star", seed=7)
    assert found == expected


@pytest.mark.parametrize(
    "blocks",
    [
        [("Gamma", 4, 1)],
        [("Gamma", 5, 1)],
        [("R", 2, 2), ("C", 2, 1)],
        [("H", 2, 1), ("R", 1, 1)],
        [("C", 3, 1)],
    ],
)
def test_jordan_structure_round_trip(blocks):
    found, expected = structure_round_trip(blocks, mode="jordan", seed=8)
    assert found == expected


@pytest.mark.parametrize(
    "blocks",
    [
        [("R", 1, 1), ("C", 1, 1), ("R", 1, 2)],
        [("R", 1, 1), ("R", 1, 1), ("R", 1, 1), ("R", 1, 1)],
        [("C", 1, 2), ("H", 1, 1)],
    ],
)
def test_round_trip_with_several_central_blocks(blocks):
    for mode in ("star", "jordan"):
        found, expected = structure_round_trip(blocks, mode=mode, seed=2)
        assert found == expected


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("mode", ["star", "jordan"])
def test_round_trip_of_random_blocks(mode, seed):
    blocks = random_blocks(4, mode=mode, seed=seed)
    found, expected = structure_round_trip(blocks, mode=mode, seed=seed)
    assert found == expected


def test_center_dimension_counts_blocks():
    algebra, _ = scrambled_algebra([("R", 1, 1), ("C", 1, 1), ("R", 2, 1)], seed=4)
    # R + C + R gives a real center of dimension 4
    assert center(algebra).dimension == 4


def test_identify_structure_invalid_inputs():
    with pytest.raises(ValueError):
        identify_structure(RealSubspace.full(2), mode="lie")
    not_unital = RealSubspace.span([PAULI_X, PAULI_Z])
    with pytest.raises(ValueError) as err:
        identify_structure(not_unital, mode="jordan")
    assert "contains_identity" in str(err.value)


def test_jordan_dim_formula():
    assert jordan_dim([("C", 2, 1)]) == 4
    assert jordan_dim([("Gamma", 4, 1)]) == 5
    assert jordan_dim([("R", 3, 2), ("H", 1, 1)]) == 7
    blocks = [("R", 3, 2), ("H", 1, 1)]
    assert jordan_dim(blocks) == canonical_jordan_algebra(blocks).dimension


def test_diagonalizing_unitary_degenerate_spectrum():
    V, p = diagonalizing_unitary(np.diag([0.5, 2.0, 0.5]))
    assert np.allclose(p, [2.0, 0.5, 0.5])
    assert np.allclose(V.conj().T @ V, np.eye(3))
    assert np.allclose(V @ np.diag(p) @ V.conj().T, np.diag([0.5, 2.0, 0.5]))


def test_ki_decomposition_of_constructed_model():
    model, certificate = _certificate(ki_constructed_model())
    ki = ki_decompose(model, certificate)
    assert ki.blocks == [BlockDescriptor("C", 2, 2)]
    assert np.allclose(np.diag(ki.P_blocks[0]), KI_WEIGHTS)
    assert ki.checks.all_checks_pass()
    assert ki.labels == ["X0", "X1", "X2"]
    for index, state in enumerate(KI_QUBIT_STATES):
        X_block = ki.X_blocks[index][0]
        assert np.allclose(np.linalg.eigvalsh(X_block), np.linalg.eigvalsh(state))
        assert np.allclose(ki.reassemble(index), model.elements[index].X)
        assert np.allclose(ki.reassemble("X%d" % index), model.elements[index].X)


def test_ki_weights_do_not_depend_on_elements():
    model, certificate = _certificate(ki_constructed_model())
    ki = ki_decompose(model, certificate)
    weights = [ki.fit_weights(element.X)[0] for element in model.elements]
    for P in weights[1:]:
        assert np.allclose(P, weights[0], atol=1e-9)
    assert np.allclose(np.diag(weights[0]).real, KI_WEIGHTS / KI_WEIGHTS.sum())


def test_ki_decomposition_of_commuting_models():
    for model in (commuting_model(), block_embedded_model()):
        restricted, certificate = _certificate(model)
        ki = ki_decompose(restricted, certificate)
        assert ki.blocks == [BlockDescriptor("R", 1, 1)] * 2
        assert all(np.allclose(P, np.eye(1)) for P in ki.P_blocks)
        assert ki.checks.all_checks_pass()


def test_ki_decomposition_random_construction():
    model, _, P_diagonals = constructed_ki_model([("R", 2, 2), ("C", 2, 1)], seed=3)
    restricted, certificate = _certificate(model)
    ki = ki_decompose(restricted, certificate)
    assert ki.checks.all_checks_pass()
    assert canonical_blocks(ki.blocks, mode="star") == canonical_blocks(
        [("R", 2, 2), ("C", 2, 1)], mode="star"
    )


def test_ki_decomposition_jordan_target():
    model, certificate = _certificate(ki_constructed_model())
    ki = ki_decompose(model, certificate, target="jordan")
    assert ki.blocks == [BlockDescriptor("C", 2, 2)]
    assert ki.checks.all_checks_pass()
    with pytest.raises(ValueError):
        ki_decompose(model, certificate, target="lie")


def test_ki_decomposition_to_dict():
    model, certificate = _certificate(ki_constructed_model())
    data = ki_decompose(model, certificate).to_dict()
    assert data["P_diagonals"][0] == pytest.approx([1.5, 0.5])
    assert [entry["label"] for entry in data["X_blocks"]] == ["X0", "X1", "X2"]
    assert all(len(entry["blocks"]) == 1 for entry in data["X_blocks"])


def test_ki_decomposition_with_repeated_labels():
    model = ki_constructed_model()
    for element in model.elements:
        element.label = "state"
    model, certificate = _certificate(model)
    ki = ki_decompose(model, certificate)
    assert len(ki.X_blocks) == len(model.elements) == 3
    assert ki.checks.all_checks_pass()
    for index, element in enumerate(model.elements):
        assert np.allclose(ki.reassemble(index), element.X)
    with pytest.raises(KeyError):
        ki.reassemble("state")
    with pytest.raises(IndexError):
        ki.reassemble(3)
