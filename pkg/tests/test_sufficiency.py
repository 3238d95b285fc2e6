import numpy as np
import pytest
from qsufficiency import (
    RealSubspace,
    Superoperator,
    SufficiencyError,
    generate_star,
    verify_sufficient,
    sufficiency_checks,
    pinching,
    diagonal_pinching,
    trace_replacement,
    conditional_expectation,
    faithful_extension,
    minimal_sufficient_star,
    minimal_sufficient_jordan,
    modular_orbit_star,
    sufficient_enlargements,
    fixed_point_pipeline,
    likelihood_in_algebra_check,
    modular_equivalence_checks,
    random_model,
    scrambled_algebra,
)
from qsufficiency.structure import random_blocks
from qsufficiency.sufficiency import (
    is_positive_sampled,
    is_unital,
    schwarz_residual,
    bimodule_residual,
    faithfulness_residual,
    adjoint_preservation_residual,
    support_residual,
    jordan_ce_residuals,
    fixed_point_projection,
    power_limit,
    likelihood_ratio_residuals,
    d_tilde_invariance,
    hermiticity_residual,
    operator_norm_sampled,
    modular_orbit_generators,
)
from qsufficiency.fixtures import (
    qubit_local_model,
    commuting_model,
    block_embedded_model,
    block_embedded_algebra,
    block_embedded_map,
)
from qsufficiency.matcore import (
    PAULI_X,
    PAULI_Z,
    hs_norm,
    random_density_matrix,
    support_proj,
)


def test_identity_is_sufficient():
    model = qubit_local_model("xz")
    passes, residual = verify_sufficient(model, Superoperator.identity(2))
    assert passes
    assert residual == 0


def test_pinching_sufficiency():
    model = commuting_model()
    assert verify_sufficient(model, diagonal_pinching(2))[0]
    assert not verify_sufficient(model, trace_replacement(2))[0]
    checks = sufficiency_checks(model, trace_replacement(2))
    assert checks["sufficient for reference"].passes
    assert not checks["sufficient for X"].passes
    block_pinching = pinching([np.diag([1, 0]), np.diag([0, 1])])
    assert block_pinching.distance(diagonal_pinching(2)) < 1e-12


def test_sufficiency_accepts_list_of_operators():
    passes, _ = verify_sufficient([np.diag([0.7, 0.3])], diagonal_pinching(2))
    assert passes
    with pytest.raises(ValueError):
        verify_sufficient([np.eye(3)], diagonal_pinching(2))


def test_map_properties_of_pinching():
    alpha = diagonal_pinching(3)
    assert is_positive_sampled(alpha, seed=0)[0]
    assert is_unital(alpha)[0]
    assert schwarz_residual(alpha, seed=0) > -1e-12
    assert faithfulness_residual(alpha) == pytest.approx(1)
    assert adjoint_preservation_residual(alpha, seed=0) < 1e-12
    assert not is_unital(Superoperator.from_function(3, lambda B: 2 * B))[0]


def test_qubit_minimal_algebras():
    model = qubit_local_model("xz").restrict_to_HS()
    real_algebra = minimal_sufficient_star(model)
    complex_algebra = minimal_sufficient_star(model, scalars="complex")
    jordan_algebra, rho0 = minimal_sufficient_jordan(model, star_algebra=real_algebra)
    assert real_algebra.dimension == 4
    assert complex_algebra.dimension == 8
    assert jordan_algebra.dimension == 3
    assert jordan_algebra.dimension < real_algebra.dimension < complex_algebra.dimension
    assert np.allclose(rho0, np.eye(2) / 2)


def test_single_derivative_minimal_algebra():
    model = qubit_local_model("z").restrict_to_HS()
    assert minimal_sufficient_star(model).dimension == 2


def test_minimal_algebras_require_restricted_model():
    with pytest.raises(ValueError) as err:
        minimal_sufficient_star(qubit_local_model("z"))
    assert "restrict_to_HS" in str(err.value)


def test_minimal_algebra_contains_likelihood_ratios():
    model = random_model(3, setting="states", seed=3).restrict_to_HS()
    algebra = minimal_sufficient_star(model)
    assert likelihood_ratio_residuals(algebra, model).all_checks_pass()
    orbit_algebra = modular_orbit_star(model)
    assert orbit_algebra.contains(algebra)
    assert algebra.contains(orbit_algebra)


def test_sufficient_enlargements_contain_minimal_algebra():
    model = random_model(2, setting="derivatives", seed=5).restrict_to_HS()
    algebra = minimal_sufficient_star(model)
    enlargements = sufficient_enlargements(algebra, model, n_enlargements=4, seed=0)
    assert len(enlargements) == 4
    for enlargement in enlargements:
        assert enlargement.contains(algebra)
        alpha = conditional_expectation(enlargement, model.rho)
        assert verify_sufficient(model, alpha)[0]


def test_conditional_expectation_laws():
    model = random_model(3, setting="states", seed=7).restrict_to_HS()
    algebra = minimal_sufficient_star(model)
    alpha = conditional_expectation(algebra, model.rho)
    assert sufficiency_checks(model, alpha).all_checks_pass()
    assert is_unital(alpha)[0]
    assert is_positive_sampled(alpha, seed=1)[0]
    assert bimodule_residual(alpha, algebra) < 1e-8
    assert schwarz_residual(alpha, seed=2) > -1e-9
    B = np.arange(9).reshape((3, 3)) * (1 + 1j)
    assert algebra.member(alpha(B))[0]
    assert hs_norm(alpha(alpha(B)) - alpha(B)) < 1e-8


def test_conditional_expectation_degenerate_reference():
    model = random_model(3, setting="degenerate", seed=11).restrict_to_HS()
    algebra = minimal_sufficient_star(model)
    alpha, extension = conditional_expectation(algebra, model.rho, return_extension=True)
    assert sufficiency_checks(model, alpha).all_checks_pass()
    assert extension.verify().all_checks_pass()
    supports = support_residual(algebra, model.rho)
    assert supports["inclusion"] < 1e-8


def test_faithful_extension_full_algebra():
    extension = faithful_extension(RealSubspace.full(2), np.diag([1.0, 0.0]))
    assert np.allclose(extension.delta, np.diag([0, 1]))
    assert np.allclose(extension.sigma, np.eye(2))
    assert extension.complex_basis


@pytest.mark.parametrize("dim, seed", [(2, 0), (2, 1), (3, 2), (3, 3), (4, 4)])
def test_faithful_extension_random_degenerate_reference(dim, seed):
    rho = random_density_matrix(dim, rank=dim - 1, seed=seed)
    kappa = np.eye(dim) - support_proj(rho)
    extension = faithful_extension(RealSubspace.full(dim), rho)
    assert hs_norm(kappa @ extension.delta @ kappa - extension.delta) < 1e-10
    assert hs_norm(kappa @ extension.kappa_tilde @ kappa - extension.kappa_tilde) < 1e-10
    assert np.linalg.eigvalsh(extension.sigma).min() > 1e-8
    assert extension.verify().all_checks_pass()
    for F in extension.basis_Fk:
        assert hs_norm(kappa @ F - F) < 1e-10


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_faithful_extension_on_degenerate_models(seed):
    model = random_model(3, setting="degenerate", seed=seed).restrict_to_HS()
    kappa = np.eye(model.dim) - support_proj(model.rho)
    assert hs_norm(kappa) > 0.5
    algebra = minimal_sufficient_star(model)
    extension = faithful_extension(algebra, model.rho)
    assert hs_norm(kappa @ extension.delta @ kappa - extension.delta) < 1e-10
    assert np.linalg.eigvalsh(extension.sigma).min() > 1e-8
    assert extension.verify().all_checks_pass()


def test_conditional_expectation_rejects_non_invariant_algebra():
    M2R = generate_star([PAULI_X, PAULI_Z])
    rho = np.array([[0.6, 0.2j], [-0.2j, 0.4]])
    with pytest.raises(SufficiencyError) as err:
        conditional_expectation(M2R, rho)
    assert err.value.check == "modular invariance"


def test_conditional_expectation_rejects_non_algebra():
    jordan_span = RealSubspace.span([np.eye(2), PAULI_X, PAULI_Z])
    with pytest.raises(ValueError):
        conditional_expectation(jordan_span, np.eye(2) / 2)


def test_modular_equivalence_checks_agree():
    M2R = generate_star([PAULI_X, PAULI_Z])
    invariant = modular_equivalence_checks(M2R, np.diag([0.75, 0.25]))
    assert invariant.all_checks_pass()
    rho = np.array([[0.6, 0.2j], [-0.2j, 0.4]])
    not_invariant = modular_equivalence_checks(M2R, rho)
    assert len(not_invariant.filter("passing")) == 0
    assert not d_tilde_invariance(M2R, rho)


@pytest.mark.parametrize("dim, rank, seed", [(3, 2, 0), (4, 2, 1), (4, 3, 2), (5, 3, 3)])
def test_modular_equivalence_for_degenerate_reference(dim, rank, seed):
    rho = np.zeros((dim, dim), dtype=complex)
    rho[:rank, :rank] = random_density_matrix(rank, seed=seed)
    # supp(rho) is in both algebras; only the first one is rho-invariant
    generated = generate_star([rho])
    diagonal = generate_star([np.diag(row) for row in np.eye(dim)])
    invariant = modular_equivalence_checks(generated, rho)
    assert invariant.all_checks_pass()
    not_invariant = modular_equivalence_checks(diagonal, rho)
    assert len(not_invariant.filter("passing")) == 0


@pytest.mark.parametrize("seed", range(6))
def test_projection_on_random_star_algebras(seed):
    blocks = random_blocks(4, mode="star", seed=seed)
    algebra, _ = scrambled_algebra(blocks, mode="star", seed=seed)
    projection = Superoperator.from_function(algebra.dim, algebra.project)
    assert np.allclose(projection.matrix, projection.matrix.T, atol=1e-10)
    assert np.allclose(projection.matrix @ projection.matrix, projection.matrix, atol=1e-10)
    assert is_positive_sampled(projection, n_samples=20, seed=seed)[0]
    assert faithfulness_residual(projection) > 0.5


def test_fixed_point_projection_and_power_limit():
    T = np.diag([1.0, 1.0, 0.5, 0.0])
    P, fixed_vectors = fixed_point_projection(T)
    assert np.allclose(P, np.diag([1, 1, 0, 0]))
    assert fixed_vectors.shape == (4, 2)
    limit, iterations = power_limit(T)
    assert np.allclose(limit, P)
    assert iterations < 20
    with pytest.raises(SufficiencyError):
        fixed_point_projection(np.diag([0.5, 0.2]))


def test_fixed_point_projection_of_rounding_noise():
    noise = 1e-16 * np.array([[1.0, -1.0], [1.0, 1.0]])
    T = np.eye(2) + noise
    P, fixed_vectors = fixed_point_projection(T)
    assert fixed_vectors.shape == (2, 2)
    assert np.allclose(P, np.eye(2))


def test_fixed_point_projection_not_semisimple():
    with pytest.raises(SufficiencyError) as err:
        fixed_point_projection(np.array([[1.0, 1.0], [0.0, 1.0]]))
    assert "not semisimple" in str(err.value)


def test_pipeline_on_identity_map():
    model = qubit_local_model("xyz").restrict_to_HS()
    certificate = fixed_point_pipeline(model, Superoperator.identity(2))
    assert certificate.is_valid()
    assert certificate.A_J.dimension == 4
    assert certificate.A_C.dimension == 8
    assert np.allclose(certificate.omega, np.eye(2))


def test_pipeline_on_commuting_model():
    model = commuting_model().restrict_to_HS()
    algebra = minimal_sufficient_star(model)
    alpha = conditional_expectation(algebra, model.rho)
    certificate = fixed_point_pipeline(model, alpha)
    assert certificate.is_valid()
    assert certificate.A_J.dimension == 2
    assert np.allclose(certificate.omega, np.eye(2))
    assert likelihood_in_algebra_check(certificate, model).all_checks_pass()


def test_pipeline_on_qubit_model():
    model = qubit_local_model("xz").restrict_to_HS()
    alpha = conditional_expectation(minimal_sufficient_star(model), model.rho)
    certificate = fixed_point_pipeline(model, alpha, seed=3)
    assert certificate.is_valid()
    assert certificate.A_J.dimension == 3
    assert certificate.A_R.dimension == 4
    assert certificate.A_C.dimension == 8
    laws = jordan_ce_residuals(certificate.beta_J, certificate.A_J, seed=0)
    assert max(laws.values()) < 1e-9
    data = certificate.to_dict()
    assert data["dimensions"] == {"A_J": 3, "A_R": 4, "A_C": 8}


def test_pipeline_on_random_models():
    for setting, seed in [("states", 1), ("derivatives", 2), ("degenerate", 3)]:
        model = random_model(3, setting=setting, seed=seed).restrict_to_HS()
        alpha = conditional_expectation(minimal_sufficient_star(model), model.rho)
        certificate = fixed_point_pipeline(model, alpha, seed=seed)
        assert certificate.checks.filter("failing").checks == []


def test_pipeline_rejects_insufficient_map():
    model = commuting_model().restrict_to_HS()
    with pytest.raises(SufficiencyError) as err:
        fixed_point_pipeline(model, trace_replacement(2))
    assert "rejected" in str(err.value)


def test_block_embedded_model_needs_restriction():
    model = block_embedded_model()
    algebra = block_embedded_algebra()
    alpha = block_embedded_map()
    assert is_unital(alpha)[0]
    assert algebra.member(alpha(np.arange(16).reshape((4, 4))))[0]
    assert not likelihood_ratio_residuals(algebra, model).all_checks_pass()
    restricted = model.restrict_to_HS()
    minimal = minimal_sufficient_star(restricted)
    checks = likelihood_ratio_residuals(minimal, restricted)
    assert checks.all_checks_pass()
    assert checks.max_residual() < 1e-9


def test_hermiticity_and_norm_of_maps():
    alpha = diagonal_pinching(2)
    assert hermiticity_residual(alpha) < 1e-12
    assert operator_norm_sampled(alpha, seed=0) == pytest.approx(1)
    times_i = Superoperator.from_function(2, lambda B: 1j * B)
    assert hermiticity_residual(times_i) > 0.1


def test_modular_orbit_generators_span_minimal_algebra():
    model = block_embedded_model().restrict_to_HS()
    generators = modular_orbit_generators(model)
    assert len(generators) >= 1
    algebra = minimal_sufficient_star(model)
    for generator in generators:
        assert algebra.member(generator)[0]
