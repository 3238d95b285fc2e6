import numpy as np
import pytest
from qsufficiency import (
    Model,
    ModelElement,
    SufficiencyError,
    Superoperator,
    minimal_sufficient_star,
    verify_sufficient,
)
from qsufficiency.fixtures import commuting_model
from qsufficiency.matcore import PAULI_Z


def test_sufficiency_error_attributes():
    error = SufficiencyError("bad", check="modular invariance", residual=0.3)
    assert str(error) == "bad"
    assert error.check == "modular invariance"
    assert error.residual == 0.3
    assert error.model is None


def test_not_absolutely_continuous_state():
    model = Model(
        np.diag([1.0, 0.0]),
        [ModelElement("state", np.eye(2) / 2, label="X")],
    )
    # the state leaves the support of the reference: H_S is the whole space
    restricted = model.restrict_to_HS()
    with pytest.raises(SufficiencyError) as err:
        restricted.likelihood_ratio_set()
    assert "absolutely continuous" in str(err.value)


def test_derivative_outside_range_of_reference():
    model = Model(
        np.diag([1.0, 0.0]),
        [ModelElement("derivative", PAULI_Z / 2, label="d_z")],
    )
    with pytest.raises(SufficiencyError):
        minimal_sufficient_star(model.restrict_to_HS())


def test_verify_sufficient_dimension_mismatch():
    with pytest.raises(ValueError):
        verify_sufficient(commuting_model(), Superoperator.identity(3))
