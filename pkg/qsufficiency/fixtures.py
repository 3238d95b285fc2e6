"""Small reference models and algebras with known answers, used in the
tests, the documentation and the shipped model files."""

import numpy as np

from .Model import Model, ModelElement
from .RealSubspace import RealSubspace
from .Superoperator import Superoperator
from .matcore import PAULI_I, PAULI_X, PAULI_Y, PAULI_Z, operator_basis


def qubit_local_model(directions="z"):
    """Qubit model rho = I/2 with derivatives sigma_k / 2 for each
    direction k in ``directions`` (letters among "x", "y", "z")."""
    paulis = {"x": PAULI_X, "y": PAULI_Y, "z": PAULI_Z}
    return Model(
        rho=np.eye(2) / 2,
        elements=[
            ModelElement("derivative", paulis[k] / 2, label="d_%s" % k) for k in directions
        ],
    )


def commuting_model():
    """rho = diag(1/2, 1/2) and one state diag(3/4, 1/4)."""
    return Model(
        rho=np.diag([0.5, 0.5]),
        elements=[ModelElement("state", np.diag([0.75, 0.25]), label="X")],
    )


def block_embedded_model(states=((0.6, 0.4), (0.3, 0.7))):
    """Model diag(1, 0) (x) rho_theta on C^2 (x) C^2 for commuting
    full-rank states rho_theta (given by their diagonals). The first state
    is the reference. The model only lives on the first two coordinates,
    so its restriction to H_S is two-dimensional."""
    corner = np.diag([1, 0])
    operators = [np.kron(corner, np.diag(state)) for state in states]
    return Model(
        rho=operators[0],
        elements=[
            ModelElement("state", X, label="rho_%d" % i) for i, X in enumerate(operators)
        ],
    )


def block_embedded_algebra(subsystem_dim=2):
    """The *-algebra I_2 (x) B(H)."""
    algebra = RealSubspace.span(
        [np.kron(np.eye(2), b) for b in operator_basis(subsystem_dim)],
        label="I_2 (x) B(H)",
    )
    algebra.flags.update(contains_identity=True, star_closed=True, mult_closed=True)
    return algebra


def block_embedded_map(subsystem_dim=2):
    """The unital map [[A1, A3], [A2, A4]] -> I_2 (x) (A1 + A4)/2 onto
    ``block_embedded_algebra``. On states it discards the block label, which the
    map C -> diag(1, 0) (x) 2 C_11 restores for ``block_embedded_model``."""
    d = subsystem_dim

    def average_blocks(B):
        mean = (B[:d, :d] + B[d:, d:]) / 2
        return np.kron(np.eye(2), mean)

    return Superoperator.from_function(2 * d, average_blocks, label="block average")


KI_WEIGHTS = np.array([1.5, 0.5])
KI_QUBIT_STATES = (
    np.array([[0.6, 0.1 - 0.2j], [0.1 + 0.2j, 0.4]]),
    np.array([[0.5, 0.2j], [-0.2j, 0.5]]),
    np.array([[0.7, 0.1], [0.1, 0.3]]),
)


def ki_constructed_model():
    """Model X (x) diag(1.5, 0.5) on C^4 for three qubit states X, the first
    one being the reference. Its minimal sufficient *-algebra is
    M_2(C) (x) I_2 with weights P = diag(1.5, 0.5)."""
    operators = [np.kron(X, np.diag(KI_WEIGHTS)) for X in KI_QUBIT_STATES]
    return Model(
        rho=operators[0],
        elements=[
            ModelElement("state", X, label="X%d" % i) for i, X in enumerate(operators)
        ],
    )


def gamma4_generators():
    """Generators of the spin factor Gamma_4 as Pauli tensor products:
    sigma_1 (x) sigma_k (k = 1, 2, 3) and sigma_3 (x) I."""
    return [
        np.kron(PAULI_X, PAULI_X),
        np.kron(PAULI_X, PAULI_Y),
        np.kron(PAULI_X, PAULI_Z),
        np.kron(PAULI_Z, PAULI_I),
    ]


def gamma4_quadruple_product():
    """Return (g1 g2 g3 g4 + g4 g3 g2 g1) / 2, which equals sigma_2 (x) I and
    lies outside Gamma_4."""
    g1, g2, g3, g4 = gamma4_generators()
    return (g1 @ g2 @ g3 @ g4 + g4 @ g3 @ g2 @ g1) / 2
