"""Random models for the property tests and the self-test."""

import numpy as np

from ..Model import Model, ModelElement
from ..StructureDecomposition import BlockDescriptor
from ..structure import canonical_simple_star_basis
from ..matcore import (
    as_generator,
    hermitize,
    jordan_product,
    random_density_matrix,
    random_hermitian,
    random_psd,
    random_unitary,
)

MODEL_SETTINGS = ("states", "derivatives", "mixed", "degenerate", "commuting")


def _state_from_reference(rho, rng):
    R = random_psd(rho.shape[0], seed=rng)
    X = hermitize(R @ rho @ R)
    return X / np.trace(X).real


def random_model(dim, n_elements=2, setting="states", seed=None, tolerances=None):
    """Return a random (unrestricted) Model.

    Settings:

    - "states": full-rank reference, states X = R rho R with R > 0 random
      (absolutely continuous by construction);
    - "derivatives": full-rank reference, derivatives X = rho o H with H
      random Hermitian (in the range of J_rho by construction);
    - "mixed": alternating states and derivatives;
    - "degenerate": reference of rank dim - 1, states X = R rho R. The
      supports of the states differ from supp(rho), so H_S is the whole
      space and the reference stays degenerate after ``restrict_to_HS``;
    - "commuting": reference and states diagonal in a common random basis.

    Examples
    --------

    >>> model = random_model(3, n_elements=2, setting="derivatives", seed=1)
    """
    if setting not in MODEL_SETTINGS:
        raise ValueError("setting should be one of %s, got %s" % (MODEL_SETTINGS, setting))
    rng = as_generator(seed)
    rank = max(1, dim - 1) if setting == "degenerate" else None
    if setting == "commuting":
        U = random_unitary(dim, seed=rng)

        def diagonal_state():
            weights = rng.uniform(0.1, 1, size=dim)
            return hermitize((U * (weights / weights.sum())) @ U.conj().T)

        rho = diagonal_state()
    else:
        rho = random_density_matrix(dim, rank=rank, seed=rng)
    elements = []
    for i in range(n_elements):
        derivative = setting == "derivatives" or (setting == "mixed" and i % 2 == 1)
        if derivative:
            kind, X = "derivative", hermitize(jordan_product(rho, random_hermitian(dim, seed=rng)))
        elif setting == "commuting":
            kind, X = "state", diagonal_state()
        else:
            kind, X = "state", _state_from_reference(rho, rng)
        elements.append(ModelElement(kind, X, label="X%d" % (i + 1), tolerances=tolerances))
    return Model(
        rho,
        elements,
        metadata={"generator": "random_model", "setting": setting},
        tolerances=tolerances,
    )


def _random_block_element(block, rng):
    """Random PSD element b b* of the canonical simple *-algebra of the
    block (acting on C^rep_dim)."""
    basis = canonical_simple_star_basis(block.kind, block.n)
    b = sum(c * element for c, element in zip(rng.normal(size=len(basis)), basis))
    X = hermitize(b @ b.conj().T)
    return X + 0.1 * np.eye(len(X))


def constructed_ki_model(blocks, n_elements=3, P_diagonals=None, seed=None, tolerances=None):
    """Return (model, U, P_diagonals) for a model whose elements are
    U ((+)_i X_i (x) P_i) U* with random X_i in the canonical simple
    algebras, fixed positive diagonal weights P_i and a Haar-random U.

    The reference is the first of the ``n_elements`` states. Blocks of
    kind C and H should have n >= 2 (their size-1 PSD elements are real
    scalars)."""
    rng = as_generator(seed)
    blocks = [BlockDescriptor.from_any(block) for block in blocks]
    if P_diagonals is None:
        P_diagonals = [np.sort(rng.uniform(0.5, 2, size=block.m))[::-1] for block in blocks]
    dim = sum(block.space_dim for block in blocks)
    U = random_unitary(dim, seed=rng)
    states = []
    for _ in range(n_elements):
        X = np.zeros((dim, dim), dtype=complex)
        start = 0
        for block, P in zip(blocks, P_diagonals):
            stop = start + block.space_dim
            X[start:stop, start:stop] = np.kron(_random_block_element(block, rng), np.diag(P))
            start = stop
        X = hermitize(U @ X @ U.conj().T)
        states.append(X / np.trace(X).real)
    elements = [
        ModelElement("state", X, label="X%d" % (i + 1), tolerances=tolerances)
        for i, X in enumerate(states)
    ]
    model = Model(
        states[0],
        elements,
        metadata={"generator": "constructed_ki_model"},
        tolerances=tolerances,
    )
    return model, U, [np.asarray(P, dtype=float) for P in P_diagonals]
