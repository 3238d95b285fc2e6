"""Koashi-Imoto decomposition of a model from a sufficiency certificate."""

import numpy as np
import scipy.linalg

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..ResidualCheck import ResidualChecks
from ..Model.Model import phase_fixed_columns
from ..StructureDecomposition import (
    KIDecomposition,
    StructureDecomposition,
    partial_trace_first,
    partial_trace_second,
)
from ..matcore import eigenprojections, geninv, hermitize, hs_norm
from .identify import identify_structure

TARGETS = ("star", "jordan")


def _element_labels(model):
    return [
        "X%d" % i if element.label is None else element.label
        for i, element in enumerate(model.elements)
    ]


def diagonalizing_unitary(C, tolerances=None):
    """Return (V, p) with C = V diag(p) V*, p in descending order.

    Each eigenspace gets a canonical basis: pivoted QR of its projection
    followed by a phase fix of the columns, so that degenerate spectra
    give reproducible bases."""
    tolerances = Tolerances.from_any(tolerances)
    values, projections = eigenprojections(hermitize(C), cluster_tol=tolerances.struct_tol)
    columns = []
    for projection in projections:
        rank = int(round(np.trace(projection).real))
        Q, _, _ = scipy.linalg.qr(projection, pivoting=True)
        columns.append(phase_fixed_columns(Q[:, :rank]))
    V = np.hstack(columns)
    p = np.diag(V.conj().T @ C @ V).real
    return V, p


def _omega_blocks(omega, structure, tolerances):
    """Return the multiplicity-side factors C_i of U* omega U = (+) I (x) C_i,
    raising a SufficiencyError if omega is not of this form."""
    U = structure.U
    transformed = U.conj().T @ omega @ U
    tol = tolerances.struct_tol * (1 + hs_norm(omega))
    off_blocks = transformed.copy()
    factors = []
    for indices, block in zip(structure.block_index_map, structure.blocks):
        omega_block = transformed[np.ix_(indices, indices)]
        off_blocks[np.ix_(indices, indices)] = 0
        C = partial_trace_first(omega_block, block.rep_dim, block.m) / block.rep_dim
        residual = hs_norm(omega_block - np.kron(np.eye(block.rep_dim), C))
        if residual > tol:
            raise SufficiencyError(
                "omega is not of the form I (x) C on block %s (residual %.3e)"
                % (block, residual),
                check="omega I (x) C form",
                residual=residual,
            )
        factors.append(hermitize(C))
    residual = hs_norm(off_blocks)
    if residual > tol:
        raise SufficiencyError(
            "omega has components between blocks (residual %.3e)" % residual,
            check="omega I (x) C form",
            residual=residual,
        )
    return factors


def ki_decompose(model, certificate, target="star", tolerances=None, seed=0):
    """Return the KIDecomposition of a model on a sufficient algebra.

    The algebra of the certificate (A_R for target "star", A_J for target
    "jordan") is decomposed by ``identify_structure``. The supporting
    operator omega is of the form (+) I (x) C_i in that basis; each C_i is
    diagonalized by a unitary on the multiplicity side, which is folded
    into U, and gives the weights P_i. Since X omega^-1 belongs to the
    algebra, its blocks are Y_i (x) I and X_i = Y_i.

    Examples
    --------

    >>> certificate = fixed_point_pipeline(model, alpha)
    >>> ki = ki_decompose(model, certificate)
    >>> ki.reassemble("d_theta")  # equals the model element
    """
    if target not in TARGETS:
        raise ValueError("target should be 'star' or 'jordan', got %s" % target)
    tolerances = Tolerances.from_any(tolerances)
    if certificate.dim != model.dim:
        raise ValueError(
            "Dimension mismatch: certificate on dim %d, model on dim %d"
            % (certificate.dim, model.dim)
        )
    algebra = certificate.A_R if target == "star" else certificate.A_J
    structure = identify_structure(algebra, mode=target, tolerances=tolerances, seed=seed)
    factors = _omega_blocks(certificate.omega, structure, tolerances)

    rotations, P_blocks = [], []
    for block, C in zip(structure.blocks, factors):
        V, p = diagonalizing_unitary(C, tolerances=tolerances)
        rotations.append(np.kron(np.eye(block.rep_dim), V))
        P_blocks.append(np.diag(p))
    U = structure.U @ scipy.linalg.block_diag(*rotations)
    structure = StructureDecomposition(
        structure.blocks, U, mode=structure.mode, checks=structure.checks
    )

    omega_inverse = geninv(certificate.omega, rank_tol=tolerances.rank_tol)
    X_blocks = []
    for element in model.elements:
        transformed = U.conj().T @ (element.X @ omega_inverse) @ U
        X_blocks.append([
            hermitize(
                partial_trace_second(
                    transformed[np.ix_(indices, indices)], block.rep_dim, block.m
                )
                / block.m
            )
            for indices, block in zip(structure.block_index_map, structure.blocks)
        ])

    checks = ResidualChecks(title="KI checks")
    checks.extend(structure.checks, prefix="structure")
    lowest = min(float(np.min(np.diag(P))) for P in P_blocks)
    checks.add("P strictly positive", lowest, tolerances.omega_min_eigenvalue, comparison="min")
    labels = _element_labels(model)
    decomposition = KIDecomposition(
        structure, P_blocks, X_blocks, labels=labels, checks=checks
    )
    for index, (label, element) in enumerate(zip(labels, model.elements)):
        residual = hs_norm(decomposition.reassemble(index) - element.X)
        checks.add(
            "reassembly of %s (element %d)" % (label, index),
            residual,
            tolerances.recon_tol * (1 + hs_norm(element.X)),
        )
    return decomposition
