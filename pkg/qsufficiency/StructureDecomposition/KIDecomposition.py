"""Implements the KIDecomposition class."""

import numpy as np

from ..ResidualCheck import ResidualChecks
from ..matcore import matrix_to_json, hs_norm


def partial_trace_first(block, rep_dim, m):
    """Trace out the first (rep_dim) factor of an operator on C^rep_dim (x) C^m."""
    return np.einsum("akal->kl", block.reshape((rep_dim, m, rep_dim, m)))


def partial_trace_second(block, rep_dim, m):
    """Trace out the second (m) factor of an operator on C^rep_dim (x) C^m."""
    return np.einsum("akbk->ab", block.reshape((rep_dim, m, rep_dim, m)))


class KIDecomposition:
    """Koashi-Imoto decomposition of a model on a sufficient algebra.

    Every model element X is written U ((+)_i X_i (x) P_i) U*, where the
    weights P_i are positive diagonal matrices which do not depend on X.

    Parameters
    ----------

    structure
      The StructureDecomposition of the sufficient algebra, whose U has
      been adjusted so that the P_i are diagonal.

    P_blocks
      List of the diagonal weight matrices (m_i x m_i), one per block.

    X_blocks
      List, one entry per model element (in the model order), of the lists
      of the X_i (rep_dim_i x rep_dim_i).

    labels
      Element labels, in the model order (default "X0", "X1"...). Labels
      may repeat; elements are then addressed by their index.

    checks
      ResidualChecks (omega form, reassembly of each element).
    """

    def __init__(self, structure, P_blocks, X_blocks, labels=None, checks=None):
        """Initialize."""
        self.structure = structure
        self.P_blocks = [np.asarray(P) for P in P_blocks]
        self.X_blocks = list(X_blocks)
        if labels is None:
            labels = ["X%d" % i for i in range(len(self.X_blocks))]
        if len(labels) != len(self.X_blocks):
            raise ValueError(
                "%d labels for %d elements" % (len(labels), len(self.X_blocks))
            )
        self.labels = list(labels)
        self.checks = ResidualChecks(title="KI checks") if checks is None else checks

    @property
    def blocks(self):
        return self.structure.blocks

    def element_index(self, element):
        """Return the index of an element given by index or unique label."""
        if isinstance(element, (int, np.integer)):
            if not 0 <= element < len(self.X_blocks):
                raise IndexError(
                    "No element %d in a model of %d elements"
                    % (element, len(self.X_blocks))
                )
            return int(element)
        matches = [i for i, label in enumerate(self.labels) if label == element]
        if len(matches) != 1:
            raise KeyError(
                "Label %s matches %d elements, use the element index"
                % (element, len(matches))
            )
        return matches[0]

    def reassemble(self, element):
        """Return U ((+)_i X_i (x) P_i) U* for the element (index or label)."""
        dim = self.structure.dim
        result = np.zeros((dim, dim), dtype=complex)
        X_list = self.X_blocks[self.element_index(element)]
        for indices, X_i, P_i in zip(
            self.structure.block_index_map, X_list, self.P_blocks
        ):
            result[np.ix_(indices, indices)] = np.kron(X_i, P_i)
        U = self.structure.U
        return U @ result @ U.conj().T

    def fit_weights(self, X):
        """Fit per-block weights P_i from a single operator X.

        Each block X' of U* X U is assumed of the form Y (x) P. With
        Y' = tr_2(X'), P is proportional to tr_1((Y'* (x) I) X'). The
        weights are returned normalized to unit trace (None for blocks
        where X vanishes).
        """
        U = self.structure.U
        X_new = U.conj().T @ np.asarray(X, dtype=complex) @ U
        weights = []
        for indices, block in zip(self.structure.block_index_map, self.blocks):
            X_i = X_new[np.ix_(indices, indices)]
            Y = partial_trace_second(X_i, block.rep_dim, block.m)
            norm = hs_norm(Y) ** 2
            if norm < 1e-20:
                weights.append(None)
                continue
            on_Y = np.kron(Y.conj().T, np.eye(block.m)) @ X_i
            P = partial_trace_first(on_Y, block.rep_dim, block.m) / norm
            weights.append(P / np.trace(P).real)
        return weights

    def to_dict(self):
        return {
            "structure": self.structure.to_dict(),
            "P_diagonals": [[float(p) for p in np.diag(P).real] for P in self.P_blocks],
            "X_blocks": [
                {"label": label, "blocks": [matrix_to_json(X_i) for X_i in X_list]}
                for label, X_list in zip(self.labels, self.X_blocks)
            ],
            "residuals": self.checks.to_list(),
        }

    def __repr__(self):
        return "KIDecomposition(%s, P=%s)" % (
            " + ".join(str(block) for block in self.blocks),
            [list(np.round(np.diag(P).real, 6)) for P in self.P_blocks],
        )
