"""Implements the StructureDecomposition class."""

import numpy as np

from ..ResidualCheck import ResidualChecks
from ..matcore import matrix_to_json
from .BlockDescriptor import BlockDescriptor


class StructureDecomposition:
    """Block decomposition of a real *-algebra or Jordan algebra.

    Conjugation by U maps the algebra onto the canonical direct sum of its
    blocks: U* A U = (+)_i A_i (x) I_{m_i}, with A_i the canonical algebra
    of block i, the blocks taking consecutive coordinates.

    Parameters
    ----------

    blocks
      List of BlockDescriptor, in the order of the coordinates.

    U
      The unitary (columns = new basis vectors).

    mode
      "star" or "jordan".

    checks
      ResidualChecks of the identification (unitarity, canonical form).
    """

    def __init__(self, blocks, U, mode="star", checks=None):
        """Initialize."""
        self.blocks = [BlockDescriptor.from_any(block) for block in blocks]
        self.U = np.asarray(U, dtype=complex)
        self.mode = mode
        self.checks = ResidualChecks(title="structure checks") if checks is None else checks

    @property
    def block_index_map(self):
        """List of the coordinate indices of each block."""
        result, start = [], 0
        for block in self.blocks:
            result.append(list(range(start, start + block.space_dim)))
            start += block.space_dim
        return result

    @property
    def dim(self):
        return self.U.shape[0]

    def descriptor_multiset(self):
        """Return the sorted list of (kind, n, m) tuples."""
        return sorted([block.to_tuple() for block in self.blocks])

    def block_unitary(self, index):
        """Return the columns of U spanning block ``index``."""
        return self.U[:, self.block_index_map[index]]

    def to_dict(self):
        return {
            "mode": self.mode,
            "blocks": [block.to_dict() for block in self.blocks],
            "block_index_map": self.block_index_map,
            "U": matrix_to_json(self.U),
            "residuals": self.checks.to_list(),
        }

    def __repr__(self):
        return "StructureDecomposition(%s, %s)" % (
            self.mode,
            " + ".join(str(block) for block in self.blocks),
        )
