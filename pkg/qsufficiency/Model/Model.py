"""Implements the Model class."""

import numpy as np
import scipy.linalg

from ..Tolerances import Tolerances
from ..SufficiencyError import SufficiencyError
from ..matcore import (
    check_psd,
    hs_norm,
    matrix_to_json,
    retained_mask,
    herm_eig,
)
from .ModelElement import ModelElement
from .likelihood_ratios import likelihood_ratio


def phase_fixed_columns(V, threshold=1e-8):
    """Multiply each column by a phase so that its first significant entry
    is real positive."""
    V = np.array(V, dtype=complex)
    for k in range(V.shape[1]):
        column = V[:, k]
        significant = np.flatnonzero(np.abs(column) > threshold * np.abs(column).max())
        if len(significant):
            entry = column[significant[0]]
            V[:, k] = column * np.conj(entry) / np.abs(entry)
    return V


class Model:
    """Statistical model: a reference operator rho and a list of elements.

    The reference rho is always part of the model: if no element equals rho,
    a state-kind element labelled "reference" is inserted in first position.

    Examples
    --------

    >>> model = Model(
    >>>     rho=np.eye(2) / 2,
    >>>     elements=[ModelElement("derivative", sigma_z / 2, "d_theta")],
    >>> )
    >>> restricted_model = model.restrict_to_HS()

    Parameters
    ----------

    rho
      The reference PSD operator (trace one is not required).

    elements
      List of ModelElement (states and/or derivatives).

    restricted
      Whether the model lives on its support space H_S (the joint column
      space of all elements). Use ``restrict_to_HS`` to obtain a restricted
      model from an unrestricted one.

    isometry
      For restricted models, the isometry V (columns) from H_S into the
      original space, so that each restricted X equals V* X_original V.

    metadata
      Free-form dict of strings, carried along to reports.

    tolerances
      A Tolerances instance (or dict of overrides, or None for defaults).

    Attributes
    ----------

    dim
      The dimension of the space the model acts on.

    elements
      The list of elements, the reference included.
    """

    def __init__(
        self,
        rho,
        elements=(),
        restricted=False,
        isometry=None,
        metadata=None,
        tolerances=None,
    ):
        """Initialize."""
        self.tolerances = Tolerances.from_any(tolerances)
        self.rho = check_psd(rho, name="reference", psd_tol=self.tolerances.psd_tol)
        self.elements = list(elements)
        for element in self.elements:
            if element.dim != self.dim:
                raise ValueError(
                    "Dimension mismatch: element %s has dim %d, reference "
                    "has dim %d" % (element.label, element.dim, self.dim)
                )
        if self.reference_index is None:
            reference = ModelElement(
                "state", self.rho, label="reference", tolerances=self.tolerances
            )
            self.elements.insert(0, reference)
        self.restricted = restricted
        self.isometry = isometry
        self.metadata = {} if metadata is None else dict(metadata)
        if restricted and self.support_rank() != self.dim:
            raise ValueError(
                "A restricted model must span its whole space (rank %d < dim %d)"
                % (self.support_rank(), self.dim)
            )

    @property
    def dim(self):
        return self.rho.shape[0]

    @property
    def reference_index(self):
        """Index of the first state-kind element equal to rho (or None)."""
        for i, element in enumerate(self.elements):
            if element.kind != "state":
                continue
            difference = hs_norm(element.X - self.rho)
            if difference <= self.tolerances.recon_tol * (1 + hs_norm(self.rho)):
                return i
        return None

    @property
    def operators(self):
        """List of all element matrices (reference included)."""
        return [element.X for element in self.elements]

    def non_reference_elements(self):
        index = self.reference_index
        return [e for i, e in enumerate(self.elements) if i != index]

    def kinds(self):
        return sorted(set(e.kind for e in self.non_reference_elements()))

    def is_mixed(self):
        """Whether the model mixes state-kind and derivative-kind elements
        (the reference aside)."""
        return len(self.kinds()) > 1

    def support_sum(self):
        """Return sum_i X_i^2, whose support is H_S."""
        return sum(X @ X for X in self.operators)

    def support_rank(self):
        eigenvalues = herm_eig(self.support_sum())[0]
        return int(np.sum(retained_mask(eigenvalues, self.tolerances.rank_tol)))

    def restrict_to_HS(self):
        """Return the model compressed to its support space H_S.

        H_S is the joint column space of all elements, i.e. the support of
        sum_i X_i^2. When H_S is the whole space the isometry is the identity
        and the operators are unchanged. Otherwise the isometry is obtained
        from a column-pivoted QR decomposition of the support projection,
        with column phases fixed, so that a model supported on the first
        coordinates is restricted to its leading block exactly.

        Already-restricted models are returned unchanged.
        """
        if self.restricted:
            return self
        rank = self.support_rank()
        if rank == 0:
            raise SufficiencyError(
                "All model elements are zero: H_S is empty", model=self
            )
        if rank == self.dim:
            V = np.eye(self.dim, dtype=complex)
        else:
            eigenvalues, U = herm_eig(self.support_sum())
            support = U[:, :rank] @ U[:, :rank].conj().T
            Q, _, _ = scipy.linalg.qr(support, pivoting=True)
            V = phase_fixed_columns(Q[:, :rank])

        def compress(X):
            X = V.conj().T @ X @ V
            return (X + X.conj().T) / 2

        return Model(
            rho=compress(self.rho),
            elements=[e.transformed(compress(e.X)) for e in self.elements],
            restricted=True,
            isometry=V if self.isometry is None else self.isometry @ V,
            metadata=self.metadata,
            tolerances=self.tolerances,
        )

    def likelihood_ratio_set(self):
        """Return the list of likelihood ratios, one per element (reference
        included): R_X for state-kind elements, L_X for derivative-kind
        elements. The reference contributes R_rho = supp(rho)."""
        return [
            likelihood_ratio(element, self.rho, tolerances=self.tolerances)
            for element in self.elements
        ]

    def to_dict(self):
        """Return the model in the model-file format."""
        result = {
            "dim": self.dim,
            "reference": matrix_to_json(self.rho),
            "elements": [e.to_dict() for e in self.non_reference_elements()],
            "metadata": self.metadata,
        }
        if self.restricted:
            result["restricted"] = True
            result["isometry"] = matrix_to_json(self.isometry)
        return result

    def __repr__(self):
        return "Model(dim=%d, %d elements%s)" % (
            self.dim,
            len(self.elements),
            ", restricted" if self.restricted else "",
        )
