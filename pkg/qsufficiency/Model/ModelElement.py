"""Implements the ModelElement class."""

from ..Tolerances import Tolerances
from ..matcore import check_hermitian, check_psd, matrix_to_json

ELEMENT_KINDS = ("state", "derivative")


class ModelElement:
    """One self-adjoint operator of a statistical model.

    Parameters
    ----------

    kind
      Either "state" (a positive operator, whose likelihood ratio is the
      square-root likelihood ratio R_X) or "derivative" (any Hermitian
      operator, e.g. a derivative of a state, whose likelihood ratio is the
      symmetric logarithmic derivative L_X).

    X
      The Hermitian matrix.

    label
      Name of the element, used in reports.

    tolerances
      A Tolerances instance (or dict of overrides, or None for defaults),
      used by the Hermitian and PSD checks and kept by ``transformed``.
    """

    def __init__(self, kind, X, label=None, tolerances=None):
        """Initialize."""
        tolerances = Tolerances.from_any(tolerances)
        if kind not in ELEMENT_KINDS:
            raise ValueError(
                "Unknown element kind %s (should be 'state' or 'derivative')"
                % kind
            )
        name = "element %s" % ("" if label is None else label)
        X = check_hermitian(X, name=name, hermitian_tol=tolerances.hermitian_tol)
        if kind == "state":
            X = check_psd(X, name=name, psd_tol=tolerances.psd_tol)
        self.kind = kind
        self.X = X
        self.label = label
        self.tolerances = tolerances

    @property
    def dim(self):
        return self.X.shape[0]

    def transformed(self, X, tolerances=None):
        """Return a new element with the same kind, label and tolerances
        (unless overridden) and a new X."""
        if tolerances is None:
            tolerances = self.tolerances
        return ModelElement(self.kind, X, label=self.label, tolerances=tolerances)

    def to_dict(self):
        return {"kind": self.kind, "label": self.label, "matrix": matrix_to_json(self.X)}

    def __repr__(self):
        return "ModelElement(%s, %s, dim=%d)" % (self.kind, self.label, self.dim)
