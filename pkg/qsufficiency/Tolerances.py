"""Implements the Tolerances class, the single place where numerical
thresholds are configured."""


class Tolerances:
    """Set of numerical tolerances used by all computations and checks.

    All thresholds are class attributes, so ``Tolerances()`` gives the
    defaults and ``Tolerances(rank_tol=1e-9)`` overrides a single value.

    Examples
    --------

    >>> tolerances = Tolerances(member_tol=1e-6)
    >>> algebra.member(operator, tolerances=tolerances)

    Parameters
    ----------

    **overrides
      Any tolerance name from ``Tolerances.names()`` with its new value.

    Notes
    -----

    Eigenvalues smaller than ``rank_tol * max_eigenvalue`` are considered
    zero (kernel). Reconstruction and membership residuals are compared to
    ``tol * (1 + norm)`` where the norm is the Frobenius norm of the target.
    """

    rank_tol = 1e-10
    psd_tol = 1e-10
    hermitian_tol = 1e-12
    eig_tol = 1e-12
    recon_tol = 1e-8
    ortho_tol = 1e-10
    member_tol = 1e-8
    span_tol = 1e-10
    faithful_tol = 1e-8
    struct_tol = 1e-7
    fisher_floor = 1e-12
    sufficiency_tol = 1e-9
    commutation_tol = 1e-9
    fixed_point_tol = 1e-8
    power_tol = 1e-12
    power_max_iterations = 10000
    omega_clip = 1e-12
    omega_min_eigenvalue = 1e-10
    n_samples = 50

    def __init__(self, **overrides):
        """Initialize."""
        for name, value in overrides.items():
            if name not in self.names():
                raise ValueError("Unknown tolerance: %s" % name)
            if value is not None:
                setattr(self, name, value)

    @classmethod
    def names(cls):
        """Return the sorted list of all tolerance names."""
        return sorted(
            name
            for name, value in vars(cls).items()
            if not name.startswith("_") and isinstance(value, (int, float))
        )

    @staticmethod
    def from_any(tolerances):
        """Return a Tolerances instance from None, a dict, or a Tolerances."""
        if tolerances is None:
            return Tolerances()
        if isinstance(tolerances, dict):
            return Tolerances(**tolerances)
        return tolerances

    def to_dict(self):
        """Return a {name: value} dict of all tolerances in force."""
        return {name: getattr(self, name) for name in self.names()}

    def __repr__(self):
        changed = [
            "%s=%s" % (name, getattr(self, name))
            for name in self.names()
            if getattr(self, name) != getattr(Tolerances, name)
        ]
        return "Tolerances(%s)" % ", ".join(changed)
