"""Implements the SufficiencyCertificate class."""

from ..ResidualCheck import ResidualChecks
from ..matcore import matrix_to_json, herm_eig


class SufficiencyCertificate:
    """Result of the fixed-point pipeline run on a sufficient positive map.

    The certificate gathers the fixed-point Jordan algebra of the map, the
    real and complex *-algebras it generates, the projections and
    conditional expectations onto them, and the supporting operator omega
    (the strictly positive operator with Tr omega B = Tr beta_J(B)).

    Parameters
    ----------

    alpha
      The sufficient positive unital Superoperator the pipeline started
      from.

    A_J, A_R, A_C
      RealSubspace instances: fixed-point Jordan algebra, generated real
      *-algebra, generated complex *-algebra.

    beta_J, beta_R, beta_C
      Superoperators: the projection onto A_J (limit of the powers of
      (id + alpha)/2), and the conditional expectations
      B -> P(omega^1/2 B omega^1/2) onto A_R and A_C.

    omega
      The supporting operator.

    rho0
      Projection of the reference onto A_R.

    checks
      ResidualChecks of all certificate invariants (filled by
      ``verify_certificate``).

    power_iterations
      Number of squarings used by the power-iteration cross-check.

    power_gap
      Largest entrywise difference between the power limit and the
      spectral projection.
    """

    def __init__(
        self,
        alpha,
        A_J,
        A_R,
        A_C,
        beta_J,
        beta_R,
        beta_C,
        omega,
        rho0,
        checks=None,
        power_iterations=None,
        power_gap=None,
    ):
        """Initialize."""
        self.alpha = alpha
        self.A_J = A_J
        self.A_R = A_R
        self.A_C = A_C
        self.beta_J = beta_J
        self.beta_R = beta_R
        self.beta_C = beta_C
        self.omega = omega
        self.rho0 = rho0
        self.checks = ResidualChecks(title="certificate checks") if checks is None else checks
        self.power_iterations = power_iterations
        self.power_gap = power_gap

    @property
    def dim(self):
        return self.omega.shape[0]

    def is_valid(self):
        """Return True iff all recorded invariant checks pass."""
        return len(self.checks) > 0 and self.checks.all_checks_pass()

    def omega_spectrum(self):
        return herm_eig(self.omega)[0]

    def to_dict(self, with_bases=True):
        """Return a JSON-serializable description of the certificate."""
        result = {
            "dim": self.dim,
            "dimensions": {
                "A_J": self.A_J.dimension,
                "A_R": self.A_R.dimension,
                "A_C": self.A_C.dimension,
            },
            "omega": matrix_to_json(self.omega),
            "omega_spectrum": [float(v) for v in self.omega_spectrum()],
            "rho0": matrix_to_json(self.rho0),
            "power_iterations": self.power_iterations,
            "power_gap": self.power_gap,
            "residuals": self.checks.to_list(),
        }
        if with_bases:
            result["algebras"] = {
                "A_J": self.A_J.to_dict(),
                "A_R": self.A_R.to_dict(),
                "A_C": self.A_C.to_dict(),
            }
        return result

    def __repr__(self):
        return "SufficiencyCertificate(dim=%d, dim A_J=%d, dim A_R=%d, dim A_C=%d%s)" % (
            self.dim,
            self.A_J.dimension,
            self.A_R.dimension,
            self.A_C.dimension,
            "" if self.is_valid() else ", INVALID",
        )
