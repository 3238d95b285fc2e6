class SufficiencyError(Exception):
    """Exception raised when a computation cannot produce a valid result.

    Typical causes are a model element which is not absolutely continuous
    with respect to the reference, an algebra which is not invariant under
    the modular map, or a residual check failing inside a construction.
    """

    def __init__(self, message, model=None, check=None, residual=None):
        """Initialize."""
        Exception.__init__(self, message)
        self.message = message
        self.model = model
        self.check = check
        self.residual = residual

    def __str__(self):
        return self.message


class ModelFileError(SufficiencyError):
    """Exception raised when a model file cannot be read or validated."""
