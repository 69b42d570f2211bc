"""Exception hierarchy."""


class ProjSimplexError(Exception):
    pass


class ContractError(ProjSimplexError, ValueError):
    """Arguments violate a shape or dimension precondition."""


class GradeError(ContractError):
    pass


class OracleSizeError(ContractError):
    pass


class DegenerateInputError(ProjSimplexError, ValueError):
    """Vectors that must be linearly independent are not (within tolerance)."""


class NormalizationError(ProjSimplexError, ValueError):
    """A vector that must have unit Hermitian norm does not."""


class ParameterError(ProjSimplexError, ValueError):
    pass


class SamplingError(ProjSimplexError, RuntimeError):
    pass


class SearchFailure(ProjSimplexError, RuntimeError):
    """No configuration met the determinant constraint within budget.

    ``best`` holds the best (infeasible) attempt as an ``OptResult``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
