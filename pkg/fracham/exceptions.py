"""
Exception hierarchy shared by the solver apps.

Commands map ``FracHamError`` raised during a computation to exit status 2;
``ConfigurationError`` raised while building a run maps to exit status 1.
"""


class FracHamError(Exception):
    """Base class for every solver error"""


class DomainError(FracHamError, ValueError):
    """An argument lies outside the domain of the operation"""


class ConfigurationError(DomainError):
    """A solver configuration violates one of its invariants"""


class IncompatibleSeriesError(FracHamError, ValueError):
    """Two series do not share alpha, psi, lower terminal or grid"""


class TruncationError(FracHamError, ArithmeticError):
    """A truncated series did not reach its tolerance within the term budget"""

    def __init__(self, message, last_term=None):
        super().__init__(message)
        self.last_term = last_term
