"""Exception hierarchy shared by all modules.

The CLI maps these onto exit codes: parse errors 2, domain errors 3,
precision/order exhaustion 4.
"""


class PadicError(Exception):
    """Base class for every error raised by padicrep."""


class ParseError(PadicError, ValueError):
    """Malformed textual input (scalars, series files, PBW strings, characters)."""


class DomainError(PadicError, ValueError):
    """A mathematical precondition was violated (not retryable)."""


class PrimeMismatchError(DomainError):
    pass


class ShapeError(DomainError):
    """Series with different prime, backend or truncation order were combined."""


class PrecisionError(PadicError, ArithmeticError):
    """Not enough p-adic precision or truncation order to answer soundly.

    Retrying with a larger precision ``M`` or truncation ``N`` may succeed.
    """


class DegreeOverflowError(PrecisionError):
    """A polynomial operator would produce terms beyond the degree budget."""
