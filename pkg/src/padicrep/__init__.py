"""Exact computations with distributions on Z_p and Iwahori principal series of GL_2(Q_p)."""
from .errors import (DegreeOverflowError, DomainError, PadicError, ParseError,
                     PrecisionError, PrimeMismatchError, ShapeError)
from .padic import PadicScalar, binom, format_scalar, parse_scalar, plog, vp
from .series import TruncatedSeries, dirac, log1p
from .reps import Character, PolyFunction

__all__ = [
    "PadicScalar", "TruncatedSeries", "Character", "PolyFunction",
    "binom", "dirac", "log1p", "plog", "vp", "format_scalar", "parse_scalar",
    "PadicError", "ParseError", "DomainError", "PrimeMismatchError", "ShapeError",
    "PrecisionError", "DegreeOverflowError",
]
__version__ = "0.1.0"
