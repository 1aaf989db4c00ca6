"""
Exceptions raised by hdet.

"""

# SPDX-License-Identifier: BSD-3-Clause

from typing import Optional


class HdetError(Exception):
    """
    Base exception class for hdet errors.

    """


class RangeError(ValueError, HdetError):
    """
    Raised when a parameter or argument lies outside its admissible range.

    The ``parameter`` attribute names the first violated constraint (for example
    ``"lambda"`` or ``"rho"``), so callers can report it without parsing the message.

    """

    def __init__(self, message: str, parameter: Optional[str] = None) -> None:
        super().__init__(message)
        self.parameter = parameter


class TruncationError(ValueError, HdetError):
    """
    Raised when a truncated series does not carry enough coefficients for the
    requested operation.

    """


class MissingCoefficientError(IndexError, HdetError):
    """
    Raised when a Hankel determinant needs a coefficient that was not supplied.

    This is a subclass of :exc:`IndexError`, so code which already catches index
    errors from coefficient lookups keeps working.

    """


class ConsistencyError(ArithmeticError, HdetError):
    """
    Raised when two independent evaluation paths of the same quantity disagree
    beyond their tolerance.

    This always indicates a bug (or a transcription error in a closed form), never
    bad input.

    """


class ConfigurationError(HdetError):
    """
    Raised when the environment configuration is invalid (for example a
    non-integer ``HDET_THREADS``).

    """
