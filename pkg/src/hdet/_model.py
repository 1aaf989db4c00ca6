"""
Parameter domain of the function class: the quadruple (m, lambda, gamma, beta).

"""

# SPDX-License-Identifier: BSD-3-Clause

import numbers
import textwrap
import typing
from fractions import Fraction

from . import _exceptions

RealLike = typing.Union[int, float, str, Fraction]


class Params(typing.NamedTuple):
    """
    A :func:`~collections.namedtuple` holding the four parameters of the class of
    m-fold symmetric bi-univalent functions studied here.

    ``lambda_`` and ``beta`` are stored as exact :class:`~fractions.Fraction` values,
    so every product and threshold comparison derived from them is exact.

    Construct instances with :func:`validate_params`; building a ``Params`` directly
    skips the range checks.

    """

    m: int
    lambda_: Fraction
    gamma: int
    beta: Fraction

    def beta_replaced(self, beta: RealLike) -> "Params":
        """
        Return the same (m, lambda, gamma) with a new, validated ``beta``.

        """
        return validate_params(self.m, self.lambda_, self.gamma, beta)

    @property
    def one_minus_beta(self) -> Fraction:
        """
        The quantity ``1 - beta``, which every closed form is a polynomial in.

        """
        return 1 - self.beta


def parse_real(value: RealLike, name: str = "value") -> Fraction:
    """
    Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Strings may be integers, decimals or ``p/q`` rationals. Floats are converted
    through their shortest decimal representation, so ``0.2`` becomes ``1/5`` rather
    than the nearest binary fraction.

    :raises hdet.RangeError: When the value is malformed or not finite.

    """
    if isinstance(value, bool):
        raise _exceptions.RangeError(
            f"{name} must be a real number, got {value!r}", name
        )
    try:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, numbers.Integral):
            return Fraction(int(value))
        if isinstance(value, float):
            return Fraction(repr(value))
        if isinstance(value, numbers.Rational):
            return Fraction(value.numerator, value.denominator)
        if isinstance(value, str):
            return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise _exceptions.RangeError(
            f"{name} must be a finite real number, got {value!r}", name
        ) from exc
    raise _exceptions.RangeError(
        f"{name} must be a real number, got {type(value).__name__}", name
    )


def _parse_integer(value: RealLike, name: str) -> int:
    """
    Convert ``value`` to an :class:`int`, rejecting non-integral values.

    """
    exact = parse_real(value, name)
    if exact.denominator != 1:
        raise _exceptions.RangeError(
            f"{name} must be an integer, got {value!r}", name
        )
    return int(exact)


def validate_params(
    m: RealLike, lambda_: RealLike, gamma: RealLike, beta: RealLike
) -> Params:
    """
    Validate raw inputs and return a :class:`Params`.

    The constraints are checked in order and the first one violated is reported:

    * ``m >= 1`` and integral;
    * ``lambda >= 1``;
    * ``gamma >= 0`` and integral;
    * ``0 <= beta < 1``.

    Nothing is clamped: out-of-range input is always an error.

    :raises hdet.RangeError: Naming the first violated constraint in its
       ``parameter`` attribute.

    """
    m_value = _parse_integer(m, "m")
    if m_value < 1:
        raise _exceptions.RangeError(f"m must be at least 1, got {m_value}", "m")
    lambda_value = parse_real(lambda_, "lambda")
    if lambda_value < 1:
        raise _exceptions.RangeError(
            f"lambda must be at least 1, got {lambda_value}", "lambda"
        )
    gamma_value = _parse_integer(gamma, "gamma")
    if gamma_value < 0:
        raise _exceptions.RangeError(
            f"gamma must be non-negative, got {gamma_value}", "gamma"
        )
    beta_value = parse_real(beta, "beta")
    if not 0 <= beta_value < 1:
        raise _exceptions.RangeError(
            textwrap.dedent(
                f"""
            beta must lie in [0, 1).

            Found: {beta_value}
            """
            ),
            "beta",
        )
    return Params(m=m_value, lambda_=lambda_value, gamma=gamma_value, beta=beta_value)
