"""
Truncated power series for m-fold symmetric functions.

An m-fold symmetric normalized function has the form

.. math::

   f(z) = z + \\sum_{k \\ge 1} a_{mk+1} z^{mk+1},

so only every m-th coefficient is stored. This module implements the m-fold
Ruscheweyh derivative, the operator appearing in the class definition, reversion of
the series through order ``3m+1``, and the Hankel and Fekete-Szegő functionals.

The m-fold Ruscheweyh weight of ``a_{mk+1}`` is ``Gamma(gamma+k+1) / (Gamma(k+1)
Gamma(gamma+1))``. The 1-fold weight usually written ``Gamma(gamma+k) / (Gamma(k)
Gamma(gamma+1))`` indexes ``a_k`` instead; at ``m = 1`` the two agree under ``k ->
k+1``, so only the m-fold form is implemented.

All arithmetic is generic: pass :class:`~fractions.Fraction` coefficients to get
exact results, or :class:`complex`/:class:`float` coefficients for floating point.

"""

# SPDX-License-Identifier: BSD-3-Clause

import typing
from fractions import Fraction

import numpy
import sympy

from . import _exceptions, _model

Number = typing.Union[int, Fraction, float, complex]


class MFoldSeries(typing.NamedTuple):
    """
    A truncated m-fold symmetric series.

    ``coeffs[k - 1]`` holds ``a_{mk+1}`` for ``k = 1 .. depth``. The leading
    coefficient ``a_1 = 1`` is implicit and never stored.

    """

    m: int
    coeffs: typing.Tuple[Number, ...]

    @classmethod
    def from_coefficients(
        cls, m: int, coeffs: typing.Iterable[Number]
    ) -> "MFoldSeries":
        """
        Construct a series, checking that ``m`` is a positive integer and that at
        least one coefficient is supplied.

        :raises hdet.RangeError: When ``m`` is not a positive integer.

        :raises hdet.TruncationError: When no coefficients are supplied.

        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise _exceptions.RangeError(
                f"m must be a positive integer, got {m!r}", "m"
            )
        values = tuple(coeffs)
        if not values:
            raise _exceptions.TruncationError(
                "A series needs at least one coefficient."
            )
        return cls(m=m, coeffs=values)

    @property
    def depth(self) -> int:
        """
        The truncation depth K (number of stored coefficients).

        """
        return len(self.coeffs)

    def coefficient(self, k: int) -> Number:
        """
        Return ``a_{mk+1}``.

        """
        if not 1 <= k <= self.depth:
            raise _exceptions.TruncationError(
                f"Coefficient a_{self.m * k + 1} is beyond the truncation depth "
                f"{self.depth}."
            )
        return self.coeffs[k - 1]

    def dense(self, order: typing.Optional[int] = None) -> typing.List[Number]:
        """
        Return the coefficients indexed by power of ``z``, through ``order``
        (default: the highest stored power).

        Index 0 is the constant term (always zero), index 1 is ``a_1 = 1``.

        """
        if order is None:
            order = self.m * self.depth + 1
        result: typing.List[Number] = [0] * (order + 1)
        if order >= 1:
            result[1] = 1
        for k, value in enumerate(self.coeffs, start=1):
            power = self.m * k + 1
            if power <= order:
                result[power] = value
        return result


class CoefficientTriple(typing.NamedTuple):
    """
    The three coefficients ``(a_{m+1}, a_{2m+1}, a_{3m+1})`` entering the second
    Hankel determinant of an m-fold symmetric function.

    """

    a_m1: Number
    a_2m1: Number
    a_3m1: Number


class CaratheodoryCoefficients(typing.NamedTuple):
    """
    The coefficients of the two functions ``p`` and ``q`` of positive real part which
    a coefficient triple and its inverse triple induce through the class definition.

    """

    p_m: Number
    p_2m: Number
    p_3m: Number
    q_m: Number
    q_2m: Number
    q_3m: Number


def _require_depth(f: MFoldSeries, depth: int = 3) -> None:
    """
    Raise :exc:`~hdet.TruncationError` unless ``f`` carries at least ``depth``
    coefficients.

    """
    if f.depth < depth:
        raise _exceptions.TruncationError(
            f"Operation needs a_{{m+1}} .. a_{{{depth}m+1}}, but the series has depth "
            f"{f.depth}."
        )


def ruscheweyh_weight(gamma: int, k: int) -> Fraction:
    """
    Return the exact m-fold Ruscheweyh weight ``Gamma(gamma+k+1) / (Gamma(k+1)
    Gamma(gamma+1))`` multiplying ``a_{mk+1}``.

    The weight is built as the product of ``(k + j) / j`` for ``j = 1 .. gamma``;
    no gamma function is ever evaluated.

    :raises hdet.RangeError: When ``gamma < 0`` or ``k < 1``.

    """
    if gamma < 0:
        raise _exceptions.RangeError(
            f"gamma must be non-negative, got {gamma}", "gamma"
        )
    if k < 1:
        raise _exceptions.RangeError(f"k must be at least 1, got {k}", "k")
    weight = Fraction(1)
    for j in range(1, gamma + 1):
        weight *= Fraction(k + j, j)
    return weight


def apply_ruscheweyh(f: MFoldSeries, gamma: int) -> MFoldSeries:
    """
    Apply the m-fold Ruscheweyh derivative of order ``gamma`` to ``f``.

    """
    return MFoldSeries(
        m=f.m,
        coeffs=tuple(
            ruscheweyh_weight(gamma, k) * value
            for k, value in enumerate(f.coeffs, start=1)
        ),
    )


def operator_lhs_series(
    f: MFoldSeries, lambda_: _model.RealLike, gamma: int
) -> typing.List[Number]:
    """
    Return the coefficients of ``z^{mk}`` (``k = 1 .. depth``) in

    .. math::

       (1 - \\lambda) \\frac{R^\\gamma f(z)}{z} + \\lambda (R^\\gamma f(z))'.

    The constant term is always 1 and is omitted. The ``k``-th coefficient is
    ``(1 + k m lambda) W(gamma, k) a_{mk+1}``.

    """
    lam = _model.parse_real(lambda_, "lambda")
    transformed = apply_ruscheweyh(f, gamma)
    return [
        (1 + k * f.m * lam) * value
        for k, value in enumerate(transformed.coeffs, start=1)
    ]


def operator_lhs_coeffs(
    f: MFoldSeries, lambda_: _model.RealLike, gamma: int
) -> typing.Tuple[Number, Number, Number]:
    """
    Return the ``z^m``, ``z^{2m}`` and ``z^{3m}`` coefficients of the class operator
    applied to ``f``.

    :raises hdet.TruncationError: When ``f`` has depth below 3.

    """
    _require_depth(f)
    c_m, c_2m, c_3m = operator_lhs_series(f, lambda_, gamma)[:3]
    return c_m, c_2m, c_3m


def invert_series(f: MFoldSeries) -> CoefficientTriple:
    """
    Return ``(b_{m+1}, b_{2m+1}, b_{3m+1})`` of the inverse ``g = f^{-1}``.

    .. math::

       b_{m+1} &= -a_{m+1} \\\\
       b_{2m+1} &= (m+1) a_{m+1}^2 - a_{2m+1} \\\\
       b_{3m+1} &= -\\left[\\tfrac12 (m+1)(3m+2) a_{m+1}^3
                   - (3m+2) a_{m+1} a_{2m+1} + a_{3m+1}\\right]

    :raises hdet.TruncationError: When ``f`` has depth below 3.

    """
    _require_depth(f)
    m = f.m
    a1, a2, a3 = f.coeffs[:3]
    return CoefficientTriple(
        a_m1=-a1,
        a_2m1=(m + 1) * a1 * a1 - a2,
        a_3m1=-(
            Fraction((m + 1) * (3 * m + 2), 2) * a1 * a1 * a1
            - (3 * m + 2) * a1 * a2
            + a3
        ),
    )


def truncated_inverse(f: MFoldSeries) -> MFoldSeries:
    """
    Return the inverse of ``f`` as a depth-3 :class:`MFoldSeries`.

    """
    return MFoldSeries(m=f.m, coeffs=tuple(invert_series(f)))


def _multiply_truncated(
    left: typing.Sequence[Number], right: typing.Sequence[Number], order: int
) -> typing.List[Number]:
    """
    Multiply two dense coefficient lists, dropping powers above ``order``.

    """
    product: typing.List[Number] = [0] * (order + 1)
    for i, x in enumerate(left[: order + 1]):
        if x == 0:
            continue
        for j, y in enumerate(right[: order + 1 - i]):
            product[i + j] += x * y
    return product


def compose_truncated(
    outer: typing.Sequence[Number], inner: typing.Sequence[Number], order: int
) -> typing.List[Number]:
    """
    Return the dense coefficients of ``outer(inner(w))`` through ``order``.

    Both arguments are dense coefficient lists indexed by power; ``inner`` must have
    a zero constant term.

    :raises hdet.RangeError: When ``inner`` has a non-zero constant term.

    """
    if inner and inner[0] != 0:
        raise _exceptions.RangeError(
            "The inner series of a composition must vanish at the origin.", "inner"
        )
    result: typing.List[Number] = [0] * (order + 1)
    for coefficient in reversed(list(outer[: order + 1])):
        result = _multiply_truncated(result, inner, order)
        result[0] += coefficient
    return result


def _determinant(matrix: typing.List[typing.List[Number]]) -> Number:
    """
    Determinant of a square matrix.

    All-rational matrices go through :meth:`sympy.Matrix.det` and come back as an
    exact :class:`~fractions.Fraction`; anything else is handed to
    :func:`numpy.linalg.det`.

    """
    entries = [value for row in matrix for value in row]
    if all(isinstance(value, Fraction) for value in entries):
        exact = sympy.Matrix(
            [
                [sympy.Rational(value.numerator, value.denominator) for value in row]
                for row in matrix
            ]
        )
        determinant = sympy.Rational(exact.det(method="bareiss"))
        return Fraction(int(determinant.p), int(determinant.q))
    if any(isinstance(value, complex) for value in entries):
        return complex(numpy.linalg.det([[complex(v) for v in row] for row in matrix]))
    return float(numpy.linalg.det([[float(v) for v in row] for row in matrix]))


def hankel_determinant(coeffs: typing.Sequence[Number], q: int, n: int) -> Number:
    """
    Return the Hankel determinant ``H_q(n)``.

    ``coeffs[0]`` is ``a_1`` (normally 1), ``coeffs[k - 1]`` is ``a_k``. Entry
    ``(i, j)`` (1-indexed) of the ``q x q`` matrix is ``a_{n+i+j-2}``, so the
    bottom-right entry is ``a_{n+2q-2}``.

    Integer coefficients are promoted to :class:`~fractions.Fraction` so the result
    stays exact.

    :raises hdet.RangeError: When ``q`` or ``n`` is not positive.

    :raises hdet.MissingCoefficientError: When ``coeffs`` stops before
       ``a_{n+2q-2}``.

    """
    if q < 1:
        raise _exceptions.RangeError(f"q must be at least 1, got {q}", "q")
    if n < 1:
        raise _exceptions.RangeError(f"n must be at least 1, got {n}", "n")
    highest = n + 2 * q - 2
    if len(coeffs) < highest:
        raise _exceptions.MissingCoefficientError(
            f"H_{q}({n}) needs coefficients through a_{highest}, but only "
            f"{len(coeffs)} were supplied."
        )
    values = [Fraction(value) if isinstance(value, int) else value for value in coeffs]
    matrix = [[values[n + i + j - 1] for j in range(q)] for i in range(q)]
    return _determinant(matrix)


def fekete_szego(a2: Number, a3: Number, mu: Number) -> Number:
    """
    Return the Fekete-Szegő functional ``a3 - mu * a2**2``.

    At ``mu = 1`` this is ``H_2(1)``.

    """
    return a3 - mu * a2 * a2


def pq_from_coefficients(
    params: _model.Params, triple: CoefficientTriple
) -> CaratheodoryCoefficients:
    """
    Return the coefficients of ``p`` and ``q`` induced by ``triple``.

    Membership in the class means the operator applied to ``f`` equals ``beta + (1 -
    beta) p(z)`` and the operator applied to ``g = f^{-1}`` equals ``beta + (1 -
    beta) q(w)``; reading off coefficients gives ``p`` from ``f`` and ``q`` from
    the inverse triple.

    """
    f = MFoldSeries(m=params.m, coeffs=tuple(triple))
    g = truncated_inverse(f)
    scale = params.one_minus_beta
    p_m, p_2m, p_3m = (
        value / scale for value in operator_lhs_coeffs(f, params.lambda_, params.gamma)
    )
    q_m, q_2m, q_3m = (
        value / scale for value in operator_lhs_coeffs(g, params.lambda_, params.gamma)
    )
    return CaratheodoryCoefficients(p_m, p_2m, p_3m, q_m, q_2m, q_3m)
