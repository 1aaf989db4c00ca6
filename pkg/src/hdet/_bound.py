"""
Closed-form bound on the second Hankel determinant of the class, and the
specializations it reduces to.

For ``f`` in the class with parameters (m, lambda, gamma, beta), the functional
``|a_{m+1} a_{3m+1} - a_{2m+1}^2|`` is dominated by the quadratic form

.. math::

   F(\\mu_1, \\mu_2) = F_1 + F_2 (\\mu_1 + \\mu_2) + F_3 (\\mu_1^2 + \\mu_2^2)
                      + F_4 (\\mu_1 + \\mu_2)^2

whose coefficients depend on ``rho = |p_m|`` in ``[0, 2]``. ``F`` is increasing in
both ``mu`` arguments, so its maximum over the unit square is ``K(rho) = F(1, 1)``,
and the bound is the maximum of ``K`` over ``[0, 2]``: at ``rho = 2`` while ``beta <=
tau``, at the interior critical point ``rho_2`` beyond it.

All algebra is exact in :class:`~fractions.Fraction`; only the square roots in
``tau``, ``rho_2`` and the corollary thresholds are taken in floating point.

"""

# SPDX-License-Identifier: BSD-3-Clause

import enum
import functools
import math
import typing
from fractions import Fraction

import numpy

from . import _common, _exceptions, _model

Real = typing.Union[int, float, Fraction]


# Public classes.
# -------------------------------------------------------------------------------


class Branch(enum.Enum):
    """
    Which closed form the bound takes, modeled as an :class:`enum.Enum`.

    """

    AT_RHO_TWO = "AtRhoTwo"
    AT_RHO_STAR = "AtRhoStar"


class CorollaryKind(enum.Enum):
    """
    The four specializations of the bound.

    * ``MFOLD``: ``lambda = 1``, ``gamma = 0``, any ``m``.
    * ``GENERAL_1FOLD``: ``m = 1``.
    * ``LAMBDA_1FOLD``: ``m = 1``, ``gamma = 0``.
    * ``BASE``: ``m = lambda = 1``, ``gamma = 0``.

    """

    MFOLD = "MFold"
    GENERAL_1FOLD = "General1Fold"
    LAMBDA_1FOLD = "Lambda1Fold"
    BASE = "Base"


class OmegaSet(typing.NamedTuple):
    """
    The four exact products the bound is expressed in. They do not depend on
    ``beta``.

    """

    omega1: Fraction
    omega2: Fraction
    omega3: Fraction
    omega4: Fraction


class FCoeffs(typing.NamedTuple):
    """
    The coefficients ``F_1 .. F_4`` of the dominating quadratic form at ``rho``.

    """

    rho: Real
    F1: Real
    F2: Real
    F3: Real
    F4: Real


class KExtremes(typing.NamedTuple):
    """
    Closed-form values of ``K`` at ``rho = 0``, ``rho = 2`` and (when it lies in
    ``(0, 2)``) at the interior critical point ``rho_2``.

    """

    k_at_zero: float
    k_at_two: float
    k_at_rho2: typing.Optional[float]


class BoundResult(typing.NamedTuple):
    """
    The bound on ``|a_{m+1} a_{3m+1} - a_{2m+1}^2|`` together with the branch it came
    from, the branch threshold ``tau``, and the ``rho`` at which ``K`` attains it.

    ``tau`` may be negative, in which case ``branch`` is always
    :attr:`Branch.AT_RHO_STAR`.

    """

    value: float
    branch: Branch
    tau: float
    rho_star: float


class CorollaryResult(typing.NamedTuple):
    """
    A corollary bound and its branch threshold.

    """

    value: float
    threshold: float


# Private helpers.
# -------------------------------------------------------------------------------


class _Blocks(typing.NamedTuple):
    """
    Exact building blocks shared by every closed form.

    """

    t: Fraction
    a: Fraction  # (gamma+1)(m lambda+1)
    b: Fraction  # (gamma+1)(gamma+2)(2 m lambda+1)
    d: Fraction  # (gamma+1)^2 (gamma+2)(gamma+3)(m lambda+1)(3 m lambda+1)
    n: Fraction  # common denominator of the expanded K(rho)
    f_quartic: Fraction  # rho^4 coefficient of F1
    f_cubic: Fraction  # rho (4 - rho^2) coefficient of F1
    f_second: Fraction  # rho^2 (4 - rho^2) coefficient of F2
    f_third_sq: Fraction  # rho^2 (4 - rho^2) coefficient of F3
    f_third_lin: Fraction  # rho (4 - rho^2) coefficient of F3 (subtracted)
    f_fourth: Fraction  # (4 - rho^2)^2 coefficient of F4


@functools.lru_cache(maxsize=512)
def _blocks(params: _model.Params) -> _Blocks:
    """
    Compute the exact building blocks for ``params``.

    """
    m = params.m
    t = params.one_minus_beta
    u = m * params.lambda_
    g1, g2, g3 = params.gamma + 1, params.gamma + 2, params.gamma + 3
    a = g1 * (u + 1)
    b = g1 * g2 * (2 * u + 1)
    d = g1**2 * g2 * g3 * (u + 1) * (3 * u + 1)
    n = g1**4 * g2**2 * g3 * (u + 1) ** 4 * (2 * u + 1) ** 2 * (3 * u + 1)
    half_three = Fraction(3, 2) * t**2 / d
    return _Blocks(
        t=t,
        a=a,
        b=b,
        d=d,
        n=n,
        f_quartic=(m + 1) ** 2 * t**4 / (4 * a**4) + half_three,
        f_cubic=3 * t**2 / d,
        f_second=m * t**3 / (4 * a**2 * b) + half_three,
        f_third_sq=Fraction(3, 4) * t**2 / d,
        f_third_lin=half_three,
        f_fourth=t**2 / (4 * b**2),
    )


class _KPolynomial(typing.NamedTuple):
    """
    ``K(rho) = scale * (quartic rho^4 + quadratic rho^2 + constant)``.

    """

    scale: Fraction
    quartic: Fraction
    quadratic: Fraction
    constant: Fraction


@functools.lru_cache(maxsize=512)
def _k_polynomial(params: _model.Params) -> _KPolynomial:
    """
    The expanded form of ``K``, written in terms of the omega products.

    """
    w1, w2, w3, w4 = omega_set(params)
    blocks = _blocks(params)
    t = blocks.t
    return _KPolynomial(
        scale=t**2 / (4 * blocks.n),
        quartic=_denominator(params),
        quadratic=8 * w2 * t + 72 * w3 - 32 * w4,
        constant=64 * w4,
    )


def _denominator(params: _model.Params) -> Fraction:
    """
    ``omega1 (1-beta)^2 - 2 omega2 (1-beta) - 12 omega3 + 4 omega4``: the ``rho^4``
    coefficient of ``K`` and the denominator of the ``rho_2`` radical.

    """
    w1, w2, w3, w4 = omega_set(params)
    t = params.one_minus_beta
    return w1 * t**2 - 2 * w2 * t - 12 * w3 + 4 * w4


def _is_degenerate(params: _model.Params, value: Fraction) -> bool:
    """
    Whether ``value`` is indistinguishable from zero at the scale of the omega
    products.

    """
    w1, w2, w3, w4 = omega_set(params)
    scale = w1 + 2 * w2 + 12 * w3 + 4 * w4
    return abs(value) <= _common._DEGENERATE_TOLERANCE * scale


def _tau_residual(params: _model.Params) -> Fraction:
    """
    ``omega1 (1-beta)^2 - omega2 (1-beta) - 3 omega3``.

    ``tau`` is the value of ``beta`` at which this vanishes, and it is non-negative
    exactly when ``beta <= tau``; comparing its sign avoids comparing ``beta``
    against a rounded ``tau``.

    """
    w1, w2, w3, _ = omega_set(params)
    t = params.one_minus_beta
    return w1 * t**2 - w2 * t - 3 * w3


def _as_real(value: Real) -> Real:
    """
    Keep exact input exact; everything else becomes :class:`float`.

    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return value
    return float(value)


def _check_rho(rho: Real) -> Real:
    """
    Validate ``rho`` against ``[0, 2]``.

    """
    value = _as_real(rho)
    if not 0 <= value <= 2:
        raise _exceptions.RangeError(f"rho must lie in [0, 2], got {rho!r}", "rho")
    return value


def _check_mu(mu: Real, name: str) -> Real:
    """
    Validate a ``mu`` argument against ``[0, 1]``.

    """
    value = _as_real(mu)
    if not 0 <= value <= 1:
        raise _exceptions.RangeError(f"{name} must lie in [0, 1], got {mu!r}", name)
    return value


def _f_values(blocks: _Blocks, rho: typing.Any) -> typing.Tuple[typing.Any, ...]:
    """
    Evaluate ``F_1 .. F_4`` from building blocks; ``rho`` may be a scalar or a
    :mod:`numpy` array (in which case the blocks must already be floats).

    """
    s = 4 - rho * rho
    f1 = blocks.f_quartic * rho**4 + blocks.f_cubic * rho * s
    f2 = blocks.f_second * rho * rho * s
    f3 = blocks.f_third_sq * rho * rho * s - blocks.f_third_lin * rho * s
    f4 = blocks.f_fourth * s * s
    return f1, f2, f3, f4


def _f_coeff_arrays(
    params: _model.Params, rho: numpy.ndarray
) -> typing.Tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray, numpy.ndarray]:
    """
    Vectorized ``F_1 .. F_4`` over an array of ``rho`` values.

    """
    float_blocks = _Blocks(*(float(value) for value in _blocks(params)))
    f1, f2, f3, f4 = _f_values(float_blocks, numpy.asarray(rho, dtype=float))
    return f1, f2, f3, f4


def _k_arrays(params: _model.Params, rho: numpy.ndarray) -> numpy.ndarray:
    """
    Vectorized ``K(rho) = F_1 + 2 (F_2 + F_3) + 4 F_4``.

    """
    f1, f2, f3, f4 = _f_coeff_arrays(params, rho)
    return f1 + 2 * (f2 + f3) + 4 * f4


def _first_branch(params: _model.Params) -> Fraction:
    """
    The bound's first branch, which is ``K(2)``.

    """
    m = params.m
    t = params.one_minus_beta
    u = m * params.lambda_
    g1, g2, g3 = params.gamma + 1, params.gamma + 2, params.gamma + 3
    return (
        4
        * t**2
        / (g1**2 * (u + 1))
        * (
            (m + 1) ** 2 * t**2 / (g1**2 * (u + 1) ** 3)
            + Fraction(6) / (g2 * g3 * (3 * u + 1))
        )
    )


def _second_branch(params: _model.Params) -> typing.Optional[Fraction]:
    """
    The bound's second branch, which is ``K(rho_2)``; absent when its denominator
    is degenerate.

    """
    w1, w2, w3, w4 = omega_set(params)
    t = params.one_minus_beta
    u = params.m * params.lambda_
    g1, g2 = params.gamma + 1, params.gamma + 2
    denominator = _denominator(params)
    if _is_degenerate(params, denominator):
        return None
    bracket = 4 - (w2 * t + 9 * w3 - 4 * w4) ** 2 / (w4 * denominator)
    return 4 * t**2 / (g1**2 * g2**2 * (2 * u + 1) ** 2) * bracket


def _radicand(params: _model.Params) -> typing.Optional[Fraction]:
    """
    The exact radicand of ``rho_2``, or ``None`` when its denominator is
    degenerate.

    """
    _, w2, w3, w4 = omega_set(params)
    t = params.one_minus_beta
    denominator = _denominator(params)
    if _is_degenerate(params, denominator):
        return None
    return (16 * w4 - 4 * w2 * t - 36 * w3) / denominator


# Public functions.
# -------------------------------------------------------------------------------


@functools.lru_cache(maxsize=512)
def omega_set(params: _model.Params) -> OmegaSet:
    """
    Return the exact products ``omega_1 .. omega_4``.

    .. math::

       \\omega_1 &= (m+1)^2 (\\gamma+2)^2 (\\gamma+3) (2m\\lambda+1)^2
                   (3m\\lambda+1) \\\\
       \\omega_2 &= m (\\gamma+1)(\\gamma+2)(\\gamma+3) (m\\lambda+1)^2 (2m\\lambda+1)
                   (3m\\lambda+1) \\\\
       \\omega_3 &= (\\gamma+1)^2 (\\gamma+2) (m\\lambda+1)^3 (2m\\lambda+1)^2 \\\\
       \\omega_4 &= (\\gamma+1)^2 (\\gamma+3) (m\\lambda+1)^4 (3m\\lambda+1)

    """
    m = params.m
    u = m * params.lambda_
    g1, g2, g3 = params.gamma + 1, params.gamma + 2, params.gamma + 3
    return OmegaSet(
        omega1=Fraction((m + 1) ** 2 * g2**2 * g3) * (2 * u + 1) ** 2 * (3 * u + 1),
        omega2=Fraction(m * g1 * g2 * g3) * (u + 1) ** 2 * (2 * u + 1) * (3 * u + 1),
        omega3=Fraction(g1**2 * g2) * (u + 1) ** 3 * (2 * u + 1) ** 2,
        omega4=Fraction(g1**2 * g3) * (u + 1) ** 4 * (3 * u + 1),
    )


def tau(params: _model.Params) -> float:
    """
    Return the branch threshold

    .. math::

       \\tau = 1 - \\frac{\\omega_2 + \\sqrt{\\omega_2^2 + 12\\omega_1\\omega_3}}
                        {2\\omega_1}.

    The radicand is exact; the square root is correctly rounded, which keeps the
    relative error well inside ``1e-14``.

    The threshold is negative exactly when ``omega1 - omega2 - 3 omega3 < 0``; this
    happens for larger ``m lambda`` and ``gamma`` (for instance ``m = 1``,
    ``lambda = 3/2``, ``gamma = 2``). It is returned unclamped, and every ``beta`` in
    ``[0, 1)`` then takes the :attr:`Branch.AT_RHO_STAR` branch.

    """
    w1, w2, w3, _ = omega_set(params)
    root = math.sqrt(w2**2 + 12 * w1 * w3)
    return float(1 - (w2 + Fraction(root)) / (2 * w1))


def result_one_threshold(params: _model.Params) -> float:
    """
    Return ``1 - (omega2 + sqrt(omega2^2 + omega1 (12 omega3 - 4 omega4))) /
    omega1``, the value of ``beta`` at which the ``rho^4`` coefficient of ``K``
    changes sign.

    Below it ``K`` is convex in ``rho^2``. It always lies below :func:`tau`.

    """
    w1, w2, w3, w4 = omega_set(params)
    root = math.sqrt(w2**2 + w1 * (12 * w3 - 4 * w4))
    return float(1 - (w2 + Fraction(root)) / w1)


def f_coeffs(params: _model.Params, rho: Real) -> FCoeffs:
    """
    Return ``F_1 .. F_4`` at ``rho``.

    Exact (:class:`int` or :class:`~fractions.Fraction`) ``rho`` gives exact
    coefficients.

    :raises hdet.RangeError: When ``rho`` lies outside ``[0, 2]``.

    """
    value = _check_rho(rho)
    f1, f2, f3, f4 = _f_values(_blocks(params), value)
    return FCoeffs(rho=value, F1=f1, F2=f2, F3=f3, F4=f4)


def f_surface(params: _model.Params, rho: Real, mu1: Real, mu2: Real) -> Real:
    """
    Evaluate the dominating quadratic form ``F(mu1, mu2)`` at ``rho``.

    :raises hdet.RangeError: When ``rho`` lies outside ``[0, 2]`` or either ``mu``
       outside ``[0, 1]``.

    """
    coeffs = f_coeffs(params, rho)
    x = _check_mu(mu1, "mu1")
    y = _check_mu(mu2, "mu2")
    return (
        coeffs.F1
        + coeffs.F2 * (x + y)
        + coeffs.F3 * (x * x + y * y)
        + coeffs.F4 * (x + y) ** 2
    )


def k_of_rho(params: _model.Params, rho: Real) -> Real:
    """
    Return ``K(rho) = F_1 + 2 (F_2 + F_3) + 4 F_4``.

    The value is also computed from the expanded quartic in ``rho`` written in terms
    of the omega products, and the two must agree.

    :raises hdet.RangeError: When ``rho`` lies outside ``[0, 2]``.

    :raises hdet.ConsistencyError: When the two evaluations disagree.

    """
    coeffs = f_coeffs(params, rho)
    value = coeffs.F1 + 2 * (coeffs.F2 + coeffs.F3) + 4 * coeffs.F4
    poly = _k_polynomial(params)
    r = coeffs.rho
    expanded = poly.scale * (
        poly.quartic * r**4 + poly.quadratic * r**2 + poly.constant
    )
    _common._check_agreement("K(rho)", value, expanded, _common._K_PATH_TOLERANCE)
    return value


def k_prime(params: _model.Params, rho: Real) -> Real:
    """
    Return ``K'(rho)``, a cubic in ``rho`` with only odd powers.

    :raises hdet.RangeError: When ``rho`` lies outside ``[0, 2]``.

    """
    r = _check_rho(rho)
    poly = _k_polynomial(params)
    return poly.scale * (4 * poly.quartic * r**3 + 2 * poly.quadratic * r)


def critical_radius(params: _model.Params) -> typing.Optional[float]:
    """
    Return the unfiltered non-zero critical point of ``K``,

    .. math::

       \\rho_2 = \\sqrt{\\frac{16\\omega_4 - 4\\omega_2(1-\\beta) - 36\\omega_3}
                              {\\omega_1(1-\\beta)^2 - 2\\omega_2(1-\\beta)
                               - 12\\omega_3 + 4\\omega_4}},

    or ``None`` when the radicand is not positive or its denominator is degenerate.
    Unlike :func:`rho_two`, the result may lie at or beyond 2.

    """
    radicand = _radicand(params)
    if radicand is None or radicand <= 0:
        return None
    return math.sqrt(radicand)


def rho_two(params: _model.Params) -> typing.Optional[float]:
    """
    Return the interior critical point ``rho_2`` of ``K`` when it lies in ``(0,
    2)``, else ``None``.

    The test ``0 < rho_2^2 < 4`` is made on the exact radicand, so this is present
    exactly when ``beta > tau``.

    """
    radicand = _radicand(params)
    if radicand is None or not 0 < radicand < 4:
        return None
    return math.sqrt(radicand)


def k_extremes(params: _model.Params) -> KExtremes:
    """
    Return the closed-form values of ``K`` at ``0``, at ``2`` and at ``rho_2``.

    Each is checked against :func:`k_of_rho` at the same point.

    :raises hdet.ConsistencyError: When a closed form disagrees with ``K``.

    """
    blocks = _blocks(params)
    result = KExtremes(
        k_at_zero=float(16 * blocks.t**2 / blocks.b**2),
        k_at_two=float(_first_branch(params)),
        k_at_rho2=None,
    )
    _common._check_agreement(
        "K(0)", result.k_at_zero, k_of_rho(params, 0), _common._PATH_TOLERANCE
    )
    _common._check_agreement(
        "K(2)", result.k_at_two, k_of_rho(params, 2), _common._PATH_TOLERANCE
    )
    rho = rho_two(params)
    second = _second_branch(params)
    if rho is not None and second is not None:
        result = result._replace(k_at_rho2=float(second))
        _common._check_agreement(
            "K(rho_2)", result.k_at_rho2, k_of_rho(params, rho), _common._PATH_TOLERANCE
        )
    return result


def branch_values(params: _model.Params) -> typing.Tuple[float, typing.Optional[float]]:
    """
    Evaluate both closed-form branches at ``params.beta``, regardless of which one
    applies. The second is ``None`` when its denominator is degenerate.

    """
    second = _second_branch(params)
    return float(_first_branch(params)), None if second is None else float(second)


def theorem_bound(params: _model.Params) -> BoundResult:
    """
    Return the bound on ``|a_{m+1} a_{3m+1} - a_{2m+1}^2|``.

    For ``beta <= tau`` the bound is ``K(2)``; otherwise it is ``K(rho_2)``. At
    ``beta = tau`` the two coincide and the first is reported. The result is checked
    against the maximum of :func:`k_extremes`.

    :raises hdet.ConsistencyError: When the selected branch is not the maximum of
       ``K`` over its candidate points.

    """
    threshold = tau(params)
    extremes = k_extremes(params)
    if _tau_residual(params) >= 0:
        result = BoundResult(
            value=extremes.k_at_two,
            branch=Branch.AT_RHO_TWO,
            tau=threshold,
            rho_star=2.0,
        )
    else:
        rho_star = rho_two(params)
        if rho_star is None or extremes.k_at_rho2 is None:
            raise _exceptions.ConsistencyError(
                f"beta = {params.beta} exceeds tau = {threshold!r} but K has no "
                "interior critical point in (0, 2)."
            )
        result = BoundResult(
            value=extremes.k_at_rho2,
            branch=Branch.AT_RHO_STAR,
            tau=threshold,
            rho_star=rho_star,
        )
    candidates = [value for value in extremes if value is not None]
    _common._check_agreement(
        "the bound and the maximum of K", result.value, max(candidates), 1e-10
    )
    return result


# Corollaries.
# -------------------------------------------------------------------------------

_COROLLARY_ARGUMENTS = {
    CorollaryKind.MFOLD: ("m", "beta"),
    CorollaryKind.GENERAL_1FOLD: ("lambda_", "gamma", "beta"),
    CorollaryKind.LAMBDA_1FOLD: ("lambda_", "beta"),
    CorollaryKind.BASE: ("beta",),
}


def _mfold_corollary(m: int, beta: Fraction) -> CorollaryResult:
    """
    The bound for ``lambda = 1``, ``gamma = 0`` in terms of ``psi_1 .. psi_3``.

    """
    t = 1 - beta
    psi1 = (2 * m + 1) * (3 * m + 1)
    psi2 = (m + 1) * (2 * m + 1) ** 2
    psi3 = (m + 1) ** 2 * (3 * m + 1)
    threshold = (
        (3 * m + 1) * (7 * m + 4)
        - math.sqrt(m**2 * (3 * m + 1) ** 2 + 8 * psi2 * (3 * m + 1))
    ) / (4 * psi1)
    if float(beta) <= threshold:
        value = 4 * t**2 / (m + 1) * (t**2 / (m + 1) + Fraction(1, 3 * m + 1))
    else:
        numerator = (m * t * psi1 + 3 * psi2 - 2 * psi3) ** 2
        denominator = psi3 * (
            (2 * m + 1) * t**2 * psi1 - m * t * psi1 + psi3 - 2 * psi2
        )
        value = t**2 / (2 * m + 1) ** 2 * (4 - numerator / denominator)
    return CorollaryResult(value=float(value), threshold=threshold)


def _general_1fold_corollary(
    lam: Fraction, gamma: int, beta: Fraction
) -> CorollaryResult:
    """
    The bound for ``m = 1`` in terms of ``theta_1 .. theta_4``.

    """
    t = 1 - beta
    g1, g2, g3 = gamma + 1, gamma + 2, gamma + 3
    theta1 = g2**2 * g3 * (2 * lam + 1) ** 2 * (3 * lam + 1)
    theta2 = g1 * g2 * g3 * (lam + 1) ** 2 * (2 * lam + 1) * (3 * lam + 1)
    theta3 = g1**2 * g2 * (lam + 1) ** 3 * (2 * lam + 1) ** 2
    theta4 = g1**2 * g3 * (lam + 1) ** 4 * (3 * lam + 1)
    threshold = float(
        1
        - (theta2 + Fraction(math.sqrt(theta2**2 + 48 * theta1 * theta3)))
        / (8 * theta1)
    )
    if float(beta) <= threshold:
        value = (
            8
            * t**2
            / (g1**2 * (lam + 1))
            * (
                2 * t**2 / (g1**2 * (lam + 1) ** 3)
                + Fraction(3) / (g2 * g3 * (3 * lam + 1))
            )
        )
    else:
        numerator = (theta2 * t + 9 * theta3 - 4 * theta4) ** 2
        denominator = theta4 * (
            4 * theta1 * t**2 - 2 * theta2 * t - 12 * theta3 + 4 * theta4
        )
        value = (
            4
            * t**2
            / (g1**2 * g2**2 * (2 * lam + 1) ** 2)
            * (4 - numerator / denominator)
        )
    return CorollaryResult(value=float(value), threshold=threshold)


def _lambda_1fold_corollary(lam: Fraction, beta: Fraction) -> CorollaryResult:
    """
    The bound for ``m = 1``, ``gamma = 0`` in terms of ``eta_1 .. eta_4``.

    The second branch is written ``2 (1-beta)^2 / (2 lambda+1)^2 [2 - ...]``; with a
    leading ``4`` inside the bracket it would not reduce to the base case at
    ``lambda = 1``.

    """
    t = 1 - beta
    eta1 = (2 * lam + 1) ** 2 * (3 * lam + 1)
    eta2 = (lam + 1) ** 2 * (2 * lam + 1) * (3 * lam + 1)
    eta3 = (lam + 1) ** 3 * (2 * lam + 1) ** 2
    eta4 = (lam + 1) ** 4 * (3 * lam + 1)
    root = math.sqrt(
        (lam + 1) ** 4 * (3 * lam + 1) ** 2
        + 32 * (lam + 1) ** 3 * (2 * lam + 1) ** 2 * (3 * lam + 1)
    )
    threshold = float(
        1
        - ((lam + 1) ** 2 * (3 * lam + 1) + Fraction(root))
        / (16 * (2 * lam + 1) * (3 * lam + 1))
    )
    if float(beta) <= threshold:
        value = (
            8
            * t**2
            / (lam + 1)
            * (2 * t**2 / (lam + 1) ** 3 + 1 / (2 * (3 * lam + 1)))
        )
    else:
        numerator = (eta2 * t + 3 * eta3 - 2 * eta4) ** 2
        denominator = eta4 * (8 * eta1 * t**2 - 2 * eta2 * t - 4 * eta3 + 2 * eta4)
        value = 2 * t**2 / (2 * lam + 1) ** 2 * (2 - numerator / denominator)
    return CorollaryResult(value=float(value), threshold=threshold)


def _base_corollary(beta: Fraction) -> CorollaryResult:
    """
    The bound for ``m = lambda = 1``, ``gamma = 0``.

    """
    t = 1 - beta
    threshold = (11 - math.sqrt(37)) / 12
    if float(beta) <= threshold:
        value = t**2 * (t**2 + Fraction(1, 2))
    else:
        value = (
            t**2 / 16 * (60 * beta**2 - 84 * beta - 25) / (9 * beta**2 - 15 * beta + 1)
        )
    return CorollaryResult(value=float(value), threshold=threshold)


def corollary_bound(
    kind: typing.Union[CorollaryKind, str], **arguments: _model.RealLike
) -> CorollaryResult:
    """
    Evaluate one of the four specializations of the bound directly from its own
    closed form, independently of :func:`theorem_bound`.

    Keyword arguments by kind:

    * ``MFOLD``: ``m``, ``beta``
    * ``GENERAL_1FOLD``: ``lambda_``, ``gamma``, ``beta``
    * ``LAMBDA_1FOLD``: ``lambda_``, ``beta``
    * ``BASE``: ``beta``

    ``kind`` may also be given by value (``"MFold"``, ``"Base"``, ...).

    :raises hdet.RangeError: When an argument is missing, not applicable to the
       kind, or out of range.

    """
    try:
        kind = CorollaryKind(kind)
    except ValueError as exc:
        raise _exceptions.RangeError(
            f"Unknown corollary kind {kind!r}", "kind"
        ) from exc
    expected = _COROLLARY_ARGUMENTS[kind]
    unknown = sorted(set(arguments) - set(expected))
    if unknown:
        raise _exceptions.RangeError(
            f"Argument(s) not used by the {kind.value} corollary: {', '.join(unknown)}",
            unknown[0],
        )
    missing = [name for name in expected if name not in arguments]
    if missing:
        raise _exceptions.RangeError(
            f"The {kind.value} corollary needs: {', '.join(missing)}", missing[0]
        )
    params = _model.validate_params(
        arguments.get("m", 1),
        arguments.get("lambda_", 1),
        arguments.get("gamma", 0),
        arguments["beta"],
    )
    if kind is CorollaryKind.MFOLD:
        return _mfold_corollary(params.m, params.beta)
    if kind is CorollaryKind.GENERAL_1FOLD:
        return _general_1fold_corollary(params.lambda_, params.gamma, params.beta)
    if kind is CorollaryKind.LAMBDA_1FOLD:
        return _lambda_1fold_corollary(params.lambda_, params.beta)
    return _base_corollary(params.beta)
