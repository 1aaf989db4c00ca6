"""
Independent numerical checks of the closed-form bound.

Nothing here trusts :mod:`hdet._bound` beyond the functions under test: the
brute-force search maximizes the dominating quadratic form directly, and the Monte
Carlo check rebuilds the Taylor coefficients from the Carathéodory representation
used in the proof and measures the Hankel functional itself.

"""

# SPDX-License-Identifier: BSD-3-Clause

import functools
import logging
import math
import typing
from fractions import Fraction

import numpy

from . import _bound, _common, _exceptions, _model, _series

logger = logging.getLogger(__name__)

PHI_RATIO = 2 / (1 + math.sqrt(5))


# Public classes.
# -------------------------------------------------------------------------------


class CaratheodorySample(typing.NamedTuple):
    """
    One point of the representation the proof parameterizes coefficients by:
    ``p_m = rho`` (real, in ``[0, 2]``) together with four points ``x``, ``y``,
    ``z``, ``w`` of the closed unit disk.

    Use :meth:`checked` to build a sample from untrusted input.

    """

    rho: float
    x: complex
    y: complex
    z: complex
    w: complex

    @classmethod
    def checked(
        cls,
        rho: _model.RealLike,
        x: complex = 0,
        y: complex = 0,
        z: complex = 0,
        w: complex = 0,
    ) -> "CaratheodorySample":
        """
        Validate and return a sample.

        :raises hdet.RangeError: When ``rho`` lies outside ``[0, 2]`` or any disk
           point has modulus greater than 1.

        """
        rho_value = float(_model.parse_real(rho, "rho"))
        if not 0 <= rho_value <= 2:
            raise _exceptions.RangeError(
                f"rho must lie in [0, 2], got {rho!r}", "rho"
            )
        points = {}
        for name, value in (("x", x), ("y", y), ("z", z), ("w", w)):
            point = complex(value)
            if abs(point) > 1 + _common._VIOLATION_TOLERANCE:
                raise _exceptions.RangeError(
                    f"|{name}| must be at most 1, got {value!r}", name
                )
            points[name] = point
        return cls(rho=rho_value, **points)


class PQDifferences(typing.NamedTuple):
    """
    The combinations of Carathéodory coefficients the bound is expressed in,
    together with the individual coefficients they recombine to.

    """

    p2m_minus_q2m: complex
    p3m_minus_q3m: complex
    p2m_plus_q2m: complex
    p2m: complex
    q2m: complex
    p3m: complex
    q3m: complex


class SearchResult(typing.NamedTuple):
    """
    The maximum of the dominating quadratic form over ``[0, 2] x [0, 1]^2`` and
    where it was found.

    """

    max_value: float
    arg_rho: float
    arg_mu1: float
    arg_mu2: float
    refined: bool


class VerifyReport(typing.NamedTuple):
    """
    Outcome of a Monte Carlo run.

    ``violations`` counts samples whose Hankel functional exceeds the bound;
    ``soundness_violations`` counts samples exceeding the quadratic form at
    ``(rho, |x|, |y|)``. Both are zero for a correct implementation.

    """

    params: _model.Params
    bound: float
    observed_max: float
    violations: int
    worst_ratio: float
    seed: int
    samples: int
    soundness_violations: int

    @property
    def passed(self) -> bool:
        """
        Whether the run found no violation of either kind.

        """
        return self.violations == 0 and self.soundness_violations == 0


class SignCheck(typing.NamedTuple):
    """
    One sign claim about the ``F`` coefficients, with the first ``rho`` at which it
    failed (``None`` when it held everywhere it was checked).

    """

    name: str
    passed: bool
    first_failure: typing.Optional[float]


class SignReport(typing.NamedTuple):
    """
    The sign claims checked on a ``rho`` grid.

    """

    params: _model.Params
    rho_steps: int
    checks: typing.Tuple[SignCheck, ...]

    @property
    def passed(self) -> bool:
        """
        Whether every claim held.

        """
        return all(check.passed for check in self.checks)


class LemmaReport(typing.NamedTuple):
    """
    The Carathéodory coefficients built from ``(h1, x, z)`` and the inequalities
    they must satisfy.

    ``printed_form_holds`` records the variant ``|h2 - h1^2/2| <= 2 - |h2|^2/2``,
    which is not a valid inequality (it fails at ``h1 = 0``, ``x = 1``); it is
    reported and never counted towards :attr:`passed`.

    """

    h1: float
    h2: complex
    h3: complex
    h2_bounded: bool
    h3_bounded: bool
    fekete_bounded: bool
    printed_form_holds: bool

    @property
    def passed(self) -> bool:
        """
        Whether the three valid inequalities hold.

        """
        return self.h2_bounded and self.h3_bounded and self.fekete_bounded


class ThresholdAudit(typing.NamedTuple):
    """
    Comparison of the two branch thresholds over a ``beta`` grid.

    * ``disagreements``: ``beta`` values where the thresholds pick different
      branches.
    * ``inconsistent``: those of the above where the branch picked by the
      alternative threshold is not the maximum of ``K``.
    * ``theorem_failures``: ``beta`` values where :func:`~hdet.theorem_bound` is
      not the maximum of ``K``.
    * ``missing_rho_two``: ``beta > tau`` with no critical point in ``(0, 2)``.

    """

    params: _model.Params
    result_one_threshold: float
    tau: float
    disagreements: typing.Tuple[Fraction, ...]
    inconsistent: typing.Tuple[Fraction, ...]
    theorem_failures: typing.Tuple[Fraction, ...]
    missing_rho_two: typing.Tuple[Fraction, ...]

    @property
    def consistent(self) -> bool:
        """
        Whether the bound as stated held across the grid.

        """
        return not self.theorem_failures and not self.missing_rho_two


class SweepRow(typing.NamedTuple):
    """
    One parameter point of a sweep. ``oracle_max`` and ``gap`` are ``None`` unless
    the sweep ran with ``check=True``.

    """

    params: _model.Params
    value: float
    branch: _bound.Branch
    tau: float
    rho_star: float
    oracle_max: typing.Optional[float]
    gap: typing.Optional[float]

    @property
    def within_tolerance(self) -> bool:
        """
        Whether the brute-force maximum (if any) agrees with the bound.

        """
        return self.gap is None or self.gap <= _common._ORACLE_TOLERANCE


# Private helpers.
# -------------------------------------------------------------------------------


class _SampleConstants(typing.NamedTuple):
    """
    Float constants turning a sample into coefficients, and the four constants of
    the expanded functional.

    """

    a1: float
    a2_square: float
    a2_difference: float
    a3_mixed: float
    a3_difference: float
    quartic: float
    mixed: float
    linear: float
    square: float


@functools.lru_cache(maxsize=512)
def _sample_constants(params: _model.Params) -> _SampleConstants:
    """
    Compute :class:`_SampleConstants` exactly, then round once.

    """
    m = params.m
    t = params.one_minus_beta
    u = m * params.lambda_
    g1, g2, g3 = params.gamma + 1, params.gamma + 2, params.gamma + 3
    a = g1 * (u + 1)
    b = g1 * g2 * (2 * u + 1)
    c = g1 * g2 * g3 * (3 * u + 1)
    exact = (
        t / a,
        (m + 1) * t**2 / (2 * a**2),
        t / b,
        (3 * m + 2) * t**2 / (2 * g1**2 * g2 * (u + 1) * (2 * u + 1)),
        3 * t / c,
        (m + 1) ** 2 * t**4 / (4 * a**4),
        m * t**3 / (2 * g1**3 * g2 * (u + 1) ** 2 * (2 * u + 1)),
        3 * t**2 / (g1 * (u + 1) * c),
        t**2 / b**2,
    )
    return _SampleConstants(*(float(value) for value in exact))


def _differences(
    rho: typing.Any, x: typing.Any, y: typing.Any, z: typing.Any, w: typing.Any
) -> typing.Tuple[typing.Any, typing.Any, typing.Any]:
    """
    ``p2m - q2m``, ``p3m - q3m`` and ``p2m + q2m`` for scalars or arrays.

    """
    s = 4 - rho * rho
    d2 = s / 2 * (x - y)
    d3 = (
        rho**3 / 2
        + rho * s / 2 * (x + y)
        - rho * s / 4 * (x * x + y * y)
        + s / 2 * ((1 - abs(x) ** 2) * z - (1 - abs(y) ** 2) * w)
    )
    total2 = rho * rho + s / 2 * (x + y)
    return d2, d3, total2


def _coefficients(
    constants: _SampleConstants, rho: typing.Any, d2: typing.Any, d3: typing.Any
) -> typing.Tuple[typing.Any, typing.Any, typing.Any]:
    """
    ``a_{m+1}``, ``a_{2m+1}``, ``a_{3m+1}`` from ``rho`` and the differences.

    """
    a1 = constants.a1 * rho
    a2 = constants.a2_square * rho * rho + constants.a2_difference * d2
    a3 = constants.a3_mixed * rho * d2 + constants.a3_difference * d3
    return a1, a2, a3


def _functional(
    constants: _SampleConstants, rho: typing.Any, d2: typing.Any, d3: typing.Any
) -> typing.Any:
    """
    ``|a_{m+1} a_{3m+1} - a_{2m+1}^2|`` for scalars or arrays, evaluated from the
    coefficients and from the expanded four-term form.

    :raises hdet.ConsistencyError: When the two evaluations disagree.

    """
    a1, a2, a3 = _coefficients(constants, rho, d2, d3)
    direct = a1 * a3 - a2 * a2
    terms = (
        -constants.quartic * rho**4,
        constants.mixed * rho * rho * d2,
        constants.linear * rho * d3,
        -constants.square * d2 * d2,
    )
    expanded = terms[0] + terms[1] + terms[2] + terms[3]
    scale = abs(a1 * a3) + abs(a2) ** 2 + sum(abs(term) for term in terms)
    gap = numpy.asarray(abs(direct - expanded))
    limit = _common._PATH_TOLERANCE * numpy.asarray(scale)
    if numpy.any(gap > limit):
        worst = int(numpy.argmax(gap - limit))
        raise _exceptions.ConsistencyError(
            f"The Hankel functional disagrees with its expanded form: "
            f"{complex(numpy.ravel(direct)[worst])!r} against "
            f"{complex(numpy.ravel(expanded)[worst])!r}"
        )
    return abs(direct)


def _disk_points(rng: numpy.random.Generator, size: int) -> numpy.ndarray:
    """
    Points uniform on the closed unit disk.

    """
    radius = numpy.sqrt(rng.random(size))
    angle = rng.uniform(0.0, 2 * math.pi, size)
    return radius * numpy.exp(1j * angle)


def _surface_arrays(params: _model.Params, rho, mu1, mu2) -> numpy.ndarray:
    """
    The quadratic form over broadcastable arrays.

    """
    f1, f2, f3, f4 = _bound._f_coeff_arrays(params, rho)
    total = mu1 + mu2
    return f1 + f2 * total + f3 * (mu1 * mu1 + mu2 * mu2) + f4 * total * total


def _golden_max(
    function: typing.Callable[[float], float], lower: float, upper: float
) -> typing.Tuple[float, float]:
    """
    Maximize ``function`` on ``[lower, upper]`` by golden-section search, returning
    ``(argument, value)``. The endpoints are compared too, since the form often
    peaks on the boundary of the box.

    """
    x1 = upper - PHI_RATIO * (upper - lower)
    x2 = lower + PHI_RATIO * (upper - lower)
    f1 = function(x1)
    f2 = function(x2)
    candidates = [(lower, function(lower)), (upper, function(upper))]
    low, high = lower, upper
    iteration = 0
    while (
        iteration < _common._GOLDEN_MAX_ITERATIONS
        and high - low > _common._GOLDEN_TOLERANCE
    ):
        if f2 < f1:
            high, x2, f2 = x2, x1, f1
            x1 = high - PHI_RATIO * (high - low)
            f1 = function(x1)
        else:
            low, x1, f1 = x1, x2, f2
            x2 = low + PHI_RATIO * (high - low)
            f2 = function(x2)
        iteration += 1
    candidates.extend([(x1, f1), (x2, f2)])
    return max(candidates, key=lambda candidate: candidate[1])


# Public functions.
# -------------------------------------------------------------------------------


def brute_force_max(
    params: _model.Params,
    rho_steps: int = _common.DEFAULT_RHO_STEPS,
    mu_steps: int = _common.DEFAULT_MU_STEPS,
    refine: bool = True,
) -> SearchResult:
    """
    Maximize the quadratic form over ``[0, 2] x [0, 1]^2`` by exhaustive grid
    evaluation, optionally followed by coordinate-wise golden-section refinement
    around the best grid point.

    :raises hdet.RangeError: When either step count is below 3.

    """
    for name, steps in (("rho_steps", rho_steps), ("mu_steps", mu_steps)):
        if steps < 3:
            raise _exceptions.RangeError(
                f"{name} must be at least 3, got {steps}", name
            )
    rho = numpy.linspace(0.0, 2.0, rho_steps)
    mu = numpy.linspace(0.0, 1.0, mu_steps)
    mu1, mu2 = numpy.meshgrid(mu, mu, indexing="ij")
    best = (-math.inf, 0.0, 0.0, 0.0)
    # Bound memory: at most this many rho rows of the cube at once.
    rows = max(1, 2**21 // (mu_steps * mu_steps))
    for start in range(0, rho_steps, rows):
        block = rho[start : start + rows, None, None]
        values = _surface_arrays(params, block, mu1[None], mu2[None])
        index = numpy.unravel_index(int(numpy.argmax(values)), values.shape)
        if values[index] > best[0]:
            best = (
                float(values[index]),
                float(rho[start + index[0]]),
                float(mu[index[1]]),
                float(mu[index[2]]),
            )
    if not refine:
        return SearchResult(*best, refined=False)

    point = list(best[1:])
    value = best[0]
    steps = (2.0 / (rho_steps - 1), 1.0 / (mu_steps - 1), 1.0 / (mu_steps - 1))
    uppers = (2.0, 1.0, 1.0)
    for _ in range(2):
        for axis in range(3):

            def along(coordinate: float, axis: int = axis) -> float:
                trial = list(point)
                trial[axis] = coordinate
                return float(_bound.f_surface(params, *trial))

            lower = max(0.0, point[axis] - steps[axis])
            upper = min(uppers[axis], point[axis] + steps[axis])
            argument, candidate = _golden_max(along, lower, upper)
            if candidate > value:
                point[axis], value = argument, candidate
    return SearchResult(value, point[0], point[1], point[2], refined=True)


def reconstruct_pq(sample: CaratheodorySample) -> PQDifferences:
    """
    Rebuild the Carathéodory coefficients of ``p`` (with ``p_m = rho`` and parameters
    ``x``, ``z``) and ``q`` (with ``q_m = -rho`` and parameters ``y``, ``w``) and the
    combinations of them the bound uses.

    """
    rho = float(sample.rho)
    d2, d3, total2 = _differences(rho, sample.x, sample.y, sample.z, sample.w)
    s = 4 - rho * rho
    x, y = sample.x, sample.y
    p3m = (
        rho**3
        + 2 * s * rho * x
        - rho * s * x * x
        + 2 * s * (1 - abs(x) ** 2) * sample.z
    ) / 4
    q3m = (
        -(rho**3)
        - 2 * s * rho * y
        + rho * s * y * y
        + 2 * s * (1 - abs(y) ** 2) * sample.w
    ) / 4
    return PQDifferences(
        p2m_minus_q2m=complex(d2),
        p3m_minus_q3m=complex(d3),
        p2m_plus_q2m=complex(total2),
        p2m=complex((total2 + d2) / 2),
        q2m=complex((total2 - d2) / 2),
        p3m=complex(p3m),
        q3m=complex(q3m),
    )


def coefficients_from_sample(
    params: _model.Params, sample: CaratheodorySample
) -> _series.CoefficientTriple:
    """
    Return ``(a_{m+1}, a_{2m+1}, a_{3m+1})`` (as complex numbers) for the function
    whose Carathéodory data is ``sample``.

    """
    rho = float(sample.rho)
    pq = reconstruct_pq(sample)
    a1, a2, a3 = _coefficients(
        _sample_constants(params), rho, pq.p2m_minus_q2m, pq.p3m_minus_q3m
    )
    return _series.CoefficientTriple(complex(a1), complex(a2), complex(a3))


def hankel_functional(params: _model.Params, sample: CaratheodorySample) -> float:
    """
    Return ``|a_{m+1} a_{3m+1} - a_{2m+1}^2|`` for ``sample``.

    The value is computed from the coefficients and again from the four-term
    expansion in ``rho`` and the coefficient differences.

    :raises hdet.ConsistencyError: When the two evaluations disagree.

    """
    rho = float(sample.rho)
    d2, d3, _ = _differences(rho, sample.x, sample.y, sample.z, sample.w)
    return float(_functional(_sample_constants(params), rho, d2, d3))


class _ChunkSummary(typing.NamedTuple):
    """
    Per-chunk Monte Carlo results, merged in chunk order.

    """

    observed_max: float
    worst_ratio: float
    violations: int
    soundness_violations: int


def monte_carlo_verify(
    params: _model.Params,
    n: int = _common.DEFAULT_SAMPLES,
    seed: int = _common.DEFAULT_SEED,
) -> VerifyReport:
    """
    Draw ``n`` Carathéodory samples and check the Hankel functional of each against
    the bound, and against the quadratic form at ``(rho, |x|, |y|)``.

    ``rho`` is uniform on ``[0, 2]``; ``x``, ``y``, ``z``, ``w`` are uniform on the
    closed unit disk. Samples are drawn in fixed-size chunks, chunk ``i`` from the
    ``i``-th child of ``numpy.random.SeedSequence(seed)``, so the report depends
    only on ``(params, n, seed)`` and never on the number of worker threads.

    :raises hdet.RangeError: When ``n`` is less than 1.

    :raises hdet.ConsistencyError: When a sample's functional disagrees with its
       expanded form.

    """
    if n < 1:
        raise _exceptions.RangeError(f"n must be at least 1, got {n}", "n")
    bound = _bound.theorem_bound(params).value
    constants = _sample_constants(params)
    chunk_count = -(-n // _common._SAMPLE_CHUNK)
    children = numpy.random.SeedSequence(seed).spawn(chunk_count)
    tolerance = _common._VIOLATION_TOLERANCE

    def run_chunk(index: int) -> _ChunkSummary:
        size = min(_common._SAMPLE_CHUNK, n - index * _common._SAMPLE_CHUNK)
        rng = numpy.random.default_rng(children[index])
        rho = rng.uniform(0.0, 2.0, size)
        x, y, z, w = (_disk_points(rng, size) for _ in range(4))
        d2, d3, _ = _differences(rho, x, y, z, w)
        values = _functional(constants, rho, d2, d3)
        surface = _surface_arrays(params, rho, numpy.abs(x), numpy.abs(y))
        summary = _ChunkSummary(
            observed_max=float(values.max()),
            worst_ratio=float(values.max() / bound),
            violations=int(numpy.count_nonzero(values > bound * (1 + tolerance))),
            soundness_violations=int(
                numpy.count_nonzero(
                    values > surface * (1 + tolerance) + tolerance * bound
                )
            ),
        )
        logger.debug(
            "Monte Carlo chunk %d/%d for %s: max %r",
            index + 1,
            chunk_count,
            params,
            summary.observed_max,
        )
        return summary

    summaries = _common._fan_out(run_chunk, range(chunk_count))
    report = VerifyReport(
        params=params,
        bound=bound,
        observed_max=max(summary.observed_max for summary in summaries),
        violations=sum(summary.violations for summary in summaries),
        worst_ratio=max(summary.worst_ratio for summary in summaries),
        seed=seed,
        samples=n,
        soundness_violations=sum(summary.soundness_violations for summary in summaries),
    )
    if not report.passed:
        logger.warning("Monte Carlo violations for %s: %r", params, report)
    return report


def sign_invariant_check(
    params: _model.Params, rho_steps: int = _common.DEFAULT_RHO_STEPS
) -> SignReport:
    """
    Check the sign claims the proof relies on at every point of a uniform ``rho``
    grid on ``[0, 2]``:

    * ``F1 >= 0``, ``F2 >= 0``, ``F3 <= 0``, ``F4 >= 0`` and ``K >= 0``
      everywhere;
    * ``F3 + 2 F4 > 0`` and ``4 F3 (F3 + 2 F4) < 0`` on interior points only;
    * ``F2 + 2 (F3 + F4) >= 0`` everywhere.

    Non-strict claims allow a relative slack of ``1e-9`` of ``max K``.

    :raises hdet.RangeError: When ``rho_steps`` is below 3.

    """
    if rho_steps < 3:
        raise _exceptions.RangeError(
            f"rho_steps must be at least 3, got {rho_steps}", "rho_steps"
        )
    rho = numpy.linspace(0.0, 2.0, rho_steps)
    f1, f2, f3, f4 = _bound._f_coeff_arrays(params, rho)
    k = f1 + 2 * (f2 + f3) + 4 * f4
    slack = _common._VIOLATION_TOLERANCE * float(numpy.abs(k).max())
    interior = slice(1, -1)
    claims = (
        ("F1 >= 0", rho, f1 >= -slack),
        ("F2 >= 0", rho, f2 >= -slack),
        ("F3 <= 0", rho, f3 <= slack),
        ("F4 >= 0", rho, f4 >= -slack),
        ("F3 + 2F4 > 0", rho[interior], (f3 + 2 * f4)[interior] > 0),
        ("4F3(F3 + 2F4) < 0", rho[interior], (4 * f3 * (f3 + 2 * f4))[interior] < 0),
        ("F2 + 2(F3 + F4) >= 0", rho, f2 + 2 * (f3 + f4) >= -slack),
        ("K >= 0", rho, k >= -slack),
    )
    checks = []
    for name, points, holds in claims:
        failures = numpy.flatnonzero(~holds)
        first = float(points[failures[0]]) if failures.size else None
        checks.append(SignCheck(name=name, passed=first is None, first_failure=first))
    return SignReport(params=params, rho_steps=rho_steps, checks=tuple(checks))


def lemma_identity_check(h1: _model.RealLike, x: complex, z: complex) -> LemmaReport:
    """
    Build ``h2`` and ``h3`` of a Carathéodory function from ``h1`` and the
    parameters ``x``, ``z``:

    .. math::

       2 h_2 &= h_1^2 + x (4 - h_1^2) \\\\
       4 h_3 &= h_1^3 + 2 (4 - h_1^2) h_1 x - (4 - h_1^2) h_1 x^2
                + 2 (4 - h_1^2)(1 - |x|^2) z

    and check ``|h2| <= 2``, ``|h3| <= 2`` and ``|h2 - h1^2/2| <= 2 - h1^2/2``.
    Failures are reported, not raised.

    :raises hdet.RangeError: When ``h1`` lies outside ``[0, 2]`` or ``|x|`` or
       ``|z|`` exceeds 1.

    """
    h1_value = float(_model.parse_real(h1, "h1"))
    if not 0 <= h1_value <= 2:
        raise _exceptions.RangeError(f"h1 must lie in [0, 2], got {h1!r}", "h1")
    sample = CaratheodorySample.checked(h1_value, x=x, z=z)
    x, z = sample.x, sample.z
    s = 4 - h1_value**2
    h2 = (h1_value**2 + x * s) / 2
    h3 = (
        h1_value**3
        + 2 * s * h1_value * x
        - s * h1_value * x * x
        + 2 * s * (1 - abs(x) ** 2) * z
    ) / 4
    slack = 2 * _common._VIOLATION_TOLERANCE
    distance = abs(h2 - h1_value**2 / 2)
    return LemmaReport(
        h1=h1_value,
        h2=complex(h2),
        h3=complex(h3),
        h2_bounded=abs(h2) <= 2 + slack,
        h3_bounded=abs(h3) <= 2 + slack,
        fekete_bounded=distance <= 2 - h1_value**2 / 2 + slack,
        printed_form_holds=distance <= 2 - abs(h2) ** 2 / 2 + slack,
    )


def threshold_audit(
    params: _model.Params, beta_steps: int = 100, rho_steps: int = 4001
) -> ThresholdAudit:
    """
    Compare the branch threshold ``tau`` with the alternative threshold of
    :func:`~hdet.result_one_threshold` for ``beta = i / beta_steps``, ``i = 0 ..
    beta_steps - 1``, against the maximum of ``K`` over a fine ``rho`` grid.

    ``params.beta`` is ignored.

    :raises hdet.RangeError: When ``beta_steps`` is below 1 or ``rho_steps`` below 3.

    """
    if beta_steps < 1:
        raise _exceptions.RangeError(
            f"beta_steps must be at least 1, got {beta_steps}", "beta_steps"
        )
    if rho_steps < 3:
        raise _exceptions.RangeError(
            f"rho_steps must be at least 3, got {rho_steps}", "rho_steps"
        )
    rho = numpy.linspace(0.0, 2.0, rho_steps)
    alternative = _bound.result_one_threshold(params)
    threshold = _bound.tau(params)

    def attained(value: typing.Optional[float], grid_max: float) -> bool:
        if value is None:
            return False
        return (
            grid_max * (1 - _common._VIOLATION_TOLERANCE)
            <= value
            <= grid_max * (1 + _common._AUDIT_TOLERANCE)
        )

    disagreements, inconsistent, failures, missing = [], [], [], []
    for step in range(beta_steps):
        beta = Fraction(step, beta_steps)
        point = params.beta_replaced(beta)
        grid_max = float(_bound._k_arrays(point, rho).max())
        first, second = _bound.branch_values(point)
        try:
            result = _bound.theorem_bound(point)
        except _exceptions.ConsistencyError:
            failures.append(beta)
            logger.warning("Bound inconsistent at beta = %s for %s", beta, params)
            continue
        if not attained(result.value, grid_max):
            failures.append(beta)
        if result.branch is _bound.Branch.AT_RHO_STAR and _bound.rho_two(point) is None:
            missing.append(beta)
        alternative_first = beta <= alternative
        if alternative_first != (result.branch is _bound.Branch.AT_RHO_TWO):
            disagreements.append(beta)
            if not attained(first if alternative_first else second, grid_max):
                inconsistent.append(beta)
    logger.debug(
        "Threshold audit for %s: %d disagreements, %d inconsistent",
        params,
        len(disagreements),
        len(inconsistent),
    )
    return ThresholdAudit(
        params=params,
        result_one_threshold=alternative,
        tau=threshold,
        disagreements=tuple(disagreements),
        inconsistent=tuple(inconsistent),
        theorem_failures=tuple(failures),
        missing_rho_two=tuple(missing),
    )


def sweep(
    params_list: typing.Sequence[_model.Params],
    check: bool = False,
    rho_steps: int = _common.DEFAULT_RHO_STEPS,
    mu_steps: int = _common.DEFAULT_MU_STEPS,
) -> typing.List[SweepRow]:
    """
    Evaluate the bound at every parameter point, in input order. With ``check``,
    also run :func:`brute_force_max` (refined) and report its relative gap to the
    bound.

    Points are evaluated on a thread pool capped by ``HDET_THREADS``.

    :raises hdet.ConfigurationError: When ``HDET_THREADS`` is invalid.

    """

    def evaluate(params: _model.Params) -> SweepRow:
        result = _bound.theorem_bound(params)
        oracle_max = gap = None
        if check:
            oracle_max = brute_force_max(
                params, rho_steps, mu_steps, refine=True
            ).max_value
            gap = _common._relative_gap(oracle_max, result.value)
            logger.debug(
                "Sweep point %s: bound %r, oracle %r", params, result.value, oracle_max
            )
        return SweepRow(
            params=params,
            value=result.value,
            branch=result.branch,
            tau=result.tau,
            rho_star=result.rho_star,
            oracle_max=oracle_max,
            gap=gap,
        )

    return _common._fan_out(evaluate, list(params_list))
