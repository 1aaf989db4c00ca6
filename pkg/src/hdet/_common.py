"""
Common definitions shared by the bound, oracle and command-line modules.

"""

# SPDX-License-Identifier: BSD-3-Clause

import concurrent.futures
import os
import textwrap
import typing

from . import _exceptions

T = typing.TypeVar("T")
R = typing.TypeVar("R")

# Private constants.
# -------------------------------------------------------------------------------

_THREADS_ENV_VAR = "HDET_THREADS"

# Relative tolerance for "a <= b" comparisons in the oracles.
_VIOLATION_TOLERANCE = 1e-9

# Relative tolerance between two evaluation paths of the same closed form.
_PATH_TOLERANCE = 1e-10

# Relative tolerance between the two evaluation paths of K(rho).
_K_PATH_TOLERANCE = 1e-12

# Denominators of the rho_2 radical closer to zero than this (relative to the size of
# the omega products) are treated as degenerate.
_DEGENERATE_TOLERANCE = 1e-13

# Relative tolerance between a brute-force maximum and the closed-form bound.
_ORACLE_TOLERANCE = 1e-4

# Relative tolerance between the bound and the maximum of K over a fine rho grid.
_AUDIT_TOLERANCE = 1e-6

# Golden-section refinement limits.
_GOLDEN_MAX_ITERATIONS = 100
_GOLDEN_TOLERANCE = 1e-10

# Monte Carlo samples are drawn in chunks of this size, each from its own seeded
# substream.
_SAMPLE_CHUNK = 8192


# Public constants.
# -------------------------------------------------------------------------------

DEFAULT_RHO_STEPS = 401
DEFAULT_MU_STEPS = 101
DEFAULT_SAMPLES = 100000
DEFAULT_SEED = 42


# Private helper functions.
# -------------------------------------------------------------------------------


def _worker_count() -> int:
    """
    Discover and return the worker cap from the environment.

    :raises hdet.ConfigurationError: When ``HDET_THREADS`` is set to something other
       than a positive integer.

    """
    raw = os.getenv(_THREADS_ENV_VAR, None)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        raise _exceptions.ConfigurationError(
            textwrap.dedent(
                f"""
            Invalid worker count in the environment.

            {_THREADS_ENV_VAR} must be a positive integer.
            Found: {raw!r}
            """
            )
        )
    return workers


def _fan_out(
    function: typing.Callable[[T], R], items: typing.Sequence[T]
) -> typing.List[R]:
    """
    Apply ``function`` to every item on a thread pool and return the results in
    input order.

    """
    if len(items) <= 1:
        return [function(item) for item in items]
    workers = min(_worker_count(), len(items))
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items))


def _relative_gap(first: float, second: float) -> float:
    """
    Return ``|first - second|`` relative to the larger magnitude (absolute when
    both are tiny).

    """
    scale = max(abs(first), abs(second))
    if scale < 1e-12:
        return abs(first - second)
    return abs(first - second) / scale


def _check_agreement(
    quantity: str, first: float, second: float, tolerance: float
) -> None:
    """
    Raise :exc:`~hdet.ConsistencyError` when two evaluations of ``quantity``
    disagree by more than ``tolerance`` (relative).

    """
    gap = _relative_gap(float(first), float(second))
    if gap > tolerance:
        raise _exceptions.ConsistencyError(
            textwrap.dedent(
                f"""
            Independent evaluations of {quantity} disagree.

            First path: {float(first)!r}
            Second path: {float(second)!r}
            Relative gap: {gap!r} (tolerance {tolerance!r})
            """
            )
        )
