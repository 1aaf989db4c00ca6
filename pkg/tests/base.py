"""
Base test class and utilities.

"""

# SPDX-License-Identifier: BSD-3-Clause

import itertools
import typing
import unittest
from fractions import Fraction

import hdet
from hdet import _common


class HdetTests(unittest.TestCase):
    """
    Base class for hdet tests, defining parameter sets and comparison helpers.

    """

    # The 27 (m, lambda, gamma) combinations used throughout the verification
    # suite.
    sweep_triples = tuple(
        itertools.product(
            (1, 2, 3), (Fraction(1), Fraction(3, 2), Fraction(2)), (0, 1, 2)
        )
    )

    # Four representative beta values: two below the base threshold, two above.
    sweep_betas = (Fraction(0), Fraction(1, 5), Fraction(1, 2), Fraction(9, 10))

    def params(
        self,
        m: hdet._model.RealLike = 1,
        lambda_: hdet._model.RealLike = 1,
        gamma: hdet._model.RealLike = 0,
        beta: hdet._model.RealLike = 0,
    ) -> hdet.Params:
        """
        Return validated parameters, defaulting to the base case ``m = lambda = 1``,
        ``gamma = 0``, ``beta = 0``.

        """
        return hdet.validate_params(m, lambda_, gamma, beta)

    def sweep_params(
        self, betas: typing.Optional[typing.Iterable[Fraction]] = None
    ) -> typing.List[hdet.Params]:
        """
        Return the sweep set crossed with ``betas`` (default: :attr:`sweep_betas`).

        """
        betas = self.sweep_betas if betas is None else tuple(betas)
        return [
            self.params(m, lambda_, gamma, beta)
            for (m, lambda_, gamma), beta in itertools.product(
                self.sweep_triples, betas
            )
        ]

    def assertRelativelyClose(  # pylint: disable=invalid-name
        self, first: float, second: float, tolerance: float, msg: str = ""
    ) -> None:
        """
        Assert that ``first`` and ``second`` agree within ``tolerance`` relative to
        the larger magnitude.

        """
        gap = _common._relative_gap(float(first), float(second))
        assert gap <= tolerance, (
            f"{first!r} and {second!r} differ by {gap!r} relative "
            f"(tolerance {tolerance!r}). {msg}"
        )
