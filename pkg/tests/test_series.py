"""
Tests for m-fold series, series reversion and the coefficient functionals.

"""

# SPDX-License-Identifier: BSD-3-Clause

from fractions import Fraction

import numpy

import hdet

from .base import HdetTests


class MFoldSeriesTests(HdetTests):
    """
    Test the truncated m-fold series type.

    """

    def test_from_coefficients(self):
        """
        Construction checks m and rejects an empty series.

        """
        series = hdet.MFoldSeries.from_coefficients(2, [1, 2, 3])
        assert series.depth == 3
        assert series.coefficient(2) == 2
        with self.assertRaises(hdet.RangeError):
            hdet.MFoldSeries.from_coefficients(0, [1])
        with self.assertRaises(hdet.TruncationError):
            hdet.MFoldSeries.from_coefficients(1, [])

    def test_coefficient_beyond_depth(self):
        """
        Asking for a coefficient past the truncation depth raises TruncationError.

        """
        series = hdet.MFoldSeries.from_coefficients(1, [1])
        with self.assertRaises(hdet.TruncationError):
            series.coefficient(2)

    def test_dense(self):
        """
        The dense form places a_{mk+1} at power mk+1 and a_1 = 1 at power 1.

        """
        series = hdet.MFoldSeries.from_coefficients(2, [5, 6, 7])
        assert series.dense() == [0, 1, 0, 5, 0, 6, 0, 7]
        assert series.dense(4) == [0, 1, 0, 5, 0]


class RuscheweyhTests(HdetTests):
    """
    Test the Ruscheweyh weights and operator.

    """

    def test_weights(self):
        """
        Weights match hand-computed gamma-function ratios.

        """
        for k in range(1, 10):
            with self.subTest(k=k):
                assert hdet.ruscheweyh_weight(0, k) == 1
        assert hdet.ruscheweyh_weight(1, 1) == 2
        assert hdet.ruscheweyh_weight(2, 2) == 6
        assert hdet.ruscheweyh_weight(2, 1) == 3

    def test_weight_recurrence(self):
        """
        W(gamma, k+1) = W(gamma, k) (gamma+k+1)/(k+1), exactly.

        """
        for gamma in range(21):
            for k in range(1, 51):
                assert hdet.ruscheweyh_weight(gamma, k + 1) == hdet.ruscheweyh_weight(
                    gamma, k
                ) * Fraction(gamma + k + 1, k + 1)

    def test_weight_out_of_range(self):
        """
        Negative gamma or non-positive k raises RangeError.

        """
        with self.assertRaises(hdet.RangeError):
            hdet.ruscheweyh_weight(-1, 1)
        with self.assertRaises(hdet.RangeError):
            hdet.ruscheweyh_weight(0, 0)

    def test_apply(self):
        """
        Applying the operator scales each stored coefficient by its weight.

        """
        series = hdet.MFoldSeries.from_coefficients(1, [1, 1, 1])
        assert hdet.apply_ruscheweyh(series, 0) == series
        assert hdet.apply_ruscheweyh(series, 1).coeffs[0] == 2
        series = hdet.MFoldSeries.from_coefficients(2, [1])
        assert hdet.apply_ruscheweyh(series, 2).coeffs == (3,)

    def test_operator_lhs_coeffs(self):
        """
        The class operator's leading coefficients match the prefactors.

        """
        for m, coeffs, expected in (
            (1, [1, 1, 1], (2, 3, 4)),
            (2, [1, 1, 1], (3, 5, 7)),
            (3, [0, 0, 0], (0, 0, 0)),
        ):
            with self.subTest(m=m):
                series = hdet.MFoldSeries.from_coefficients(m, coeffs)
                assert hdet.operator_lhs_coeffs(series, 1, 0) == expected

    def test_operator_lhs_general(self):
        """
        With gamma > 0 and lambda != 1 the prefactors (gamma+1)(m lambda+1), ...
        appear.

        """
        series = hdet.MFoldSeries.from_coefficients(2, [1, 1, 1, 1])
        lhs = hdet.operator_lhs_series(series, "3/2", 1)
        assert lhs == [2 * 4, 3 * 7, 4 * 10, 5 * 13]
        assert hdet.operator_lhs_coeffs(series, "3/2", 1) == tuple(lhs[:3])

    def test_operator_lhs_truncated(self):
        """
        A series shorter than depth 3 raises TruncationError.

        """
        series = hdet.MFoldSeries.from_coefficients(1, [1, 1])
        with self.assertRaises(hdet.TruncationError):
            hdet.operator_lhs_coeffs(series, 1, 0)


class InversionTests(HdetTests):
    """
    Test reversion of m-fold series.

    """

    def test_identity(self):
        """
        The inverse of the identity is the identity.

        """
        series = hdet.MFoldSeries.from_coefficients(2, [0, 0, 0])
        assert hdet.invert_series(series) == (0, 0, 0)

    def test_log_series(self):
        """
        -log(1-z) = z + z^2/2 + z^3/3 + ... inverts to 1 - e^{-w}.

        """
        series = hdet.MFoldSeries.from_coefficients(
            1, [Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]
        )
        assert hdet.invert_series(series) == (
            Fraction(-1, 2),
            Fraction(1, 6),
            Fraction(-1, 24),
        )

    def test_one_fold_closed_form(self):
        """
        At m = 1 the inverse coefficients are (-a2, 2a2^2 - a3, -(5a2^3 - 5a2a3 + a4)).

        """
        rng = numpy.random.default_rng(7)
        for _ in range(100):
            a2, a3, a4 = (
                Fraction(int(value), 97) for value in rng.integers(-200, 200, 3)
            )
            series = hdet.MFoldSeries.from_coefficients(1, [a2, a3, a4])
            assert hdet.invert_series(series) == (
                -a2,
                2 * a2**2 - a3,
                -(5 * a2**3 - 5 * a2 * a3 + a4),
            )

    def test_truncated(self):
        """
        Inverting a series of depth below 3 raises TruncationError.

        """
        with self.assertRaises(hdet.TruncationError):
            hdet.invert_series(hdet.MFoldSeries.from_coefficients(1, [1, 2]))

    def test_round_trip_exact(self):
        """
        Composing f with its truncated inverse is the identity through order 3m+1,
        exactly for rational coefficients.

        """
        rng = numpy.random.default_rng(11)
        for m in (1, 2, 3):
            order = 3 * m + 1
            expected = [0, 1] + [0] * (order - 1)
            for _ in range(100):
                coeffs = [
                    Fraction(int(value), 53) for value in rng.integers(-60, 60, 3)
                ]
                series = hdet.MFoldSeries.from_coefficients(m, coeffs)
                inverse = hdet.truncated_inverse(series)
                with self.subTest(m=m, coeffs=coeffs):
                    assert (
                        hdet.compose_truncated(series.dense(), inverse.dense(), order)
                        == expected
                    )
                    assert (
                        hdet.compose_truncated(inverse.dense(), series.dense(), order)
                        == expected
                    )

    def test_round_trip_complex(self):
        """
        Composing f with its truncated inverse is the identity through order 3m+1 to
        within 1e-12 for complex coefficients.

        """
        rng = numpy.random.default_rng(13)
        for m in (1, 2, 3):
            order = 3 * m + 1
            for _ in range(100):
                values = rng.uniform(-0.5, 0.5, 3) + 1j * rng.uniform(-0.5, 0.5, 3)
                series = hdet.MFoldSeries.from_coefficients(
                    m, [complex(value) for value in values]
                )
                inverse = hdet.truncated_inverse(series)
                composed = hdet.compose_truncated(
                    series.dense(), inverse.dense(), order
                )
                assert abs(composed[1] - 1) < 1e-12
                for power in range(2, order + 1):
                    assert abs(composed[power]) < 1e-12

    def test_compose_requires_vanishing_inner(self):
        """
        The inner series of a composition must have no constant term.

        """
        with self.assertRaises(hdet.RangeError):
            hdet.compose_truncated([0, 1], [1, 1], 2)


class FunctionalTests(HdetTests):
    """
    Test the Hankel determinant and Fekete-Szegő functional.

    """

    def test_hankel_examples(self):
        """
        Hankel determinants match hand-computed values.

        """
        assert hdet.hankel_determinant([1, 0, 0], 2, 1) == 0
        assert hdet.hankel_determinant([1, 2, 1, 3], 2, 2) == 5
        assert hdet.hankel_determinant([1, 2, 7], 2, 1) == 7 - 4

    def test_hankel_symbolic(self):
        """
        H_2(2) = a2 a4 - a3^2 and H_2(1) = a3 - a2^2 for random rationals.

        """
        rng = numpy.random.default_rng(3)
        for _ in range(50):
            a2, a3, a4 = (Fraction(int(v), 7) for v in rng.integers(-30, 30, 3))
            assert hdet.hankel_determinant([1, a2, a3, a4], 2, 2) == a2 * a4 - a3**2
            assert hdet.hankel_determinant([1, a2, a3], 2, 1) == a3 - a2**2
            assert hdet.hankel_determinant([1, a2, a3], 2, 1) == hdet.fekete_szego(
                a2, a3, 1
            )

    def test_hankel_single_entry(self):
        """
        H_1(n) is a_n.

        """
        coeffs = [1, 4, 9, 16, 25]
        for n in range(1, 6):
            assert hdet.hankel_determinant(coeffs, 1, n) == coeffs[n - 1]

    def test_hankel_three_by_three(self):
        """
        A 3x3 Hankel determinant is computed exactly.

        """
        # Rows (a1, a2, a3), (a2, a3, a4), (a3, a4, a5).
        assert hdet.hankel_determinant([1, 2, 3, 4, 6], 3, 1) == -1

    def test_hankel_exact_hilbert(self):
        """
        With ``a_k = 1/k`` the matrix ``H_q(1)`` is the Hilbert matrix, whose
        determinant is known exactly.

        """
        coeffs = [Fraction(1, k) for k in range(1, 8)]
        for q, expected in (
            (2, Fraction(1, 12)),
            (3, Fraction(1, 2160)),
            (4, Fraction(1, 6048000)),
        ):
            with self.subTest(q=q):
                determinant = hdet.hankel_determinant(coeffs, q, 1)
                assert isinstance(determinant, Fraction)
                assert determinant == expected

    def test_hankel_floating_point(self):
        """
        Float and complex coefficients give float and complex results.

        """
        determinant = hdet.hankel_determinant([1.0, 2.0, 1.0, 3.0], 2, 2)
        assert isinstance(determinant, float)
        assert abs(determinant - 5) < 1e-12
        determinant = hdet.hankel_determinant([1, 1j, 2], 2, 1)
        assert isinstance(determinant, complex)
        assert abs(determinant - 3) < 1e-12
        determinant = hdet.hankel_determinant([1, Fraction(1, 2), 0.25], 2, 1)
        assert isinstance(determinant, float)
        assert abs(determinant) < 1e-15

    def test_hankel_missing(self):
        """
        Missing coefficients raise MissingCoefficientError, an IndexError.

        """
        with self.assertRaises(hdet.MissingCoefficientError):
            hdet.hankel_determinant([1, 2, 3], 2, 2)
        with self.assertRaises(IndexError):
            hdet.hankel_determinant([1], 2, 1)

    def test_hankel_bad_order(self):
        """
        Non-positive q or n raises RangeError.

        """
        with self.assertRaises(hdet.RangeError):
            hdet.hankel_determinant([1, 2, 3], 0, 1)
        with self.assertRaises(hdet.RangeError):
            hdet.hankel_determinant([1, 2, 3], 1, 0)

    def test_fekete_szego(self):
        """
        The functional is a3 - mu a2^2.

        """
        assert hdet.fekete_szego(1, 2, 0) == 2
        assert hdet.fekete_szego(2, 3, 0.5) == 1


class CaratheodoryCoefficientTests(HdetTests):
    """
    Test recovery of the Carathéodory coefficients from a coefficient triple.

    """

    def test_pq_from_coefficients(self):
        """
        At (1, 1, 0, 0) the operator coefficients of f and f^{-1} are the p and q
        coefficients, with q_m = -p_m.

        """
        params = self.params()
        triple = hdet.CoefficientTriple(Fraction(1), Fraction(1), Fraction(1, 2))
        pq = hdet.pq_from_coefficients(params, triple)
        assert pq.p_m == 2
        assert pq.q_m == -2
        assert pq.p_2m == 3
        # Inverse triple is (-1, 1, -1/2).
        assert pq.q_2m == 3
        assert pq.p_3m == 2
        assert pq.q_3m == -2
