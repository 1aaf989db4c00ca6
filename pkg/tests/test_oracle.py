"""
Tests for the numerical checks of the bound.

"""

# SPDX-License-Identifier: BSD-3-Clause

import os
from fractions import Fraction
from unittest import mock

import numpy

import hdet

from .base import HdetTests


def disk_point(rng: numpy.random.Generator) -> complex:
    """
    Return a point drawn uniformly from the closed unit disk.

    """
    return complex(numpy.sqrt(rng.random()) * numpy.exp(2j * numpy.pi * rng.random()))


class CaratheodorySampleTests(HdetTests):
    """
    Test construction and reconstruction of Carathéodory samples.

    """

    def test_checked(self):
        """
        Out-of-range input raises RangeError naming the argument.

        """
        sample = hdet.CaratheodorySample.checked("1/2", x=0.5j)
        assert sample == hdet.CaratheodorySample(0.5, 0.5j, 0j, 0j, 0j)
        for arguments, parameter in (
            ({"rho": 2.5}, "rho"),
            ({"rho": -1}, "rho"),
            ({"rho": 1, "x": 1 + 1j}, "x"),
            ({"rho": 1, "w": -1.5}, "w"),
        ):
            with self.subTest(arguments=arguments):
                with self.assertRaises(hdet.RangeError) as context:
                    hdet.CaratheodorySample.checked(**arguments)
                assert context.exception.parameter == parameter

    def test_reconstruct_examples(self):
        """
        The three combinations match hand substitution.

        """
        for sample, expected in (
            (hdet.CaratheodorySample.checked(2, 0.3, -0.4j, 1, -1), (0, 4, 4)),
            (hdet.CaratheodorySample.checked(0, 1, -1), (4, 0, 0)),
            (hdet.CaratheodorySample.checked(0), (0, 0, 0)),
        ):
            with self.subTest(sample=sample):
                pq = hdet.reconstruct_pq(sample)
                got = (pq.p2m_minus_q2m, pq.p3m_minus_q3m, pq.p2m_plus_q2m)
                for value, target in zip(got, expected):
                    assert abs(value - target) < 1e-12

    def test_reconstruction_consistency(self):
        """
        The recombined coefficients satisfy 2 p_2m = rho^2 + x (4 - rho^2), its q
        counterpart with y, and p_3m - q_3m matches the difference.

        """
        rng = numpy.random.default_rng(17)
        for _ in range(200):
            rho = float(rng.uniform(0, 2))
            x, y, z, w = (disk_point(rng) for _ in range(4))
            sample = hdet.CaratheodorySample.checked(rho, x, y, z, w)
            pq = hdet.reconstruct_pq(sample)
            s = 4 - rho * rho
            assert abs(2 * pq.p2m - (rho * rho + x * s)) < 1e-12
            assert abs(2 * pq.q2m - (rho * rho + y * s)) < 1e-12
            assert abs(pq.p3m - pq.q3m - pq.p3m_minus_q3m) < 1e-12
            assert abs(pq.p2m - pq.q2m - pq.p2m_minus_q2m) < 1e-12


class CoefficientTests(HdetTests):
    """
    Test coefficients and the Hankel functional built from samples.

    """

    def test_examples(self):
        """
        Coefficients and functional match hand substitution in the base case.

        """
        params = self.params()
        for sample, triple, functional in (
            (hdet.CaratheodorySample.checked(2, 0.5, 0.5j, 1, 1), (1, 1, 0.5), 0.5),
            (hdet.CaratheodorySample.checked(0, 1, -1), (0, 2 / 3, 0), 4 / 9),
            (hdet.CaratheodorySample.checked(0), (0, 0, 0), 0),
        ):
            with self.subTest(sample=sample):
                got = hdet.coefficients_from_sample(params, sample)
                for value, target in zip(got, triple):
                    assert abs(value - target) < 1e-12
                assert abs(hdet.hankel_functional(params, sample) - functional) < 1e-12

    def test_functional_at_rho_zero_is_k_at_zero(self):
        """
        With rho = 0, x = 1, y = -1 the functional attains K(0).

        """
        for m, lambda_, gamma in self.sweep_triples:
            params = self.params(m, lambda_, gamma, "1/5")
            sample = hdet.CaratheodorySample.checked(0, 1, -1)
            with self.subTest(params=params):
                self.assertRelativelyClose(
                    hdet.hankel_functional(params, sample),
                    hdet.k_extremes(params).k_at_zero,
                    1e-12,
                )

    def test_agrees_with_series_path(self):
        """
        The Carathéodory coefficients read back from the sample's coefficient triple
        match the sample, and at m = 1 the functional is H_2(2) of the series.

        """
        rng = numpy.random.default_rng(19)
        for params in (self.params(), self.params(2, "3/2", 1, "0.3")):
            for _ in range(50):
                rho = float(rng.uniform(0, 2))
                x, y, z, w = (
                    complex(rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7))
                    for _ in range(4)
                )
                sample = hdet.CaratheodorySample.checked(rho, x, y, z, w)
                triple = hdet.coefficients_from_sample(params, sample)
                pq = hdet.pq_from_coefficients(params, triple)
                differences = hdet.reconstruct_pq(sample)
                assert abs(pq.p_m - rho) < 1e-12
                assert abs(pq.q_m + rho) < 1e-12
                assert abs(pq.p_2m - pq.q_2m - differences.p2m_minus_q2m) < 1e-9
                assert abs(pq.p_3m - pq.q_3m - differences.p3m_minus_q3m) < 1e-9
                if params.m == 1:
                    determinant = hdet.hankel_determinant([1, *triple], 2, 2)
                    assert (
                        abs(abs(determinant) - hdet.hankel_functional(params, sample))
                        < 1e-12
                    )


class BruteForceTests(HdetTests):
    """
    Test the grid search.

    """

    def test_base_at_zero(self):
        """
        At beta = 0 the maximum is 3/2 on the rho = 2 face.

        """
        result = hdet.brute_force_max(self.params(), rho_steps=41, mu_steps=11)
        self.assertRelativelyClose(result.max_value, 1.5, 1e-12)
        assert result.arg_rho == 2.0
        assert result.refined

    def test_base_at_half(self):
        """
        At beta = 1/2 the maximum is 13/68 near rho = 1.815 at the corner mu = 1.

        """
        result = hdet.brute_force_max(self.params(beta="1/2"))
        self.assertRelativelyClose(result.max_value, 13 / 68, 1e-6)
        assert abs(result.arg_rho - 1.81497) < 1e-3
        assert result.arg_mu1 == result.arg_mu2 == 1.0

    def test_base_at_nine_tenths(self):
        """
        At beta = 0.9 the maximum is about 0.006238 near rho = 1.4921.

        """
        params = self.params(beta="0.9")
        result = hdet.brute_force_max(params, rho_steps=201, mu_steps=11)
        self.assertRelativelyClose(
            result.max_value, hdet.theorem_bound(params).value, 1e-4
        )
        assert abs(result.max_value - 0.0062380) < 1e-6
        assert abs(result.arg_rho - 1.4921) < 1e-3

    def test_unrefined_is_a_grid_point(self):
        """
        Without refinement the argmax lies on the grid and does not exceed the
        bound.

        """
        params = self.params(3, 2, 2, "0.2")
        result = hdet.brute_force_max(params, rho_steps=21, mu_steps=5, refine=False)
        assert not result.refined
        assert result.arg_rho in numpy.linspace(0, 2, 21).tolist()
        assert result.arg_mu1 in numpy.linspace(0, 1, 5).tolist()
        assert result.max_value <= hdet.theorem_bound(params).value * (1 + 1e-9)

    def test_bad_steps(self):
        """
        Fewer than three steps raises RangeError.

        """
        with self.assertRaises(hdet.RangeError) as context:
            hdet.brute_force_max(self.params(), rho_steps=2)
        assert context.exception.parameter == "rho_steps"
        with self.assertRaises(hdet.RangeError) as context:
            hdet.brute_force_max(self.params(), mu_steps=1)
        assert context.exception.parameter == "mu_steps"


class MonteCarloTests(HdetTests):
    """
    Test the sampled check of the bound.

    """

    def test_no_violations(self):
        """
        No sample exceeds the bound or the quadratic form.

        """
        for params in (self.params(), self.params(2, 2, 1, "0.7")):
            with self.subTest(params=params):
                report = hdet.monte_carlo_verify(params, n=10000, seed=42)
                assert report.passed
                assert report.violations == report.soundness_violations == 0
                assert report.worst_ratio <= 1
                assert report.observed_max <= report.bound
                assert report.samples == 10000
                assert report.seed == 42

    def test_deterministic(self):
        """
        The same (params, n, seed) gives the same report; a different seed does not.

        """
        params = self.params(beta="1/2")
        first = hdet.monte_carlo_verify(params, n=9000, seed=7)
        assert hdet.monte_carlo_verify(params, n=9000, seed=7) == first
        assert hdet.monte_carlo_verify(params, n=9000, seed=8) != first

    def test_independent_of_thread_count(self):
        """
        The report does not depend on HDET_THREADS.

        """
        params = self.params(3, "3/2", 0, "0.9")
        reports = []
        for threads in ("1", "3"):
            with mock.patch.dict(os.environ, {"HDET_THREADS": threads}):
                reports.append(hdet.monte_carlo_verify(params, n=20000, seed=3))
        assert reports[0] == reports[1]

    def test_bad_sample_count(self):
        """
        n below 1 raises RangeError.

        """
        with self.assertRaises(hdet.RangeError) as context:
            hdet.monte_carlo_verify(self.params(), n=0)
        assert context.exception.parameter == "n"


class SignInvariantTests(HdetTests):
    """
    Test the sign claims about the F coefficients.

    """

    def test_base_configuration(self):
        """
        Every claim holds at gamma = 0, lambda = m = 1 for the plotted beta values.

        """
        for beta in ("0", "0.1", "0.2", "0.9"):
            with self.subTest(beta=beta):
                report = hdet.sign_invariant_check(self.params(beta=beta))
                assert report.passed, report
                assert len(report.checks) == 8
                assert report.rho_steps == 401

    def test_sweep_set(self):
        """
        Every claim holds across the sweep set.

        """
        for params in self.sweep_params():
            with self.subTest(params=params):
                assert hdet.sign_invariant_check(params, rho_steps=101).passed

    def test_strict_claims_vanish_at_endpoint(self):
        """
        F3 + 2F4 is 0 at rho = 2, which is why strict claims skip the endpoints.

        """
        coeffs = hdet.f_coeffs(self.params(), 2)
        assert coeffs.F3 + 2 * coeffs.F4 == 0

    def test_bad_steps(self):
        """
        Fewer than three steps raises RangeError.

        """
        with self.assertRaises(hdet.RangeError):
            hdet.sign_invariant_check(self.params(), rho_steps=2)


class LemmaTests(HdetTests):
    """
    Test the Carathéodory coefficient inequalities.

    """

    def test_extremal(self):
        """
        At h1 = 2 the coefficients are all 2, for any x and z.

        """
        report = hdet.lemma_identity_check(2, 0.3 - 0.2j, 1j)
        assert report.h2 == 2
        assert report.h3 == 2
        assert report.passed

    def test_boundary(self):
        """
        h1 = 0, x = 1 passes with equality, while the variant with |h2|^2 fails.

        """
        report = hdet.lemma_identity_check(0, 1, 0)
        assert report.h2 == 2
        assert report.passed
        assert not report.printed_form_holds

    def test_third_coefficient(self):
        """
        h1 = 0, x = 0, z = 1 gives h3 = 2.

        """
        report = hdet.lemma_identity_check(0, 0, 1)
        assert report.h2 == 0
        assert report.h3 == 2
        assert report.passed
        assert report.printed_form_holds

    def test_random(self):
        """
        The three valid inequalities hold for random admissible input.

        """
        rng = numpy.random.default_rng(23)
        for _ in range(500):
            h1 = float(rng.uniform(0, 2))
            x, z = (disk_point(rng) for _ in range(2))
            assert hdet.lemma_identity_check(h1, x, z).passed

    def test_out_of_range(self):
        """
        Out-of-range input raises RangeError naming the argument.

        """
        with self.assertRaises(hdet.RangeError) as context:
            hdet.lemma_identity_check(3, 0, 0)
        assert context.exception.parameter == "h1"
        with self.assertRaises(hdet.RangeError) as context:
            hdet.lemma_identity_check(1, 2, 0)
        assert context.exception.parameter == "x"


class ThresholdAuditTests(HdetTests):
    """
    Test the comparison of the two branch thresholds.

    """

    def test_base(self):
        """
        The bound holds on the whole grid; the thresholds disagree exactly between
        them, and there the alternative branch is not the maximum of K.

        """
        audit = hdet.threshold_audit(self.params(), beta_steps=20)
        assert audit.consistent
        assert audit.result_one_threshold < audit.tau
        assert audit.disagreements == tuple(Fraction(i, 20) for i in range(2, 9))
        assert audit.inconsistent == audit.disagreements

    def test_sweep_triples(self):
        """
        The bound holds on a coarse grid for every sweep triple.

        """
        for m, lambda_, gamma in self.sweep_triples:
            params = self.params(m, lambda_, gamma)
            with self.subTest(params=params):
                audit = hdet.threshold_audit(params, beta_steps=10)
                assert audit.consistent, audit
                assert not audit.missing_rho_two

    def test_bad_steps(self):
        """
        Non-positive step counts raise RangeError.

        """
        with self.assertRaises(hdet.RangeError):
            hdet.threshold_audit(self.params(), beta_steps=0)
        with self.assertRaises(hdet.RangeError):
            hdet.threshold_audit(self.params(), rho_steps=2)


class SweepTests(HdetTests):
    """
    Test parameter sweeps.

    """

    def test_rows_in_order(self):
        """
        Rows come back in input order with the bound's fields.

        """
        points = self.sweep_params()[:8]
        rows = hdet.sweep(points)
        assert [row.params for row in rows] == points
        for row in rows:
            result = hdet.theorem_bound(row.params)
            assert (row.value, row.branch, row.tau, row.rho_star) == tuple(result)
            assert row.oracle_max is None and row.gap is None
            assert row.within_tolerance

    def test_check(self):
        """
        With check, the brute-force maximum agrees with the bound.

        """
        points = [self.params(beta="0"), self.params(2, "3/2", 1, "1/2")]
        for row in hdet.sweep(points, check=True, rho_steps=101, mu_steps=11):
            with self.subTest(params=row.params):
                assert row.gap is not None
                assert row.within_tolerance

    def test_bad_thread_count(self):
        """
        An invalid HDET_THREADS raises ConfigurationError.

        """
        points = self.sweep_params()[:2]
        for value in ("zero", "0", "-2"):
            with self.subTest(value=value):
                with mock.patch.dict(os.environ, {"HDET_THREADS": value}):
                    with self.assertRaises(hdet.ConfigurationError):
                        hdet.sweep(points)

    def test_blank_thread_count(self):
        """
        A blank HDET_THREADS falls back to the machine's parallelism.

        """
        points = self.sweep_params()[:2]
        with mock.patch.dict(os.environ, {"HDET_THREADS": ""}):
            assert len(hdet.sweep(points)) == 2
