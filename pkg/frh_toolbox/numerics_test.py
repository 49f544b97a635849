#!/usr/bin/env python

"""
Copyright (C) 2018, frh_toolbox developers

This file is part of frh_toolbox.

frh_toolbox is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

frh_toolbox is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with frh_toolbox. If not, see <http://www.gnu.org/licenses/>.

---

Module: numerics_test.py
Author: frh_toolbox developers

Tests for numerics.py.
"""

import numpy as np
import unittest

from scipy.special import beta

from .numerics import (
    COMPACT, ENDPOINT_LOG, GAUSSIAN, LEFT, RIGHT, QuadratureSpec, TailSpec,
    derivative_at, gamma_fn, integrate_singular, integrate_tail,
    limit_at_zero, sigma, surface_area)


class TestQuadratureSpec(unittest.TestCase):
    def test_exponent_at_minus_one_is_rejected(self):
        self.assertRaises(ValueError, QuadratureSpec.jacobi, -1.0, 0.0)

    def test_unknown_rule_kind(self):
        self.assertRaises(ValueError, QuadratureSpec, u"simpson")

    def test_jacobi_exponents(self):
        spec = QuadratureSpec.jacobi(-0.25, 0.5)
        self.assertEqual(spec.leftExponent, -0.25)
        self.assertEqual(spec.rightExponent, 0.5)


class TestIntegrateSingular(unittest.TestCase):
    def test_right_endpoint_singularity(self):
        spec = QuadratureSpec.jacobi(0.0, -0.5, relTol=1e-12)
        value = integrate_singular(lambda s: 1.0, 0.0, 1.0, spec)
        self.assertAlmostEqual(value, 2.0, delta=1e-12)

    def test_both_endpoints_singular(self):
        spec = QuadratureSpec.jacobi(-0.5, -0.5, relTol=1e-12)
        value = integrate_singular(lambda s: 1.0, 0.0, 1.0, spec)
        self.assertAlmostEqual(value, np.pi, delta=1e-11)

    def test_beta_integrals(self):
        exponents = (0.5, 1.0, 1.5, 2.0)
        for p in exponents:
            for q in exponents:
                spec = QuadratureSpec.jacobi(p - 1, q - 1, relTol=1e-12)
                value = integrate_singular(lambda s: 1.0, 0.0, 1.0, spec)
                self.assertAlmostEqual(value, beta(p, q),
                                       delta=1e-10 * beta(p, q))
                shifted = integrate_singular(lambda s: 1.0, 1.0, 3.0, spec)
                exact = 2.0 ** (p + q - 1) * beta(p, q)
                self.assertAlmostEqual(shifted, exact, delta=1e-10 * exact)

    def test_log_weight(self):
        spec = QuadratureSpec(ENDPOINT_LOG, singularEnd=LEFT, relTol=1e-12)
        value = integrate_singular(lambda s: 1.0, 0.0, 1.0, spec)
        self.assertAlmostEqual(value, -1.0, delta=1e-12)

    def test_smooth_infinite_range(self):
        value = integrate_singular(lambda s: np.exp(-s), 0.0, np.inf)
        self.assertAlmostEqual(value, 1.0, delta=1e-10)

    def test_weighted_rule_needs_finite_interval(self):
        spec = QuadratureSpec.jacobi(0.0, -0.5)
        self.assertRaises(ValueError, integrate_singular, lambda s: 1.0,
                          0.0, np.inf, spec)

    def test_reversed_limits(self):
        self.assertRaises(ValueError, integrate_singular, lambda s: 1.0,
                          1.0, 0.0)


class TestTailSpec(unittest.TestCase):
    def test_gaussian_defaults(self):
        tail = TailSpec.gaussian(lengthScale=2.0)
        self.assertEqual(tail.decayKind, GAUSSIAN)
        self.assertAlmostEqual(tail.truncationRadius, 13.0)
        self.assertTrue(tail.isRapid)

    def test_power_needs_mu(self):
        self.assertRaises(ValueError, TailSpec, u"power")

    def test_shifted_power(self):
        tail = TailSpec.power(3.0).shifted(-1.0)
        self.assertAlmostEqual(tail.mu, 2.0)

    def test_compact_tail_bound(self):
        tail = TailSpec.compact(1.5)
        self.assertEqual(tail.decayKind, COMPACT)
        self.assertEqual(tail.tailBound, 0.0)

    def test_power_tail_bound(self):
        tail = TailSpec.power(2.0, truncationRadius=10.0)
        self.assertAlmostEqual(tail.tailBound, 0.1)


class TestIntegrateTail(unittest.TestCase):
    def test_gaussian(self):
        value = integrate_tail(lambda s: np.exp(-s * s), 0.0,
                               TailSpec.gaussian())
        self.assertAlmostEqual(value, 0.5 * np.sqrt(np.pi), delta=1e-10)

    def test_power(self):
        value, err, ok = integrate_tail(lambda s: 1 / (1 + s * s), 0.0,
                                        TailSpec.power(2.0), fullOutput=True)
        self.assertAlmostEqual(value, 0.5 * np.pi, delta=1e-8)
        self.assertTrue(ok)

    def test_remainder_above_declared_bound(self):
        value, err, ok = integrate_tail(lambda s: 1 / (1 + s), 0.0,
                                        TailSpec.power(3.0), fullOutput=True)
        self.assertFalse(ok)

    def test_doubling_the_truncation_radius(self):
        cases = [(lambda s: np.exp(-s * s), TailSpec.gaussian(),
                  0.5 * np.sqrt(np.pi)),
                 (lambda s: (1 + s * s) ** -1.5, TailSpec.power(3.0), 1.0),
                 (lambda s: np.exp(-s), TailSpec.exponential(), 1.0)]
        for f, tail, exact in cases:
            R = tail.truncationRadius
            first = integrate_tail(f, 0.0, tail)
            second = integrate_tail(f, 0.0,
                                    tail.with_truncation_radius(2 * R))
            self.assertAlmostEqual(first, exact, delta=1e-8)
            self.assertAlmostEqual(second, first, delta=1e-9)

    def test_compact(self):
        value = integrate_tail(lambda s: 1 - s, 0.0, TailSpec.compact(1.0))
        self.assertAlmostEqual(value, 0.5, delta=1e-12)


class TestDerivativeAt(unittest.TestCase):
    def test_central_first_derivative(self):
        estimate = derivative_at(np.sin, 0.3, 1)
        self.assertAlmostEqual(estimate.value, np.cos(0.3), delta=1e-9)

    def test_right_sided_second_derivative(self):
        estimate = derivative_at(np.exp, 0.0, 2, side=RIGHT, step0=0.1,
                                 levels=8)
        self.assertAlmostEqual(estimate.value, 1.0, delta=1e-6)

    def test_left_sided_derivative_of_polynomial(self):
        estimate = derivative_at(lambda t: t ** 3, 1.0, 1, side=LEFT)
        self.assertAlmostEqual(estimate.value, 3.0, delta=1e-9)

    def test_samples_are_kept(self):
        estimate = derivative_at(np.sin, 0.0, 1, levels=4)
        self.assertEqual(len(estimate.samples), 4)

    def test_invalid_order(self):
        self.assertRaises(ValueError, derivative_at, np.sin, 0.0, 0)


class TestLimitAtZero(unittest.TestCase):
    def test_polynomial_limit(self):
        estimate = limit_at_zero(lambda r: 2.0 + r + 3 * r * r)
        self.assertAlmostEqual(estimate.value, 2.0, delta=1e-10)

    def test_even_limit(self):
        estimate = limit_at_zero(lambda r: np.sin(r) / r, power=2)
        self.assertAlmostEqual(estimate.value, 1.0, delta=1e-10)
        self.assertTrue(estimate.converged)

    def test_error_estimate_tracks_the_error(self):
        cases = [(lambda r: 1 / (1 + r), 1, 4),
                 (lambda r: np.exp(r) * np.cos(r), 1, 5),
                 (lambda r: np.sin(r) / r, 2, 3),
                 (np.cosh, 2, 3)]
        for f, power, levels in cases:
            estimate = limit_at_zero(f, levels=levels, power=power)
            error = np.abs(estimate.value - 1.0)
            self.assertTrue(estimate.errorEstimate > 0)
            self.assertLessEqual(error, 10 * estimate.errorEstimate)

    def test_nonpositive_start(self):
        self.assertRaises(ValueError, limit_at_zero, np.cos, 0.0)


class TestSpecialFunctions(unittest.TestCase):
    def test_sphere_areas(self):
        self.assertAlmostEqual(sigma(0), 2.0)
        self.assertAlmostEqual(sigma(1), 2 * np.pi)
        self.assertAlmostEqual(sigma(2), 4 * np.pi)
        self.assertAlmostEqual(surface_area(4), 2 * np.pi ** 2)

    def test_gamma(self):
        self.assertAlmostEqual(gamma_fn(0.5), np.sqrt(np.pi))
        self.assertRaises(ValueError, gamma_fn, 0.0)
