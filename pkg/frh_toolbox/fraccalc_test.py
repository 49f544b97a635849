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

Module: fraccalc_test.py
Author: frh_toolbox developers

Tests for fraccalc.py.
"""

import numpy as np
import unittest

from .fraccalc import (
    DERIVATIVE_VARIANTS, DIRECT_COMPLEMENT, EK_TO_RL, INTEGER_D, MINUS, PLUS,
    SEMIGROUP, USUAL_DERIVATIVE, WEIGHTED, WEIGHTED_COMPOSITION,
    FractionalOrder, Profile1D, closed_form_ek_power, ek_derivative,
    ek_existence, ek_integral, ek_plus_derivative, is_divergent, materialize,
    rl_derivative, rl_integral, verify_composition)
from .numerics import TailSpec, gamma_fn


def gaussian_profile():
    return Profile1D(lambda s: np.exp(-s * s), decay=TailSpec.gaussian())


def exponential_profile():
    return Profile1D(lambda s: np.exp(-s), decay=TailSpec.exponential(1.0))


def power_profile(beta):
    return Profile1D(lambda s: (1 + s * s) ** -beta,
                     decay=TailSpec.power(2 * beta))


def pure_power_image(alpha, mu):
    """
    I^alpha_{-,2} s^-mu = Gamma(mu/2 - alpha) / Gamma(mu/2) t^(2 alpha - mu).
    """
    const = gamma_fn(mu / 2 - alpha) / gamma_fn(mu / 2)
    return Profile1D(lambda s: const * s ** (2 * alpha - mu),
                     decay=TailSpec.power(mu - 2 * alpha))


def bump_image(s):
    # I^1_{-,2} (1 - s^2)^3 on the unit ball.
    if s >= 1:
        return 0.0
    return 0.25 * (1 - s * s) ** 4


class TestFractionalOrder(unittest.TestCase):
    def test_split(self):
        order = FractionalOrder(1.5)
        self.assertEqual(order.m, 1)
        self.assertAlmostEqual(order.alpha0, 0.5)
        self.assertFalse(order.isInteger)

    def test_integer(self):
        self.assertTrue(FractionalOrder(2).isInteger)

    def test_nonpositive(self):
        self.assertRaises(ValueError, FractionalOrder, 0.0)


class TestExistence(unittest.TestCase):
    def test_power_decay_above_threshold(self):
        report = ek_existence(power_profile(1.5), 1.0)
        self.assertTrue(report.holds)
        self.assertAlmostEqual(report.margin, 1.0)

    def test_power_decay_at_threshold(self):
        report = ek_existence(power_profile(1.5), 1.5)
        self.assertFalse(report.holds)

    def test_rapid_decay(self):
        self.assertTrue(ek_existence(gaussian_profile(), 10.0).holds)


class TestIntegrals(unittest.TestCase):
    def test_gaussian_is_fixed_by_minus_integral(self):
        for alpha in (0.5, 1.0, 1.5):
            for t in (0.0, 0.7, 1.4):
                value = ek_integral(gaussian_profile(), alpha, MINUS, t)
                self.assertAlmostEqual(value, np.exp(-t * t), delta=1e-9)

    def test_power_closed_form(self):
        exact = closed_form_ek_power(1.0, 3.0)
        for t in (0.5, 2.0):
            value = ek_integral(power_profile(3.0), 1.0, MINUS, t)
            self.assertAlmostEqual(value / exact(t), 1.0, delta=1e-8)

    def test_closed_form_needs_beta_above_alpha(self):
        self.assertRaises(ValueError, closed_form_ek_power, 1.0, 1.0)

    def test_plus_integral_of_constant(self):
        one = Profile1D(lambda s: 1.0)
        for alpha in (0.5, 1.0, 2.5):
            value = ek_integral(one, alpha, PLUS, 1.3)
            self.assertAlmostEqual(value, 1.3 ** (2 * alpha) /
                                   gamma_fn(alpha + 1), delta=1e-10)

    def test_minus_integral_diverges(self):
        value = ek_integral(power_profile(0.5), 1.0, MINUS, 1.0)
        self.assertTrue(is_divergent(value))

    def test_rl_minus_of_exponential(self):
        value = rl_integral(exponential_profile(), 0.5, MINUS, 1.0)
        self.assertAlmostEqual(value, np.exp(-1.0), delta=1e-9)

    def test_rl_plus_of_constant(self):
        value = rl_integral(Profile1D(lambda s: 1.0), 0.5, PLUS, 2.0)
        self.assertAlmostEqual(value, np.sqrt(2.0) / gamma_fn(1.5),
                               delta=1e-10)

    def test_invalid_sign(self):
        self.assertRaises(ValueError, ek_integral, gaussian_profile(), 1.0,
                          u"sideways", 1.0)


class TestDerivatives(unittest.TestCase):
    def test_all_variants_invert_at_integer_order(self):
        for variant in (INTEGER_D, WEIGHTED_COMPOSITION, USUAL_DERIVATIVE,
                        DIRECT_COMPLEMENT):
            for t in (0.8, 1.2):
                value = ek_derivative(gaussian_profile(), 1.0,
                                      variant=variant, t=t)
                self.assertAlmostEqual(value, np.exp(-t * t), delta=1e-5)

    def test_fractional_variants(self):
        for variant in (WEIGHTED_COMPOSITION, USUAL_DERIVATIVE,
                        DIRECT_COMPLEMENT):
            value = ek_derivative(gaussian_profile(), 0.5, variant=variant,
                                  t=1.0)
            self.assertAlmostEqual(value, np.exp(-1.0), delta=1e-5)

    def test_gaussian_left_inverse_across_scales(self):
        for variant in DERIVATIVE_VARIANTS:
            for t in (0.1, 1.0, 3.0):
                value = ek_derivative(gaussian_profile(), 1.0,
                                      variant=variant, t=t)
                self.assertAlmostEqual(value * np.exp(t * t), 1.0,
                                       delta=1e-4)

    def test_power_left_inverse(self):
        mu = 5.5
        for alpha in (0.5, 1.0):
            phi = pure_power_image(alpha, mu)
            for variant in DERIVATIVE_VARIANTS:
                if variant == INTEGER_D and alpha == 0.5:
                    continue
                for t in (0.1, 1.0, 3.0):
                    value = ek_derivative(phi, alpha, variant=variant, t=t)
                    self.assertAlmostEqual(value * t ** mu, 1.0,
                                           delta=1e-4)

    def test_direct_complement_needs_faster_decay(self):
        # phi ~ t^-1.5 lies in the range of I^1 but I^1 phi diverges.
        phi = pure_power_image(1.0, 3.5)
        value = ek_derivative(phi, 1.0, variant=WEIGHTED_COMPOSITION,
                              t=0.1)
        self.assertAlmostEqual(value * 0.1 ** 3.5, 1.0, delta=1e-4)
        self.assertTrue(is_divergent(ek_derivative(
            phi, 1.0, variant=DIRECT_COMPLEMENT, t=0.1)))

    def test_compact_left_inverse(self):
        phi = Profile1D(bump_image, decay=TailSpec.compact(1.0))
        for variant in DERIVATIVE_VARIANTS:
            for t in (0.1, 0.5, 0.8):
                value = ek_derivative(phi, 1.0, variant=variant, t=t)
                self.assertAlmostEqual(value / (1 - t * t) ** 3, 1.0,
                                       delta=1e-4)
            value = ek_derivative(phi, 1.0, variant=variant, t=2.0)
            self.assertAlmostEqual(value, 0.0, delta=1e-12)

    def test_integer_variant_needs_integer_order(self):
        self.assertRaises(ValueError, ek_derivative, gaussian_profile(), 0.5,
                          variant=INTEGER_D)

    def test_unknown_variant(self):
        self.assertRaises(ValueError, ek_derivative, gaussian_profile(), 1.0,
                          variant=u"spline")

    def test_plus_sign_is_rejected(self):
        self.assertRaises(ValueError, ek_derivative, gaussian_profile(), 1.0,
                          sign=PLUS)

    def test_full_output(self):
        estimate = ek_derivative(gaussian_profile(), 1.0, t=1.0,
                                 fullOutput=True)
        self.assertAlmostEqual(estimate.value, np.exp(-1.0), delta=1e-6)
        self.assertTrue(len(estimate.samples) > 0)

    def test_rl_derivative_of_exponential(self):
        value = rl_derivative(exponential_profile(), 0.5, 1.0)
        self.assertAlmostEqual(value, np.exp(-1.0), delta=1e-6)

    def test_plus_derivative_inverts_plus_integral(self):
        # I^(1/2)_{+,2} 1 = t / Gamma(3/2).
        phi = Profile1D(lambda s: s / gamma_fn(1.5))
        value = ek_plus_derivative(phi, 1, 0.7)
        self.assertAlmostEqual(value, 1.0, delta=1e-6)


class TestCompositions(unittest.TestCase):
    def test_semigroup(self):
        worst = verify_composition(gaussian_profile(), 0.5, 1.0, SEMIGROUP,
                                   [0.5, 1.5])
        self.assertLess(worst, 1e-7)

    def test_weighted(self):
        worst = verify_composition(power_profile(4.0), 0.5, 0.5, WEIGHTED,
                                   [0.5, 1.5])
        self.assertLess(worst, 1e-6)

    def test_ek_to_rl(self):
        for alpha in (0.5, 1.0):
            worst = verify_composition(gaussian_profile(), alpha, alpha,
                                       EK_TO_RL, [0.5, 1.5])
            self.assertLess(worst, 1e-6)

    def test_precondition_failure(self):
        result = verify_composition(power_profile(0.5), 0.5, 0.5, SEMIGROUP,
                                    [1.0])
        self.assertTrue(is_divergent(result))


class TestDivergenceThreshold(unittest.TestCase):
    def test_converges_just_above_threshold(self):
        alpha, mu = 1.0, 2.1
        f = Profile1D(lambda s: s ** -mu, decay=TailSpec.power(mu))
        self.assertTrue(ek_existence(f, alpha).holds)
        value = ek_integral(f, alpha, MINUS, 1.0)
        self.assertFalse(is_divergent(value))
        exact = gamma_fn(mu / 2 - alpha) / gamma_fn(mu / 2)
        self.assertAlmostEqual(value / exact, 1.0, delta=1e-3)

    def test_diverges_at_threshold(self):
        f = Profile1D(lambda s: s ** -2.0, decay=TailSpec.power(2.0))
        self.assertTrue(is_divergent(ek_integral(f, 1.0, MINUS, 1.0)))


class TestMaterialize(unittest.TestCase):
    def test_matches_function_on_window(self):
        def f(t):
            return np.exp(-t * t) / t ** 2
        interp = materialize(f, 0.01, 1.0, power=2.0)
        for t in (0.01, 0.05, 0.3, 0.9, 1.0):
            self.assertAlmostEqual(interp(t) / f(t), 1.0, delta=1e-8)
        self.assertEqual(interp(2.0), f(2.0))

    def test_nonfinite_samples_keep_function(self):
        def f(t):
            return np.inf
        self.assertIs(materialize(f, 0.1, 1.0), f)

    def test_invalid_window(self):
        self.assertRaises(ValueError, materialize, np.exp, 1.0, 0.5)
        self.assertRaises(ValueError, materialize, np.exp, 0.0, 0.5)

    def test_windowed_derivative_matches_direct(self):
        # I^1_{-,2} (1+s^2)^-3 = (1+t^2)^-2 / 2.
        phi = Profile1D(closed_form_ek_power(1.0, 3.0),
                        decay=TailSpec.power(4.0))
        for variant in (WEIGHTED_COMPOSITION, USUAL_DERIVATIVE,
                        DIRECT_COMPLEMENT):
            cache = dict()
            for t in (0.1, 0.4, 0.8):
                value = ek_derivative(phi, 1.0, variant=variant, t=t,
                                      window=(0.1, 0.8), cache=cache)
                self.assertAlmostEqual(value * (1 + t * t) ** 3, 1.0,
                                       delta=1e-4)
            self.assertEqual(len(cache), 1)


class TestProfile1D(unittest.TestCase):
    def test_times_power(self):
        profile = gaussian_profile().times_power(2)
        self.assertAlmostEqual(profile(3.0), 9 * np.exp(-9.0))

    def test_samples_continue_by_decay(self):
        grid = np.linspace(0.5, 3.0, 26)
        profile = Profile1D.from_samples(grid, np.exp(-grid),
                                         TailSpec.exponential(1.0))
        self.assertAlmostEqual(profile(1.25), np.exp(-1.25), delta=1e-3)
        self.assertAlmostEqual(profile(4.0), np.exp(-4.0), delta=1e-12)

    def test_samples_must_increase(self):
        self.assertRaises(ValueError, Profile1D.from_samples, [1.0, 0.5],
                          [1.0, 2.0], TailSpec.gaussian())

    def test_decay_consistency(self):
        grid = np.array([5.0, 10.0])
        values = grid ** -3
        self.assertTrue(Profile1D.from_samples(
            grid, values, TailSpec.power(3.0)).decay_consistent())
        self.assertFalse(Profile1D.from_samples(
            grid, values, TailSpec.power(5.0)).decay_consistent())

    def test_chebyshev(self):
        profile = Profile1D.from_chebyshev(lambda t: np.exp(-t * t), 4.0, 40,
                                           TailSpec.gaussian())
        self.assertAlmostEqual(profile(1.3), np.exp(-1.69), delta=1e-6)
