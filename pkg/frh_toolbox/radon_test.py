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

Module: radon_test.py
Author: frh_toolbox developers

Tests for radon.py.
"""

import numpy as np
import unittest

from .fraccalc import Profile1D, is_divergent
from .geometry import (
    EUCLIDEAN, HYPERBOLIC, SPHERICAL, GeodesicParam, SpaceDescriptor)
from .numerics import LP, TailSpec
from .phantoms import (
    ConstantPhantom, GaussianPhantom, RadialPowerPhantom, SphereOddPhantom,
    SphereQuadraticPhantom, ZonalGaussianPhantom)
from .radon import (
    EUCLID_F2, EUCLIDEAN_MOMENT, HYPER_F1, HYPER_F2, HYPERBOLIC_MOMENT,
    SINOGRAM, TransformField, build_sinogram, check_existence,
    counterexample_profile, dual_composition, funk_sampled, funk_zonal,
    hyperbolic_duality, radon_radial, radon_sampled, tilde_from_zonal)


R2 = SpaceDescriptor(EUCLIDEAN, 2, 1)
R3 = SpaceDescriptor(EUCLIDEAN, 3, 2)
H2 = SpaceDescriptor(HYPERBOLIC, 2, 1)
H3 = SpaceDescriptor(HYPERBOLIC, 3, 2)
S2 = SpaceDescriptor(SPHERICAL, 2, 1)
S3 = SpaceDescriptor(SPHERICAL, 3, 2)


def gaussian_profile():
    return Profile1D(lambda s: np.exp(-s * s), decay=TailSpec.gaussian())


def hyperbolic_point(d, direction=(1.0, 0.0)):
    return np.append(np.sinh(d) * np.asarray(direction), np.cosh(d))


class TestRadialTransforms(unittest.TestCase):
    def test_euclidean_gaussian(self):
        for r in (0.0, 0.5, 1.5):
            self.assertAlmostEqual(radon_radial(gaussian_profile(), R2, r),
                                   np.sqrt(np.pi) * np.exp(-r * r),
                                   delta=1e-10)
            self.assertAlmostEqual(radon_radial(gaussian_profile(), R3, r),
                                   np.pi * np.exp(-r * r), delta=1e-10)

    def test_hyperbolic_zonal_gaussian(self):
        phantom = ZonalGaussianPhantom(H3)
        for r in (0.0, 0.7, 2.0):
            self.assertAlmostEqual(
                radon_radial(phantom.zonal_profile(), H3, r),
                phantom.radon_profile()(r), delta=1e-10)

    def test_tilde_profile(self):
        f0 = ZonalGaussianPhantom(H2).zonal_profile()
        self.assertAlmostEqual(tilde_from_zonal(f0)(0.8), np.exp(-0.64),
                               delta=1e-14)

    def test_divergent_counterexample(self):
        f = counterexample_profile(EUCLID_F2, 2, 1, p=2.0)
        value = radon_radial(f, R2, 0.5)
        self.assertTrue(is_divergent(value))
        self.assertEqual(value.reason, EUCLIDEAN_MOMENT)

    def test_shifted_counterexample_is_finite(self):
        f = counterexample_profile(EUCLID_F2, 2, 1, p=2.0, exponentShift=0.1)
        value = radon_radial(f, R2, 0.5)
        self.assertFalse(is_divergent(value))
        self.assertTrue(np.isfinite(value) and value > 0)

    def test_hyperbolic_counterexamples(self):
        f1 = counterexample_profile(HYPER_F1, 3, 2, p=2.0)
        value = radon_radial(f1, H3, 0.5)
        self.assertTrue(is_divergent(value))
        self.assertEqual(value.reason, HYPERBOLIC_MOMENT)
        f2 = counterexample_profile(HYPER_F2, 3, 2)
        self.assertTrue(is_divergent(radon_radial(f2, H3, 0.5)))

    def test_counterexample_arguments(self):
        self.assertRaises(ValueError, counterexample_profile, HYPER_F1, 2, 1,
                          p=2.0)
        self.assertRaises(ValueError, counterexample_profile, EUCLID_F2, 2,
                          1, p=2.0, delta=0.6)
        self.assertRaises(ValueError, counterexample_profile, u"f3", 2, 1)

    def test_sphere_is_rejected(self):
        self.assertRaises(ValueError, radon_radial, gaussian_profile(), S2,
                          0.5)


class TestExistence(unittest.TestCase):
    def test_euclidean_power(self):
        self.assertFalse(check_existence(TailSpec.power(1.0), R2).holds)
        self.assertTrue(check_existence(TailSpec.power(1.5), R2).holds)
        self.assertTrue(check_existence(TailSpec.power(
            1.0, logExponent=1.5), R2).holds)

    def test_lp_classes(self):
        self.assertFalse(check_existence(TailSpec.lp(2.0), R2).holds)
        self.assertTrue(check_existence(TailSpec.lp(1.5), R2).holds)
        self.assertFalse(check_existence(TailSpec.lp(2.0), H3).holds)
        self.assertTrue(check_existence(TailSpec(LP, p=5.0), H2).holds)

    def test_hyperbolic_power(self):
        report = check_existence(TailSpec.power(1.0), H3)
        self.assertFalse(report.holds)
        self.assertEqual(report.criticalExponent, 1)

    def test_sphere(self):
        self.assertTrue(check_existence(None, S2).holds)


class TestSphere(unittest.TestCase):
    def test_funk_zonal_of_constant(self):
        phantom = ConstantPhantom(S2)
        for r in (0.3, 1.0):
            self.assertAlmostEqual(funk_zonal(phantom, S2.base_point(), r,
                                              S2), 2 * np.pi, delta=1e-9)

    def test_funk_zonal_of_quadratic(self):
        phantom = SphereQuadraticPhantom(S2, b=2.0)
        value = funk_zonal(phantom, S2.base_point(), 0.6, S2)
        self.assertAlmostEqual(value, 2 * np.pi * 1.36, delta=1e-9)

    def test_odd_part_does_not_contribute(self):
        phantom = SphereOddPhantom(S2)
        self.assertAlmostEqual(funk_zonal(phantom, S2.base_point(), 0.5, S2),
                               0.0, delta=1e-12)

    def test_funk_zonal_arguments(self):
        phantom = ConstantPhantom(S2)
        self.assertRaises(ValueError, funk_zonal, phantom, S2.base_point(),
                          0.0, S2)
        self.assertRaises(ValueError, funk_zonal, phantom, S2.base_point(),
                          1.5, S2)

    def test_funk_sampled_matches_closed_form(self):
        for space in (S2, S3):
            phantom = SphereQuadraticPhantom(space, b=1.5)
            nu = np.zeros(space.n + 1)
            nu[0], nu[-1] = 0.6, 0.8
            geo = GeodesicParam.hyperplane(space, nu)
            self.assertAlmostEqual(funk_sampled(phantom, geo)[0],
                                   phantom.radon(geo)[0], delta=1e-10)

    def test_funk_sampled_needs_sphere(self):
        geo = GeodesicParam.hyperplane(H2, [1.0, 0.0, 0.0])
        self.assertRaises(ValueError, funk_sampled, np.sum, geo)


class TestSampledTransforms(unittest.TestCase):
    def test_line_integral(self):
        phantom = GaussianPhantom(R2, center=[0.3, -0.2])
        line = GeodesicParam.line(2.1, -0.4)
        value = radon_sampled(phantom, line, phantom.sourceDecay,
                              center=phantom.center)
        self.assertAlmostEqual(value, phantom.radon(line)[0], delta=1e-9)

    def test_line_integral_diverges(self):
        value = radon_sampled(np.sum, GeodesicParam.line(0.0, 0.0),
                              TailSpec.power(1.0))
        self.assertTrue(is_divergent(value))

    def test_line_integral_needs_lines(self):
        geo = GeodesicParam.hyperplane(H2, [1.0, 0.0, 0.0])
        self.assertRaises(ValueError, radon_sampled, np.sum, geo,
                          TailSpec.gaussian())

    def test_sinogram(self):
        phantom = GaussianPhantom(R2)
        thetas = np.pi * np.arange(6) / 6
        offsets = np.linspace(-8.0, 8.0, 33)
        field = build_sinogram(phantom, thetas, offsets, numThreads=1)
        self.assertEqual(field.kind, SINOGRAM)
        expected = np.sqrt(np.pi) * np.exp(-offsets ** 2)
        for row in field.values:
            np.testing.assert_allclose(row, expected, atol=1e-9)
        geo = GeodesicParam.line(thetas[2], offsets[20])
        self.assertAlmostEqual(field.evaluate(geo)[0], field.values[2, 20],
                               delta=1e-10)

    def test_sinogram_of_slowly_decaying_function(self):
        phantom = RadialPowerPhantom(R2, 0.5)
        self.assertTrue(is_divergent(build_sinogram(phantom, numThreads=1)))

    def test_sinogram_validation(self):
        decay = TailSpec.compact(1.0)
        self.assertRaises(ValueError, TransformField.sinogram, [0.0, 1.0],
                          [-1.0, 0.0, 2.0], np.zeros((2, 3)), decay)
        self.assertRaises(ValueError, TransformField.sinogram, [0.0, 4.0],
                          [-1.0, 0.0, 1.0], np.zeros((2, 3)), decay)
        values = np.zeros((2, 3))
        values[1, 1] = np.nan
        self.assertRaises(ValueError, TransformField.sinogram, [0.0, 1.0],
                          [-1.0, 0.0, 1.0], values, decay)


class TestCompositions(unittest.TestCase):
    def test_euclidean_dual_composition(self):
        phantom = GaussianPhantom(R2, center=[0.3, -0.2])
        lhs, rhs = dual_composition(phantom, [0.0, 0.0], 0.5, R2)
        self.assertAlmostEqual(lhs / rhs, 1.0, delta=1e-7)

    def test_hyperbolic_dual_composition(self):
        phantom = ZonalGaussianPhantom(H3)
        lhs, rhs = dual_composition(phantom, H3.base_point(), 0.8, H3)
        self.assertAlmostEqual(lhs / rhs, 1.0, delta=1e-7)

    def test_hyperbolic_dual_composition_off_center(self):
        phantom = ZonalGaussianPhantom(H2, center=hyperbolic_point(0.4))
        lhs, rhs = dual_composition(phantom, H2.base_point(), 0.6, H2)
        self.assertAlmostEqual(lhs / rhs, 1.0, delta=1e-6)

    def test_spherical_dual_composition(self):
        axis = np.array([0.0, 0.6, 0.8])
        phantom = SphereQuadraticPhantom(S2, axis=axis, b=1.0)
        lhs, rhs = dual_composition(phantom, S2.base_point(), 0.5, S2)
        self.assertAlmostEqual(lhs / rhs, 1.0, delta=1e-8)

    def test_hyperbolic_duality(self):
        f0 = ZonalGaussianPhantom(H3).zonal_profile()
        lhs, rhs = hyperbolic_duality(f0, 3, 2)
        self.assertAlmostEqual(lhs / rhs, 1.0, delta=1e-7)

    def test_hyperbolic_duality_diverges(self):
        f0 = counterexample_profile(HYPER_F2, 3, 2)
        self.assertTrue(is_divergent(hyperbolic_duality(f0, 3, 2)))
