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

Module: phantoms.py
Author: frh_toolbox developers

Test functions with closed-form transforms. Each phantom is callable on
arrays of points of shape (m, dim) and knows its forward transform on any
batch of geodesics, through the distance parameter of the geodesic to the
phantom's centre.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import str

from .fraccalc import Profile1D
from .geometry import (
    EUCLIDEAN, HYPERBOLIC, SPHERICAL, as_coords, chart_radius,
    minkowski_form, reach_about)
from .numerics import TailSpec, gamma_fn, sigma


class Phantom(object):
    """
    Base class. Subclasses define _profile (the function of the distance
    to the centre, or of [c, y] on H^n, or of c . y on S^n), _radon (the
    transform as a function of the distance parameter) and the decay
    metadata.
    """
    def __init__(self, space, center=None):
        self.space = space
        if center is None:
            center = space.base_point()
        self.center = as_coords(center, space)
        self.sourceDecay = None
        self.radonDecay = None

    def __call__(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return self._profile(self._radial_variable(points))

    def _radial_variable(self, points):
        if self.space.isEuclidean:
            return np.linalg.norm(points - self.center[None, :], axis=1)
        if self.space.isHyperbolic:
            return minkowski_form(points, self.center[None, :])
        return points.dot(self.center)

    def value_at(self, x):
        coords = as_coords(x, self.space)
        return float(self(coords[None, :])[0])

    def is_radial_about(self, x):
        coords = as_coords(x, self.space)
        return np.max(np.abs(coords - self.center)) <= 1e-12

    def radon(self, geo):
        """
        Closed-form transform on a GeodesicParam.
        """
        if geo.isZonal and not np.allclose(self.center,
                                           self.space.base_point()):
            raise ValueError(u"Error: zonal geodesic families describe "
                             "geodesics about the base point; the phantom "
                             "is centred elsewhere.")
        r = chart_radius(self.center, geo, self.space)
        return np.asarray(self._radon(r), dtype=float)

    def radon_profile(self):
        """
        The transform as a Profile1D in the distance parameter.
        """
        return Profile1D(self._radon, decay=self.radonDecay, smoothnessHint=4)

    def reach(self, x):
        """
        Distance parameter about x beyond which the transform is negligible.
        """
        return reach_about(self.space, x, self.center,
                           self.radonDecay.truncationRadius)

    def mean_decay(self, x):
        """
        Decay of the spherical mean profile about x, r -> (M_x f)(r) on R^n
        and t -> (M~_x f)(t) on H^n.
        """
        decay = self.meanDecay
        if self.space.isSpherical:
            return decay
        return decay.with_truncation_radius(reach_about(
            self.space, x, self.center, decay.truncationRadius))

    @property
    def meanDecay(self):
        return self.sourceDecay

    @property
    def lengthScale(self):
        return self.radonDecay.lengthScale

    def describe(self):
        return self.__class__.__name__


def _require(space, curvature, name):
    if space.curvature != curvature:
        raise ValueError(u"Error: " + name + u" lives on " + curvature +
                         u" space, not on " + space.curvature + u" space.")


class GaussianPhantom(Phantom):
    """
    f(y) = amplitude * exp(-|y - center|^2 / width^2) on R^n.
    """
    def __init__(self, space, center=None, width=1.0, amplitude=1.0):
        _require(space, EUCLIDEAN, u"GaussianPhantom")
        Phantom.__init__(self, space, center)
        if width <= 0:
            raise ValueError(u"Error: width must be positive.")
        self.width = width
        self.amplitude = amplitude
        k = space.k
        self.radonScale = amplitude * (np.sqrt(np.pi) * width) ** k
        self.sourceDecay = TailSpec.gaussian(lengthScale=width,
                                             scale=amplitude)
        self.radonDecay = TailSpec.gaussian(lengthScale=width,
                                            scale=self.radonScale)

    def _profile(self, t):
        return self.amplitude * np.exp(-(t / self.width) ** 2)

    def _radon(self, r):
        return self.radonScale * np.exp(-(r / self.width) ** 2)

    def radial_profile(self):
        return Profile1D(self._profile, decay=self.sourceDecay,
                         smoothnessHint=4)

    def describe(self):
        return (u"gaussian(center=" + str(list(self.center)) + u", width=" +
                str(self.width) + u")")


class RadialPowerPhantom(Phantom):
    """
    f(y) = (1 + |y - center|^2)^(-beta) on R^n, decay order 2 beta.
    """
    def __init__(self, space, beta, center=None):
        _require(space, EUCLIDEAN, u"RadialPowerPhantom")
        Phantom.__init__(self, space, center)
        self.beta = beta
        k = space.k
        self.sourceDecay = TailSpec.power(2 * beta, truncationRadius=20.0)
        self.radonDecay = TailSpec.power(2 * beta - k, truncationRadius=20.0)

    def _profile(self, t):
        return (1 + t * t) ** (-self.beta)

    def _radon(self, r):
        k = self.space.k
        if self.beta <= k / 2:
            raise ValueError(u"Error: the transform of (1+|y|^2)^-beta is "
                             "infinite for beta <= k/2.")
        const = (np.pi ** (k / 2) * gamma_fn(self.beta - k / 2) /
                 gamma_fn(self.beta))
        return const * (1 + r * r) ** (k / 2 - self.beta)

    def radial_profile(self):
        return Profile1D(self._profile, decay=self.sourceDecay,
                         smoothnessHint=4)

    def describe(self):
        return u"radial_power(beta=" + str(self.beta) + u")"


class RadialBumpPhantom(Phantom):
    """
    f(y) = (1 - |y - center|^2)_+^gamma on R^n. For small gamma the function
    is continuous but not differentiable at the unit sphere.
    """
    def __init__(self, space, gamma, center=None):
        _require(space, EUCLIDEAN, u"RadialBumpPhantom")
        Phantom.__init__(self, space, center)
        if gamma <= 0:
            raise ValueError(u"Error: gamma must be positive.")
        self.gamma = gamma
        self.sourceDecay = TailSpec.compact(1.0)
        self.radonDecay = TailSpec.compact(1.0)

    def _profile(self, t):
        return np.maximum(0.0, 1 - t * t) ** self.gamma

    def _radon(self, r):
        k = self.space.k
        const = (np.pi ** (k / 2) * gamma_fn(self.gamma + 1) /
                 gamma_fn(self.gamma + 1 + k / 2))
        return const * np.maximum(0.0, 1 - r * r) ** (self.gamma + k / 2)

    def radial_profile(self):
        return Profile1D(self._profile, decay=self.sourceDecay,
                         smoothnessHint=0)

    def describe(self):
        return u"radial_bump(gamma=" + str(self.gamma) + u")"


class ZonalGaussianPhantom(Phantom):
    """
    Zonal function on H^n with f(y) = f0([center, y]),
    f0(s) = s exp(-(s^2 - 1) / width^2), so that
    f~0(t) = (1 + t^2)^(-1/2) f0(sqrt(1 + t^2)) = exp(-t^2 / width^2).
    """
    def __init__(self, space, center=None, width=1.0):
        _require(space, HYPERBOLIC, u"ZonalGaussianPhantom")
        Phantom.__init__(self, space, center)
        if width <= 0:
            raise ValueError(u"Error: width must be positive.")
        self.width = width
        k = space.k
        self.radonScale = np.pi ** (k / 2) * width ** k
        self.sourceDecay = TailSpec.gaussian(lengthScale=width,
                                             truncationRadius=1 + 6.5 * width)
        self.tildeDecay = TailSpec.gaussian(lengthScale=width)
        self.radonDecay = TailSpec.gaussian(lengthScale=width,
                                            scale=self.radonScale)

    def _profile(self, s):
        return s * np.exp(-(s * s - 1) / self.width ** 2)

    def _radon(self, r):
        k = self.space.k
        return (self.radonScale * (1 + r * r) ** ((1 - k) / 2) *
                np.exp(-(r / self.width) ** 2))

    def zonal_profile(self):
        return Profile1D(self._profile, decay=self.sourceDecay,
                         smoothnessHint=4)

    def tilde_profile(self):
        return Profile1D(_GaussianTilde(self.width), decay=self.tildeDecay,
                         smoothnessHint=4)

    @property
    def meanDecay(self):
        return self.tildeDecay

    def describe(self):
        return u"zonal_gaussian(width=" + str(self.width) + u")"


class _GaussianTilde(object):
    def __init__(self, width):
        self.width = width

    def __call__(self, t):
        return np.exp(-(t / self.width) ** 2)


class ZonalPowerPhantom(Phantom):
    """
    f(y) = [center, y]^(-mu) on H^n.
    """
    def __init__(self, space, mu, center=None):
        _require(space, HYPERBOLIC, u"ZonalPowerPhantom")
        Phantom.__init__(self, space, center)
        self.mu = mu
        self.sourceDecay = TailSpec.power(mu, truncationRadius=20.0)
        self.tildeDecay = TailSpec.power(mu + 1, truncationRadius=20.0)
        self.radonDecay = TailSpec.power(mu, truncationRadius=20.0)

    def _profile(self, s):
        return s ** (-self.mu)

    def _radon(self, r):
        k = self.space.k
        if self.mu <= k - 1:
            raise ValueError(u"Error: the transform of x_(n+1)^-mu is "
                             "infinite for mu <= k-1.")
        const = (np.pi ** (k / 2) * gamma_fn((1 + self.mu - k) / 2) /
                 gamma_fn((1 + self.mu) / 2))
        return const * (1 + r * r) ** (-self.mu / 2)

    def zonal_profile(self):
        return Profile1D(self._profile, decay=self.sourceDecay,
                         smoothnessHint=4)

    @property
    def meanDecay(self):
        return self.tildeDecay

    def describe(self):
        return u"zonal_power(mu=" + str(self.mu) + u")"


class ConstantPhantom(Phantom):
    """
    f = value on S^n; every great k-sphere has area sigma_k.
    """
    def __init__(self, space, value=1.0):
        _require(space, SPHERICAL, u"ConstantPhantom")
        Phantom.__init__(self, space)
        self.value = value
        self.sourceDecay = TailSpec.compact(1.0)
        self.radonDecay = TailSpec.compact(1.0)

    def __call__(self, points):
        points = np.atleast_2d(points)
        return np.full(points.shape[0], float(self.value))

    def is_radial_about(self, x):
        as_coords(x, self.space)
        return True

    def radon(self, geo):
        return np.full(geo.size, self.value * sigma(self.space.k))

    def _radon(self, r):
        return self.value * sigma(self.space.k) * np.ones_like(
            np.asarray(r, dtype=float))

    def describe(self):
        return u"constant(" + str(self.value) + u")"


class SphereQuadraticPhantom(Phantom):
    """
    Even phantom f(y) = 1 + b (c . y)^2 on S^n, zonal about the axis c.
    """
    def __init__(self, space, axis=None, b=1.0):
        _require(space, SPHERICAL, u"SphereQuadraticPhantom")
        Phantom.__init__(self, space, axis)
        self.b = b
        self.sourceDecay = TailSpec.compact(1.0)
        self.radonDecay = TailSpec.compact(1.0)

    def _profile(self, s):
        return 1 + self.b * s * s

    def is_radial_about(self, x):
        coords = as_coords(x, self.space)
        return min(np.max(np.abs(coords - self.center)),
                   np.max(np.abs(coords + self.center))) <= 1e-12

    def _radon(self, r):
        k = self.space.k
        return sigma(k) * (1 + self.b * r * r / (k + 1))

    def describe(self):
        return u"sphere_quadratic(b=" + str(self.b) + u")"


class SphereOddPhantom(Phantom):
    """
    Odd phantom f(y) = c . y on S^n. Its transform vanishes identically.
    """
    def __init__(self, space, axis=None):
        _require(space, SPHERICAL, u"SphereOddPhantom")
        Phantom.__init__(self, space, axis)
        self.sourceDecay = TailSpec.compact(1.0)
        self.radonDecay = TailSpec.compact(1.0)

    def _profile(self, s):
        return s

    def _radon(self, r):
        return np.zeros_like(np.asarray(r, dtype=float))

    def describe(self):
        return u"sphere_odd"
