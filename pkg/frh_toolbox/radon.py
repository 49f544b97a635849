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

Module: radon.py
Author: frh_toolbox developers

Forward transforms: closed 1D paths for radial and zonal functions, line
integrals and sinograms for general functions on R^2, Funk transforms by
quadrature on S^n, existence checks and the sharp counterexamples.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import range, str
from multiprocessing import Pool
from scipy.interpolate import RectBivariateSpline

from .fraccalc import (
    DivergenceReport, ExistenceReport, MINUS, PLUS, Profile1D, as_profile,
    ek_integral, is_divergent)
from .geometry import (
    EUCLIDEAN, HYPERBOLIC, GeodesicParam, SpaceDescriptor, as_coords,
    chart_radius, complement_basis, direction_rule, reach_about,
    shifted_dual_transform, spherical_mean, tilde_mean)
from .numerics import (
    LP, QuadratureSpec, TailSpec, integrate_singular, integrate_tail,
    sigma)


ANALYTIC = u"analytic"
RADIAL = u"radial"
SINOGRAM = u"sinogram"

EUCLIDEAN_MOMENT = u"euclidean_moment"
HYPERBOLIC_MOMENT = u"hyperbolic_moment"
COMPACT_SPACE = u"compact_space"

EUCLID_F2 = u"euclid_f2"
HYPER_F1 = u"hyper_f1"
HYPER_F2 = u"hyper_f2"
COUNTEREXAMPLES = (EUCLID_F2, HYPER_F1, HYPER_F2)

NUM_ANGLES = 180
NUM_OFFSETS = 257
ODD_TOLERANCE = 1e-8


class _PhantomTransform(object):
    def __init__(self, phantom):
        self.phantom = phantom

    def __call__(self, geo):
        return self.phantom.radon(geo)


class _RadialTransform(object):
    def __init__(self, profile, space):
        self.profile = profile
        self.space = space

    def __call__(self, geo):
        r = chart_radius(self.space.base_point(), geo, self.space)
        return np.asarray(self.profile(r), dtype=float) * np.ones(geo.size)


class _SinogramTransform(object):
    """
    Bicubic interpolation of an angle x offset grid. The angle axis is
    padded on both sides through phi(theta - pi, u) = phi(theta, -u), which
    needs a grid of offsets symmetric about 0.
    """
    def __init__(self, thetas, offsets, values, pad=3):
        ext = np.concatenate([thetas[-pad:] - np.pi, thetas,
                              thetas[:pad] + np.pi])
        extValues = np.vstack([values[-pad:, ::-1], values,
                               values[:pad, ::-1]])
        self.spline = RectBivariateSpline(ext, offsets, extValues, kx=3, ky=3)
        self.maxOffset = offsets[-1]

    def __call__(self, geo):
        theta, u = geo.line_angles()
        out = self.spline.ev(theta, u)
        out[np.abs(u) > self.maxOffset] = 0.0
        return out


class TransformField(object):
    """
    A function on a family of geodesics: the forward transform of a phantom
    in closed form, a radial profile about the base point, or a sampled
    sinogram of lines in R^2.
    """
    def __init__(self, space, kind, evaluator, decay, center=None,
                 profile=None, sourceDecay=None, phantom=None, thetas=None,
                 offsets=None, values=None):
        """
        Args:
          space: SpaceDescriptor.
          kind: string, one of analytic, radial, sinogram.
          evaluator: callable mapping a GeodesicParam to an array of values.
          decay: TailSpec, decay of the field in the distance parameter.
          center: array, point about which the field is concentrated.
          profile: Profile1D, the field as a function of the distance
              parameter about center, when it only depends on that.
          sourceDecay: TailSpec, decay of the underlying function, if known.
          phantom: the phantom the field was computed from, if any.
          thetas, offsets, values: sinogram grid and samples.
        """
        self.space = space
        self.kind = kind
        self.evaluator = evaluator
        self.decay = decay
        if center is None:
            center = space.base_point()
        self.center = np.asarray(center, dtype=float)
        self.profile = profile
        self.sourceDecay = sourceDecay
        self.phantom = phantom
        self.thetas = thetas
        self.offsets = offsets
        self.values = values

    @classmethod
    def analytic(cls, phantom):
        return cls(phantom.space, ANALYTIC, _PhantomTransform(phantom),
                   phantom.radonDecay, center=phantom.center,
                   profile=phantom.radon_profile(),
                   sourceDecay=phantom.sourceDecay, phantom=phantom)

    @classmethod
    def radial(cls, profile, space, sourceDecay=None):
        """
        Field depending only on the distance parameter about the base point.
        """
        profile = as_profile(profile)
        return cls(space, RADIAL, _RadialTransform(profile, space),
                   profile.decay, profile=profile, sourceDecay=sourceDecay)

    @classmethod
    def sinogram(cls, thetas, offsets, values, decay, center=None,
                 sourceDecay=None):
        """
        Args:
          thetas: strictly increasing angles in [0, pi).
          offsets: strictly increasing offsets, symmetric about 0.
          values: array of shape (len(thetas), len(offsets)).
          decay: TailSpec of the field in the offset.
        """
        thetas = np.asarray(thetas, dtype=float)
        offsets = np.asarray(offsets, dtype=float)
        values = np.asarray(values, dtype=float)
        if np.any(np.diff(thetas) <= 0) or np.any(np.diff(offsets) <= 0):
            raise ValueError(u"Error: sinogram grids must be strictly "
                             "increasing.")
        if thetas[0] < 0 or thetas[-1] >= np.pi:
            raise ValueError(u"Error: sinogram angles must lie in [0, pi).")
        if np.max(np.abs(offsets + offsets[::-1])) > 1e-12 * max(
                1.0, offsets[-1]):
            raise ValueError(u"Error: sinogram offsets must be symmetric "
                             "about 0.")
        if values.shape != (thetas.size, offsets.size):
            raise ValueError(u"Error: sinogram values must have shape "
                             "(angles, offsets).")
        if not np.all(np.isfinite(values)):
            raise ValueError(u"Error: sinogram contains non-finite cells.")
        space = SpaceDescriptor(EUCLIDEAN, 2, 1)
        return cls(space, SINOGRAM,
                   _SinogramTransform(thetas, offsets, values), decay,
                   center=center, sourceDecay=sourceDecay, thetas=thetas,
                   offsets=offsets, values=values)

    def evaluate(self, geo):
        return np.asarray(self.evaluator(geo), dtype=float)

    def __call__(self, geo):
        return self.evaluate(geo)

    @property
    def isRadial(self):
        return self.profile is not None

    def is_centered_at(self, x):
        if self.profile is None:
            return False
        if self.phantom is not None:
            return self.phantom.is_radial_about(x)
        coords = as_coords(x, self.space)
        return np.max(np.abs(coords - self.center)) <= 1e-12

    def support_radius(self, x):
        """
        Distance parameter about x beyond which the field is negligible.
        """
        if self.phantom is not None:
            return self.phantom.reach(x)
        radius = reach_about(self.space, x, self.center,
                             self.decay.truncationRadius)
        if self.kind == SINOGRAM:
            coords = as_coords(x, self.space)
            radius = min(radius, float(np.linalg.norm(coords)) +
                         self.offsets[-1])
        return radius


def tilde_from_zonal(f0):
    """
    f~0(t) = (1 + t^2)^(-1/2) f0(sqrt(1 + t^2)), with decay one order
    faster than that of f0.
    """
    f0 = as_profile(f0)
    decay = None if f0.decay is None else f0.decay.shifted(1.0)
    return Profile1D(_TildeFunction(f0), decay=decay,
                     smoothnessHint=f0.smoothnessHint)


def zonal_from_tilde(ft):
    """
    f0(s) = s f~0(sqrt(s^2 - 1)), the inverse of tilde_from_zonal.
    """
    ft = as_profile(ft)
    decay = None if ft.decay is None else ft.decay.shifted(-1.0)
    return Profile1D(_ZonalFunction(ft), decay=decay,
                     smoothnessHint=ft.smoothnessHint)


class _TildeFunction(object):
    def __init__(self, f0):
        self.f0 = f0

    def __call__(self, t):
        s = np.sqrt(1 + t * t)
        return self.f0(s) / s


class _ZonalFunction(object):
    def __init__(self, ft):
        self.ft = ft

    def __call__(self, s):
        return s * self.ft(np.sqrt(np.maximum(0.0, s * s - 1)))


def radon_radial(f0, space, r, relTol=1e-11):
    """
    Transform of a radial (R^n) or zonal (H^n) function on any geodesic at
    distance parameter r from its centre:
      R^n: pi^(k/2) (I^(k/2)_{-,2} f0)(r);
      H^n: pi^(k/2) (1 + r^2)^((1-k)/2) (I^(k/2)_{-,2} f~0)(r), with f0 a
           function of s = x_(n+1).
    Args:
      f0: Profile1D with decay metadata.
      space: SpaceDescriptor.
      r: float, distance parameter, r >= 0.
    Returns:
      The value, or a DivergenceReport carrying the failed condition.
    """
    f0 = as_profile(f0)
    k = space.k
    if r < 0:
        raise ValueError(u"Error: distance parameter must be nonnegative.")
    if space.isSpherical:
        raise ValueError(u"Error: use funk_zonal for the sphere.")
    if space.isEuclidean:
        value = ek_integral(f0, k / 2, MINUS, r, relTol=relTol)
        if is_divergent(value):
            return DivergenceReport(EUCLIDEAN_MOMENT, value.existence)
        return np.pi ** (k / 2) * value
    value = ek_integral(tilde_from_zonal(f0), k / 2, MINUS, r, relTol=relTol)
    if is_divergent(value):
        return DivergenceReport(HYPERBOLIC_MOMENT, value.existence)
    return np.pi ** (k / 2) * (1 + r * r) ** ((1 - k) / 2) * value


def sphere_mean(f, x, s, space, numNodes=None):
    """
    Mean of f over the section {y: x . y = s} of S^n, including the
    degenerate sections s = 1 and s = -1.
    """
    coords = as_coords(x, space)
    if s >= 1:
        return float(np.ravel(f(coords[None, :]))[0])
    if s <= -1:
        return float(np.ravel(f(-coords[None, :]))[0])
    return spherical_mean(f, coords, s, space, numNodes)


class _EvenSphereMean(object):
    """
    s -> even part of the planar section means of f about x.
    """
    def __init__(self, f, x, space, numNodes):
        self.f = f
        self.x = x
        self.space = space
        self.numNodes = numNodes
        self.oddPart = 0.0

    def __call__(self, s):
        plus = sphere_mean(self.f, self.x, s, self.space, self.numNodes)
        minus = sphere_mean(self.f, self.x, -s, self.space, self.numNodes)
        self.oddPart = max(self.oddPart, abs(plus - minus) / 2)
        return (plus + minus) / 2


def funk_zonal(f, x, r, space, numNodes=None, verbose=False):
    """
    Dual mean of the Funk transform through the planar section means,
    (R*_x R f)(r) = 2 pi^(k/2) r^(1-k) (I^(k/2)_{+,2} g_x)(r),
    g_x(s) = s^-1 (M_x f)(s). Only the even part of f contributes.
    Args:
      f: callable on arrays of points of S^n.
      x: Point or coordinates.
      r: float, 0 < r <= 1.
      space: SpaceDescriptor of a sphere.
      numNodes: quadrature size of the section means.
      verbose: boolean, print a warning when f has an odd part.
    Returns:
      The value.
    """
    if not space.isSpherical:
        raise ValueError(u"Error: funk_zonal is defined on S^n.")
    if r <= 0:
        raise ValueError(u"Error: funk_zonal needs r > 0; at r = 0 use the "
                         "plain dual transform.")
    if r > 1:
        raise ValueError(u"Error: the spherical distance parameter "
                         "r = cos d must be at most 1.")
    k = space.k
    coords = as_coords(x, space)
    even = _EvenSphereMean(f, coords, space, numNodes)
    g = Profile1D(even, power=-1.0)
    value = ek_integral(g, k / 2, PLUS, r)
    if even.oddPart > ODD_TOLERANCE and verbose:
        print(u"Warning: the section means have an odd part of size " +
              str(even.oddPart) + u"; it does not contribute to the "
              "Funk transform.")
    return 2 * np.pi ** (k / 2) * r ** (1 - k) * value


def _line_integral(f, foot, direction, along, decay, relTol):
    def integrand(w):
        plus = foot + (along + w) * direction
        minus = foot + (along - w) * direction
        return float(f(np.vstack([plus, minus])).sum())
    spec = QuadratureSpec(nodeCount=200, relTol=relTol, absTol=1e-14)
    return integrate_tail(integrand, 0.0, decay, spec)


def radon_sampled(f, line, decay, center=None, relTol=1e-10):
    """
    Line integral of f over a line of R^2, by integrate_tail on both half
    lines starting from the point of the line nearest to center.
    Args:
      f: callable on arrays of points (m, 2).
      line: GeodesicParam holding one line.
      decay: TailSpec, decay of f away from center.
      center: array, point about which f is concentrated.
    Returns:
      The value, or a DivergenceReport.
    """
    space = line.space
    if not (space.isEuclidean and space.n == 2 and space.k == 1):
        raise ValueError(u"Error: radon_sampled integrates over lines of "
                         "R^2.")
    if line.isZonal or line.size != 1:
        raise ValueError(u"Error: radon_sampled needs exactly one line.")
    report = check_existence(decay, space)
    if not report.holds:
        return DivergenceReport(EUCLIDEAN_MOMENT, report)
    center = np.zeros(2) if center is None else np.asarray(center)
    zeta = line.normals[0, :, 0]
    foot = line.offsets[0, 0] * zeta
    direction = np.array([-zeta[1], zeta[0]])
    along = float(np.dot(center - foot, direction))
    return _line_integral(f, foot, direction, along, decay, relTol)


def radon_row(f, theta, offsets, decay, center=None, relTol=1e-10):
    """
    Line integrals of f at a fixed angle, over all offsets.
    """
    values = list()
    for u in offsets:
        value = radon_sampled(f, GeodesicParam.line(theta, u), decay,
                              center=center, relTol=relTol)
        values.append(np.inf if is_divergent(value) else value)
    return values


def unwrap_radon_row(arg, **kwarg):
    """
    Wrapper for radon_row(), intended for parallel computation using a
    process pool.
    """
    return radon_row(*arg, **kwarg)


def default_offsets(decay, center=None, numOffsets=NUM_OFFSETS):
    """
    Offsets covering the declared support plus three decay lengths.
    """
    shift = 0.0 if center is None else float(np.linalg.norm(center))
    extent = shift + decay.truncationRadius + 3 * decay.lengthScale
    return np.linspace(-extent, extent, numOffsets)


def build_sinogram(f, thetas=None, offsets=None, decay=None, center=None,
                   numThreads=4, verbose=False):
    """
    Samples the line transform of f on an angle x offset grid.
    Args:
      f: callable on arrays of points (m, 2), typically a phantom.
      thetas: angles in [0, pi); 180 equispaced angles if None.
      offsets: symmetric offsets; 257 points over the support if None.
      decay: TailSpec of f; taken from the phantom if None.
      center: array, point about which f is concentrated.
      numThreads: int, size of the process pool.
      verbose: boolean, whether or not to increase output verbosity.
    Returns:
      A sinogram TransformField, or a DivergenceReport when the line
      transform of f is infinite.
    """
    if decay is None:
        decay = getattr(f, u"sourceDecay", None)
    if decay is None:
        raise ValueError(u"Error: build_sinogram needs the decay of f.")
    report = check_existence(decay, SpaceDescriptor(EUCLIDEAN, 2, 1))
    if not report.holds:
        return DivergenceReport(EUCLIDEAN_MOMENT, report)
    if center is None:
        center = getattr(f, u"center", np.zeros(2))
    if thetas is None:
        thetas = np.pi * np.arange(NUM_ANGLES) / NUM_ANGLES
    if offsets is None:
        offsets = default_offsets(decay, center)
    thetas = np.asarray(thetas, dtype=float)
    offsets = np.asarray(offsets, dtype=float)

    if verbose:
        print(u"Building sinogram with " + str(thetas.size) + u" angles and "
              + str(offsets.size) + u" offsets...")
    args = [(f, theta, offsets, decay, center) for theta in thetas]
    try:
        if numThreads > 1:
            pool = Pool(numThreads)
            rows = pool.map(unwrap_radon_row, args)
            pool.close()
            pool.join()
        else:
            rows = [unwrap_radon_row(arg) for arg in args]
    except:
        print(u"An exception occurred while computing the line integrals "
              "of the sinogram.")
        raise
    values = np.array(rows, dtype=float)

    bad = ~np.isfinite(values)
    if np.any(bad):
        raise RuntimeError(u"Error: " + str(int(bad.sum())) + u" sinogram "
                           "cells are not finite.")
    fieldDecay = TailSpec.compact(offsets[-1], lengthScale=decay.lengthScale)
    return TransformField.sinogram(thetas, offsets, values, fieldDecay,
                                   center=center, sourceDecay=decay)


def funk_sampled(f, geo, numNodes=None):
    """
    Integrals of f over the great subspheres nu^perp of S^n, by quadrature.
    Args:
      f: callable on arrays of points of S^n.
      geo: GeodesicParam of hyperplanes of S^n.
      numNodes: quadrature size, see geometry.direction_rule.
    Returns:
      Array of integrals.
    """
    space = geo.space
    if not space.isSpherical or geo.isZonal:
        raise ValueError(u"Error: funk_sampled needs great subspheres of "
                         "S^n given by their normals.")
    dirs, weights = direction_rule(space.n, numNodes)
    area = sigma(space.k)
    out = np.empty(geo.size)
    for i in range(geo.size):
        E = complement_basis(geo.normals[i])
        out[i] = area * np.dot(weights, f(dirs.dot(E.T)))
    return out


def check_existence(decay, space):
    """
    Sharp existence test for the forward transform of a function with the
    given decay (in |x| on R^n, in x_(n+1) on H^n):
      R^n: power mu > k, or lp with p < n/k;
      H^n: power mu > k-1, or lp with p < (n-1)/(k-1);
      S^n: always, the space is compact.
    At the power boundary a logarithmic factor log^-L decides, through
    margin L - 1.
    Returns:
      ExistenceReport.
    """
    n, k = space.n, space.k
    if space.isSpherical:
        return ExistenceReport(COMPACT_SPACE, True, 0.0, np.inf)
    condition = EUCLIDEAN_MOMENT if space.isEuclidean else HYPERBOLIC_MOMENT
    if decay is None:
        return ExistenceReport(condition, False, np.nan, -np.inf)
    if decay.decayKind == LP:
        if space.isEuclidean:
            critical = n / k
        elif k == 1:
            critical = np.inf
        else:
            critical = (n - 1) / (k - 1)
        margin = critical - decay.p
        return ExistenceReport(condition, margin > 0, critical, margin)
    critical = k if space.isEuclidean else k - 1
    if decay.isRapid:
        return ExistenceReport(condition, True, critical, np.inf)
    if abs(decay.mu - critical) < 1e-12:
        margin = decay.logExponent - 1
        return ExistenceReport(condition, margin > 0, critical, margin)
    margin = decay.mu - critical
    return ExistenceReport(condition, margin > 0, critical, margin)


class _EuclidF2(object):
    def __init__(self, mu, logExponent):
        self.mu = mu
        self.logExponent = logExponent

    def __call__(self, t):
        return (2 + t) ** (-self.mu) / np.log(2 + t) ** self.logExponent


class _LogPower(object):
    def __init__(self, mu):
        self.mu = mu

    def __call__(self, s):
        return s ** (-self.mu) / np.log(1 + s)


def counterexample_profile(which, n, k, p=None, delta=0.25, mu=None,
                           exponentShift=0.0):
    """
    Functions at the boundary of the existence conditions:
      euclid_f2: f(t) = (2+t)^(-n/p) / log^(1/p+delta)(2+t) on R^n, which is
                 in L^p for 0 < delta < 1 - 1/p, with infinite transform
                 for p = n/k;
      hyper_f1:  f0(s) = s^((1-n)/p) / log(1+s) on H^n, with infinite
                 transform for p >= (n-1)/(k-1);
      hyper_f2:  f0(s) = s^(-mu) / log(1+s) on H^n, continuous, with
                 infinite transform for mu = k-1.
    exponentShift > 0 raises the decay exponent into the admissible range.
    Returns:
      Profile1D with power-decay metadata.
    """
    if which == EUCLID_F2:
        if p is None or p <= 1:
            raise ValueError(u"Error: euclid_f2 needs p > 1.")
        if not 0 < delta < 1 - 1 / p:
            raise ValueError(u"Error: euclid_f2 needs 0 < delta < 1 - 1/p.")
        order = n / p + exponentShift
        logExponent = 1 / p + delta
        decay = TailSpec.power(order, logExponent=logExponent)
        return Profile1D(_EuclidF2(order, logExponent), decay=decay,
                         smoothnessHint=4)
    if which == HYPER_F1:
        if k < 2:
            raise ValueError(u"Error: hyper_f1 needs k >= 2.")
        if p is None or p < 1:
            raise ValueError(u"Error: hyper_f1 needs p >= 1.")
        order = (n - 1) / p + exponentShift
    elif which == HYPER_F2:
        order = (k - 1 if mu is None else mu) + exponentShift
        if order <= 0:
            raise ValueError(u"Error: hyper_f2 needs a positive exponent.")
    else:
        raise ValueError(u"Error: unknown counterexample " + str(which) +
                         u".")
    decay = TailSpec.power(order, logExponent=1.0)
    return Profile1D(_LogPower(order), decay=decay, smoothnessHint=4)


class _MeanProfile(object):
    def __init__(self, f, x, space, numNodes):
        self.f = f
        self.x = x
        self.space = space
        self.numNodes = numNodes

    def __call__(self, t):
        if self.space.isHyperbolic:
            return tilde_mean(self.f, self.x, t, self.space, self.numNodes)
        if t == 0:
            return float(np.ravel(self.f(self.x[None, :]))[0])
        return spherical_mean(self.f, self.x, t, self.space, self.numNodes)


def dual_composition(f, x, r, space, phi=None, numNodes=None):
    """
    Both sides of the composition of the dual transform with the forward
    transform:
      R^n: (R*_x R f)(r) = pi^(k/2) (I^(k/2)_{-,2} M_x f)(r);
      H^n: (R*_x R f)(r) =
            pi^(k/2) (1+r^2)^((1-k)/2) (I^(k/2)_{-,2} M~_x f)(r);
      S^n: (R*_x R f)(r) = 2 pi^(k/2) r^(1-k) (I^(k/2)_{+,2} g_x)(r).
    Args:
      f: phantom, callable on points with mean_decay metadata.
      x: Point or coordinates.
      r: float, distance parameter (r > 0 on S^n).
      space: SpaceDescriptor.
      phi: TransformField of R f; the closed form of the phantom if None.
    Returns:
      (lhs, rhs), lhs from the dual transform of R f and rhs from the means
      of f, or a DivergenceReport.
    """
    coords = as_coords(x, space)
    if phi is None:
        phi = TransformField.analytic(f)
    lhs = shifted_dual_transform(phi, coords, r, space, numNodes)
    k = space.k
    if space.isSpherical:
        return lhs, funk_zonal(f, coords, r, space, numNodes)
    means = Profile1D(_MeanProfile(f, coords, space, numNodes),
                      decay=f.mean_decay(coords), smoothnessHint=4)
    value = ek_integral(means, k / 2, MINUS, r)
    if is_divergent(value):
        return value
    rhs = np.pi ** (k / 2) * value
    if space.isHyperbolic:
        rhs *= (1 + r * r) ** ((1 - k) / 2)
    return lhs, rhs


def hyperbolic_duality(f0, n, k, relTol=1e-10):
    """
    Both sides of the weighted duality pairing on H^n for a zonal f with
    profile f0 in s = x_(n+1):
      int_Xi (R f)(xi) cosh^-n d(x0, xi) dxi
          = sigma_(n-k-1) int_0^inf (R f)(r) (1+r^2)^((k-n-1)/2) r^(n-k-1) dr,
      int_X f(x) x_(n+1)^(k-n) dx
          = sigma_(n-1) int_1^inf f0(s) (s^2-1)^(n/2-1) s^(k-n) ds.
    Returns:
      (lhs, rhs), or a DivergenceReport when R f is infinite.
    """
    space = SpaceDescriptor(HYPERBOLIC, n, k)
    f0 = as_profile(f0)
    report = check_existence(f0.decay, space)
    if not report.holds:
        return DivergenceReport(HYPERBOLIC_MOMENT, report)
    spec = QuadratureSpec(nodeCount=200, relTol=relTol, absTol=1e-14)

    def geodesic_side(r):
        value = radon_radial(f0, space, r)
        return (value * (1 + r * r) ** ((k - n - 1) / 2) *
                r ** (n - k - 1))

    def point_side(s):
        return f0(s) * (s * s - 1) ** (n / 2 - 1) * s ** (k - n)

    lhs = sigma(n - k - 1) * integrate_singular(geodesic_side, 0.0, np.inf,
                                                spec)
    rhs = sigma(n - 1) * integrate_singular(point_side, 1.0, np.inf, spec)
    return lhs, rhs
