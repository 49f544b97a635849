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

Module: direct_diff.py
Author: frh_toolbox developers

Inversion by ordinary derivatives at r = 0: the weighted shifted dual
transform for even k, its Euclidean limit form, and the operators with
sgn and log kernels over the whole family of k-planes in R^n.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import range, str
from scipy.special import binom, factorial

from .geometry import as_coords, dual_mean_profile
from .numerics import (
    CENTRAL, ENDPOINT_LOG, LEFT, POWER, RIGHT, QuadratureSpec,
    derivative_at, integrate_singular, integrate_tail, limit_at_zero, sigma)


SGN = u"sgn"
LOG = u"log"
KERNELS = (SGN, LOG)


class DirectConstants(object):
    """
    Normalizing constants of the direct formulas on a space of type
    (n, k):
      cX       = (-1)^(k/2) (k-1)! sigma_(k-1), doubled on S^n (k even);
      ck       = (-1)^(k/2) / ((k-1)! sigma_(k-1)) (k even);
      dX       = 2 (-1)^((k+2)/2) sigma_(n-k-1) sigma_(k-1) (k-1)! on R^n
                 and H^n, 2 sigma_(n-k-1) sigma_k sigma_(k-1) (k-1)! / sigma_n
                 on S^n (k even);
      tildeDX  = pi (-1)^((k-1)/2) sigma_(n-k-1) sigma_(k-1) (k-1)! on R^n
                 and H^n, times 2 sigma_k / sigma_n on S^n (k odd).
    Constants that do not apply to the parity of k are None.
    """
    def __init__(self, space):
        self.space = space
        n, k = space.n, space.k
        self.k = k
        base = factorial(k - 1, exact=True) * sigma(k - 1)
        self.cX = None
        self.ck = None
        self.dX = None
        self.tildeDX = None
        if k % 2 == 0:
            sign = (-1) ** (k // 2)
            self.cX = sign * base
            self.ck = sign / base
            if space.isSpherical:
                self.cX *= 2
                self.dX = 2 * sigma(n - k - 1) * sigma(k) * base / sigma(n)
            else:
                self.dX = 2 * (-1) ** ((k + 2) // 2) * sigma(n - k - 1) * base
        else:
            self.tildeDX = np.pi * (-1) ** ((k - 1) // 2) * sigma(
                n - k - 1) * base
            if space.isSpherical:
                self.tildeDX *= 2 * sigma(k) / sigma(n)
        self.lam = space.lam

    def __repr__(self):
        return (u"DirectConstants(cX=" + str(self.cX) + u", dX=" +
                str(self.dX) + u", tildeDX=" + str(self.tildeDX) + u")")


class _WeightedDual(object):
    """
    rho -> lambda_X(rho) (R*_x phi) in the distance chart rho.
    """
    def __init__(self, dual):
        self.dual = dual

    def __call__(self, rho):
        return self.dual.weightLambda(rho) * self.dual.in_distance_chart(rho)


def helgason_reconstruct(phi, x, space, levels=6, relTol=1e-6, degree=None,
                         numNodes=None, fullOutput=False):
    """
    f(x) = cX^-1 (d/drho)^k [lambda_X(rho) (R*_x phi)](0), k even, with a
    one-sided derivative at rho = 0.
    Args:
      phi: TransformField.
      x: Point or coordinates.
      space: SpaceDescriptor.
    Returns:
      The value, or a LimitEstimate of the derivative (already divided by
      cX) if fullOutput.
    """
    k = space.k
    if k % 2:
        raise ValueError(u"Error: the direct formula needs even k, got k = " +
                         str(k) + u".")
    constants = DirectConstants(space)
    coords = as_coords(x, space)
    dual = dual_mean_profile(phi, coords, space, degree=degree,
                             numNodes=numNodes)
    ell = 1.0 if space.isSpherical else phi.decay.lengthScale
    estimate = derivative_at(_WeightedDual(dual), 0.0, k, side=RIGHT,
                             step0=0.1 * ell, levels=levels, relTol=relTol)
    estimate.value /= constants.cX
    estimate.errorEstimate /= abs(constants.cX)
    if fullOutput:
        return estimate
    return estimate.value


class _AppendixDerivative(object):
    def __init__(self, dual, k, ck, ell, levels, relTol):
        self.dual = dual
        self.k = k
        self.ck = ck
        self.ell = ell
        self.levels = levels
        self.relTol = relTol

    def __call__(self, r):
        step = min(0.1 * self.ell, r / (self.k + 1))
        estimate = derivative_at(self.dual, r, self.k, side=CENTRAL,
                                 step0=step, levels=self.levels,
                                 relTol=self.relTol)
        return self.ck * (-1) ** self.k * estimate.value


def appendix_reconstruct(phi, x, space, r0=0.4, levels=6, relTol=1e-6,
                         degree=None, numNodes=None, fullOutput=False):
    """
    f(x) = lim_{r -> 0} ck (-d/dr)^k (R*_x phi)(r) on R^n, k even.
    Returns:
      The value, or the LimitEstimate if fullOutput.
    """
    k = space.k
    if not space.isEuclidean:
        raise ValueError(u"Error: appendix_reconstruct works on R^n.")
    if k % 2:
        raise ValueError(u"Error: appendix_reconstruct needs even k.")
    constants = DirectConstants(space)
    coords = as_coords(x, space)
    dual = dual_mean_profile(phi, coords, space, degree=degree,
                             numNodes=numNodes)
    g = _AppendixDerivative(dual.values, k, constants.ck,
                            phi.decay.lengthScale, levels, relTol)
    estimate = limit_at_zero(g, r0=r0, levels=levels, power=2,
                             relTol=1e-4)
    if fullOutput:
        return estimate
    return estimate.value


class _Moment(object):
    def __init__(self, mean, power):
        self.mean = mean
        self.power = power

    def __call__(self, t):
        return self.mean(t) * t ** self.power


def appendix_split(meanProfile, k, r, relTol=1e-10):
    """
    Splits the dual transform of a radial function into
      (R*_x phi)(r) = sigma_(k-1) [A(r) + (-1)^(k/2) B(r)],
      A(r) = int_0^inf M(t) (t^2 - r^2)^(k/2-1) t dt,
      B(r) = int_0^r M(t) (r^2 - t^2)^(k/2-1) t dt,
    with M the spherical mean profile. A is a polynomial in r of degree
    k-2, evaluated through the moments of M.
    Args:
      meanProfile: Profile1D with decay metadata.
      k: int, even.
      r: float, nonnegative.
    Returns:
      (A, B).
    """
    if k % 2 or k < 2:
        raise ValueError(u"Error: appendix_split needs even k >= 2.")
    if r < 0:
        raise ValueError(u"Error: r must be nonnegative.")
    decay = meanProfile.decay
    if decay is None:
        raise ValueError(u"Error: appendix_split needs the decay of the "
                         "mean profile.")
    m = k // 2 - 1
    spec = QuadratureSpec(nodeCount=200, relTol=relTol, absTol=1e-14)
    A = 0.0
    for j in range(m + 1):
        moment = integrate_tail(_Moment(meanProfile, 2 * j + 1), 0.0, decay,
                                spec)
        A += binom(m, j) * (-r * r) ** (m - j) * moment
    B = 0.0
    if r > 0:
        def band(t):
            return meanProfile(t) * (r * r - t * t) ** m * t
        B = integrate_singular(band, 0.0, r, spec)
    return A, B


def _log_spec(end, relTol):
    return QuadratureSpec(ENDPOINT_LOG, singularExponent=0.0,
                          oppositeExponent=0.0, singularEnd=end,
                          relTol=relTol, absTol=1e-14)


def _check_kernel(space, kernel):
    k = space.k
    expected = SGN if k % 2 == 0 else LOG
    if kernel is None:
        return expected
    if kernel not in KERNELS:
        raise ValueError(u"Error: unknown kernel " + str(kernel) + u".")
    if kernel != expected:
        raise ValueError(u"Error: k = " + str(k) + u" needs the " +
                         expected + u" kernel.")
    return kernel


def mader_operator(phi, x, r, kernel=None, dual=None, relTol=1e-10,
                   degree=None, numNodes=None):
    """
    Integral of phi over all k-planes of R^n against a kernel in the
    distance rho to x:
      sgn: (L*_x phi)(r) = int phi(xi) rho^(k+1-n) sgn(rho - r) dxi;
      log: (L~*_x phi)(r) = int phi(xi) rho^(k+1-n) log|rho^2 - r^2| dxi.
    In polar form about x both reduce to
    sigma_(n-k-1) int_0^inf (R*_x phi)(rho) K(rho, r) drho. The log
    singularity at rho = r is integrated with logarithmic weights on both
    sides of it.
    Args:
      phi: TransformField on R^n with rapid decay.
      x: Point or coordinates.
      r: float, nonnegative.
      kernel: string, 'sgn' (even k) or 'log' (odd k); by parity if None.
      dual: DualMeanProfile about x, computed if None.
    Returns:
      The value.
    """
    space = phi.space
    n, k = space.n, space.k
    if not space.isEuclidean:
        raise ValueError(u"Error: the sgn and log kernel operators are "
                         "implemented on R^n only.")
    kernel = _check_kernel(space, kernel)
    if phi.decay is None or phi.decay.decayKind == POWER:
        raise ValueError(u"Error: the kernel operators need a field with "
                         "compact support or rapid decay.")
    if r < 0:
        raise ValueError(u"Error: r must be nonnegative.")
    coords = as_coords(x, space)
    if dual is None:
        dual = dual_mean_profile(phi, coords, space, degree=degree,
                                 numNodes=numNodes)
    D = dual.values
    R = phi.support_radius(coords)
    smooth = QuadratureSpec(nodeCount=200, relTol=relTol, absTol=1e-14)
    if kernel == SGN:
        inner = 0.0
        if r > 0:
            inner = integrate_singular(D, 0.0, min(r, R), smooth)
        outer = 0.0
        if r < R:
            outer = integrate_singular(D, r, R, smooth)
        return sigma(n - k - 1) * (outer - inner)

    if r == 0:
        value = 2 * integrate_singular(D, 0.0, R, _log_spec(LEFT, relTol))
        return sigma(n - k - 1) * value

    def shifted_log(rho):
        return D(rho) * np.log(rho + r)
    value = integrate_singular(shifted_log, 0.0, R, smooth)
    if r < R:
        value += integrate_singular(D, 0.0, r, _log_spec(RIGHT, relTol))
        value += integrate_singular(D, r, R, _log_spec(LEFT, relTol))
    else:
        def far_log(rho):
            return D(rho) * np.log(r - rho)
        value += integrate_singular(far_log, 0.0, R, smooth)
    return sigma(n - k - 1) * value


class _MaderCurve(object):
    def __init__(self, phi, x, kernel, dual):
        self.phi = phi
        self.x = x
        self.kernel = kernel
        self.dual = dual

    def __call__(self, r):
        return mader_operator(self.phi, self.x, r, kernel=self.kernel,
                              dual=self.dual)


def mader_reconstruct(phi, x, kernel=None, levels=6, relTol=1e-6,
                      degree=None, numNodes=None, fullOutput=False):
    """
    f(x) = dX^-1 (d/dr)^(k+1) (L*_x phi)(0) for even k and
    tildeDX^-1 (d/dr)^(k+1) (L~*_x phi)(0) for odd k, with a one-sided
    derivative at r = 0.
    Returns:
      The value, or a LimitEstimate if fullOutput.
    """
    space = phi.space
    k = space.k
    kernel = _check_kernel(space, kernel)
    if not space.isEuclidean:
        raise ValueError(u"Error: the sgn and log kernel operators are "
                         "implemented on R^n only.")
    coords = as_coords(x, space)
    dual = dual_mean_profile(phi, coords, space, degree=degree,
                             numNodes=numNodes)
    constants = DirectConstants(space)
    const = constants.dX if k % 2 == 0 else constants.tildeDX
    curve = _MaderCurve(phi, coords, kernel, dual)
    estimate = derivative_at(curve, 0.0, k + 1, side=RIGHT,
                             step0=0.1 * phi.decay.lengthScale, levels=levels,
                             relTol=relTol)
    estimate.value /= const
    estimate.errorEstimate /= abs(const)
    if fullOutput:
        return estimate
    return estimate.value
