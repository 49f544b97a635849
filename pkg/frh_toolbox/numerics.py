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

Module: numerics.py
Author: frh_toolbox developers

Shared numerical substrate: quadrature for integrands with algebraic or
logarithmic endpoint weights, integration over half-lines with declared tail
decay, finite differences with Richardson extrapolation, extrapolated limits
at zero and a few special functions.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import range, str
from scipy.integrate import quad
from scipy.special import binom, erfc, gamma


ENDPOINT_SINGULAR_POWER = u"endpoint-singular-power"
SMOOTH_ADAPTIVE = u"smooth-adaptive"
ENDPOINT_LOG = u"endpoint-log"
RULE_KINDS = (ENDPOINT_SINGULAR_POWER, SMOOTH_ADAPTIVE, ENDPOINT_LOG)

POWER = u"power"
GAUSSIAN = u"gaussian"
EXPONENTIAL = u"exponential"
COMPACT = u"compact"
LP = u"lp"
DECAY_KINDS = (POWER, GAUSSIAN, EXPONENTIAL, COMPACT, LP)

CENTRAL = u"central"
RIGHT = u"right"
LEFT = u"left"

# Return early when a higher extrapolation order is worse than the best
# estimate by this factor.
SAFE = 2.0


class QuadratureSpec(object):
    """
    Describes how a definite integral should be evaluated. For the power and
    log rule kinds the integrand passed to integrate_singular is the regular
    factor only; the weight (s-a)^alpha (b-s)^beta, optionally times a log
    factor at the singular end, is applied by the rule.
    """
    def __init__(self, ruleKind=SMOOTH_ADAPTIVE, singularExponent=0.0,
                 nodeCount=200, relTol=1e-8, singularEnd=RIGHT,
                 oppositeExponent=0.0, absTol=1e-14):
        """
        Args:
          ruleKind: string, one of endpoint-singular-power, smooth-adaptive or
              endpoint-log.
          singularExponent: float, exponent of the weight at the singular
              end. Must be larger than -1.
          nodeCount: int, maximum number of adaptive subintervals.
          relTol: float, requested relative accuracy.
          singularEnd: string, either 'left' or 'right'.
          oppositeExponent: float, exponent of the weight at the other end.
              Must be larger than -1.
          absTol: float, requested absolute accuracy.
        """
        if ruleKind not in RULE_KINDS:
            raise ValueError(u"Error: unknown quadrature rule kind " +
                             str(ruleKind) + u".")
        if singularExponent <= -1 or oppositeExponent <= -1:
            raise ValueError(u"Error: endpoint exponents must be larger than "
                             "-1 for the weight to be integrable.")
        if nodeCount < 2:
            raise ValueError(u"Error: nodeCount must be at least 2.")
        if relTol <= 0:
            raise ValueError(u"Error: relTol must be positive.")
        if singularEnd not in (LEFT, RIGHT):
            raise ValueError(u"Error: singularEnd must be 'left' or 'right'.")
        self.ruleKind = ruleKind
        self.singularExponent = singularExponent
        self.nodeCount = nodeCount
        self.relTol = relTol
        self.singularEnd = singularEnd
        self.oppositeExponent = oppositeExponent
        self.absTol = absTol

    @property
    def leftExponent(self):
        if self.singularEnd == LEFT:
            return self.singularExponent
        return self.oppositeExponent

    @property
    def rightExponent(self):
        if self.singularEnd == RIGHT:
            return self.singularExponent
        return self.oppositeExponent

    @classmethod
    def jacobi(cls, leftExponent, rightExponent, relTol=1e-8, nodeCount=200,
               absTol=1e-14):
        """
        Weight (s-a)^leftExponent (b-s)^rightExponent.
        """
        return cls(ENDPOINT_SINGULAR_POWER, singularExponent=rightExponent,
                   nodeCount=nodeCount, relTol=relTol, singularEnd=RIGHT,
                   oppositeExponent=leftExponent, absTol=absTol)

    def __repr__(self):
        return (u"QuadratureSpec(" + self.ruleKind + u", left=" +
                str(self.leftExponent) + u", right=" +
                str(self.rightExponent) + u", relTol=" + str(self.relTol) +
                u")")


class TailSpec(object):
    """
    Decay metadata of a function on a half-line. The amplitude bound 'scale'
    and the decay length 'lengthScale' turn the decay class into a concrete
    bound on the remainder beyond 'truncationRadius'.
    """
    def __init__(self, decayKind, truncationRadius=10.0, mu=None,
                 logExponent=0.0, rate=None, p=None, scale=1.0,
                 lengthScale=1.0):
        """
        Args:
          decayKind: string, one of power, gaussian, exponential, compact, lp.
          truncationRadius: float, radius beyond which the declared decay
              holds (support radius for compact decay).
          mu: float, decay order for power decay, |f(s)| <= scale s^-mu
              log^-logExponent(s).
          logExponent: float, extra logarithmic decay for power decay.
          rate: float, rate of exponential decay, |f(s)| <= scale e^-rate s.
          p: float, integrability exponent of the lp class.
          scale: float, amplitude bound used by tailBound.
          lengthScale: float, characteristic length of the function, used to
              scale finite-difference steps; width of the gaussian decay
              exp(-(s/lengthScale)^2).
        """
        if decayKind not in DECAY_KINDS:
            raise ValueError(u"Error: unknown decay kind " + str(decayKind) +
                             u".")
        if truncationRadius is None or truncationRadius <= 0:
            raise ValueError(u"Error: truncationRadius must be positive.")
        if decayKind == POWER and mu is None:
            raise ValueError(u"Error: power decay requires mu.")
        if decayKind == EXPONENTIAL and (rate is None or rate <= 0):
            raise ValueError(u"Error: exponential decay requires a positive "
                             "rate.")
        if decayKind == LP and (p is None or p < 1):
            raise ValueError(u"Error: the lp class requires p >= 1.")
        if lengthScale <= 0:
            raise ValueError(u"Error: lengthScale must be positive.")
        self.decayKind = decayKind
        self.truncationRadius = float(truncationRadius)
        self.mu = mu
        self.logExponent = logExponent
        self.rate = rate
        self.p = p
        self.scale = scale
        self.lengthScale = lengthScale

    @classmethod
    def power(cls, mu, logExponent=0.0, truncationRadius=10.0, scale=1.0,
              lengthScale=1.0):
        return cls(POWER, truncationRadius=truncationRadius, mu=mu,
                   logExponent=logExponent, scale=scale,
                   lengthScale=lengthScale)

    @classmethod
    def gaussian(cls, lengthScale=1.0, truncationRadius=None, scale=1.0):
        if truncationRadius is None:
            truncationRadius = 6.5 * lengthScale
        return cls(GAUSSIAN, truncationRadius=truncationRadius, scale=scale,
                   lengthScale=lengthScale)

    @classmethod
    def exponential(cls, rate=1.0, truncationRadius=None, scale=1.0):
        if truncationRadius is None:
            truncationRadius = 40.0 / rate
        return cls(EXPONENTIAL, truncationRadius=truncationRadius, rate=rate,
                   scale=scale, lengthScale=1.0 / rate)

    @classmethod
    def compact(cls, radius, scale=1.0, lengthScale=None):
        if lengthScale is None:
            lengthScale = radius
        return cls(COMPACT, truncationRadius=radius, scale=scale,
                   lengthScale=lengthScale)

    @classmethod
    def lp(cls, p, truncationRadius=10.0):
        return cls(LP, truncationRadius=truncationRadius, p=p)

    @property
    def isRapid(self):
        """
        True for decay faster than every power.
        """
        return self.decayKind in (GAUSSIAN, EXPONENTIAL, COMPACT)

    @property
    def tailBound(self):
        """
        Upper bound for the integral of |f| over (truncationRadius, inf).
        """
        R = self.truncationRadius
        if self.decayKind == COMPACT:
            return 0.0
        if self.decayKind == GAUSSIAN:
            ell = self.lengthScale
            return self.scale * 0.5 * np.sqrt(np.pi) * ell * erfc(R / ell)
        if self.decayKind == EXPONENTIAL:
            return self.scale * np.exp(-self.rate * R) / self.rate
        if self.decayKind == POWER and self.mu > 1:
            bound = self.scale * R ** (1 - self.mu) / (self.mu - 1)
            if self.logExponent > 0 and R > np.e:
                bound /= np.log(R) ** self.logExponent
            return bound
        return np.inf

    def with_truncation_radius(self, truncationRadius):
        return TailSpec(self.decayKind, truncationRadius=truncationRadius,
                        mu=self.mu, logExponent=self.logExponent,
                        rate=self.rate, p=self.p, scale=self.scale,
                        lengthScale=self.lengthScale)

    def shifted(self, deltaMu, truncationRadius=None):
        """
        Decay of s^-deltaMu f(s): power orders grow by deltaMu, faster
        classes are unchanged.
        """
        if truncationRadius is None:
            truncationRadius = self.truncationRadius
        mu = self.mu
        if self.decayKind == POWER:
            mu = self.mu + deltaMu
        return TailSpec(self.decayKind, truncationRadius=truncationRadius,
                        mu=mu, logExponent=self.logExponent, rate=self.rate,
                        p=self.p, scale=self.scale,
                        lengthScale=self.lengthScale)

    def __repr__(self):
        if self.decayKind == POWER:
            return (u"TailSpec(power, mu=" + str(self.mu) + u", log=" +
                    str(self.logExponent) + u")")
        if self.decayKind == LP:
            return u"TailSpec(lp, p=" + str(self.p) + u")"
        return (u"TailSpec(" + self.decayKind + u", R=" +
                str(self.truncationRadius) + u")")


class LimitEstimate(object):
    def __init__(self, value, errorEstimate, levelsUsed, converged=True,
                 samples=None):
        """
        Args:
          value: float, extrapolated value.
          errorEstimate: float, agreement between successive tableau entries.
          levelsUsed: int, number of step sizes evaluated.
          converged: boolean, False if the tableau did not contract to the
              requested tolerance or produced non-finite values.
          samples: list of (step, value) pairs for the first tableau column.
        """
        self.value = value
        self.errorEstimate = errorEstimate
        self.levelsUsed = levelsUsed
        self.converged = converged
        self.samples = samples if samples is not None else list()

    def __repr__(self):
        return (u"LimitEstimate(value=" + str(self.value) + u", error=" +
                str(self.errorEstimate) + u", levels=" +
                str(self.levelsUsed) + u", converged=" + str(self.converged) +
                u")")


def _run_quad(f, a, b, spec, points=None):
    kwargs = dict(epsabs=spec.absTol, epsrel=spec.relTol,
                  limit=spec.nodeCount, full_output=1)
    left, right = spec.leftExponent, spec.rightExponent
    if spec.ruleKind == ENDPOINT_LOG:
        if spec.singularEnd == LEFT:
            res = quad(f, a, b, weight=u"alg-loga", wvar=(left, right),
                       **kwargs)
        else:
            res = quad(f, a, b, weight=u"alg-logb", wvar=(left, right),
                       **kwargs)
    elif (spec.ruleKind == ENDPOINT_SINGULAR_POWER and
          (left != 0 or right != 0)):
        res = quad(f, a, b, weight=u"alg", wvar=(left, right), **kwargs)
    else:
        if points is not None and np.isfinite(b):
            kwargs[u"points"] = points
        res = quad(f, a, b, **kwargs)
    # A fourth element carries the QUADPACK message on failure.
    ok = len(res) == 3 and np.isfinite(res[0])
    return res[0], res[1], ok


def integrate_singular(f, a, b, spec=None, fullOutput=False):
    """
    Integrates f times the weight declared by spec over [a, b].
    Args:
      f: callable, regular factor of the integrand. It is evaluated at the
          endpoints by the weighted rules, so it must be finite there.
      a: float, lower limit.
      b: float, upper limit; may be inf for the smooth rule.
      spec: QuadratureSpec.
      fullOutput: boolean, also return the error estimate and a convergence
          flag.
    Returns:
      The integral, or a tuple (integral, absolute error, converged).
    """
    if spec is None:
        spec = QuadratureSpec()
    if not a < b:
        raise ValueError(u"Error: integration limits must satisfy a < b.")
    if spec.ruleKind != SMOOTH_ADAPTIVE and not np.isfinite(b):
        raise ValueError(u"Error: weighted rules need a finite interval.")
    value, abserr, ok = _run_quad(f, a, b, spec)
    if fullOutput:
        return value, abserr, ok
    return value


def integrate_tail(f, a, tail, spec=None, fullOutput=False):
    """
    Integrates f over [a, inf). The interval is split at the truncation
    radius of the declared decay; the remainder beyond it is integrated by
    the infinite-range rule and checked against the analytic tail bound.
    Args:
      f: callable.
      a: float, lower limit.
      tail: TailSpec, decay of |f| beyond tail.truncationRadius.
      spec: QuadratureSpec used on the finite part.
      fullOutput: boolean, also return the error estimate and a flag that
          is False when quadrature failed or the remainder exceeded the
          declared bound.
    Returns:
      The integral, or a tuple (integral, absolute error, ok).
    """
    if spec is None:
        spec = QuadratureSpec()
    if tail.decayKind == LP:
        raise ValueError(u"Error: the lp class carries no pointwise decay.")
    R = tail.truncationRadius
    value, abserr, ok = 0.0, 0.0, True
    if a < R:
        value, abserr, ok = _run_quad(f, a, R, spec)
    if tail.decayKind != COMPACT:
        start = max(a, R)
        smooth = QuadratureSpec(SMOOTH_ADAPTIVE, nodeCount=spec.nodeCount,
                                relTol=spec.relTol, absTol=spec.absTol)
        remainder, remErr, remOk = _run_quad(f, start, np.inf, smooth)
        value += remainder
        abserr += remErr
        ok = ok and remOk
        if np.abs(remainder) > tail.tailBound * (1 + 1e-8) + remErr:
            ok = False
    if fullOutput:
        return value, abserr, ok
    return value


def _difference(f, t0, order, h, side):
    total = 0.0
    if side == CENTRAL:
        for j in range(order + 1):
            total += ((-1) ** j * binom(order, j) *
                      f(t0 + (0.5 * order - j) * h))
    elif side == RIGHT:
        for j in range(order + 1):
            total += (-1) ** (order - j) * binom(order, j) * f(t0 + j * h)
    else:
        for j in range(order + 1):
            total += (-1) ** j * binom(order, j) * f(t0 - j * h)
    return total / h ** order


def _richardson(samples, factor, relTol):
    """
    Neville-style tableau over a geometric sequence of steps, following
    Ridders' error strategy. Successive columns remove error terms of order
    step^(power * j), where factor = 2^power.
    """
    numLevels = len(samples)
    table = [[samples[0]]]
    best = samples[0]
    err = np.inf
    used = 1
    for i in range(1, numLevels):
        row = [samples[i]]
        fac = factor
        for j in range(1, i + 1):
            row.append(row[j - 1] + (row[j - 1] - table[i - 1][j - 1]) /
                       (fac - 1))
            fac *= factor
            errt = max(np.abs(row[j] - row[j - 1]),
                       np.abs(row[j] - table[i - 1][j - 1]))
            if errt <= err:
                err = errt
                best = row[j]
        table.append(row)
        used = i + 1
        if np.abs(row[i] - table[i - 1][i - 1]) >= SAFE * err:
            break
    converged = bool(np.isfinite(best) and np.isfinite(err) and
                     err <= relTol * max(1.0, np.abs(best)))
    return best, err, used, converged


def derivative_at(f, t0, order, side=CENTRAL, step0=0.1, levels=6,
                  relTol=1e-6):
    """
    Estimates the order-th derivative of f at t0 from finite differences over
    steps step0 / 2^j, j = 0..levels-1, combined by Richardson extrapolation.
    Args:
      f: callable, scalar function.
      t0: float, evaluation point.
      order: int, derivative order, at least 1.
      side: string, 'central' uses points on both sides of t0, 'right' only
          points >= t0 and 'left' only points <= t0.
      step0: float, largest step.
      levels: int, number of step sizes.
      relTol: float, tolerance for the convergence flag.
    Returns:
      A LimitEstimate.
    """
    if order < 1:
        raise ValueError(u"Error: derivative order must be at least 1.")
    if side not in (CENTRAL, RIGHT, LEFT):
        raise ValueError(u"Error: side must be 'central', 'right' or "
                         "'left'.")
    if step0 <= 0:
        raise ValueError(u"Error: step0 must be positive.")
    if levels < 2:
        raise ValueError(u"Error: at least two levels are required.")

    steps = [step0 / 2 ** j for j in range(levels)]
    samples = list()
    for h in steps:
        samples.append(_difference(f, t0, order, h, side))
    factor = 4.0 if side == CENTRAL else 2.0
    value, err, used, converged = _richardson(samples, factor, relTol)
    return LimitEstimate(value, err, used, converged,
                         samples=list(zip(steps, samples)))


def limit_at_zero(f, r0=0.4, levels=6, power=1, relTol=1e-6):
    """
    Extrapolates lim_{r->0+} f(r) from the samples f(r0 / 2^j).
    Args:
      f: callable on (0, r0].
      r0: float, first sample point.
      levels: int, number of samples.
      power: int, 2 when f is known to be even in r, 1 otherwise.
      relTol: float, tolerance for the convergence flag.
    Returns:
      A LimitEstimate. Divergent sequences come back with converged=False.
    """
    if r0 <= 0:
        raise ValueError(u"Error: r0 must be positive.")
    if levels < 2:
        raise ValueError(u"Error: at least two levels are required.")
    radii = [r0 / 2 ** j for j in range(levels)]
    samples = [f(r) for r in radii]
    value, err, used, converged = _richardson(samples, 2.0 ** power, relTol)
    return LimitEstimate(value, err, used, converged,
                         samples=list(zip(radii, samples)))


def gamma_fn(x):
    """
    Gamma function for positive arguments.
    """
    if x <= 0:
        raise ValueError(u"Error: gamma_fn is defined here for x > 0 only.")
    return float(gamma(x))


def surface_area(d):
    """
    Area of the unit sphere S^(d-1) in R^d, 2 pi^(d/2) / Gamma(d/2).
    """
    if d < 1:
        raise ValueError(u"Error: surface_area requires d >= 1.")
    return 2 * np.pi ** (d / 2) / gamma_fn(d / 2)


def sigma(j):
    """
    Area of the unit sphere S^j, with sigma(0) = 2.
    """
    return surface_area(j + 1)
