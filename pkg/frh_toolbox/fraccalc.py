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

Module: fraccalc.py
Author: frh_toolbox developers

Riemann-Liouville integrals I^a_+- and modified Erdelyi-Kober integrals
I^a_{+-,2} on the half-line, their existence predicates, composition
identities and the left inverses D^a_{-,2} in four interchangeable forms.
With D = d/d(t^2) the Erdelyi-Kober integrals are

  (I^a_{+,2} f)(t) = 2/Gamma(a) int_0^t (t^2 - s^2)^(a-1) f(s) s ds,
  (I^a_{-,2} f)(t) = 2/Gamma(a) int_t^inf (s^2 - t^2)^(a-1) f(s) s ds.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import str
from numpy.polynomial.chebyshev import Chebyshev, chebpts2
from scipy.interpolate import PchipInterpolator

from .numerics import (
    CENTRAL, COMPACT, EXPONENTIAL, GAUSSIAN, LP, POWER, QuadratureSpec,
    derivative_at, gamma_fn, integrate_singular)


PLUS = u"plus"
MINUS = u"minus"

INTEGER_D = u"integer_d"
WEIGHTED_COMPOSITION = u"weighted_composition"
USUAL_DERIVATIVE = u"usual_derivative"
DIRECT_COMPLEMENT = u"direct_complement"
DERIVATIVE_VARIANTS = (INTEGER_D, WEIGHTED_COMPOSITION, USUAL_DERIVATIVE,
                       DIRECT_COMPLEMENT)

SEMIGROUP = u"semigroup"
WEIGHTED = u"weighted"
EK_TO_RL = u"ek_to_rl"
RL_SEMIGROUP = u"rl_semigroup"
IDENTITIES = (SEMIGROUP, WEIGHTED, EK_TO_RL, RL_SEMIGROUP)

# Tolerances for the inner quadratures. Derivatives of these values are
# taken downstream, so they are much tighter than the 1e-8 default.
EK_REL_TOL = 1e-11
EK_ABS_TOL = 1e-15
DENOMINATOR_FLOOR = 1e-30

# Inner profiles shared by several derivative stencils are sampled once, at
# nested Chebyshev-Lobatto nodes in log t.
MATERIALIZE_TOL = 1e-10
MIN_MATERIALIZE_DEGREE = 16
MAX_MATERIALIZE_DEGREE = 128


class FractionalOrder(object):
    def __init__(self, alpha):
        """
        Args:
          alpha: float, positive order, split as alpha = m + alpha0 with
              m = [alpha] and 0 <= alpha0 < 1.
        """
        if alpha <= 0:
            raise ValueError(u"Error: fractional order must be positive.")
        self.alpha = float(alpha)
        m = int(np.floor(alpha + 1e-12))
        self.m = m
        self.alpha0 = max(0.0, self.alpha - m)
        if self.alpha0 < 1e-12:
            self.alpha0 = 0.0

    @property
    def isInteger(self):
        return self.alpha0 == 0.0

    def __repr__(self):
        return u"FractionalOrder(" + str(self.alpha) + u")"


def as_order(alpha):
    if isinstance(alpha, FractionalOrder):
        return alpha
    return FractionalOrder(alpha)


class ExistenceReport(object):
    def __init__(self, condition, holds, criticalExponent, margin):
        """
        Args:
          condition: string, name of the moment condition that was checked.
          holds: boolean, whether the condition holds.
          criticalExponent: float, threshold of the decay exponent.
          margin: float, distance to the threshold; positive iff the
              condition holds for power decay.
        """
        self.condition = condition
        self.holds = holds
        self.criticalExponent = criticalExponent
        self.margin = margin

    def __repr__(self):
        return (u"ExistenceReport(" + self.condition + u", holds=" +
                str(self.holds) + u", critical=" +
                str(self.criticalExponent) + u", margin=" + str(self.margin) +
                u")")


class DivergenceReport(object):
    """
    Returned in place of a number when an integral is infinite.
    """
    def __init__(self, reason, existence=None):
        self.reason = reason
        self.existence = existence

    def __repr__(self):
        return (u"DivergenceReport(" + self.reason + u", " +
                repr(self.existence) + u")")


def is_divergent(value):
    return isinstance(value, DivergenceReport)


class Profile1D(object):
    """
    A function of a radial or offset variable t >= 0 with decay metadata.
    The value is t^power * base(t); the power is kept separate so that
    kernels can absorb it analytically instead of sampling a steep factor.
    """
    def __init__(self, evaluate, decay=None, smoothnessHint=2, power=0.0,
                 grid=None, values=None):
        """
        Args:
          evaluate: callable, the base function.
          decay: TailSpec, decay of the full profile t^power * base(t). None
              means no decay is known (plus-type operators do not need it).
          smoothnessHint: int, number of derivatives the profile is expected
              to have.
          power: float, exponent of the factored power of t.
          grid: array of sample points, for sampled profiles.
          values: array of samples, for sampled profiles.
        """
        if decay is not None and decay.decayKind == LP:
            raise ValueError(u"Error: a profile needs pointwise decay, not "
                             "an lp class.")
        self.base = evaluate
        self.decay = decay
        self.smoothnessHint = smoothnessHint
        self.power = power
        self.grid = grid
        self.values = values

    def __call__(self, t):
        if self.power == 0:
            return self.base(t)
        return t ** self.power * self.base(t)

    @property
    def lengthScale(self):
        if self.decay is None:
            return 1.0
        return self.decay.lengthScale

    @property
    def truncationRadius(self):
        if self.decay is None:
            return 10.0
        return self.decay.truncationRadius

    def times_power(self, p):
        """
        The profile t^p f(t), with the power folded into the kernel.
        """
        decay = None if self.decay is None else self.decay.shifted(-p)
        return Profile1D(self.base, decay=decay,
                         smoothnessHint=self.smoothnessHint,
                         power=self.power + p)

    def times(self, weight, decay=None):
        """
        The profile weight(t) f(t). The decay changes only when given.
        """
        base = self.base
        return Profile1D(_ProductFunction(weight, base),
                         decay=decay if decay is not None else self.decay,
                         smoothnessHint=self.smoothnessHint, power=self.power)

    def scaled(self, factor):
        return self.times(_Constant(factor))

    @classmethod
    def from_samples(cls, grid, values, decay, smoothnessHint=1):
        """
        Monotone cubic interpolation of samples; beyond the last sample the
        profile continues according to the declared decay.
        Args:
          grid: strictly increasing positive sample points.
          values: samples.
          decay: TailSpec.
        """
        grid = np.asarray(grid, dtype=float)
        values = np.asarray(values, dtype=float)
        if grid.ndim != 1 or grid.size < 2 or grid.size != values.size:
            raise ValueError(u"Error: grid and values must be 1D arrays of "
                             "equal length, at least 2.")
        if np.any(grid <= 0) or np.any(np.diff(grid) <= 0):
            raise ValueError(u"Error: sample grid must be strictly "
                             "increasing and positive.")
        interp = _SampledFunction(grid, values, decay)
        return cls(interp, decay=decay, smoothnessHint=smoothnessHint,
                   grid=grid, values=values)

    @classmethod
    def from_chebyshev(cls, f, radius, degree, decay, smoothnessHint=4):
        """
        Even Chebyshev interpolant of f(|t|) on [-radius, radius]. Outside the
        interval the profile continues according to the declared decay.
        Args:
          f: callable, evaluated at nonnegative scalars only.
          radius: float, half-width of the interpolation interval.
          degree: int, polynomial degree.
          decay: TailSpec.
        """
        cache = dict()

        def even_values(x):
            out = np.empty(np.shape(x))
            for i, xi in enumerate(np.ravel(x)):
                key = round(abs(float(xi)), 13)
                if key not in cache:
                    cache[key] = f(key)
                out.flat[i] = cache[key]
            return out

        cheb = Chebyshev.interpolate(even_values, degree,
                                     domain=[-radius, radius])
        grid = np.array(sorted(cache.keys()))
        values = np.array([cache[g] for g in grid])
        return cls(_ChebyshevFunction(cheb, radius, decay), decay=decay,
                   smoothnessHint=smoothnessHint, grid=grid, values=values)

    def decay_consistent(self):
        """
        Checks the declared decay against the two largest samples.
        """
        if self.grid is None or self.decay is None:
            return True
        g0, g1 = self.grid[-2], self.grid[-1]
        v0, v1 = np.abs(self.values[-2]), np.abs(self.values[-1])
        if v1 == 0:
            return True
        if v0 == 0:
            return False
        kind = self.decay.decayKind
        if kind == POWER:
            observed = -np.log(v1 / v0) / np.log(g1 / g0)
            return observed >= self.decay.mu - 0.5
        if kind == GAUSSIAN:
            ell = self.decay.lengthScale
            bound = 2 * np.exp(-(g1 ** 2 - g0 ** 2) / ell ** 2)
            return v1 / v0 <= bound + 1e-8
        if kind == EXPONENTIAL:
            return v1 / v0 <= 2 * np.exp(-self.decay.rate * (g1 - g0)) + 1e-8
        return g1 <= self.decay.truncationRadius or v1 < 1e-12


class _Constant(object):
    def __init__(self, value):
        self.value = value

    def __call__(self, t):
        return self.value


class _ProductFunction(object):
    def __init__(self, weight, base):
        self.weight = weight
        self.base = base

    def __call__(self, t):
        return self.weight(t) * self.base(t)


def _continue_by_decay(t, edge, edgeValue, decay):
    if decay is None or decay.decayKind == COMPACT:
        return 0.0
    if decay.decayKind == POWER:
        return edgeValue * (edge / t) ** decay.mu
    if decay.decayKind == GAUSSIAN:
        return edgeValue * np.exp(-(t ** 2 - edge ** 2) /
                                  decay.lengthScale ** 2)
    return edgeValue * np.exp(-decay.rate * (t - edge))


class _SampledFunction(object):
    def __init__(self, grid, values, decay):
        self.interp = PchipInterpolator(grid, values, extrapolate=True)
        self.edge = grid[-1]
        self.edgeValue = values[-1]
        self.decay = decay

    def __call__(self, t):
        if np.isscalar(t):
            if t > self.edge:
                return _continue_by_decay(t, self.edge, self.edgeValue,
                                          self.decay)
            return float(self.interp(t))
        t = np.asarray(t, dtype=float)
        out = self.interp(np.minimum(t, self.edge))
        beyond = t > self.edge
        if np.any(beyond):
            out[beyond] = [_continue_by_decay(ti, self.edge, self.edgeValue,
                                              self.decay) for ti in t[beyond]]
        return out


class _ChebyshevFunction(object):
    def __init__(self, cheb, radius, decay):
        self.cheb = cheb
        self.radius = radius
        self.edgeValue = float(cheb(radius))
        self.decay = decay

    def __call__(self, t):
        if np.isscalar(t):
            if abs(t) > self.radius:
                return _continue_by_decay(abs(t), self.radius,
                                          self.edgeValue, self.decay)
            return float(self.cheb(t))
        t = np.asarray(t, dtype=float)
        out = self.cheb(np.clip(t, -self.radius, self.radius))
        beyond = np.abs(t) > self.radius
        if np.any(beyond):
            out[beyond] = [_continue_by_decay(abs(ti), self.radius,
                                              self.edgeValue, self.decay)
                           for ti in t[beyond]]
        return out


def as_profile(f, decay=None):
    if isinstance(f, Profile1D):
        return f
    return Profile1D(f, decay=decay)


def _moment_report(decay, critical, condition):
    if decay is None:
        return ExistenceReport(condition, False, critical, -np.inf)
    if decay.isRapid:
        return ExistenceReport(condition, True, critical, np.inf)
    if decay.decayKind == LP:
        raise ValueError(u"Error: moment conditions need pointwise decay.")
    mu = decay.mu
    if abs(mu - critical) < 1e-12:
        margin = decay.logExponent - 1
        return ExistenceReport(condition, margin > 0, critical, margin)
    return ExistenceReport(condition, mu > critical, critical, mu - critical)


def rl_existence(f, alpha):
    """
    The moment condition int_1^inf |f(s)| s^(a-1) ds < inf.
    """
    alpha = as_order(alpha)
    return _moment_report(as_profile(f).decay, alpha.alpha, u"rl_moment")


def ek_existence(f, alpha):
    """
    The moment condition int_1^inf |f(s)| s^(2a-1) ds < inf.
    """
    alpha = as_order(alpha)
    return _moment_report(as_profile(f).decay, 2 * alpha.alpha,
                          u"ek_moment")


def exists_rl(f, alpha):
    return rl_existence(f, alpha).holds


def exists_ek(f, alpha):
    return ek_existence(f, alpha).holds


def _split_point(decay, t, squared):
    """
    Returns (U, compact): the upper end of the finite part of a minus-type
    integral in the shifted variable u, and whether nothing lies beyond it.
    """
    R = 10.0 if decay is None else decay.truncationRadius
    compact = decay is not None and decay.decayKind == COMPACT
    if squared:
        U = R ** 2 - t ** 2
    else:
        U = R - t
    if compact:
        return U, True
    return max(1.0, U), False


def _weighted_integral(h, a, b, left, right, relTol):
    """
    int_a^b h(s) (s-a)^left (b-s)^right ds.
    """
    spec = QuadratureSpec.jacobi(left, right, relTol=relTol,
                                 absTol=EK_ABS_TOL)
    return integrate_singular(h, a, b, spec)


def _tail_integral(g, start, relTol):
    spec = QuadratureSpec(nodeCount=200, relTol=relTol, absTol=EK_ABS_TOL)
    return integrate_singular(g, start, np.inf, spec)


def rl_integral(f, alpha, sign, t, relTol=EK_REL_TOL):
    """
    Riemann-Liouville integral (I^a_+ f)(t) or (I^a_- f)(t).
    Args:
      f: Profile1D.
      alpha: FractionalOrder or float.
      sign: string, 'plus' or 'minus'.
      t: float, positive evaluation point.
      relTol: float, quadrature tolerance.
    Returns:
      The value, or a DivergenceReport when the minus-type integral diverges.
    """
    alpha = as_order(alpha)
    f = as_profile(f)
    a = alpha.alpha
    if t <= 0:
        raise ValueError(u"Error: rl_integral needs t > 0.")
    if sign == PLUS:
        p = f.power
        if p <= -1:
            return DivergenceReport(u"rl_plus_origin")
        base = f.base

        def h(w):
            return base(t * w)
        integral = _weighted_integral(h, 0.0, 1.0, p, a - 1, relTol)
        return t ** (a + p) * integral / gamma_fn(a)
    if sign != MINUS:
        raise ValueError(u"Error: sign must be 'plus' or 'minus'.")

    report = rl_existence(f, alpha)
    if not report.holds:
        return DivergenceReport(u"rl_moment", report)
    U, compact = _split_point(f.decay, t, squared=False)
    if U <= 0:
        return 0.0

    def head(u):
        return f(t + u)
    value = _weighted_integral(head, 0.0, U, a - 1, 0.0, relTol)
    if not compact:
        def tail(u):
            return f(t + u) * u ** (a - 1)
        value += _tail_integral(tail, U, relTol)
    return value / gamma_fn(a)


def ek_integral(f, alpha, sign, t, relTol=EK_REL_TOL):
    """
    Modified Erdelyi-Kober integral (I^a_{+,2} f)(t) or (I^a_{-,2} f)(t).
    The minus-type integral is evaluated in u = s^2 - t^2,
      (1/Gamma(a)) int_0^inf f(sqrt(t^2 + u)) u^(a-1) du,
    and the plus-type integral in v = s / t,
      (2/Gamma(a)) t^(2a) int_0^1 f(tv) v (1-v)^(a-1) (1+v)^(a-1) dv.
    Args:
      f: Profile1D.
      alpha: FractionalOrder or float.
      sign: string, 'plus' or 'minus'.
      t: float, evaluation point; t = 0 is allowed for the minus type.
      relTol: float, quadrature tolerance.
    Returns:
      The value, or a DivergenceReport.
    """
    alpha = as_order(alpha)
    f = as_profile(f)
    a = alpha.alpha
    if t < 0:
        raise ValueError(u"Error: ek_integral needs t >= 0.")
    p = f.power
    base = f.base

    if sign == PLUS:
        if t == 0:
            raise ValueError(u"Error: the plus-type integral needs t > 0.")
        if p + 1 <= -1:
            return DivergenceReport(u"ek_plus_origin")

        def h(v):
            return base(t * v) * (1 + v) ** (a - 1)
        integral = _weighted_integral(h, 0.0, 1.0, p + 1, a - 1, relTol)
        return 2 * t ** (2 * a + p) * integral / gamma_fn(a)
    if sign != MINUS:
        raise ValueError(u"Error: sign must be 'plus' or 'minus'.")

    report = ek_existence(f, alpha)
    if not report.holds:
        return DivergenceReport(u"ek_moment", report)
    U, compact = _split_point(f.decay, t, squared=True)
    if U <= 0:
        return 0.0
    if t == 0:
        # f(sqrt(u)) = u^(p/2) base(sqrt(u)); the power joins the weight.
        if a - 1 + p / 2 <= -1:
            return DivergenceReport(u"ek_minus_origin")

        def head(u):
            return base(np.sqrt(u))
        value = _weighted_integral(head, 0.0, U, a - 1 + p / 2, 0.0, relTol)
    else:
        def head(u):
            return f(np.sqrt(t * t + u))
        value = _weighted_integral(head, 0.0, U, a - 1, 0.0, relTol)
    if not compact:
        def tail(u):
            return f(np.sqrt(t * t + u)) * u ** (a - 1)
        value += _tail_integral(tail, U, relTol)
    return value / gamma_fn(a)


def ek_result_profile(f, alpha, sign=MINUS, relTol=EK_REL_TOL):
    """
    The profile t -> (I^a_{+-,2} f)(t), evaluated lazily, with its decay.
    """
    alpha = as_order(alpha)
    f = as_profile(f)
    decay = None
    if f.decay is not None:
        if sign == MINUS:
            decay = f.decay.shifted(-2 * alpha.alpha)
        else:
            decay = f.decay
    return Profile1D(_EKEvaluator(f, alpha, sign, relTol), decay=decay,
                     smoothnessHint=f.smoothnessHint)


class _EKEvaluator(object):
    def __init__(self, f, alpha, sign, relTol):
        self.f = f
        self.alpha = alpha
        self.sign = sign
        self.relTol = relTol

    def __call__(self, t):
        value = ek_integral(self.f, self.alpha, self.sign, t,
                            relTol=self.relTol)
        if is_divergent(value):
            return np.inf
        return value


class _RLEvaluator(object):
    def __init__(self, f, alpha, sign, relTol):
        self.f = f
        self.alpha = alpha
        self.sign = sign
        self.relTol = relTol

    def __call__(self, t):
        value = rl_integral(self.f, self.alpha, self.sign, t,
                            relTol=self.relTol)
        if is_divergent(value):
            return np.inf
        return value


class _LogChartInterpolant(object):
    """
    Chebyshev interpolant of t^power f(t) in the variable log t on a window,
    divided back by t^power; points outside the window are passed to f.
    """
    def __init__(self, f, cheb, tLow, tHigh, degree, power=0.0):
        self.f = f
        self.cheb = cheb
        self.power = power
        self.tLow = tLow
        self.tHigh = tHigh
        self.degree = degree

    def __call__(self, t):
        if self.tLow <= t <= self.tHigh:
            return float(self.cheb(np.log(t))) * t ** -self.power
        return self.f(t)


def materialize(f, tLow, tHigh, power=0.0, relTol=MATERIALIZE_TOL,
                maxDegree=MAX_MATERIALIZE_DEGREE):
    """
    Samples t^power f(t) on [tLow, tHigh] at Chebyshev-Lobatto nodes in
    log t, doubling the degree (and reusing every earlier sample) until the
    three trailing coefficients fall below relTol times the largest one.
    Args:
      f: callable, scalar function of t > 0.
      tLow: float, positive lower end of the window.
      tHigh: float, upper end of the window.
      power: float, removes the leading growth t^-power of f so that the
          coefficient test is relative across the window.
      relTol: float, coefficient tolerance.
      maxDegree: int, power of two times MIN_MATERIALIZE_DEGREE.
    Returns:
      A callable equal to the interpolant on the window and to f outside.
      When the samples are not finite or the series does not settle by
      maxDegree, f itself is returned.
    """
    if not 0 < tLow < tHigh:
        raise ValueError(u"Error: the window must satisfy 0 < tLow < "
                         "tHigh.")
    domain = [np.log(tLow), np.log(tHigh)]
    center = 0.5 * (domain[0] + domain[1])
    halfWidth = 0.5 * (domain[1] - domain[0])
    # Node j of degree d is node j * (maxDegree // d) of the finest grid.
    cache = dict()
    degree = MIN_MATERIALIZE_DEGREE
    while degree <= maxDegree:
        stride = maxDegree // degree
        nodes = center + halfWidth * chebpts2(degree + 1)
        values = np.empty(degree + 1)
        for j, x in enumerate(nodes):
            key = j * stride
            if key not in cache:
                t = np.exp(x)
                cache[key] = t ** power * f(t)
            values[j] = cache[key]
        if not np.all(np.isfinite(values)):
            return f
        cheb = Chebyshev.fit(nodes, values, degree, domain=domain)
        coef = np.abs(cheb.coef)
        scale = np.max(coef)
        if scale == 0 or np.max(coef[-3:]) <= relTol * scale:
            return _LogChartInterpolant(f, cheb, tLow, tHigh, degree,
                                        power=power)
        degree *= 2
    return f


def _inner_evaluator(f, alpha, window, cache, key, power=0.0):
    """
    The lazy inner integral t -> (I^a_{-,2} f)(t), materialized on the
    window when one is given and memoized in cache under key. power is the
    leading growth t^-power of the integral near t = 0.
    """
    evaluator = _EKEvaluator(f, alpha, MINUS, EK_REL_TOL)
    if window is None:
        return evaluator
    if cache is not None and key in cache:
        return cache[key]
    tLow, tHigh = window
    # Every stencil point of a derivative at t lies in [t/2, 3t/2].
    inner = materialize(evaluator, 0.5 * tLow, 1.5 * tHigh, power=power)
    if cache is not None:
        cache[key] = inner
    return inner


def closed_form_ek_power(alpha, beta):
    """
    Closed form of I^a_{-,2} (1+s^2)^-b, namely
    Gamma(b-a)/Gamma(b) (1+t^2)^(a-b), valid for b > a.
    """
    alpha = as_order(alpha).alpha
    if beta <= alpha:
        raise ValueError(u"Error: closed form needs beta > alpha.")
    const = gamma_fn(beta - alpha) / gamma_fn(beta)

    def phi(t):
        return const * (1 + t * t) ** (alpha - beta)
    return phi


def _tau_step(tau0, order, lengthScale):
    # Every stencil point stays above tau0 / (order + 1).
    return min(0.1 * lengthScale ** 2, tau0 / (order + 1))


def _t_step(t0, order, lengthScale):
    return min(0.1 * lengthScale, t0 / (order + 1))


def _tau_derivative(G, t, order, lengthScale, levels, relTol, side=CENTRAL):
    """
    order-th derivative of G with respect to tau = t^2, at tau = t^2.
    """
    tau0 = t * t
    step = _tau_step(tau0, order, lengthScale)
    return derivative_at(G, tau0, order, side=side, step0=step,
                         levels=levels, relTol=relTol)


class _TauComposite(object):
    """
    tau -> tau^weightPower * inner(sqrt(tau)).
    """
    def __init__(self, inner, weightPower=0.0):
        self.inner = inner
        self.weightPower = weightPower

    def __call__(self, tau):
        value = self.inner(np.sqrt(tau))
        if self.weightPower:
            value *= tau ** self.weightPower
        return value


class _TimesT(object):
    def __init__(self, inner):
        self.inner = inner

    def __call__(self, t):
        return t * self.inner(t)


def rl_derivative(phi, beta, t, levels=6, relTol=1e-6, fullOutput=False):
    """
    Riemann-Liouville derivative D^b_- phi = (-d/dt)^(m+1) I^(1-b0)_- phi,
    with b = m + b0; for integer b it is (-d/dt)^b phi.
    Args:
      phi: Profile1D.
      beta: FractionalOrder or float.
      t: float, positive evaluation point.
    Returns:
      The value (or a LimitEstimate if fullOutput), or a DivergenceReport.
    """
    beta = as_order(beta)
    phi = as_profile(phi)
    if t <= 0:
        raise ValueError(u"Error: rl_derivative needs t > 0.")
    if beta.isInteger:
        order = beta.m
        G = phi
    else:
        order = beta.m + 1
        complement = FractionalOrder(1 - beta.alpha0)
        report = rl_existence(phi, complement)
        if not report.holds:
            return DivergenceReport(u"rl_moment", report)
        G = _RLEvaluator(phi, complement, MINUS, EK_REL_TOL)
    estimate = derivative_at(G, t, order, side=CENTRAL,
                             step0=_t_step(t, order, phi.lengthScale),
                             levels=levels, relTol=relTol)
    estimate.value *= (-1) ** order
    if fullOutput:
        return estimate
    return estimate.value


def ek_derivative(phi, alpha, sign=MINUS, variant=INTEGER_D, t=1.0,
                  levels=6, relTol=1e-6, fullOutput=False, window=None,
                  cache=None):
    """
    Erdelyi-Kober derivative (D^a_{-,2} phi)(t), the left inverse of
    I^a_{-,2}. With a = m + a0 and D = d/d(t^2):
      integer_d:             (-D)^m phi, for integer a;
      weighted_composition:  t^(2(1-a+m)) (-D)^(m+1) t^(2a) psi,
                             psi = I^(1-a+m)_{-,2} t^(-2m-2) phi;
      usual_derivative:      2^(-2a) D^(2a)_- t I^a_{-,2} t^(-2a-1) phi,
                             with D^(2a)_- = (-d/dt)^(2a) when 2a is integer;
      direct_complement:     (-D)^(m+1) I^(1-a+m)_{-,2} phi.
    Args:
      phi: Profile1D.
      alpha: FractionalOrder or float.
      sign: string, only 'minus' is supported.
      variant: string, one of DERIVATIVE_VARIANTS.
      t: float, positive evaluation point.
      levels: int, Richardson levels.
      relTol: float, convergence tolerance of the derivative estimate.
      fullOutput: boolean, return the LimitEstimate instead of the value.
      window: pair (tLow, tHigh), range of the points t at which the same
          phi will be differentiated. When given, the inner integral is
          materialized once on that range instead of being evaluated at
          every stencil point.
      cache: dict, keeps materialized inner integrals between calls with
          the same phi and window.
    Returns:
      The value or LimitEstimate, or a DivergenceReport when an inner
      integral diverges.
    """
    alpha = as_order(alpha)
    phi = as_profile(phi)
    if sign != MINUS:
        raise ValueError(u"Error: ek_derivative implements the minus type; "
                         "use ek_plus_derivative for the plus type.")
    if t <= 0:
        raise ValueError(u"Error: ek_derivative needs t > 0.")
    a, m = alpha.alpha, alpha.m
    ell = phi.lengthScale

    if variant == INTEGER_D:
        if not alpha.isInteger:
            raise ValueError(u"Error: integer_d requires an integer order, "
                             "got " + str(a) + u".")
        estimate = _tau_derivative(_TauComposite(phi), t, m, ell, levels,
                                   relTol)
        estimate.value *= (-1) ** m
    elif variant == WEIGHTED_COMPOSITION:
        complement = FractionalOrder(1 - a + m)
        inner = phi.times_power(-2 * m - 2)
        report = ek_existence(inner, complement)
        if not report.holds:
            return DivergenceReport(u"weighted_composition", report)
        psi = _inner_evaluator(inner, complement, window, cache,
                               (WEIGHTED_COMPOSITION, a), power=2 * a)
        estimate = _tau_derivative(_TauComposite(psi, weightPower=a), t,
                                   m + 1, ell, levels, relTol)
        estimate.value *= (-1) ** (m + 1) * t ** (2 * (1 - a + m))
    elif variant == USUAL_DERIVATIVE:
        inner = phi.times_power(-2 * a - 1)
        report = ek_existence(inner, alpha)
        if not report.holds:
            return DivergenceReport(u"usual_derivative", report)
        G = _TimesT(_inner_evaluator(inner, alpha, window, cache,
                                     (USUAL_DERIVATIVE, a), power=1.0))
        twoAlpha = FractionalOrder(2 * a)
        if twoAlpha.isInteger:
            k = twoAlpha.m
            estimate = derivative_at(G, t, k, side=CENTRAL,
                                     step0=_t_step(t, k, ell), levels=levels,
                                     relTol=relTol)
            estimate.value *= (-1) ** k
        else:
            Gprofile = Profile1D(G, decay=phi.decay,
                                 smoothnessHint=phi.smoothnessHint)
            estimate = rl_derivative(Gprofile, twoAlpha, t, levels=levels,
                                     relTol=relTol, fullOutput=True)
            if is_divergent(estimate):
                return estimate
        estimate.value *= 2 ** (-2 * a)
    elif variant == DIRECT_COMPLEMENT:
        complement = FractionalOrder(1 - a + m)
        report = ek_existence(phi, complement)
        if not report.holds:
            return DivergenceReport(u"direct_complement", report)
        G = _inner_evaluator(phi, complement, window, cache,
                             (DIRECT_COMPLEMENT, a))
        estimate = _tau_derivative(_TauComposite(G), t, m + 1, ell, levels,
                                   relTol)
        estimate.value *= (-1) ** (m + 1)
    else:
        raise ValueError(u"Error: unknown derivative variant " +
                         str(variant) + u".")
    if fullOutput:
        return estimate
    return estimate.value


def ek_plus_derivative(phi, k, t, side=CENTRAL, levels=6, relTol=1e-6,
                       fullOutput=False):
    """
    (D^(k/2)_{+,2} phi)(t) = 2^-k t^-1 (d/dt)^k I^(k/2)_{+,2} t^(1-k) phi.
    Args:
      phi: Profile1D.
      k: int, positive.
      t: float, positive evaluation point.
      side: string, finite-difference side; 'left' keeps all evaluation
          points at or below t.
    Returns:
      The value, or a LimitEstimate if fullOutput.
    """
    phi = as_profile(phi)
    if k < 1:
        raise ValueError(u"Error: k must be a positive integer.")
    if t <= 0:
        raise ValueError(u"Error: ek_plus_derivative needs t > 0.")
    inner = phi.times_power(1 - k)
    H = _EKEvaluator(inner, FractionalOrder(k / 2), PLUS, EK_REL_TOL)
    step = min(0.1 * phi.lengthScale, t / (k + 1))
    estimate = derivative_at(H, t, k, side=side, step0=step, levels=levels,
                             relTol=relTol)
    estimate.value *= 2 ** (-k) / t
    if fullOutput:
        return estimate
    return estimate.value


def _relative_discrepancy(lhs, rhs):
    return np.abs(lhs - rhs) / (np.abs(rhs) + DENOMINATOR_FLOOR)


def _both_sides(f, alpha, beta, which, t, sign):
    a, b = alpha.alpha, beta.alpha
    if which == SEMIGROUP:
        inner = ek_result_profile(f, beta, sign)
        if sign == MINUS and not exists_ek(f, beta):
            return None
        lhs = ek_integral(inner, alpha, sign, t)
        rhs = ek_integral(f, FractionalOrder(a + b), sign, t)
    elif which == WEIGHTED:
        if sign != MINUS:
            raise ValueError(u"Error: the weighted identity is of minus "
                             "type.")
        if not exists_ek(f, beta):
            return None
        inner = ek_result_profile(f, beta, MINUS).times_power(-2 * a - 2 * b)
        lhs = ek_integral(inner, alpha, MINUS, t)
        rhs = ek_integral(f.times_power(-2 * a), FractionalOrder(a + b),
                          MINUS, t)
        if not is_divergent(rhs):
            rhs *= t ** (-2 * b)
    elif which == EK_TO_RL:
        if sign == MINUS:
            if not exists_ek(f, alpha):
                return None
            inner = ek_result_profile(f, alpha, MINUS)
            lhs = ek_integral(inner.times_power(-2 * a - 1), alpha, MINUS, t)
            if not is_divergent(lhs):
                lhs *= t
            rhs = rl_integral(f, FractionalOrder(2 * a), MINUS, t)
            if not is_divergent(rhs):
                rhs *= 2 ** (2 * a)
        else:
            inner = ek_result_profile(f, alpha, PLUS)
            lhs = ek_integral(inner.times_power(1 - 2 * a), alpha, PLUS, t)
            rhs = 2 ** (2 * a) * rl_integral(f.times_power(1),
                                             FractionalOrder(2 * a), PLUS, t)
    elif which == RL_SEMIGROUP:
        if sign == MINUS and not exists_rl(f, beta):
            return None
        inner = Profile1D(_RLEvaluator(f, beta, sign, EK_REL_TOL),
                          decay=None if f.decay is None or sign == PLUS
                          else f.decay.shifted(-b))
        lhs = rl_integral(inner, alpha, sign, t)
        rhs = rl_integral(f, FractionalOrder(a + b), sign, t)
    else:
        raise ValueError(u"Error: unknown identity " + str(which) + u".")
    if is_divergent(lhs) or is_divergent(rhs):
        return None
    return lhs, rhs


def verify_composition(f, alpha, beta, which, tGrid, sign=MINUS):
    """
    Checks a composition identity on a grid:
      semigroup:    I^a_{+-,2} I^b_{+-,2} f = I^(a+b)_{+-,2} f;
      weighted:     I^a_{-,2} t^(-2a-2b) I^b_{-,2} f
                    = t^(-2b) I^(a+b)_{-,2} t^(-2a) f;
      ek_to_rl:     t I^a_{-,2} t^(-2a-1) I^a_{-,2} f = 2^(2a) I^(2a)_- f,
                    and for plus type
                    I^a_{+,2} t^(1-2a) I^a_{+,2} f = 2^(2a) I^(2a)_+ t f;
      rl_semigroup: I^a_+- I^b_+- f = I^(a+b)_+- f.
    Args:
      f: Profile1D.
      alpha: FractionalOrder or float.
      beta: FractionalOrder or float; ignored by ek_to_rl.
      which: string, one of IDENTITIES.
      tGrid: iterable of positive evaluation points.
      sign: string, 'plus' or 'minus'.
    Returns:
      The maximum relative discrepancy, or a DivergenceReport naming the
      identity whose precondition failed.
    """
    alpha = as_order(alpha)
    beta = as_order(beta)
    f = as_profile(f)
    worst = 0.0
    for t in tGrid:
        sides = _both_sides(f, alpha, beta, which, t, sign)
        if sides is None:
            return DivergenceReport(which + u" precondition",
                                    ek_existence(f, FractionalOrder(
                                        alpha.alpha + beta.alpha)))
        worst = max(worst, _relative_discrepancy(*sides))
    return worst
