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

Module: inversion.py
Author: frh_toolbox developers

Mean value inversion. The spherical mean of f about x is recovered from the
shifted dual transform of phi = R f by an Erdelyi-Kober derivative, and
f(x) is the limit of the mean as the sphere shrinks to x.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import range, str
from multiprocessing import Pool

from .fraccalc import (
    DIRECT_COMPLEMENT, DERIVATIVE_VARIANTS, INTEGER_D, MINUS, PLUS,
    USUAL_DERIVATIVE, DivergenceReport, Profile1D, as_profile, ek_derivative,
    ek_integral, ek_plus_derivative, is_divergent)
from .geometry import DualMeanProfile, as_coords, dual_mean_profile
from .numerics import LEFT, LP, derivative_at, limit_at_zero
from .radon import check_existence


CONTINUOUS = u"continuous"
LP_CLASS = u"lp"

EK_PLUS = u"ek_plus"
WEIGHTED_D = u"weighted_d"
EVENK_COMPACT = u"evenk_compact"
SPHERE_FORMULAS = (WEIGHTED_D, EVENK_COMPACT, USUAL_DERIVATIVE)
SPHERE_VARIANTS = (EK_PLUS,) + SPHERE_FORMULAS

# Relative slack of the agreement test: the tolerance of the inner derivative
# estimates, which the limit error estimates do not include.
AGREEMENT_REL_FLOOR = 1e-6


class FunctionClass(object):
    def __init__(self, kind, mu=None, p=None):
        """
        Args:
          kind: string, 'continuous' (decay |f| <= C |x|^-mu, or
              x_(n+1)^-mu on H^n) or 'lp'.
          mu: float, decay order; inf for faster than every power.
          p: float, integrability exponent.
        """
        if kind not in (CONTINUOUS, LP_CLASS):
            raise ValueError(u"Error: unknown function class " + str(kind) +
                             u".")
        self.kind = kind
        self.mu = mu
        self.p = p

    @classmethod
    def continuous(cls, mu=np.inf):
        return cls(CONTINUOUS, mu=mu)

    @classmethod
    def lp(cls, p):
        return cls(LP_CLASS, p=p)

    @classmethod
    def from_decay(cls, decay):
        if decay is None or decay.isRapid:
            return cls.continuous()
        if decay.decayKind == LP:
            return cls.lp(decay.p)
        return cls.continuous(decay.mu)

    def __repr__(self):
        if self.kind == LP_CLASS:
            return u"FunctionClass(lp, p=" + str(self.p) + u")"
        return u"FunctionClass(continuous, mu=" + str(self.mu) + u")"


def check_admissible(space, variant, functionClass):
    """
    Raises ValueError when the variant cannot be used on the class.
    """
    n, k = space.n, space.k
    if space.isSpherical:
        if variant not in SPHERE_VARIANTS:
            raise ValueError(u"Error: sphere variants are " +
                             u", ".join(SPHERE_VARIANTS) + u"; got " +
                             str(variant) + u".")
        if variant == EVENK_COMPACT and k % 2:
            raise ValueError(u"Error: evenk_compact requires even k.")
        return
    if variant not in DERIVATIVE_VARIANTS:
        raise ValueError(u"Error: unknown derivative variant " +
                         str(variant) + u".")
    if variant == INTEGER_D and k % 2:
        raise ValueError(u"Error: integer_d requires even k, got k = " +
                         str(k) + u".")
    if variant != DIRECT_COMPLEMENT:
        return
    m = k // 2
    if space.isEuclidean:
        muBound = 2 + 2 * m
        pBound = n / (2 + 2 * m)
    else:
        muBound = 2 * m + 1
        pBound = (n - 1) / (2 * m + 1)
    if functionClass.kind == CONTINUOUS and not functionClass.mu > muBound:
        raise ValueError(u"Error: direct_complement needs mu > " +
                         str(muBound) + u", got mu = " +
                         str(functionClass.mu) + u".")
    if functionClass.kind == LP_CLASS and not functionClass.p < pBound:
        raise ValueError(u"Error: direct_complement needs p < " +
                         str(pBound) + u", got p = " +
                         str(functionClass.p) + u".")


class InversionPlan(object):
    def __init__(self, space, variant, functionClass=None, r0=0.4, levels=6,
                 relTol=1e-6, applyWeight=True, limitRelTol=1e-4):
        """
        Args:
          space: SpaceDescriptor.
          variant: string, an Erdelyi-Kober derivative variant on R^n and
              H^n, or one of ek_plus, weighted_d, evenk_compact,
              usual_derivative on S^n.
          functionClass: FunctionClass of f; rapid decay if None.
          r0: float, first radius of the limit schedule r0 / 2^j (on S^n
              the schedule is in 1 - s).
          levels: int, number of radii.
          relTol: float, tolerance of the inner derivative estimates.
          applyWeight: boolean, on H^n multiply the dual transform by
              (1 + r^2)^((k-1)/2) before differentiating. Switching it off
              gives a wrong mean and only serves as a control.
          limitRelTol: float, tolerance of the convergence flag of the
              limit.
        """
        if functionClass is None:
            functionClass = FunctionClass.continuous()
        check_admissible(space, variant, functionClass)
        if not 0 < r0 < 1:
            raise ValueError(u"Error: r0 must lie in (0, 1).")
        self.space = space
        self.variant = variant
        self.functionClass = functionClass
        self.r0 = r0
        self.levels = levels
        self.relTol = relTol
        self.applyWeight = applyWeight
        self.limitRelTol = limitRelTol

    @property
    def radii(self):
        return [self.r0 / 2 ** j for j in range(self.levels)]

    def __repr__(self):
        return (u"InversionPlan(" + repr(self.space) + u", " + self.variant +
                u", " + repr(self.functionClass) + u")")


class ReconstructionResult(object):
    def __init__(self, x, value, limitDiag, variantUsed, intermediateMean):
        """
        Args:
          x: array, the reconstruction point.
          value: float, the reconstructed f(x).
          limitDiag: LimitEstimate of the limit.
          variantUsed: string.
          intermediateMean: Profile1D through the recovered means, in r on
              R^n, t on H^n and s on S^n.
        """
        self.x = x
        self.value = value
        self.limitDiag = limitDiag
        self.variantUsed = variantUsed
        self.intermediateMean = intermediateMean

    @property
    def errorEstimate(self):
        return self.limitDiag.errorEstimate

    @property
    def converged(self):
        return self.limitDiag.converged

    def __repr__(self):
        return (u"ReconstructionResult(value=" + str(self.value) +
                u", error=" + str(self.errorEstimate) + u", variant=" +
                self.variantUsed + u")")


def _dual_values(dual):
    if isinstance(dual, DualMeanProfile):
        return as_profile(dual.values)
    return as_profile(dual)


class _WeightedHyperbolic(object):
    def __init__(self, k):
        self.k = k

    def __call__(self, r):
        return (1 + r * r) ** ((self.k - 1) / 2)


class _SquareRootComposite(object):
    """
    tau -> scale * s^power * inner(s), s = sqrt(tau).
    """
    def __init__(self, inner, power=0.0, scale=1.0):
        self.inner = inner
        self.power = power
        self.scale = scale

    def __call__(self, tau):
        s = np.sqrt(tau)
        value = self.inner(s)
        if is_divergent(value):
            return np.inf
        return self.scale * s ** self.power * value


class _PlusIntegral(object):
    def __init__(self, profile, alpha, scale=1.0):
        self.profile = profile
        self.alpha = alpha
        self.scale = scale

    def __call__(self, s):
        return self.scale * ek_integral(self.profile, self.alpha, PLUS, s)


def sphere_inversion_formula(dual, which, k, s, levels=6, relTol=1e-6,
                             fullOutput=False):
    """
    Bracketed expressions of the sphere inversion formulas, before the limit
    s -> 1, with D = d/d(s^2) and left-sided derivatives:
      weighted_d: D^k [ (1/2) pi^(-k/2) I^(k/2)_{+,2} r^(k-1) R*_x phi ](s);
      evenk_compact: (1 / (2 pi^(k/2))) D^(k/2) [ s^(k-1) (R*_x phi)(s) ];
      usual_derivative:
        (d/ds)^k [ 2^(-k-1) pi^(-k/2) I^(k/2)_{+,2} R*_x phi ](s).
    The first two return g_x(s) = s^-1 (M_x f)(s), the third (M_x f)(s).
    Args:
      dual: DualMeanProfile, Profile1D or callable in r = cos d.
      which: string, one of weighted_d, evenk_compact, usual_derivative.
      k: int.
      s: float in (0, 1].
    Returns:
      The value, or a LimitEstimate if fullOutput.
    """
    values = _dual_values(dual)
    if not 0 < s <= 1:
        raise ValueError(u"Error: the sphere formulas need 0 < s <= 1.")
    tau = s * s
    if which == WEIGHTED_D:
        bracket = _PlusIntegral(values.times_power(k - 1), k / 2,
                                scale=0.5 * np.pi ** (-k / 2))
        G = _SquareRootComposite(bracket)
        estimate = derivative_at(G, tau, k, side=LEFT,
                                 step0=min(0.1, tau / (k + 1)),
                                 levels=levels, relTol=relTol)
    elif which == EVENK_COMPACT:
        if k % 2:
            raise ValueError(u"Error: evenk_compact requires even k.")
        G = _SquareRootComposite(values, power=k - 1,
                                 scale=1 / (2 * np.pi ** (k / 2)))
        estimate = derivative_at(G, tau, k // 2, side=LEFT,
                                 step0=min(0.1, tau / (k // 2 + 1)),
                                 levels=levels, relTol=relTol)
    elif which == USUAL_DERIVATIVE:
        H = _PlusIntegral(values, k / 2,
                          scale=2.0 ** (-k - 1) * np.pi ** (-k / 2))
        estimate = derivative_at(H, s, k, side=LEFT,
                                 step0=min(0.1, s / (k + 1)), levels=levels,
                                 relTol=relTol)
    else:
        raise ValueError(u"Error: unknown sphere formula " + str(which) +
                         u".")
    if fullOutput:
        return estimate
    return estimate.value


def recover_mean(dual, plan, r, cache=None):
    """
    The spherical mean of f about x from the shifted dual transform:
      R^n: (M_x f)(r) = pi^(-k/2) (D^(k/2)_{-,2} R*_x phi)(r);
      H^n: (M~_x f)(r) = pi^(-k/2) (D^(k/2)_{-,2} (1+r^2)^((k-1)/2)
                         R*_x phi)(r);
      S^n: (M_x f)(s) = s g_x(s), with g_x = D^(k/2)_{+,2} psi,
           psi(r) = r^(k-1) (R*_x phi)(r) / (2 pi^(k/2)), or through one of
           the sphere formulas.
    Args:
      dual: DualMeanProfile.
      plan: InversionPlan.
      r: float, radius parameter (s on S^n).
      cache: dict, shared by the calls for one dual profile so that the
          inner integrals are materialized once over the plan's radii.
    Returns:
      The mean, or a DivergenceReport.
    """
    space = plan.space
    k = space.k
    values = _dual_values(dual)
    if space.isSpherical:
        if plan.variant == EK_PLUS:
            psi = values.times_power(k - 1).scaled(
                1 / (2 * np.pi ** (k / 2)))
            g = ek_plus_derivative(psi, k, r, side=LEFT, levels=plan.levels,
                                   relTol=plan.relTol)
            return r * g
        value = sphere_inversion_formula(values, plan.variant, k, r,
                                         levels=plan.levels,
                                         relTol=plan.relTol)
        if plan.variant == USUAL_DERIVATIVE:
            return value
        return r * value
    if space.isHyperbolic and plan.applyWeight:
        decay = None if values.decay is None else values.decay.shifted(1 - k)
        values = values.times(_WeightedHyperbolic(k), decay=decay)
    window = None
    if cache is not None:
        window = (min(plan.radii), max(plan.radii))
    value = ek_derivative(values, k / 2, MINUS, plan.variant, t=r,
                          levels=plan.levels, relTol=plan.relTol,
                          window=window, cache=cache)
    if is_divergent(value):
        return value
    return np.pi ** (-k / 2) * value


class _MeanSampler(object):
    """
    Limit variable -> recovered mean; divergence is remembered and turns
    into a non-finite sample.
    """
    def __init__(self, dual, plan):
        self.dual = dual
        self.plan = plan
        self.divergence = None
        self.cache = dict()

    def __call__(self, h):
        r = 1 - h if self.plan.space.isSpherical else h
        value = recover_mean(self.dual, self.plan, r, cache=self.cache)
        if is_divergent(value):
            self.divergence = value
            return np.nan
        return value


def reconstruct_point(phi, x, plan, degree=None, numNodes=None,
                      verbose=False):
    """
    f(x) as the limit of the recovered means: r -> 0 on R^n and H^n, s -> 1
    on S^n.
    Args:
      phi: TransformField.
      x: Point or coordinates.
      plan: InversionPlan.
      degree: int, interpolation degree of the dual transform profile.
      numNodes: quadrature size of the rotation families.
      verbose: boolean, whether or not to increase output verbosity.
    Returns:
      A ReconstructionResult, or a DivergenceReport when the forward
      transform does not exist.
    """
    space = plan.space
    coords = as_coords(x, space)
    sourceDecay = getattr(phi, u"sourceDecay", None)
    if sourceDecay is not None:
        report = check_existence(sourceDecay, space)
        if not report.holds:
            return DivergenceReport(report.condition, report)

    dual = dual_mean_profile(phi, coords, space, degree=degree,
                             numNodes=numNodes, verbose=verbose)
    sampler = _MeanSampler(dual, plan)
    power = 1 if space.isSpherical else 2
    estimate = limit_at_zero(sampler, r0=plan.r0, levels=plan.levels,
                             power=power, relTol=plan.limitRelTol)
    if sampler.divergence is not None:
        return sampler.divergence
    if verbose and not estimate.converged:
        print(u"Warning: the limit at " + str(list(coords)) + u" did not "
              "converge (error estimate " + str(estimate.errorEstimate) +
              u").")

    if space.isSpherical:
        grid = [1 - h for (h, _) in estimate.samples]
    else:
        grid = [h for (h, _) in estimate.samples]
    samples = [v for (_, v) in estimate.samples]
    order = np.argsort(grid)
    intermediateMean = Profile1D.from_samples(np.array(grid)[order],
                                              np.array(samples)[order],
                                              decay=None)
    return ReconstructionResult(coords, estimate.value, estimate,
                                plan.variant, intermediateMean)


def unwrap_reconstruct_point(arg, **kwarg):
    """
    Wrapper for reconstruct_point(), intended for parallel computation using
    a process pool.
    """
    return reconstruct_point(*arg, **kwarg)


def reconstruct_grid(phi, points, plan, numThreads=4, degree=None,
                     numNodes=None, verbose=False):
    """
    Reconstructs f at every point of a grid.
    Args:
      phi: TransformField.
      points: iterable of points.
      plan: InversionPlan.
      numThreads: int, size of the process pool.
    Returns:
      List of ReconstructionResult (or DivergenceReport), in grid order.
    """
    args = [(phi, x, plan, degree, numNodes) for x in points]
    if verbose:
        print(u"Reconstructing at " + str(len(args)) + u" points...")
    if not args:
        return list()
    try:
        if numThreads > 1 and len(args) > 1:
            pool = Pool(numThreads)
            results = pool.map(unwrap_reconstruct_point, args)
            pool.close()
            pool.join()
        else:
            results = [unwrap_reconstruct_point(arg) for arg in args]
    except:
        print(u"An exception occurred while reconstructing on the grid.")
        raise
    return results


class VariantAgreement(object):
    def __init__(self, x, variantA, variantB, difference, bound):
        """
        Args:
          x: array, the reconstruction point.
          variantA: string.
          variantB: string.
          difference: float, |f_A(x) - f_B(x)|.
          bound: float, admissible difference.
        """
        self.x = x
        self.variantA = variantA
        self.variantB = variantB
        self.difference = difference
        self.bound = bound

    @property
    def agrees(self):
        return bool(self.difference <= self.bound)

    def __repr__(self):
        return (u"VariantAgreement(" + self.variantA + u", " +
                self.variantB + u", difference=" + str(self.difference) +
                u", bound=" + str(self.bound) + u")")


def variant_agreement(results, relFloor=AGREEMENT_REL_FLOOR):
    """
    Compares the reconstructions of one point under different variants. Two
    values agree when they differ by at most twice the sum of their limit
    error estimates, plus relFloor times the larger value.
    Args:
      results: list of ReconstructionResult at the same point.
      relFloor: float, normally the relTol of the inversion plans.
    Returns:
      List of VariantAgreement, one per pair.
    """
    pairs = list()
    for i in range(len(results)):
        for j in range(i + 1, len(results)):
            a, b = results[i], results[j]
            if not np.allclose(a.x, b.x):
                raise ValueError(u"Error: variant agreement compares "
                                 "reconstructions of the same point.")
            difference = abs(a.value - b.value)
            bound = (2 * (a.errorEstimate + b.errorEstimate) +
                     relFloor * max(abs(a.value), abs(b.value)))
            pairs.append(VariantAgreement(a.x, a.variantUsed, b.variantUsed,
                                          difference, bound))
    return pairs
