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

Module: geometry.py
Author: frh_toolbox developers

The three constant-curvature spaces, families of totally geodesic
submanifolds, spherical means and shifted dual transforms.

Models: R^n with points of length n; the hyperboloid
H^n = {x in R^(n+1): [x, x] = 1, x_(n+1) > 0} with
[x, y] = -x_1 y_1 - ... - x_n y_n + x_(n+1) y_(n+1); the unit sphere S^n in
R^(n+1). In both curved spaces the base point is e_(n+1).

A k-plane in R^n is stored as {y: N^T y = c} with N an n x (n-k) matrix with
orthonormal columns. Geodesic hyperplanes (k = n-1) of H^n and S^n are
stored through a normal vector nu, with [nu, nu] = -1 on H^n and |nu| = 1 on
S^n. Distance parameters follow the shifted dual charts: r = d on R^n,
r = sinh d on H^n and r = cos d on S^n.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import range, str
from scipy.linalg import null_space

from .fraccalc import Profile1D
from .numerics import TailSpec


EUCLIDEAN = u"euclidean"
HYPERBOLIC = u"hyperbolic"
SPHERICAL = u"spherical"
CURVATURES = (EUCLIDEAN, HYPERBOLIC, SPHERICAL)

MODEL_TOL = 1e-12

CIRCLE_NODES = 256
SPHERE_NODES = (32, 64)
LINE_FAMILY_NODES = ((24, 48), 48)


class SpaceDescriptor(object):
    def __init__(self, curvature, n, k):
        """
        Args:
          curvature: string, one of euclidean, hyperbolic, spherical.
          n: int, dimension of the space, at least 2.
          k: int, dimension of the geodesic submanifolds, 1 <= k <= n-1.
        """
        if curvature not in CURVATURES:
            raise ValueError(u"Error: unknown curvature " + str(curvature) +
                             u".")
        if n < 2:
            raise ValueError(u"Error: dimension n must be at least 2.")
        if k < 1 or k > n - 1:
            raise ValueError(u"Error: geodesic dimension k must satisfy "
                             "1 <= k <= n-1.")
        self.curvature = curvature
        self.n = int(n)
        self.k = int(k)

    @property
    def ambientDim(self):
        if self.curvature == EUCLIDEAN:
            return self.n
        return self.n + 1

    @property
    def isEuclidean(self):
        return self.curvature == EUCLIDEAN

    @property
    def isHyperbolic(self):
        return self.curvature == HYPERBOLIC

    @property
    def isSpherical(self):
        return self.curvature == SPHERICAL

    def base_point(self):
        point = np.zeros(self.ambientDim)
        if self.curvature != EUCLIDEAN:
            point[-1] = 1.0
        return point

    def lam(self, r):
        """
        Weight lambda_X in the distance chart rho = d, sinh d or sin d.
        """
        if self.curvature == EUCLIDEAN:
            return np.ones_like(np.asarray(r, dtype=float)) * 1.0
        if self.curvature == HYPERBOLIC:
            return (1 + np.asarray(r) ** 2) ** ((self.k - 1) / 2)
        return (1 - np.asarray(r) ** 2) ** ((self.k - 1) / 2)

    def __eq__(self, other):
        return (isinstance(other, SpaceDescriptor) and
                self.curvature == other.curvature and self.n == other.n and
                self.k == other.k)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.curvature, self.n, self.k))

    def __repr__(self):
        return (u"SpaceDescriptor(" + self.curvature + u", n=" + str(self.n) +
                u", k=" + str(self.k) + u")")


def minkowski_form(x, y):
    """
    [x, y] = -x_1 y_1 - ... - x_n y_n + x_(n+1) y_(n+1), along the last axis.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return x[..., -1] * y[..., -1] - np.sum(x[..., :-1] * y[..., :-1],
                                            axis=-1)


class Point(object):
    def __init__(self, coords, space):
        """
        Args:
          coords: array, coordinates in the model of the space.
          space: SpaceDescriptor.
        """
        coords = np.asarray(coords, dtype=float).ravel()
        if coords.size != space.ambientDim:
            raise ValueError(u"Error: point has " + str(coords.size) +
                             u" coordinates, the model of " + repr(space) +
                             u" needs " + str(space.ambientDim) + u".")
        scale = max(1.0, float(np.dot(coords, coords)))
        if space.isHyperbolic:
            if (np.abs(minkowski_form(coords, coords) - 1) > MODEL_TOL * scale
                    or coords[-1] <= 0):
                raise ValueError(u"Error: point is not on the upper sheet of "
                                 "the hyperboloid.")
        elif space.isSpherical:
            if np.abs(np.dot(coords, coords) - 1) > MODEL_TOL:
                raise ValueError(u"Error: point is not on the unit sphere.")
        self.coords = coords
        self.space = space

    def __repr__(self):
        return u"Point(" + str(list(self.coords)) + u")"


def as_coords(x, space):
    if isinstance(x, Point):
        if x.space != space:
            raise ValueError(u"Error: point belongs to " + repr(x.space) +
                             u", not " + repr(space) + u".")
        return x.coords
    return Point(x, space).coords


def is_base_point(x, space, tol=1e-12):
    return np.max(np.abs(as_coords(x, space) - space.base_point())) <= tol


def hyperbolic_distance(x, y):
    return np.arccosh(np.maximum(1.0, minkowski_form(x, y)))


def spherical_distance(x, y):
    return np.arccos(np.clip(np.sum(np.asarray(x) * np.asarray(y), axis=-1),
                             -1.0, 1.0))


def boost_matrix(x):
    """
    Hyperbolic translation B_x with B_x e_(n+1) = x. For x = (zeta sinh w,
    cosh w) it acts as a boost of rapidity w in the plane (zeta, e_(n+1)).
    """
    x = np.asarray(x, dtype=float)
    spatial = x[:-1]
    top = np.eye(spatial.size) + np.outer(spatial, spatial) / (1 + x[-1])
    B = np.empty((x.size, x.size))
    B[:-1, :-1] = top
    B[:-1, -1] = spatial
    B[-1, :-1] = spatial
    B[-1, -1] = x[-1]
    return B


def complement_basis(x):
    """
    Orthonormal basis of the Euclidean complement of x, as columns.
    """
    return null_space(np.asarray(x, dtype=float)[None, :])


def direction_rule(d, numNodes=None):
    """
    Quadrature for the normalized measure on the unit sphere S^(d-1) in R^d.
    Args:
      d: int, 1, 2 or 3.
      numNodes: int for circles; (polar, azimuthal) pair for d = 3.
    Returns:
      (points, weights), with points of shape (m, d) and weights summing
      to 1.
    """
    if d == 1:
        return np.array([[1.0], [-1.0]]), np.array([0.5, 0.5])
    if d == 2:
        m = CIRCLE_NODES if numNodes is None else int(numNodes)
        angles = 2 * np.pi * np.arange(m) / m
        points = np.column_stack([np.cos(angles), np.sin(angles)])
        return points, np.full(m, 1.0 / m)
    if d == 3:
        if numNodes is None:
            numNodes = SPHERE_NODES
        if np.isscalar(numNodes):
            numNodes = (int(numNodes), 2 * int(numNodes))
        nz, na = numNodes
        z, wz = np.polynomial.legendre.leggauss(nz)
        angles = 2 * np.pi * np.arange(na) / na
        zz, aa = np.meshgrid(z, angles, indexing=u"ij")
        rho = np.sqrt(1 - zz ** 2)
        points = np.column_stack([(rho * np.cos(aa)).ravel(),
                                  (rho * np.sin(aa)).ravel(), zz.ravel()])
        weights = np.repeat(wz / 2, na) / na
        return points, weights
    raise ValueError(u"Error: direction rules are available for spheres in "
                     "dimensions 1 to 3, not " + str(d) + u".")


def _orthonormal_frames(eta):
    """
    For unit vectors eta in R^3 (rows), two orthonormal vectors spanning the
    complement of each.
    """
    helper = np.zeros_like(eta)
    helper[:, 2] = 1.0
    tilted = np.abs(eta[:, 2]) > 0.9
    helper[tilted] = np.array([1.0, 0.0, 0.0])
    e1 = helper - np.sum(helper * eta, axis=1)[:, None] * eta
    e1 /= np.linalg.norm(e1, axis=1)[:, None]
    e2 = np.cross(eta, e1)
    return e1, e2


class GeodesicParam(object):
    """
    A batch of totally geodesic submanifolds of one space.
    """
    def __init__(self, space, normals=None, offsets=None, radius=None):
        """
        Args:
          space: SpaceDescriptor.
          normals: array, (m, n, n-k) orthonormal frames of k-planes in R^n,
              or (m, n+1) normal vectors of hyperplanes of H^n or S^n.
          offsets: array, (m, n-k) plane offsets c, for R^n.
          radius: array, (m,) distance parameters from the base point, for a
              zonal description that does not fix the geodesics themselves.
        """
        self.space = space
        if radius is not None:
            radius = np.atleast_1d(np.asarray(radius, dtype=float))
            if np.any(radius < 0):
                raise ValueError(u"Error: distance parameter must be "
                                 "nonnegative.")
            if space.isSpherical and np.any(radius > 1):
                raise ValueError(u"Error: the spherical distance parameter "
                                 "r = cos d must be at most 1.")
            self.radius = radius
            self.normals = None
            self.offsets = None
            return
        self.radius = None
        normals = np.asarray(normals, dtype=float)
        if space.isEuclidean:
            offsets = np.asarray(offsets, dtype=float)
            if normals.ndim == 2:
                normals = normals[None, :, :]
            if offsets.ndim == 1:
                offsets = offsets.reshape(normals.shape[0], -1)
            codim = space.n - space.k
            if (normals.shape[1:] != (space.n, codim) or
                    offsets.shape != (normals.shape[0], codim)):
                raise ValueError(u"Error: k-plane frames must have shape "
                                 "(m, n, n-k) and offsets (m, n-k).")
        else:
            if space.k != space.n - 1:
                raise ValueError(u"Error: curved spaces are parametrized "
                                 "for hyperplanes (k = n-1) only.")
            if normals.ndim == 1:
                normals = normals[None, :]
            if normals.shape[1] != space.n + 1:
                raise ValueError(u"Error: hyperplane normals must have n+1 "
                                 "coordinates.")
        self.normals = normals
        self.offsets = offsets

    @property
    def isZonal(self):
        return self.radius is not None

    @property
    def size(self):
        if self.radius is not None:
            return self.radius.size
        return self.normals.shape[0]

    @classmethod
    def line(cls, theta, u):
        """
        Lines {y in R^2: y . (cos theta, sin theta) = u}, angle reduced to
        [0, pi).
        """
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        u = np.atleast_1d(np.asarray(u, dtype=float)) * np.ones_like(theta)
        flip = np.mod(theta, 2 * np.pi) >= np.pi
        theta = np.mod(theta, np.pi)
        u = np.where(flip, -u, u)
        normals = np.stack([np.cos(theta), np.sin(theta)], axis=1)[:, :, None]
        return cls(SpaceDescriptor(EUCLIDEAN, 2, 1), normals=normals,
                   offsets=u[:, None])

    @classmethod
    def plane(cls, space, normal, offset):
        normal = np.asarray(normal, dtype=float)
        if normal.ndim == 1:
            normal = normal[:, None]
        return cls(space, normals=normal[None, :, :],
                   offsets=np.atleast_1d(offset)[None, :])

    @classmethod
    def hyperplane(cls, space, nu):
        return cls(space, normals=np.atleast_2d(nu))

    @classmethod
    def zonal(cls, space, r):
        return cls(space, radius=r)

    def line_angles(self):
        """
        (theta in [0, pi), u) chart of lines in R^2.
        """
        if not (self.space.isEuclidean and self.space.n == 2):
            raise ValueError(u"Error: the angle chart exists for lines in "
                             "R^2 only.")
        theta = np.arctan2(self.normals[:, 1, 0], self.normals[:, 0, 0])
        u = self.offsets[:, 0].copy()
        flip = (theta < 0) | (theta >= np.pi)
        theta = np.where(flip, np.mod(theta + np.pi, 2 * np.pi), theta)
        theta = np.where(theta >= np.pi, theta - np.pi, theta)
        u = np.where(flip, -u, u)
        return theta, u


def distance_function(x, geo, space=None):
    """
    rho(x, xi): the distance d on R^n, sinh d on H^n and sin d on S^n.
    Args:
      x: Point or coordinates.
      geo: GeodesicParam.
      space: SpaceDescriptor, defaults to geo.space.
    Returns:
      Array of shape (m,), or a float for a single geodesic.
    """
    if space is None:
        space = geo.space
    if space != geo.space and not (space.curvature == geo.space.curvature
                                   and space.n == geo.space.n):
        raise ValueError(u"Error: geodesic family belongs to another space.")
    coords = as_coords(x, space)
    if geo.isZonal:
        if not is_base_point(coords, space):
            raise ValueError(u"Error: zonal geodesic families measure "
                             "distance from the base point only.")
        if space.isSpherical:
            rho = np.sqrt(np.maximum(0.0, 1 - geo.radius ** 2))
        else:
            rho = geo.radius
    elif space.isEuclidean:
        diff = np.einsum(u"mij,i->mj", geo.normals, coords) - geo.offsets
        rho = np.linalg.norm(diff, axis=1)
    elif space.isHyperbolic:
        rho = np.abs(minkowski_form(geo.normals, coords[None, :]))
    else:
        rho = np.abs(geo.normals.dot(coords))
    if rho.size == 1:
        return float(rho[0])
    return rho


def chart_radius(x, geo, space=None):
    """
    Distance parameter of each geodesic in the shifted dual chart about x:
    d on R^n, sinh d on H^n and cos d on S^n.
    """
    if space is None:
        space = geo.space
    if geo.isZonal:
        if not is_base_point(x, space):
            raise ValueError(u"Error: zonal geodesic families measure "
                             "distance from the base point only.")
        return geo.radius
    rho = np.atleast_1d(distance_function(x, geo, space))
    if space.isSpherical:
        return np.sqrt(np.maximum(0.0, 1 - rho ** 2))
    return rho


def hyperbolic_foot_point(x, nu):
    """
    Nearest point to x on the geodesic hyperplane {y: [y, nu] = 0}.
    """
    x = np.asarray(x, dtype=float)
    nu = np.asarray(nu, dtype=float)
    a = minkowski_form(x, nu)
    y = x + a * nu
    return y / np.sqrt(1 + a * a)


def hyperbolic_geodesic_point(foot, direction, t):
    """
    Point at signed distance t from foot along the unit spacelike tangent
    direction.
    """
    return (np.cosh(t) * np.asarray(foot, dtype=float) +
            np.sinh(t) * np.asarray(direction, dtype=float))


def sphere_points(x, param, space, numNodes=None):
    """
    Quadrature nodes and weights on the geodesic sphere about x: |y - x| = r
    on R^n, y_(n+1)-type height [x, y] = s on H^n and x . y = s on S^n.
    """
    coords = as_coords(x, space)
    n = space.n
    if n > 3:
        raise ValueError(u"Error: spherical means of general functions are "
                         "available for n in {2, 3}.")
    dirs, weights = direction_rule(n, numNodes)
    if space.isEuclidean:
        if param < 0:
            raise ValueError(u"Error: radius must be nonnegative.")
        return coords[None, :] + param * dirs, weights
    if space.isHyperbolic:
        if param < 1:
            raise ValueError(u"Error: hyperbolic spheres need s >= 1.")
        local = np.column_stack([np.sqrt(param * param - 1) * dirs,
                                 np.full(dirs.shape[0], param)])
        return local.dot(boost_matrix(coords).T), weights
    if not -1 <= param <= 1:
        raise ValueError(u"Error: planar sections of the sphere need "
                         "-1 <= s <= 1.")
    E = complement_basis(coords)
    points = (param * coords[None, :] +
              np.sqrt(1 - param * param) * dirs.dot(E.T))
    return points, weights


def spherical_mean(f, x, param, space, numNodes=None):
    """
    Normalized mean of f over the geodesic sphere about x.
    Args:
      f: callable on arrays of points (m, dim), returning (m,) values.
      x: Point or coordinates.
      param: float, the radius r > 0 on R^n, s = cosh(radius) > 1 on H^n,
          s = cos(radius) in (-1, 1) on S^n.
      space: SpaceDescriptor.
      numNodes: quadrature size, see direction_rule.
    Returns:
      The mean value.
    """
    if space.isEuclidean and param <= 0:
        raise ValueError(u"Error: spherical_mean needs r > 0 on R^n.")
    if space.isHyperbolic and param <= 1:
        raise ValueError(u"Error: spherical_mean needs s > 1 on H^n.")
    if space.isSpherical and not -1 < param < 1:
        raise ValueError(u"Error: spherical_mean needs -1 < s < 1 on S^n.")
    points, weights = sphere_points(x, param, space, numNodes)
    return float(np.dot(weights, f(points)))


def tilde_mean(f, x, t, space, numNodes=None):
    """
    (1 + t^2)^(-1/2) (M_x f)(sqrt(1 + t^2)) on H^n; equals f(x) at t = 0.
    """
    if not space.isHyperbolic:
        raise ValueError(u"Error: tilde_mean is defined on H^n.")
    if t < 0:
        raise ValueError(u"Error: tilde_mean needs t >= 0.")
    if t == 0:
        coords = as_coords(x, space)
        return float(np.ravel(f(coords[None, :]))[0])
    s = np.sqrt(1 + t * t)
    return spherical_mean(f, x, s, space, numNodes) / s


def shifted_dual_family(x, r, space, numNodes=None):
    """
    Geodesics at distance parameter r from x, as a GeodesicParam, with the
    quadrature weights of the rotation average.
    """
    coords = as_coords(x, space)
    n, k = space.n, space.k
    if r < 0:
        raise ValueError(u"Error: distance parameter must be nonnegative.")
    if space.isSpherical and r > 1:
        raise ValueError(u"Error: the spherical distance parameter r = cos d "
                         "must be at most 1.")
    if space.isEuclidean:
        if n == 2 or (n == 3 and k == 2):
            dirs, weights = direction_rule(n, numNodes)
            normals = dirs[:, :, None]
            offsets = (dirs.dot(coords) + r)[:, None]
            return GeodesicParam(space, normals=normals,
                                 offsets=offsets), weights
        if n == 3 and k == 1:
            if numNodes is None:
                numNodes = LINE_FAMILY_NODES
            sphereNodes, numAngles = numNodes
            eta, wEta = direction_rule(3, sphereNodes)
            e1, e2 = _orthonormal_frames(eta)
            beta = 2 * np.pi * np.arange(numAngles) / numAngles
            frames = np.stack([e1, e2], axis=2)
            normals = np.repeat(frames, numAngles, axis=0)
            base = np.einsum(u"mij,i->mj", frames, coords)
            shift = r * np.column_stack([np.cos(beta), np.sin(beta)])
            offsets = (base[:, None, :] + shift[None, :, :]).reshape(-1, 2)
            weights = np.repeat(wEta, numAngles) / numAngles
            return GeodesicParam(space, normals=normals,
                                 offsets=offsets), weights
        raise ValueError(u"Error: general geodesic families on R^n are "
                         "available for n in {2, 3}.")
    if k != n - 1 or n > 3:
        raise ValueError(u"Error: general geodesic families on curved spaces "
                         "are available for hyperplanes with n in {2, 3}.")
    dirs, weights = direction_rule(n, numNodes)
    if space.isHyperbolic:
        local = np.column_stack([np.sqrt(1 + r * r) * dirs,
                                 np.full(dirs.shape[0], r)])
        nu = local.dot(boost_matrix(coords).T)
    else:
        E = complement_basis(coords)
        nu = np.sqrt(1 - r * r) * coords[None, :] + r * dirs.dot(E.T)
    return GeodesicParam(space, normals=nu), weights


def evaluate_field(phi, geo):
    if hasattr(phi, u"evaluate"):
        return np.asarray(phi.evaluate(geo), dtype=float)
    return np.asarray(phi(geo), dtype=float)


def shifted_dual_transform(phi, x, r, space, numNodes=None):
    """
    (R*_x phi)(r): average of phi over the geodesics at distance parameter r
    from x, by quadrature over the rotation family.
    Args:
      phi: TransformField, or callable mapping a GeodesicParam to values.
      x: Point or coordinates.
      r: float, distance parameter (r <= 1 on the sphere).
      space: SpaceDescriptor.
    Returns:
      The average.
    """
    if getattr(phi, u"isRadial", False) and phi.is_centered_at(x):
        if space.isSpherical and r > 1:
            raise ValueError(u"Error: the spherical distance parameter "
                             "r = cos d must be at most 1.")
        return float(phi.profile(r))
    geo, weights = shifted_dual_family(x, r, space, numNodes)
    return float(np.dot(weights, evaluate_field(phi, geo)))


class DualMeanProfile(object):
    """
    r -> (R*_x phi)(r) for a fixed point x, with the weight lambda_X of the
    space. The values live in the shifted dual chart (cos d on the sphere),
    the weight in the distance chart rho.
    """
    def __init__(self, x, values, weightLambda, space):
        """
        Args:
          x: array, coordinates of the reconstruction point.
          values: Profile1D in r.
          weightLambda: callable, lambda_X(rho).
          space: SpaceDescriptor.
        """
        self.x = x
        self.values = values
        self.weightLambda = weightLambda
        self.space = space

    def __call__(self, r):
        return self.values(r)

    def in_distance_chart(self, rho):
        """
        (R*_x phi) as a function of rho = d, sinh d or sin d.
        """
        if self.space.isSpherical:
            return self.values(np.sqrt(np.maximum(0.0, 1 - rho * rho)))
        return self.values(rho)


class _DualSampler(object):
    def __init__(self, phi, x, space, numNodes):
        self.phi = phi
        self.x = x
        self.space = space
        self.numNodes = numNodes

    def __call__(self, r):
        return shifted_dual_transform(self.phi, self.x, r, self.space,
                                      self.numNodes)


def dual_mean_profile(phi, x, space, degree=None, numNodes=None,
                      verbose=False):
    """
    Materializes r -> (R*_x phi)(r). Radial or zonal fields centred at x give
    their exact profile; otherwise the average is sampled at Chebyshev nodes
    and interpolated by an even polynomial.
    Args:
      phi: TransformField.
      x: Point or coordinates.
      space: SpaceDescriptor.
      degree: int, interpolation degree; chosen from the field's length
          scale when None.
      numNodes: quadrature size of the rotation families.
      verbose: boolean.
    Returns:
      A DualMeanProfile.
    """
    coords = as_coords(x, space)
    weight = space.lam
    if getattr(phi, u"isRadial", False) and phi.is_centered_at(coords):
        return DualMeanProfile(coords, phi.profile, weight, space)
    if space.isSpherical:
        radius = 1.0
        decay = TailSpec.compact(1.0)
        if degree is None:
            degree = 40
    else:
        radius = phi.support_radius(coords)
        ell = phi.decay.lengthScale
        decay = phi.decay.with_truncation_radius(radius)
        if degree is None:
            degree = min(160, int(12 * radius / ell) + 16)
    if verbose:
        print(u"Sampling the shifted dual transform at " + str(degree + 1) +
              u" Chebyshev nodes on [0, " + str(radius) + u"]...")
    sampler = _DualSampler(phi, coords, space, numNodes)
    values = Profile1D.from_chebyshev(sampler, radius, degree, decay)
    return DualMeanProfile(coords, values, weight, space)


def random_points(space, count, radius, seed=None):
    """
    Seeded random points in the geodesic ball of the given radius about the
    base point.
    Returns:
      Array of shape (count, ambient dimension).
    """
    rng = np.random.RandomState(seed)
    n = space.n
    points = np.empty((count, space.ambientDim))
    for i in range(count):
        direction = rng.normal(size=n)
        direction /= np.linalg.norm(direction)
        dist = radius * rng.uniform() ** (1.0 / n)
        if space.isEuclidean:
            points[i] = dist * direction
        elif space.isHyperbolic:
            points[i, :-1] = np.sinh(dist) * direction
            points[i, -1] = np.cosh(dist)
        else:
            points[i, :-1] = np.sin(dist) * direction
            points[i, -1] = np.cos(dist)
    return points


def reach_about(space, x, center, radius):
    """
    Distance parameter about x covering every geodesic within the given
    radius (in the distance parameter) of center.
    """
    coords = as_coords(x, space)
    if space.isEuclidean:
        return float(np.linalg.norm(coords - center)) + radius
    if space.isHyperbolic:
        d = float(hyperbolic_distance(coords, center))
        return float(np.sinh(d + np.arcsinh(radius)))
    return 1.0
