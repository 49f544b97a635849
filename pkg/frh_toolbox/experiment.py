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

Module: experiment.py
Author: frh_toolbox developers

Declarative reconstruction experiments: an INI configuration selects the
space, the phantom, the method and the evaluation grid; the runner
produces an error table (or a table of divergence reports), a summary line
and plot data files.
"""

from __future__ import absolute_import, division

import numpy as np
import os
import pandas as pd
import time

from builtins import range, str, zip
from configparser import ConfigParser
from io import open
from multiprocessing import Pool

from .direct_diff import (
    appendix_reconstruct, helgason_reconstruct, mader_reconstruct)
from .fraccalc import (
    DERIVATIVE_VARIANTS, EK_TO_RL, MINUS, SEMIGROUP, USUAL_DERIVATIVE,
    WEIGHTED, Profile1D, is_divergent, verify_composition)
from .geometry import (
    EUCLIDEAN, HYPERBOLIC, SPHERICAL, SpaceDescriptor, as_coords,
    random_points)
from .inversion import (
    SPHERE_VARIANTS, WEIGHTED_D, FunctionClass, InversionPlan,
    check_admissible, reconstruct_grid, variant_agreement)
from .numerics import TailSpec
from .phantoms import (
    ConstantPhantom, GaussianPhantom, RadialBumpPhantom, RadialPowerPhantom,
    SphereQuadraticPhantom, ZonalGaussianPhantom, ZonalPowerPhantom)
from .radon import (
    NUM_ANGLES, NUM_OFFSETS, TransformField, build_sinogram,
    check_existence, counterexample_profile, default_offsets, radon_radial)
from .util import (
    ensure_directory, save_plot_data, save_sinogram_to_csv, write_frame,
    write_sinogram)


MEAN_VALUE = u"mean_value"
SPHERE_FORMULA = u"sphere_formula"
HELGASON = u"helgason"
APPENDIX = u"appendix"
MADER = u"mader"
EXISTENCE = u"existence"
METHODS = (MEAN_VALUE, SPHERE_FORMULA, HELGASON, APPENDIX, MADER, EXISTENCE)
DIRECT_METHODS = (HELGASON, APPENDIX, MADER)
ALL_VARIANTS = u"all"

ANALYTIC_FORWARD = u"analytic"
SINOGRAM_FORWARD = u"sinogram"

RADIAL_GAUSSIAN = u"radial_gaussian"
SHIFTED_GAUSSIAN = u"shifted_gaussian"
RADIAL_POWER = u"radial_power"
RADIAL_BUMP = u"radial_bump"
ZONAL_GAUSSIAN = u"zonal_gaussian"
ZONAL_POWER = u"zonal_power"
CONSTANT = u"constant"
SPHERE_QUADRATIC = u"sphere_quadratic"
COUNTEREXAMPLE = u"counterexample"
PHANTOM_KINDS = (RADIAL_GAUSSIAN, SHIFTED_GAUSSIAN, RADIAL_POWER,
                 RADIAL_BUMP, ZONAL_GAUSSIAN, ZONAL_POWER, CONSTANT,
                 SPHERE_QUADRATIC, COUNTEREXAMPLE)

PASS = u"pass"
TOLERANCE_FAIL = u"tolerance_fail"
NUMERIC_FAILURE = u"numeric_failure"
DIVERGENCE_CONFIRMED = u"divergence_confirmed"
EXPLORATORY = u"exploratory"
EXIT_CODES = {PASS: 0, DIVERGENCE_CONFIRMED: 0, EXPLORATORY: 0,
              TOLERANCE_FAIL: 1, NUMERIC_FAILURE: 2}
CONFIG_ERROR_EXIT = 3

OUTPUT_DIR_VARIABLE = u"FRH_TOOLBOX_OUTPUT_DIR"
REL_ERR_FLOOR = 1e-30
IDENTITY_TOL = 1e-6
# Seconds allowed for the default identity suite.
IDENTITY_TIME_LIMIT = 30.0
DEFAULT_RADII = (0.5, 1.0, 2.0)

# (curvature, n, k, methods) combinations the runner accepts.
SUPPORTED_MATRIX = (
    (EUCLIDEAN, 2, 1, (MEAN_VALUE, MADER, EXISTENCE)),
    (EUCLIDEAN, 3, 1, (MEAN_VALUE,)),
    (EUCLIDEAN, 3, 2, (MEAN_VALUE, HELGASON, APPENDIX, MADER, EXISTENCE)),
    (EUCLIDEAN, 4, 2, (MEAN_VALUE,)),
    (HYPERBOLIC, 2, 1, (MEAN_VALUE,)),
    (HYPERBOLIC, 3, 2, (MEAN_VALUE, HELGASON, EXISTENCE)),
    (HYPERBOLIC, 4, 3, (MEAN_VALUE, EXISTENCE)),
    (SPHERICAL, 2, 1, (SPHERE_FORMULA,)),
    (SPHERICAL, 3, 2, (SPHERE_FORMULA, HELGASON)),
)

SECTIONS = (u"experiment", u"phantom", u"method", u"grid", u"tolerances",
            u"output", u"sinogram")
PHANTOM_KEYS = (u"kind", u"width", u"amplitude", u"center", u"axis",
                u"beta", u"gamma", u"mu", u"value", u"b", u"which", u"p",
                u"delta", u"shift")
VECTOR_KEYS = (u"center", u"axis")
STRING_KEYS = (u"kind", u"which")


def format_matrix(matrix=SUPPORTED_MATRIX):
    lines = list()
    for curvature, n, k, methods in matrix:
        lines.append(curvature + u" n=" + str(n) + u" k=" + str(k) + u": " +
                     u", ".join(methods))
    return lines


class CapabilityError(ValueError):
    """
    Raised for a (space, n, k, method) combination outside the supported
    matrix. The message lists the matrix.
    """
    def __init__(self, message, matrix=SUPPORTED_MATRIX):
        self.matrix = matrix
        ValueError.__init__(self, message + u"\nSupported combinations:\n  " +
                            u"\n  ".join(format_matrix(matrix)))


def check_supported(curvature, n, k, method, matrix=SUPPORTED_MATRIX):
    for entry in matrix:
        if entry[:3] == (curvature, n, k) and method in entry[3]:
            return
    raise CapabilityError(u"Error: " + str(method) + u" on " +
                          str(curvature) + u" space with n = " + str(n) +
                          u", k = " + str(k) + u" is not supported.", matrix)


def list_matrix(matrix=SUPPORTED_MATRIX, verbose=True):
    """
    Returns the supported matrix as text lines, printing them if verbose.
    """
    lines = format_matrix(matrix)
    if verbose:
        for line in lines:
            print(line)
    return lines


def _format_value(value):
    if isinstance(value, bool):
        return u"true" if value else u"false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return str(repr(float(value)))
    if isinstance(value, (tuple, list)):
        return u" ".join(_format_value(v) for v in value)
    return str(value)


def _parse_vector(text):
    return tuple(float(v) for v in text.replace(u",", u" ").split())


def _parse_bool(text):
    lowered = text.strip().lower()
    if lowered in (u"true", u"yes", u"1", u"on"):
        return True
    if lowered in (u"false", u"no", u"0", u"off"):
        return False
    raise ValueError(u"Error: expected a boolean, got " + text + u".")


def _parse_points(text):
    points = list()
    for chunk in text.split(u";"):
        if chunk.strip():
            points.append(_parse_vector(chunk))
    return points


class ExperimentConfig(object):
    def __init__(self, name, space, n, k, phantomKind, phantomParams=None,
                 method=MEAN_VALUE, variant=None, kernel=None, r0=0.4,
                 levels=6, relTol=1e-6, applyWeight=True, exploratory=False,
                 forward=ANALYTIC_FORWARD, degree=0, points=None, count=0,
                 radius=1.0, radii=DEFAULT_RADII, tolerance=1e-3,
                 outputDir=u"frh_output", tableName=None, plot=False,
                 numAngles=NUM_ANGLES, numOffsets=NUM_OFFSETS, extent=0.0,
                 seed=0):
        """
        Args:
          name: string, experiment name, used for output file names.
          space: string, one of euclidean, hyperbolic, spherical.
          n: int, dimension of the space.
          k: int, dimension of the geodesic submanifolds.
          phantomKind: string, one of PHANTOM_KINDS.
          phantomParams: dict of phantom parameters (width, center, beta,
              mu, which, p, delta, shift, ...).
          method: string, one of METHODS.
          variant: string, derivative variant or sphere formula, or 'all'
              for every admissible one.
          kernel: string, sgn or log, for the mader method.
          r0: float, first radius of the limit schedule.
          levels: int, number of limit levels.
          relTol: float, tolerance of the inner derivative estimates.
          applyWeight: boolean, hyperbolic weight switch.
          exploratory: boolean, report errors without pass/fail.
          forward: string, analytic or sinogram (R^2, k = 1).
          degree: int, interpolation degree of the dual transform; 0 means
              automatic.
          points: list of evaluation points in model coordinates.
          count: int, number of seeded random points added to the grid.
          radius: float, geodesic radius of the random points.
          radii: distance parameters sampled by the existence method.
          tolerance: float, relative error tolerance.
          outputDir: string, output directory.
          tableName: string, file name of the error table.
          plot: boolean, whether or not to write plot data files.
          numAngles: int, sinogram angles.
          numOffsets: int, sinogram offsets.
          extent: float, sinogram half-width; 0 means from the decay.
          seed: int, seed of the random points.
        """
        self.name = name
        self.space = space
        self.n = int(n)
        self.k = int(k)
        self.phantomKind = phantomKind
        self.phantomParams = dict(phantomParams or dict())
        self.method = method
        self.variant = variant
        self.kernel = kernel
        self.r0 = float(r0)
        self.levels = int(levels)
        self.relTol = float(relTol)
        self.applyWeight = bool(applyWeight)
        self.exploratory = bool(exploratory)
        self.forward = forward
        self.degree = int(degree)
        self.points = [tuple(float(c) for c in x) for x in (points or [])]
        self.count = int(count)
        self.radius = float(radius)
        self.radii = tuple(float(r) for r in radii)
        self.tolerance = float(tolerance)
        self.outputDir = outputDir
        self.tableName = tableName or name + u"_errors.csv"
        self.plot = bool(plot)
        self.numAngles = int(numAngles)
        self.numOffsets = int(numOffsets)
        self.extent = float(extent)
        self.seed = int(seed)
        self.validate()

    def validate(self):
        """
        Raises ValueError (CapabilityError for the matrix) on an invalid
        configuration.
        """
        if self.phantomKind not in PHANTOM_KINDS:
            raise ValueError(u"Error: unknown phantom " +
                             str(self.phantomKind) + u".")
        if self.method not in METHODS:
            raise ValueError(u"Error: unknown method " + str(self.method) +
                             u".")
        for key in self.phantomParams:
            if key not in PHANTOM_KEYS:
                raise ValueError(u"Error: unknown phantom parameter " + key +
                                 u".")
        check_supported(self.space, self.n, self.k, self.method)
        if (self.method == EXISTENCE) != (self.phantomKind == COUNTEREXAMPLE):
            raise ValueError(u"Error: the existence method runs on "
                             "counterexample phantoms, and only there.")
        if self.forward not in (ANALYTIC_FORWARD, SINOGRAM_FORWARD):
            raise ValueError(u"Error: forward must be analytic or sinogram.")
        if self.forward == SINOGRAM_FORWARD and not (
                self.space == EUCLIDEAN and self.n == 2 and self.k == 1):
            raise ValueError(u"Error: sampled sinograms exist for lines in "
                             "R^2 only.")
        if self.levels < 2:
            raise ValueError(u"Error: levels must be at least 2.")
        if self.tolerance <= 0:
            raise ValueError(u"Error: tolerance must be positive.")
        if self.count < 0:
            raise ValueError(u"Error: count must be nonnegative.")

    @property
    def spaceDescriptor(self):
        return SpaceDescriptor(self.space, self.n, self.k)

    def sections(self):
        """
        The canonical (section, [(key, text)]) layout of the config.
        """
        experiment = [(u"name", self.name), (u"space", self.space),
                      (u"n", self.n), (u"k", self.k), (u"seed", self.seed)]
        phantom = [(u"kind", self.phantomKind)]
        phantom += sorted(self.phantomParams.items())
        method = [(u"name", self.method), (u"variant", self.variant or u""),
                  (u"kernel", self.kernel or u""), (u"r0", self.r0),
                  (u"levels", self.levels), (u"rel_tol", self.relTol),
                  (u"apply_weight", self.applyWeight),
                  (u"exploratory", self.exploratory),
                  (u"forward", self.forward), (u"degree", self.degree)]
        grid = [(u"points", u"; ".join(_format_value(x)
                                       for x in self.points)),
                (u"count", self.count), (u"radius", self.radius),
                (u"radii", self.radii)]
        tolerances = [(u"rel_err", self.tolerance)]
        output = [(u"directory", self.outputDir),
                  (u"table", self.tableName), (u"plot", self.plot)]
        sinogram = [(u"angles", self.numAngles),
                    (u"offsets", self.numOffsets), (u"extent", self.extent)]
        return [(u"experiment", experiment), (u"phantom", phantom),
                (u"method", method), (u"grid", grid),
                (u"tolerances", tolerances), (u"output", output),
                (u"sinogram", sinogram)]

    def to_text(self):
        lines = list()
        for section, items in self.sections():
            lines.append(u"[" + section + u"]")
            for key, value in items:
                lines.append(key + u" = " + _format_value(value))
            lines.append(u"")
        return u"\n".join(lines)

    @classmethod
    def from_text(cls, text):
        parser = ConfigParser(interpolation=None)
        try:
            parser.read_string(str(text))
        except:
            print(u"An exception occurred while parsing the experiment "
                  "configuration.")
            raise
        for section in parser.sections():
            if section not in SECTIONS:
                raise ValueError(u"Error: unknown config section [" +
                                 section + u"].")
        for section in (u"experiment", u"phantom", u"method"):
            if not parser.has_section(section):
                raise ValueError(u"Error: config section [" + section +
                                 u"] is missing.")

        def get(section, key, default=None):
            if parser.has_option(section, key):
                return parser.get(section, key).strip()
            return default

        known = {
            u"experiment": (u"name", u"space", u"n", u"k", u"seed"),
            u"method": (u"name", u"variant", u"kernel", u"r0", u"levels",
                        u"rel_tol", u"apply_weight", u"exploratory",
                        u"forward", u"degree"),
            u"grid": (u"points", u"count", u"radius", u"radii"),
            u"tolerances": (u"rel_err",),
            u"output": (u"directory", u"table", u"plot"),
            u"sinogram": (u"angles", u"offsets", u"extent"),
            u"phantom": PHANTOM_KEYS,
        }
        for section in parser.sections():
            for key in parser.options(section):
                if key not in known[section]:
                    raise ValueError(u"Error: unknown key " + key +
                                     u" in section [" + section + u"].")

        params = dict()
        for key in parser.options(u"phantom"):
            if key == u"kind":
                continue
            value = get(u"phantom", key)
            if key in VECTOR_KEYS:
                params[key] = _parse_vector(value)
            elif key in STRING_KEYS:
                params[key] = value
            else:
                params[key] = float(value)

        radii = get(u"grid", u"radii")
        try:
            return cls(
                name=get(u"experiment", u"name", u"experiment"),
                space=get(u"experiment", u"space"),
                n=int(get(u"experiment", u"n")),
                k=int(get(u"experiment", u"k")),
                seed=int(get(u"experiment", u"seed", u"0")),
                phantomKind=get(u"phantom", u"kind"),
                phantomParams=params,
                method=get(u"method", u"name", MEAN_VALUE),
                variant=get(u"method", u"variant") or None,
                kernel=get(u"method", u"kernel") or None,
                r0=float(get(u"method", u"r0", u"0.4")),
                levels=int(get(u"method", u"levels", u"6")),
                relTol=float(get(u"method", u"rel_tol", u"1e-6")),
                applyWeight=_parse_bool(get(u"method", u"apply_weight",
                                            u"true")),
                exploratory=_parse_bool(get(u"method", u"exploratory",
                                            u"false")),
                forward=get(u"method", u"forward", ANALYTIC_FORWARD),
                degree=int(get(u"method", u"degree", u"0")),
                points=_parse_points(get(u"grid", u"points", u"")),
                count=int(get(u"grid", u"count", u"0")),
                radius=float(get(u"grid", u"radius", u"1.0")),
                radii=(_parse_vector(radii) if radii else DEFAULT_RADII),
                tolerance=float(get(u"tolerances", u"rel_err", u"1e-3")),
                outputDir=get(u"output", u"directory", u"frh_output"),
                tableName=get(u"output", u"table"),
                plot=_parse_bool(get(u"output", u"plot", u"false")),
                numAngles=int(get(u"sinogram", u"angles", str(NUM_ANGLES))),
                numOffsets=int(get(u"sinogram", u"offsets",
                                   str(NUM_OFFSETS))),
                extent=float(get(u"sinogram", u"extent", u"0.0")))
        except TypeError:
            raise ValueError(u"Error: [experiment] needs space, n and k, "
                             "[phantom] needs kind.")

    @classmethod
    def from_file(cls, fileName):
        try:
            with open(fileName, u"rt") as configFile:
                text = configFile.read()
        except:
            print(u"Error while reading config file " + fileName)
            raise
        return cls.from_text(text)

    def to_file(self, fileName):
        with open(fileName, u"w") as configFile:
            configFile.write(self.to_text())

    def __eq__(self, other):
        return (isinstance(other, ExperimentConfig) and
                self.to_text() == other.to_text())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return (u"ExperimentConfig(" + self.name + u", " + self.space +
                u", n=" + str(self.n) + u", k=" + str(self.k) + u", " +
                self.method + u")")


class ErrorTable(object):
    COLUMNS = [u"f_true", u"f_reconstructed", u"abs_err", u"rel_err",
               u"limit_error_estimate", u"variant"]

    def __init__(self, dim):
        """
        Args:
          dim: int, number of coordinates of the evaluation points.
        """
        self.dim = dim
        self.rows = list()

    def add_row(self, x, fTrue, fReconstructed, limitErrorEstimate,
                variant):
        absErr = abs(fReconstructed - fTrue)
        relErr = absErr / max(abs(fTrue), REL_ERR_FLOOR)
        self.rows.append((tuple(float(c) for c in x), float(fTrue),
                          float(fReconstructed), float(absErr),
                          float(relErr), float(limitErrorEstimate), variant))

    def __len__(self):
        return len(self.rows)

    @property
    def relErrors(self):
        return np.array([row[4] for row in self.rows])

    @property
    def maxRelErr(self):
        if not self.rows:
            return 0.0
        return float(np.max(self.relErrors))

    @property
    def medianRelErr(self):
        if not self.rows:
            return 0.0
        return float(np.median(self.relErrors))

    @property
    def allFinite(self):
        return all(np.isfinite(row[2]) for row in self.rows)

    def to_frame(self):
        columns = [u"x_" + str(i) for i in range(self.dim)] + self.COLUMNS
        records = [list(row[0]) + list(row[1:]) for row in self.rows]
        return pd.DataFrame(records, columns=columns)


class DivergenceTable(object):
    COLUMNS = [u"r", u"condition", u"holds", u"critical_exponent",
               u"margin", u"value"]

    def __init__(self):
        self.rows = list()

    def add_row(self, r, report, value):
        self.rows.append((float(r), report.condition, bool(report.holds),
                          float(report.criticalExponent),
                          float(report.margin), float(value)))

    def __len__(self):
        return len(self.rows)

    @property
    def allDivergent(self):
        return all(np.isinf(row[5]) for row in self.rows)

    @property
    def allFinite(self):
        return all(np.isfinite(row[5]) for row in self.rows)

    def to_frame(self):
        return pd.DataFrame(list(self.rows), columns=self.COLUMNS)


class ExperimentResult(object):
    def __init__(self, config, status, table=None, divergences=None,
                 summary=u"", outputFiles=None, results=None,
                 agreements=None):
        self.config = config
        self.status = status
        self.table = table
        self.divergences = divergences
        self.summary = summary
        self.outputFiles = outputFiles or list()
        self.results = results or list()
        self.agreements = agreements or list()

    @property
    def exitCode(self):
        return EXIT_CODES[self.status]

    def __repr__(self):
        return u"ExperimentResult(" + self.status + u")"


def make_phantom(config, space=None):
    """
    The phantom named by the config.
    """
    if space is None:
        space = config.spaceDescriptor
    params = config.phantomParams
    kind = config.phantomKind
    if kind == RADIAL_GAUSSIAN:
        return GaussianPhantom(space, width=params.get(u"width", 1.0),
                               amplitude=params.get(u"amplitude", 1.0))
    if kind == SHIFTED_GAUSSIAN:
        if u"center" not in params:
            raise ValueError(u"Error: shifted_gaussian needs a center.")
        return GaussianPhantom(space, center=np.array(params[u"center"]),
                               width=params.get(u"width", 1.0),
                               amplitude=params.get(u"amplitude", 1.0))
    if kind == RADIAL_POWER:
        return RadialPowerPhantom(space, params.get(u"beta", 2.0))
    if kind == RADIAL_BUMP:
        return RadialBumpPhantom(space, params.get(u"gamma", 0.5))
    center = params.get(u"center")
    if center is not None:
        center = np.array(center)
    if kind == ZONAL_GAUSSIAN:
        return ZonalGaussianPhantom(space, center=center,
                                    width=params.get(u"width", 1.0))
    if kind == ZONAL_POWER:
        return ZonalPowerPhantom(space, params.get(u"mu", 4.0),
                                 center=center)
    if kind == CONSTANT:
        return ConstantPhantom(space, params.get(u"value", 1.0))
    if kind == SPHERE_QUADRATIC:
        axis = params.get(u"axis")
        if axis is not None:
            axis = np.array(axis)
        return SphereQuadraticPhantom(space, axis=axis,
                                      b=params.get(u"b", 1.0))
    raise ValueError(u"Error: phantom " + kind + u" has no field.")


def lift_point(v, space):
    """
    Model coordinates of the point exp_x0(v) for a tangent vector v at the
    base point; points of R^n are returned as they are.
    """
    v = np.asarray(v, dtype=float)
    if space.isEuclidean:
        return v
    dist = np.linalg.norm(v)
    direction = v / dist if dist > 0 else v
    if space.isHyperbolic:
        return np.append(np.sinh(dist) * direction, np.cosh(dist))
    return np.append(np.sin(dist) * direction, np.cos(dist))


def grid_points(config, space=None):
    """
    Explicit points of the config followed by the seeded random ones. On
    H^n and S^n a point with n coordinates is read as a tangent vector at
    the base point, one with n + 1 as model coordinates.
    """
    if space is None:
        space = config.spaceDescriptor
    points = list()
    for x in config.points:
        if not space.isEuclidean and len(x) == space.n:
            x = lift_point(x, space)
        points.append(as_coords(np.array(x), space))
    if config.count > 0:
        points += list(random_points(space, config.count, config.radius,
                                     seed=config.seed))
    return points


def sinogram_grid(config, phantom):
    """
    Angles and offsets of the sampled sinogram of a config.
    """
    thetas = np.pi * np.arange(config.numAngles) / config.numAngles
    if config.extent > 0:
        offsets = np.linspace(-config.extent, config.extent,
                              config.numOffsets)
    else:
        offsets = default_offsets(phantom.sourceDecay, phantom.center,
                                  config.numOffsets)
    return thetas, offsets


def forward_field(phantom, config, numThreads=1, verbose=False):
    """
    The forward transform used by the reconstruction: closed form, or a
    sampled sinogram in R^2.
    """
    if config.forward == ANALYTIC_FORWARD:
        return TransformField.analytic(phantom)
    thetas, offsets = sinogram_grid(config, phantom)
    return build_sinogram(phantom, thetas, offsets, numThreads=numThreads,
                          verbose=verbose)


def _variants(config, space, functionClass):
    if config.method == SPHERE_FORMULA:
        default, candidates = WEIGHTED_D, SPHERE_VARIANTS
    else:
        default, candidates = USUAL_DERIVATIVE, DERIVATIVE_VARIANTS
    if config.variant is None:
        return [default]
    if config.variant != ALL_VARIANTS:
        return [config.variant]
    variants = list()
    for variant in candidates:
        try:
            check_admissible(space, variant, functionClass)
        except ValueError:
            continue
        variants.append(variant)
    return variants


def _direct_point(method, phi, x, space, options):
    if method == HELGASON:
        return helgason_reconstruct(phi, x, space, levels=options[u"levels"],
                                    relTol=options[u"relTol"],
                                    degree=options[u"degree"],
                                    fullOutput=True)
    if method == APPENDIX:
        return appendix_reconstruct(phi, x, space, r0=options[u"r0"],
                                    levels=options[u"levels"],
                                    relTol=options[u"relTol"],
                                    degree=options[u"degree"],
                                    fullOutput=True)
    return mader_reconstruct(phi, x, kernel=options[u"kernel"],
                             levels=options[u"levels"],
                             relTol=options[u"relTol"],
                             degree=options[u"degree"], fullOutput=True)


def unwrap_direct_point(arg, **kwarg):
    """
    Wrapper for _direct_point(), intended for parallel computation using a
    process pool.
    """
    return _direct_point(*arg, **kwarg)


def _direct_grid(config, phi, points, space, numThreads):
    options = {u"levels": config.levels, u"relTol": config.relTol,
               u"r0": config.r0, u"kernel": config.kernel,
               u"degree": config.degree or None}
    args = [(config.method, phi, x, space, options) for x in points]
    if numThreads > 1 and len(args) > 1:
        pool = Pool(numThreads)
        results = pool.map(unwrap_direct_point, args)
        pool.close()
        pool.join()
        return results
    return [unwrap_direct_point(arg) for arg in args]


def _existence_table(config, space, verbose):
    params = config.phantomParams
    shift = params.get(u"shift", 0.0)
    profile = counterexample_profile(params.get(u"which"), space.n, space.k,
                                     p=params.get(u"p"),
                                     delta=params.get(u"delta", 0.25),
                                     mu=params.get(u"mu"),
                                     exponentShift=shift)
    report = check_existence(profile.decay, space)
    table = DivergenceTable()
    for r in config.radii:
        value = radon_radial(profile, space, r)
        if is_divergent(value):
            table.add_row(r, value.existence or report, np.inf)
        else:
            table.add_row(r, report, value)
        if verbose:
            print(u"r = " + str(r) + u": " + repr(value))
    if shift > 0:
        status = PASS if table.allFinite else NUMERIC_FAILURE
    else:
        status = DIVERGENCE_CONFIRMED if table.allDivergent else \
            NUMERIC_FAILURE
    return table, status


def resolve_output_directory(config, override=None):
    """
    Output directory: explicit override, then the environment variable
    FRH_TOOLBOX_OUTPUT_DIR, then the config.
    """
    if override:
        return override
    return os.environ.get(OUTPUT_DIR_VARIABLE) or config.outputDir


def summary_line(config, status, table, agreements=None):
    line = (config.name + u": status=" + status + u", points=" +
            str(len(table)))
    if isinstance(table, ErrorTable):
        line += (u", max rel_err=" + u"%.3e" % table.maxRelErr +
                 u", median rel_err=" + u"%.3e" % table.medianRelErr +
                 u", tolerance=" + u"%.1e" % config.tolerance)
    if agreements:
        outside = sum(1 for pair in agreements if not pair.agrees)
        line += (u", variant pairs=" + str(len(agreements)) +
                 u", outside bound=" + str(outside))
    return line


def run_experiment(config, numThreads=1, outputDir=None, writeOutput=True,
                   verbose=False):
    """
    Runs one experiment.
    Args:
      config: ExperimentConfig.
      numThreads: int, size of the process pools.
      outputDir: string, overrides the output directory.
      writeOutput: boolean, whether or not to write the table, summary and
          plot data files.
      verbose: boolean, whether or not to increase output verbosity.
    Returns:
      An ExperimentResult.
    """
    space = config.spaceDescriptor
    if verbose:
        print(u"Running experiment " + config.name + u" on " + repr(space) +
              u" with method " + config.method + u"...")

    results = list()
    plotData = list()
    agreements = list()
    if config.method == EXISTENCE:
        table, status = _existence_table(config, space, verbose)
        divergences = table
    else:
        divergences = None
        phantom = make_phantom(config, space)
        points = grid_points(config, space)
        table = ErrorTable(space.ambientDim)
        failed = False
        byPoint = dict()
        if points:
            try:
                phi = forward_field(phantom, config, numThreads, verbose)
            except:
                print(u"An exception occurred while computing the forward "
                      "transform.")
                raise
            if is_divergent(phi):
                failed = True
                points = list()
        functionClass = FunctionClass.from_decay(phantom.sourceDecay)
        if config.method in DIRECT_METHODS:
            runs = [(config.method, None)]
        else:
            runs = [(variant, InversionPlan(
                space, variant, functionClass, r0=config.r0,
                levels=config.levels, relTol=config.relTol,
                applyWeight=config.applyWeight))
                for variant in _variants(config, space, functionClass)]
        for label, plan in runs:
            if not points:
                continue
            try:
                if plan is None:
                    estimates = _direct_grid(config, phi, points, space,
                                             numThreads)
                else:
                    estimates = reconstruct_grid(
                        phi, points, plan, numThreads=numThreads,
                        degree=config.degree or None, verbose=verbose)
            except:
                print(u"An exception occurred while reconstructing with " +
                      label + u".")
                raise
            for i, (x, estimate) in enumerate(zip(points, estimates)):
                fTrue = phantom.value_at(x)
                if is_divergent(estimate):
                    failed = True
                    table.add_row(x, fTrue, np.nan, np.nan, label)
                    continue
                table.add_row(x, fTrue, estimate.value,
                              estimate.errorEstimate, label)
                results.append(estimate)
                if plan is not None:
                    plotData.append((label, i, estimate.intermediateMean))
                    byPoint.setdefault(i, list()).append(estimate)
        for i in sorted(byPoint):
            agreements.extend(variant_agreement(byPoint[i],
                                                relFloor=config.relTol))
        if failed or not table.allFinite:
            status = NUMERIC_FAILURE
        elif config.exploratory:
            status = EXPLORATORY
        elif table.maxRelErr <= config.tolerance:
            status = PASS
        else:
            status = TOLERANCE_FAIL

    summary = summary_line(config, status, table, agreements)
    if verbose:
        print(summary)

    outputFiles = list()
    if writeOutput:
        directory = ensure_directory(resolve_output_directory(config,
                                                              outputDir))
        tableFile = os.path.join(directory, config.tableName)
        write_frame(table.to_frame(), tableFile)
        outputFiles.append(tableFile)
        summaryFile = os.path.join(directory, config.name + u"_summary.txt")
        with open(summaryFile, u"w") as outFile:
            outFile.write(summary + u"\n")
        outputFiles.append(summaryFile)
        if config.plot:
            for label, i, profile in plotData:
                plotFile = os.path.join(directory, config.name + u"_plot_" +
                                        label + u"_" + str(i) + u".csv")
                save_plot_data(profile.grid, profile.values, plotFile)
                outputFiles.append(plotFile)

    return ExperimentResult(config, status, table=table,
                            divergences=divergences, summary=summary,
                            outputFiles=outputFiles, results=results,
                            agreements=agreements)


def run_sinogram(config, numThreads=1, outputDir=None, verbose=False):
    """
    Computes the forward sinogram of the config phantom and writes it as
    text and CSV.
    Returns:
      (field, list of written files), or (DivergenceReport, []) when the
      line transform of the phantom is infinite.
    """
    if not (config.space == EUCLIDEAN and config.n == 2 and config.k == 1):
        raise CapabilityError(u"Error: sinograms are computed for lines in "
                              "R^2 only.")
    phantom = make_phantom(config)
    thetas, offsets = sinogram_grid(config, phantom)
    field = build_sinogram(phantom, thetas, offsets, numThreads=numThreads,
                           verbose=verbose)
    if is_divergent(field):
        return field, list()
    directory = ensure_directory(resolve_output_directory(config, outputDir))
    textFile = os.path.join(directory, config.name + u"_sinogram.txt")
    csvFile = os.path.join(directory, config.name + u"_sinogram.csv")
    write_sinogram(field, textFile)
    save_sinogram_to_csv(field, csvFile)
    if verbose:
        print(u"Sinogram written to " + textFile + u" and " + csvFile + u".")
    return field, [textFile, csvFile]


class _GaussianOracle(object):
    def __call__(self, s):
        return np.exp(-s * s)


class _ExponentialOracle(object):
    def __call__(self, s):
        return np.exp(-s)


class _PowerOracle(object):
    def __init__(self, beta):
        self.beta = beta

    def __call__(self, s):
        return (1 + s * s) ** (-self.beta)


def oracle_profiles():
    """
    Profiles of the identity suite, by name.
    """
    return {
        u"exp(-s^2)": Profile1D(_GaussianOracle(),
                                decay=TailSpec.gaussian(1.0),
                                smoothnessHint=4),
        u"exp(-s)": Profile1D(_ExponentialOracle(),
                              decay=TailSpec.exponential(1.0),
                              smoothnessHint=4),
        u"(1+s^2)^-4": Profile1D(_PowerOracle(4.0),
                                 decay=TailSpec.power(8.0),
                                 smoothnessHint=4),
        u"(1+s^2)^-1/2": Profile1D(_PowerOracle(0.5),
                                   decay=TailSpec.power(1.0),
                                   smoothnessHint=4),
    }


HALF_ORDERS = (0.5, 1.0, 1.5)
IDENTITY_T_GRID = (0.5, 1.5)
SUITE_PROFILES = (u"exp(-s^2)", u"exp(-s)", u"(1+s^2)^-4")
BOUNDARY_PROFILE = u"(1+s^2)^-1/2"


def default_identity_matrix():
    """
    Rows (identity, profile name, alpha, beta) of the identity suite: the
    three oracle profiles over alpha, beta in {1/2, 1, 3/2}, plus one
    profile on the boundary of the existence condition.
    """
    matrix = list()
    for which in (SEMIGROUP, WEIGHTED, EK_TO_RL):
        for name in SUITE_PROFILES:
            for alpha in HALF_ORDERS:
                if which == EK_TO_RL:
                    matrix.append((which, name, alpha, alpha))
                    continue
                for beta in HALF_ORDERS:
                    matrix.append((which, name, alpha, beta))
    matrix.append((SEMIGROUP, BOUNDARY_PROFILE, 0.5, 0.5))
    return matrix


class IdentityReport(object):
    COLUMNS = [u"identity", u"profile", u"alpha", u"beta", u"discrepancy",
               u"status"]

    def __init__(self, tolerance=IDENTITY_TOL):
        self.tolerance = tolerance
        self.rows = list()
        self.elapsed = 0.0

    def add_row(self, which, name, alpha, beta, discrepancy):
        if is_divergent(discrepancy):
            status = u"precondition fails"
            discrepancy = np.nan
        elif discrepancy <= self.tolerance:
            status = u"ok"
        else:
            status = u"tolerance fail"
        self.rows.append((which, name, float(alpha), float(beta),
                          float(discrepancy), status))

    def __len__(self):
        return len(self.rows)

    @property
    def passed(self):
        return all(row[5] != u"tolerance fail" for row in self.rows)

    @property
    def withinTimeLimit(self):
        return self.elapsed < IDENTITY_TIME_LIMIT

    def max_discrepancy(self):
        """
        Maximum discrepancy per identity over the rows that ran.
        """
        worst = dict()
        for row in self.rows:
            if np.isfinite(row[4]):
                worst[row[0]] = max(worst.get(row[0], 0.0), row[4])
        return worst

    def to_frame(self):
        return pd.DataFrame(list(self.rows), columns=self.COLUMNS)


def run_identity_suite(matrix=None, tGrid=IDENTITY_T_GRID,
                       tolerance=IDENTITY_TOL, verbose=False):
    """
    Checks the composition identities of the fractional integrals over a
    matrix of profiles and orders.
    Args:
      matrix: list of (identity, profile name, alpha, beta); the default
          matrix if None.
      tGrid: evaluation points.
      tolerance: float, maximum relative discrepancy of a passing row.
      verbose: boolean, whether or not to increase output verbosity.
    Returns:
      An IdentityReport.
    """
    if matrix is None:
        matrix = default_identity_matrix()
    profiles = oracle_profiles()
    report = IdentityReport(tolerance)
    start = time.time()
    for which, name, alpha, beta in matrix:
        try:
            discrepancy = verify_composition(profiles[name], alpha, beta,
                                             which, tGrid, sign=MINUS)
        except:
            print(u"An exception occurred while verifying " + which +
                  u" on " + name + u".")
            raise
        report.add_row(which, name, alpha, beta, discrepancy)
        if verbose:
            row = report.rows[-1]
            print(which + u" " + name + u" alpha=" + str(alpha) +
                  u" beta=" + str(beta) + u": " + row[5] + u" (" +
                  str(row[4]) + u")")
    if verbose:
        for which, worst in sorted(report.max_discrepancy().items()):
            print(u"Max discrepancy " + which + u": " + str(worst))
    report.elapsed = time.time() - start
    if verbose:
        print(u"Identity suite ran in " + u"%.1f" % report.elapsed +
              u" s.")
    return report
