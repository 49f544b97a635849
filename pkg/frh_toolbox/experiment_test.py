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

Module: experiment_test.py
Author: frh_toolbox developers

Tests for experiment.py.
"""

import numpy as np
import os
import shutil
import tempfile
import unittest

from io import open

from .experiment import (
    ALL_VARIANTS, DIVERGENCE_CONFIRMED, EXISTENCE, EXPLORATORY,
    IDENTITY_TIME_LIMIT, MEAN_VALUE, OUTPUT_DIR_VARIABLE, PASS,
    RADIAL_GAUSSIAN, SUPPORTED_MATRIX, TOLERANCE_FAIL, ZONAL_GAUSSIAN,
    CapabilityError, ErrorTable, ExperimentConfig,
    check_supported, default_identity_matrix, grid_points, list_matrix,
    resolve_output_directory, run_experiment, run_identity_suite,
    run_sinogram)
from .fraccalc import INTEGER_D, SEMIGROUP
from .geometry import EUCLIDEAN, HYPERBOLIC, SPHERICAL
from .util import get_data_path, read_sinogram


CONFIG_TEXT = u"""
[experiment]
name = small
space = euclidean
n = 2
k = 1

[phantom]
kind = shifted_gaussian
center = 0.3 -0.2

[method]
name = mean_value
variant = usual_derivative

[grid]
points = 0 0; 0.3 -0.2
"""


def radial_config(**kwargs):
    return ExperimentConfig(u"radial", EUCLIDEAN, 2, 1, RADIAL_GAUSSIAN,
                            points=[(0.0, 0.0)], **kwargs)


def bundled(name):
    return ExperimentConfig.from_file(get_data_path(u"configs/" + name +
                                                    u".ini"))


class TestExperimentConfig(unittest.TestCase):
    def test_from_text(self):
        config = ExperimentConfig.from_text(CONFIG_TEXT)
        self.assertEqual(config.name, u"small")
        self.assertEqual(config.phantomParams[u"center"], (0.3, -0.2))
        self.assertEqual(config.points, [(0.0, 0.0), (0.3, -0.2)])
        self.assertEqual(config.tableName, u"small_errors.csv")
        self.assertEqual(config.levels, 6)

    def test_text_is_canonical(self):
        config = ExperimentConfig.from_text(CONFIG_TEXT)
        self.assertEqual(ExperimentConfig.from_text(config.to_text()),
                         config)

    def test_unknown_key(self):
        text = CONFIG_TEXT.replace(u"variant =", u"flavour =")
        self.assertRaises(ValueError, ExperimentConfig.from_text, text)

    def test_unknown_section(self):
        self.assertRaises(ValueError, ExperimentConfig.from_text,
                          CONFIG_TEXT + u"\n[extra]\nkey = 1\n")

    def test_missing_section(self):
        text = CONFIG_TEXT.replace(u"[method]\nname = mean_value\n"
                                   u"variant = usual_derivative\n", u"")
        self.assertRaises(ValueError, ExperimentConfig.from_text, text)

    def test_unsupported_combination(self):
        self.assertRaises(CapabilityError, ExperimentConfig, u"bad",
                          SPHERICAL, 2, 1, u"constant", method=MEAN_VALUE)
        try:
            check_supported(HYPERBOLIC, 5, 2, MEAN_VALUE)
        except CapabilityError as err:
            self.assertIn(u"Supported combinations", str(err))
        else:
            self.fail(u"CapabilityError not raised.")

    def test_existence_needs_counterexample(self):
        self.assertRaises(ValueError, ExperimentConfig, u"bad", EUCLIDEAN, 2,
                          1, RADIAL_GAUSSIAN, method=EXISTENCE)

    def test_sinogram_forward_needs_plane(self):
        self.assertRaises(ValueError, ExperimentConfig, u"bad", EUCLIDEAN, 3,
                          2, RADIAL_GAUSSIAN, forward=u"sinogram")

    def test_every_bundled_config_parses(self):
        directory = get_data_path(u"configs")
        for fileName in sorted(os.listdir(directory)):
            if fileName.endswith(u".ini"):
                config = ExperimentConfig.from_file(
                    os.path.join(directory, fileName))
                self.assertEqual(config.name + u".ini", fileName)

    def test_every_supported_combination_has_a_config(self):
        directory = get_data_path(u"configs")
        bundledCombinations = set()
        for fileName in os.listdir(directory):
            if fileName.endswith(u".ini"):
                config = ExperimentConfig.from_file(
                    os.path.join(directory, fileName))
                bundledCombinations.add((config.space, config.n, config.k,
                                         config.method))
        for curvature, n, k, methods in SUPPORTED_MATRIX:
            for method in methods:
                self.assertIn((curvature, n, k, method), bundledCombinations)

    def test_list_matrix(self):
        lines = list_matrix(verbose=False)
        self.assertIn(u"euclidean n=3 k=2: mean_value, helgason, appendix, "
                      "mader, existence", lines)


class TestGrid(unittest.TestCase):
    def test_tangent_vectors_are_lifted(self):
        config = ExperimentConfig(u"h", HYPERBOLIC, 3, 2, ZONAL_GAUSSIAN,
                                  points=[(0.5, 0.0, 0.0)])
        point = grid_points(config)[0]
        np.testing.assert_allclose(point, [np.sinh(0.5), 0.0, 0.0,
                                           np.cosh(0.5)])

    def test_random_points_are_seeded(self):
        config = radial_config(count=4, seed=5)
        first, second = grid_points(config), grid_points(config)
        self.assertEqual(len(first), 5)
        np.testing.assert_array_equal(first[3], second[3])


class TestErrorTable(unittest.TestCase):
    def test_rows(self):
        table = ErrorTable(2)
        table.add_row((0.0, 0.0), 2.0, 2.002, 1e-6, u"v")
        table.add_row((1.0, 0.0), 0.0, 1e-40, 0.0, u"v")
        self.assertAlmostEqual(table.maxRelErr, 1e-3)
        self.assertAlmostEqual(table.relErrors[1], 1e-10)
        frame = table.to_frame()
        self.assertEqual(list(frame.columns)[:3], [u"x_0", u"x_1", u"f_true"])
        self.assertEqual(len(frame), 2)


class TestRunExperiment(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_pass_writes_outputs(self):
        config = radial_config(plot=True)
        result = run_experiment(config, outputDir=self.directory)
        self.assertEqual(result.status, PASS)
        self.assertEqual(result.exitCode, 0)
        self.assertAlmostEqual(result.results[0].value, 1.0, delta=1e-5)
        self.assertEqual(len(result.outputFiles), 3)
        for fileName in result.outputFiles:
            self.assertTrue(os.path.exists(fileName))

    def test_exploratory(self):
        result = run_experiment(radial_config(exploratory=True),
                                writeOutput=False)
        self.assertEqual(result.status, EXPLORATORY)

    def test_tolerance_failure(self):
        # Without the hyperbolic weight the reconstruction is 3/2.
        config = ExperimentConfig(u"no_weight", HYPERBOLIC, 3, 2,
                                  ZONAL_GAUSSIAN, variant=INTEGER_D,
                                  applyWeight=False, points=[(0.0, 0.0, 0.0)])
        result = run_experiment(config, writeOutput=False)
        self.assertEqual(result.status, TOLERANCE_FAIL)
        self.assertEqual(result.exitCode, 1)
        self.assertAlmostEqual(result.table.maxRelErr, 0.5, delta=1e-4)

    def test_existence(self):
        result = run_experiment(bundled(u"r2_k1_existence"),
                                writeOutput=False)
        self.assertEqual(result.status, DIVERGENCE_CONFIRMED)
        self.assertEqual(result.exitCode, 0)
        self.assertTrue(result.divergences.allDivergent)

    def test_shifted_existence(self):
        result = run_experiment(bundled(u"r2_k1_existence_shifted"),
                                writeOutput=False)
        self.assertEqual(result.status, PASS)
        self.assertTrue(result.divergences.allFinite)

    def test_same_seed_same_table(self):
        tables = list()
        for name in (u"first", u"second"):
            directory = os.path.join(self.directory, name)
            result = run_experiment(radial_config(count=3, seed=11),
                                    outputDir=directory)
            with open(result.outputFiles[0], u"r") as inFile:
                lines = inFile.readlines()
            # The first line carries the toolbox version.
            tables.append(lines[1:])
        self.assertTrue(len(tables[0]) > 1)
        self.assertEqual(tables[0], tables[1])

    def test_variant_agreement(self):
        result = run_experiment(radial_config(variant=ALL_VARIANTS),
                                writeOutput=False)
        self.assertEqual(result.status, PASS)
        self.assertEqual(len(result.agreements), 3)
        for pair in result.agreements:
            self.assertTrue(pair.agrees, repr(pair))
        self.assertIn(u"outside bound=0", result.summary)

    def test_output_directory_order(self):
        config = radial_config(outputDir=u"from_config")
        previous = os.environ.pop(OUTPUT_DIR_VARIABLE, None)
        try:
            self.assertEqual(resolve_output_directory(config), u"from_config")
            os.environ[OUTPUT_DIR_VARIABLE] = self.directory
            self.assertEqual(resolve_output_directory(config),
                             self.directory)
            self.assertEqual(resolve_output_directory(config, u"cli"),
                             u"cli")
        finally:
            os.environ.pop(OUTPUT_DIR_VARIABLE, None)
            if previous is not None:
                os.environ[OUTPUT_DIR_VARIABLE] = previous


class TestRunSinogram(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_files(self):
        config = radial_config(numAngles=4, numOffsets=33)
        field, files = run_sinogram(config, outputDir=self.directory)
        self.assertEqual(field.values.shape, (4, 33))
        self.assertEqual(len(files), 2)
        loaded = read_sinogram(files[0])
        np.testing.assert_array_equal(loaded.values, field.values)

    def test_needs_plane(self):
        config = ExperimentConfig(u"h", HYPERBOLIC, 3, 2, ZONAL_GAUSSIAN)
        self.assertRaises(CapabilityError, run_sinogram, config,
                          outputDir=self.directory)


class TestIdentitySuite(unittest.TestCase):
    def test_default_matrix(self):
        matrix = default_identity_matrix()
        self.assertEqual(len(matrix), 3 * 9 + 3 * 9 + 3 * 3 + 1)

    def test_small_suite(self):
        matrix = [(SEMIGROUP, u"exp(-s^2)", 0.5, 1.0),
                  (SEMIGROUP, u"(1+s^2)^-1/2", 0.5, 0.5)]
        report = run_identity_suite(matrix)
        self.assertEqual(len(report), 2)
        self.assertEqual(report.rows[0][5], u"ok")
        self.assertEqual(report.rows[1][5], u"precondition fails")
        self.assertTrue(report.passed)
        self.assertIn(SEMIGROUP, report.max_discrepancy())
        self.assertTrue(report.elapsed >= 0)
        self.assertLess(report.elapsed, IDENTITY_TIME_LIMIT)
        self.assertTrue(report.withinTimeLimit)
