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

Module: util_test.py
Author: frh_toolbox developers

Tests for util.py.
"""

import numpy as np
import os
import pandas as pd
import shutil
import tempfile
import unittest

from io import open

from .numerics import GAUSSIAN, TailSpec
from .radon import TransformField
from .util import (
    get_data_path, load_frame, read_sinogram, save_plot_data,
    sinogram_to_frame, version_line, write_frame, write_sinogram)


def small_sinogram():
    thetas = np.array([0.0, np.pi / 3, 2 * np.pi / 3])
    offsets = np.linspace(-2.0, 2.0, 5)
    values = np.arange(15, dtype=float).reshape(3, 5) / 7.0
    return TransformField.sinogram(
        thetas, offsets, values, TailSpec.compact(2.0, lengthScale=0.5),
        center=[0.25, -0.5], sourceDecay=TailSpec.gaussian(0.8))


class TestSinogramFiles(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_written_sinogram_is_read_back(self):
        field = small_sinogram()
        fileName = os.path.join(self.directory, u"sinogram.txt")
        write_sinogram(field, fileName)
        loaded = read_sinogram(fileName)
        np.testing.assert_array_equal(loaded.thetas, field.thetas)
        np.testing.assert_array_equal(loaded.offsets, field.offsets)
        np.testing.assert_array_equal(loaded.values, field.values)
        np.testing.assert_array_equal(loaded.center, [0.25, -0.5])
        self.assertEqual(loaded.decay.lengthScale, 0.5)
        self.assertEqual(loaded.sourceDecay.decayKind, GAUSSIAN)
        self.assertEqual(loaded.sourceDecay.lengthScale, 0.8)

    def test_version_header(self):
        fileName = os.path.join(self.directory, u"sinogram.txt")
        write_sinogram(small_sinogram(), fileName)
        with open(fileName, u"rt") as inFile:
            self.assertEqual(inFile.readline().strip(), version_line())

    def test_missing_header_field(self):
        fileName = os.path.join(self.directory, u"broken.txt")
        with open(fileName, u"w") as outFile:
            outFile.write(u"# format = frh-sinogram-1\n# offsets = 3\n"
                          u"0.0 1.0\n-1.0 0.0 1.0\n0 0 0\n0 0 0\n")
        self.assertRaises(RuntimeError, read_sinogram, fileName)

    def test_wrong_row_count(self):
        fileName = os.path.join(self.directory, u"short.txt")
        with open(fileName, u"w") as outFile:
            outFile.write(u"# format = frh-sinogram-1\n# angles = 2\n"
                          u"# offsets = 3\n0.0 1.0\n-1.0 0.0 1.0\n0 0 0\n")
        self.assertRaises(RuntimeError, read_sinogram, fileName)

    def test_only_sampled_fields(self):
        field = small_sinogram()
        field.thetas = None
        self.assertRaises(ValueError, write_sinogram, field,
                          os.path.join(self.directory, u"none.txt"))


class TestFrames(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_sinogram_frame(self):
        field = small_sinogram()
        frame = sinogram_to_frame(field)
        self.assertEqual(list(frame.columns), [u"theta", u"offset", u"value"])
        self.assertEqual(len(frame), 15)
        # Row-major: offsets vary fastest.
        self.assertAlmostEqual(frame[u"offset"][1], -1.0)
        self.assertAlmostEqual(frame[u"theta"][5], np.pi / 3)
        self.assertAlmostEqual(frame[u"value"][7], field.values[1, 2])

    def test_frame_file_keeps_precision(self):
        frame = pd.DataFrame({u"r": [0.1, 0.2], u"value": [np.pi, 1 / 3.0]},
                             columns=[u"r", u"value"])
        fileName = os.path.join(self.directory, u"table.csv")
        write_frame(frame, fileName)
        with open(fileName, u"rt") as inFile:
            self.assertEqual(inFile.readline().strip(), version_line())
        loaded = load_frame(fileName)
        self.assertEqual(list(loaded.columns), [u"r", u"value"])
        self.assertAlmostEqual(loaded[u"value"][0], np.pi, delta=1e-15)

    def test_plot_data(self):
        fileName = os.path.join(self.directory, u"plot.csv")
        save_plot_data([0.1, 0.2, 0.4], [3.0, 2.0, 1.0], fileName)
        loaded = load_frame(fileName)
        np.testing.assert_array_equal(loaded[u"value"], [3.0, 2.0, 1.0])


class TestDataPath(unittest.TestCase):
    def test_bundled_config(self):
        path = get_data_path(u"configs/r2_k1_mean_value.ini")
        self.assertTrue(os.path.exists(path))
