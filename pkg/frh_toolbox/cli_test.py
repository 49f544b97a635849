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

Module: cli_test.py
Author: frh_toolbox developers

Tests for cli.py.
"""

import os
import shutil
import tempfile
import unittest

from io import open

from . import cli
from .cli import main, resolve_config_path


class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_list_matrix(self):
        self.assertEqual(main([u"list-matrix"]), 0)

    def test_no_command(self):
        self.assertEqual(main([]), 3)

    def test_missing_config(self):
        self.assertEqual(main([u"run", u"no_such_config"]), 3)

    def test_invalid_config(self):
        fileName = os.path.join(self.directory, u"bad.ini")
        with open(fileName, u"w") as outFile:
            outFile.write(u"[experiment]\nname = bad\nspace = spherical\n"
                          u"n = 2\nk = 1\n\n[phantom]\nkind = constant\n\n"
                          u"[method]\nname = mean_value\n")
        self.assertEqual(main([u"run", fileName]), 3)

    def test_run_bundled_config(self):
        code = main([u"--output-dir", self.directory, u"run",
                     u"h4_k3_existence"])
        self.assertEqual(code, 0)
        self.assertTrue(os.path.exists(os.path.join(
            self.directory, u"h4_k3_existence_errors.csv")))
        self.assertTrue(os.path.exists(os.path.join(
            self.directory, u"h4_k3_existence_summary.txt")))

    def test_sinogram_of_curved_space(self):
        self.assertEqual(main([u"--output-dir", self.directory, u"sinogram",
                               u"h3_k2_mean_value"]), 3)

    def test_numeric_errors_are_numeric_failures(self):
        original = cli.run_experiment
        for error in (ValueError(u"Error: derivative order must be at least "
                                 u"1."),
                      FloatingPointError(u"overflow")):
            def failing_run(config, **kwargs):
                raise error
            cli.run_experiment = failing_run
            try:
                code = main([u"--output-dir", self.directory, u"run",
                             u"r2_k1_mean_value"])
            finally:
                cli.run_experiment = original
            self.assertEqual(code, 2)

    def test_bundled_names(self):
        self.assertEqual(resolve_config_path(u"r2_k1_mader"),
                         resolve_config_path(u"r2_k1_mader.ini"))
        self.assertRaises(IOError, resolve_config_path, u"no_such_config")
