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

Module: cli.py
Author: frh_toolbox developers

Command line interface: run an experiment config, run the fractional
identity suite, list the supported matrix, or write a forward sinogram.
Exit codes: 0 pass, 1 tolerance failure, 2 numeric failure, 3 config error.
A config error is a config that cannot be read or validated, a
combination outside the supported matrix, or an unusable output directory;
errors raised by the numerics are numeric failures.
"""

from __future__ import absolute_import, division

import argparse
import os
import sys

from builtins import str
from configparser import Error as ConfigError

from .experiment import (
    CONFIG_ERROR_EXIT, EXIT_CODES, IDENTITY_TIME_LIMIT, NUMERIC_FAILURE,
    PASS, TOLERANCE_FAIL, CapabilityError, ExperimentConfig, list_matrix,
    run_experiment, run_identity_suite, run_sinogram)
from .fraccalc import is_divergent
from .util import ensure_directory, get_data_path, write_frame


def build_parser():
    parser = argparse.ArgumentParser(
        prog=u"frh_toolbox",
        description=u"Mean value inversion of totally geodesic Radon "
        "transforms on constant curvature spaces.")
    parser.add_argument(u"--output-dir", dest=u"outputDir", default=None,
                        help=u"Output directory; overrides the config and "
                        "the FRH_TOOLBOX_OUTPUT_DIR variable.")
    parser.add_argument(u"--seed", type=int, default=None,
                        help=u"Seed of the random evaluation points.")
    parser.add_argument(u"--num-threads", dest=u"numThreads", type=int,
                        default=1, help=u"Size of the process pools.")
    parser.add_argument(u"--verbose", action=u"store_true",
                        help=u"Increase output verbosity.")
    subparsers = parser.add_subparsers(dest=u"command")

    run = subparsers.add_parser(u"run", help=u"Run an experiment config.")
    run.add_argument(u"config", help=u"INI file, or the name of a bundled "
                     "config such as r2_k1_mean_value.")
    subparsers.add_parser(u"identities",
                          help=u"Run the fractional identity suite.")
    subparsers.add_parser(u"list-matrix",
                          help=u"List the supported space/method matrix.")
    sinogram = subparsers.add_parser(
        u"sinogram", help=u"Write the forward sinogram of a config (R^2).")
    sinogram.add_argument(u"config", help=u"INI file or bundled config name.")
    return parser


def resolve_config_path(name):
    """
    A path as given if it exists, otherwise a bundled config.
    """
    if os.path.exists(name):
        return name
    bundled = name if name.endswith(u".ini") else name + u".ini"
    path = get_data_path(os.path.join(u"configs", bundled))
    if not os.path.exists(path):
        raise IOError(u"No such config file or bundled config: " + name)
    return path


def load_config(name, seed=None):
    config = ExperimentConfig.from_file(resolve_config_path(name))
    if seed is not None:
        config.seed = seed
    return config


def _run(config, args):
    result = run_experiment(config, numThreads=args.numThreads,
                            outputDir=args.outputDir, verbose=args.verbose)
    print(result.summary)
    return result.exitCode


def _identities(config, args):
    report = run_identity_suite(verbose=args.verbose)
    for which, worst in sorted(report.max_discrepancy().items()):
        print(which + u": max discrepancy " + u"%.3e" % worst)
    print(u"elapsed: " + u"%.1f" % report.elapsed + u" s")
    if not report.withinTimeLimit:
        print(u"Warning: the identity suite took longer than " +
              u"%.0f" % IDENTITY_TIME_LIMIT + u" s.")
    if args.outputDir:
        directory = ensure_directory(args.outputDir)
        write_frame(report.to_frame(),
                    os.path.join(directory, u"identities.csv"))
    return EXIT_CODES[PASS if report.passed else TOLERANCE_FAIL]


def _sinogram(config, args):
    field, files = run_sinogram(config, numThreads=args.numThreads,
                                outputDir=args.outputDir,
                                verbose=args.verbose)
    if is_divergent(field):
        print(u"The line transform of the phantom is infinite: " +
              repr(field))
        return EXIT_CODES[NUMERIC_FAILURE]
    for fileName in files:
        print(fileName)
    return EXIT_CODES[PASS]


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return CONFIG_ERROR_EXIT
    if args.command == u"list-matrix":
        list_matrix(verbose=True)
        return EXIT_CODES[PASS]
    # Anything wrong while reading the config is a config error.
    config = None
    try:
        if args.command != u"identities":
            config = load_config(args.config, args.seed)
    except (ValueError, IOError, OSError, ConfigError) as err:
        print(u"[config error] " + str(err))
        return CONFIG_ERROR_EXIT

    commands = {u"run": _run, u"identities": _identities,
                u"sinogram": _sinogram}
    try:
        return commands[args.command](config, args)
    except (CapabilityError, IOError, OSError) as err:
        print(u"[config error] " + str(err))
        return CONFIG_ERROR_EXIT
    except (ValueError, ArithmeticError, RuntimeError) as err:
        print(u"[numeric failure] " + str(err))
        return EXIT_CODES[NUMERIC_FAILURE]


if __name__ == u"__main__":
    sys.exit(main())
