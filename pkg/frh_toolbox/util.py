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

Module: util.py
Author: frh_toolbox developers

Utility functions for the FRH Toolbox: sinogram files, CSV tables and
bundled data paths.
"""

from __future__ import absolute_import, division

import numpy as np
import os
import pandas as pd
import pkg_resources

from builtins import range, str
from io import open

from . import __version__
from .numerics import TailSpec
from .radon import TransformField


FLOAT_FORMAT = u"%.16e"
SINOGRAM_FORMAT = u"frh-sinogram-1"

# Header keys of the source decay, and the TailSpec attributes they hold.
DECAY_FIELDS = ((u"truncation_radius", u"truncationRadius"),
                (u"mu", u"mu"), (u"log_exponent", u"logExponent"),
                (u"rate", u"rate"), (u"p", u"p"), (u"scale", u"scale"),
                (u"length_scale", u"lengthScale"))


def version_line():
    return u"# frh_toolbox " + __version__


def get_data_path(relativePath):
    """
    Path of a file bundled with the package, e.g. u"configs/r2_k1.ini".
    Falls back to the source tree when the package is not installed.
    """
    try:
        return pkg_resources.resource_filename(u"frh_toolbox", relativePath)
    except:
        return os.path.join(os.path.dirname(os.path.abspath(__file__)),
                            relativePath)


def ensure_directory(directory):
    if directory and not os.path.isdir(directory):
        os.makedirs(directory)
    return directory


def write_sinogram(field, fileName):
    """
    Saves a sinogram field to a text file. Format: header lines
    '# key = value', then one row of angles, one row of offsets and one row
    of values per angle, all in full precision.
    Args:
      field: TransformField of kind sinogram.
      fileName: string, name of the output file.
    """
    if field.thetas is None:
        raise ValueError(u"Error: only sampled sinograms can be written.")
    decay = field.sourceDecay
    header = [
        version_line(),
        u"# format = " + SINOGRAM_FORMAT,
        u"# angles = " + str(field.thetas.size),
        u"# offsets = " + str(field.offsets.size),
        u"# center = " + u" ".join(repr(float(c)) for c in field.center),
        u"# length_scale = " + repr(float(field.decay.lengthScale)),
    ]
    if decay is not None:
        header.append(u"# source_decay = " + decay.decayKind)
        for key, attribute in DECAY_FIELDS:
            value = getattr(decay, attribute)
            if value is not None:
                header.append(u"# source_" + key + u" = " +
                              repr(float(value)))
    try:
        with open(fileName, u"w") as outFile:
            outFile.write(u"\n".join(header) + u"\n")
            for row in ([field.thetas, field.offsets] +
                        [field.values[i] for i in range(field.thetas.size)]):
                outFile.write(u" ".join(u"%.17e" % v for v in row) + u"\n")
    except:
        print(u"An exception occurred while writing sinogram file " +
              fileName + u".")
        raise


def _header_value(header, key):
    if key not in header:
        raise RuntimeError(u"Missing field in sinogram file header: " + key +
                           u".")
    return header[key]


def read_sinogram(fileName):
    """
    Loads a sinogram written by write_sinogram().
    Returns:
      A TransformField of kind sinogram.
    """
    header = dict()
    rows = list()
    try:
        with open(fileName, u"rt") as inFile:
            for line in inFile:
                line = line.strip()
                if not line:
                    continue
                if line.startswith(u"#"):
                    if u"=" in line:
                        key, value = line[1:].split(u"=", 1)
                        header[key.strip()] = value.strip()
                    continue
                rows.append(np.array([float(v) for v in line.split()]))
    except:
        print(u"Error while reading sinogram file " + fileName)
        raise
    if _header_value(header, u"format") != SINOGRAM_FORMAT:
        raise RuntimeError(u"Unknown sinogram format " + header[u"format"] +
                           u".")
    numAngles = int(_header_value(header, u"angles"))
    numOffsets = int(_header_value(header, u"offsets"))
    if len(rows) != numAngles + 2:
        raise RuntimeError(u"Sinogram file has " + str(len(rows)) +
                           u" data rows, expected " + str(numAngles + 2) +
                           u".")
    thetas, offsets = rows[0], rows[1]
    values = np.vstack(rows[2:])
    if thetas.size != numAngles or values.shape[1] != numOffsets:
        raise RuntimeError(u"Sinogram rows do not match the header.")
    center = np.array([float(c) for c in
                       _header_value(header, u"center").split()])
    lengthScale = float(_header_value(header, u"length_scale"))
    sourceDecay = None
    if u"source_decay" in header:
        kwargs = dict()
        for key, attribute in DECAY_FIELDS:
            if u"source_" + key in header:
                kwargs[attribute] = float(header[u"source_" + key])
        sourceDecay = TailSpec(header[u"source_decay"], **kwargs)
    decay = TailSpec.compact(offsets[-1], lengthScale=lengthScale)
    return TransformField.sinogram(thetas, offsets, values, decay,
                                   center=center, sourceDecay=sourceDecay)


def sinogram_to_frame(field):
    """
    Long format table of a sinogram: one row per (theta, offset) cell.
    """
    thetaGrid, offsetGrid = np.meshgrid(field.thetas, field.offsets,
                                        indexing=u"ij")
    return pd.DataFrame({u"theta": thetaGrid.ravel(),
                         u"offset": offsetGrid.ravel(),
                         u"value": field.values.ravel()},
                        columns=[u"theta", u"offset", u"value"])


def save_sinogram_to_csv(field, fileName):
    try:
        sinogram_to_frame(field).to_csv(fileName, encoding=u"utf-8",
                                        index=False,
                                        float_format=FLOAT_FORMAT)
    except:
        print(u"An exception occurred while saving sinogram CSV " + fileName +
              u".")
        raise


def write_frame(frame, fileName):
    """
    Writes a pandas DataFrame to CSV in full precision, after a version
    header line.
    """
    try:
        with open(fileName, u"w") as outFile:
            outFile.write(version_line() + u"\n")
            outFile.write(str(frame.to_csv(index=False,
                                           float_format=FLOAT_FORMAT)))
    except:
        print(u"An exception occurred while writing table " + fileName +
              u".")
        raise


def load_frame(fileName):
    """
    Loads a table written by write_frame().
    """
    try:
        return pd.read_csv(fileName, header=0, sep=u",", index_col=None,
                           comment=u"#")
    except:
        print(u"Error while reading table " + fileName)
        raise


def save_plot_data(grid, values, fileName, columns=(u"r", u"value")):
    """
    Saves (r, value) pairs for external plotting.
    """
    frame = pd.DataFrame({columns[0]: np.asarray(grid, dtype=float),
                          columns[1]: np.asarray(values, dtype=float)},
                         columns=list(columns))
    write_frame(frame, fileName)
