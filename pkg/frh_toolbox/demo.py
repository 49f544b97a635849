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

Module: demo.py
Author: frh_toolbox developers

Demo of the mean value inversion: a shifted Gaussian on R^2 is sampled
into a sinogram of lines, and the function is recovered at a few points
from the sinogram alone.
"""

from __future__ import absolute_import, division

import numpy as np

from builtins import str, zip

from .fraccalc import USUAL_DERIVATIVE, is_divergent
from .geometry import EUCLIDEAN, SpaceDescriptor
from .inversion import InversionPlan, reconstruct_grid
from .phantoms import GaussianPhantom
from .radon import build_sinogram


def main(center=(0.3, -0.2), width=1.0, numAngles=60, numOffsets=129,
         points=((0.0, 0.0), (0.3, -0.2), (0.5, 0.5)),
         variant=USUAL_DERIVATIVE, numThreads=1, verbose=True):
    """
    Args:
      center: centre of the Gaussian phantom.
      width: float, width of the phantom.
      numAngles: int, number of sinogram angles in [0, pi).
      numOffsets: int, number of sinogram offsets.
      points: evaluation points.
      variant: string, Erdelyi-Kober derivative variant.
      numThreads: int, size of the process pools.
      verbose: boolean, whether or not to increase output verbosity.
    Returns:
      The maximum relative error over the points.
    """
    space = SpaceDescriptor(EUCLIDEAN, 2, 1)
    phantom = GaussianPhantom(space, center=np.array(center), width=width)
    thetas = np.pi * np.arange(numAngles) / numAngles
    extent = (np.linalg.norm(center) + phantom.sourceDecay.truncationRadius)
    offsets = np.linspace(-extent, extent, numOffsets)
    sinogram = build_sinogram(phantom, thetas, offsets,
                              numThreads=numThreads, verbose=verbose)

    plan = InversionPlan(space, variant)
    results = reconstruct_grid(sinogram, [np.array(x) for x in points], plan,
                               numThreads=numThreads, verbose=verbose)

    worst = 0.0
    for x, result in zip(points, results):
        if is_divergent(result):
            raise RuntimeError(u"Error: unexpected divergence at " + str(x) +
                               u".")
        exact = phantom.value_at(np.array(x))
        relErr = abs(result.value - exact) / max(abs(exact), 1e-30)
        worst = max(worst, relErr)
        if verbose:
            print(u"x = " + str(list(x)) + u": f = " + str(exact) +
                  u", reconstructed " + str(result.value) + u", rel_err " +
                  u"%.2e" % relErr)
    if verbose:
        print(u"Max relative error: " + u"%.2e" % worst)
    return worst
