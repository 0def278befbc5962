#
# tbgroup: groups generated by the round functions of translation based ciphers
# Copyright (C) 2026  The tbgroup authors
# SPDX-License-Identifier: GPL-3.0-or-later
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
#
"""Check that translations, mixing layers and round functions are even permutations"""

import numpy as np

from tbgroup import perf
from tbgroup.common import SuiteResult
from tbgroup.ingest import list_fixtures, read_spec
from tbgroup.mixlayer import LinearLayer
from tbgroup.permgroup import Permutation, translation_generators
from tbgroup.tbcipher import build_round, desk_scale_reduction, random_spec
from tbgroup.vboolfn import EVEN, permutation_parity

DEFAULT_TRIALS = 1000

# Brick widths and counts of the random ciphers, used in turn
SHAPES = ((2, 2), (3, 2), (4, 2), (3, 3), (2, 4))

# Dimensions whose translations are checked
TRANSLATION_DIMENSIONS = range(2, 9)


def _check(result, kind, name, permutation):
    result.checked += 1
    parity = permutation_parity(permutation)
    if parity != EVEN:
        result.violations.append({"kind": kind, "name": name, "parity": parity})


def _check_fixtures(result, seed):
    for location in list_fixtures(".spec"):
        spec_file = read_spec(location)
        spec = spec_file.spec
        _check(result, "layer", location, spec.layer)
        layer = spec_file.reduced_layer or LinearLayer.brick_swap(spec.m)
        reduced = desk_scale_reduction(spec, 2, layer, seed)
        _check(result, "round", location, build_round(reduced))


def _check_random(result, trials, seed, shapes):
    for trial in range(trials):
        m, n = shapes[trial % len(shapes)]
        spec = random_spec(m, n, seed + trial)
        _check(result, "round", f"random-{seed + trial}", build_round(spec))
        points = np.arange(1 << spec.d, dtype=np.int64)
        as_permutation = Permutation(spec.layer.apply_all(points), check=False)
        if permutation_parity(as_permutation) != permutation_parity(spec.layer):
            result.violations.append(
                {"kind": "layer parity methods", "name": f"random-{seed + trial}"}
            )


def run(trials=None, seed=0, width=None):
    """
    Compute the parity of the translations of small spaces, of the
    mixing layers and reduced rounds of the bundled fixtures, and of the
    rounds of random ciphers.

    :param trials: Number of random ciphers.
    :type trials: int, optional

    :param seed: Seed of the random ciphers; cipher i uses seed + i.
    :type seed: int, optional

    :param width: Use only random ciphers with two bricks of this width.
    :type width: int, optional

    :rtype: SuiteResult
    """
    trials = DEFAULT_TRIALS if trials is None else trials
    shapes = SHAPES if width is None else ((width, 2),)
    result = SuiteResult("evenness", seed, {"trials": trials, "shapes": shapes})
    for d in TRANSLATION_DIMENSIONS:
        for i, sigma in enumerate(translation_generators(d)):
            _check(result, "translation", f"d={d} e_{i}", sigma)
    _check_fixtures(result, seed)
    _check_random(result, trials, seed, shapes)
    perf.log("evenness")
    return result
