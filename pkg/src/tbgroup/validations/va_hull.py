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
"""Check the hull formula for derivative images against directly computed affine hulls"""

from tbgroup import perf
from tbgroup.common import SuiteResult
from tbgroup.sboxprops import va_hull_matches
from tbgroup.vboolfn import random_permutations

DEFAULT_TRIALS = 100

DEFAULT_WIDTHS = (3, 4, 5)


def run(trials=None, seed=0, width=None):
    """
    For random S-boxes and every nonzero direction a, compare the affine
    hull derived from the space V_a with the hull of the derivative
    image.

    :param trials: Number of random S-boxes per width.
    :type trials: int, optional

    :param seed: Seed of the random number generator.
    :type seed: int, optional

    :param width: Check only this width.
    :type width: int, optional

    :rtype: SuiteResult
    """
    trials = DEFAULT_TRIALS if trials is None else trials
    widths = DEFAULT_WIDTHS if width is None else (width,)
    result = SuiteResult("va-hull", seed, {"trials": trials, "widths": widths})
    for m in widths:
        for f in random_permutations(m, trials, seed):
            for a in range(1, 1 << m):
                result.checked += 1
                if not va_hull_matches(f, a):
                    result.violations.append({"table": list(f.table), "a": a})
        perf.log(f"va-hull m={m}")
    return result
