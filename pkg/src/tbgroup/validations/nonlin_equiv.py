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
"""Compare nonzero nonlinearity with strong 1-anti-invariance through independent Walsh and subspace computations"""

from itertools import permutations

from tbgroup import debug, perf
from tbgroup.common import InputError, SuiteResult
from tbgroup.sboxprops import PROGRESS_INTERVAL, is_strongly_r_anti_invariant
from tbgroup.vboolfn import SBox, nonlinearity, random_permutations

DEFAULT_TRIALS = 10**4

# Widths whose permutations are all checked
EXHAUSTIVE_WIDTHS = (3,)

DEFAULT_WIDTHS = (3, 4, 5)


def corpus(m, trials, seed):
    """Yield all m-bit permutations for the exhaustive widths, and
    trials random ones otherwise."""
    if m in EXHAUSTIVE_WIDTHS:
        for table in permutations(range(1 << m)):
            yield SBox(m, table)
    else:
        yield from random_permutations(m, trials, seed)


def disagrees(f):
    """Return True if the Walsh and subspace computations disagree on f."""
    nonlinear = nonlinearity(f) != 0
    return nonlinear != is_strongly_r_anti_invariant(f, 1).holds


def run(trials=None, seed=0, width=None):
    """
    Check that an S-box has nonzero nonlinearity exactly when it is
    strongly 1-anti-invariant, over all 3-bit permutations and random
    4- and 5-bit ones.

    :param trials: Number of random S-boxes per sampled width.
    :type trials: int, optional

    :param seed: Seed of the random number generator.
    :type seed: int, optional

    :param width: Check only this width.
    :type width: int, optional

    :rtype: SuiteResult
    """
    trials = DEFAULT_TRIALS if trials is None else trials
    widths = DEFAULT_WIDTHS if width is None else (width,)
    if any(m < 2 for m in widths):
        raise InputError("the suite needs S-boxes of at least 2 bits")
    result = SuiteResult("nonlin-equiv", seed, {"trials": trials, "widths": widths})
    for m in widths:
        checked = 0
        for f in corpus(m, trials, seed):
            checked += 1
            if checked % PROGRESS_INTERVAL == 0:
                debug.log("progress", f"{checked} {m}-bit S-boxes checked")
            if disagrees(f):
                result.violations.append({"m": m, "table": list(f.table)})
        result.details[f"m={m}"] = checked
        result.checked += checked
        perf.log(f"nonlin-equiv m={m}")
    return result
