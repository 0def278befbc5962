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
"""Check that primitive groups generated by two regular elementary abelian subgroups are alternating or symmetric"""

from tbgroup import perf
from tbgroup.common import InputError, SuiteResult
from tbgroup.permgroup import validate_affine_proposition

DEFAULT_TRIALS = 1000

DIMENSIONS = (3, 4, 5)


def run(trials=None, seed=0, width=None):
    """
    Build <T, gTg^-1> for random permutations g fixing 0 and check the
    order of every primitive one.

    :param trials: Number of random groups per dimension.
    :type trials: int, optional

    :param seed: Seed of the random number generator.
    :type seed: int, optional

    :param width: Check only this dimension (3, 4 or 5).
    :type width: int, optional

    :rtype: SuiteResult
    """
    trials = DEFAULT_TRIALS if trials is None else trials
    dimensions = DIMENSIONS if width is None else (width,)
    if not set(dimensions) <= set(DIMENSIONS):
        raise InputError(f"dimension {width} is not 3, 4 or 5")
    result = SuiteResult("affine-prop", seed, {"trials": trials, "dimensions": dimensions})
    for d in dimensions:
        report = validate_affine_proposition(d, trials, seed)
        result.checked += report.trials
        result.details[f"d={d}"] = {
            "groups": report.trials,
            "primitive": report.primitive,
        }
        result.violations += [{"d": d, "images": v} for v in report.violations]
        perf.log(f"affine-prop d={d}")
    return result
