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
"""Check that every sampled 4-uniform 4-bit permutation is strongly 1-anti-invariant"""

from tbgroup import perf
from tbgroup.common import InputError, SuiteResult
from tbgroup.sboxprops import DEFAULT_FACT_TRIALS, check_fact_4uniform
from tbgroup.vboolfn import random_permutations

DEFAULT_TRIALS = DEFAULT_FACT_TRIALS


def run(trials=None, seed=0, width=None):
    """
    Sample uniformly random 4-bit permutations and report those that are
    4-uniform but not strongly 1-anti-invariant.

    :param trials: Number of sampled permutations.
    :type trials: int, optional

    :param seed: Seed of the random number generator.
    :type seed: int, optional

    :param width: The S-box width; only 4 is meaningful.
    :type width: int, optional

    :rtype: SuiteResult
    """
    if width not in (None, 4):
        raise InputError(f"the suite concerns 4-bit S-boxes, not {width}-bit ones")
    trials = DEFAULT_TRIALS if trials is None else trials
    report = check_fact_4uniform(random_permutations(4, trials, seed))
    perf.log("fact-4uniform")
    return SuiteResult(
        "fact-4uniform",
        seed,
        {"trials": trials, "width": 4},
        report.checked,
        [f.to_hex() for f in report.violations],
        {"four_uniform": report.four_uniform},
    )
