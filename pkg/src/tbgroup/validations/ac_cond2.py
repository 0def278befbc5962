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
"""Search 4-bit maps separating anti-crookedness from the brick alternating group condition"""

from dataclasses import dataclass

import numpy as np

from tbgroup import debug, perf
from tbgroup.common import InputError, SuiteResult
from tbgroup.gf2 import parity
from tbgroup.permgroup import check_condition_2
from tbgroup.sboxprops import is_anti_crooked
from tbgroup.vboolfn import SBox

DEFAULT_TRIALS = 2000

WIDTH = 4


@dataclass
class AcCondition2Examples:
    """Maps found to be anti-crooked without satisfying the brick
    alternating group condition, and conversely."""

    trials: int = 0
    ac_without_condition: SBox = None
    condition_without_ac: SBox = None


def hyperplane_preserving(m, rng):
    """Return a random permutation mapping a random hyperplane H onto
    itself and its complement onto itself.
    The translations and their conjugates then preserve {H, V - H}, so
    they cannot generate the alternating group."""
    points = np.arange(1 << m, dtype=np.int64)
    w = int(rng.integers(1, 1 << m))
    side = parity(points & w)
    table = np.empty_like(points)
    for s in (0, 1):
        members = points[side == s]
        table[members] = rng.permutation(members)
    return SBox(m, tuple(table.tolist()))


def ac_condition2_examples(trials, seed):
    """
    Look for an anti-crooked 4-bit map that fails the alternating group
    condition, among maps preserving a hyperplane, and for a map that
    satisfies the condition without being anti-crooked, among uniformly
    random permutations.
    Candidates of the two kinds alternate; the search stops when both
    examples are found.

    :param trials: Maximum number of candidates.
    :type trials: int

    :param seed: Seed of the random number generator.
    :type seed: int

    :rtype: AcCondition2Examples
    """
    rng = np.random.default_rng(seed)
    found = AcCondition2Examples()
    for trial in range(trials):
        found.trials += 1
        if trial % 2 == 0:
            if found.ac_without_condition is not None:
                continue
            f = hyperplane_preserving(WIDTH, rng)
            if is_anti_crooked(f) and not check_condition_2(f, seed=seed):
                found.ac_without_condition = f
                debug.log("witness", f"AC without the condition: {f.to_hex()}")
        else:
            if found.condition_without_ac is not None:
                continue
            f = SBox(WIDTH, tuple(rng.permutation(1 << WIDTH).tolist()))
            if not is_anti_crooked(f) and check_condition_2(f, seed=seed):
                found.condition_without_ac = f
                debug.log("witness", f"condition without AC: {f.to_hex()}")
        if None not in (found.ac_without_condition, found.condition_without_ac):
            break
    return found


def run(trials=None, seed=0, width=None):
    """
    Report whether both separating maps exist among the sampled ones.

    :param trials: Maximum number of candidates.
    :type trials: int, optional

    :param seed: Seed of the random number generator.
    :type seed: int, optional

    :param width: The S-box width; only 4 is supported.
    :type width: int, optional

    :rtype: SuiteResult
    """
    if width not in (None, WIDTH):
        raise InputError(f"the suite concerns 4-bit S-boxes, not {width}-bit ones")
    trials = DEFAULT_TRIALS if trials is None else trials
    found = ac_condition2_examples(trials, seed)
    result = SuiteResult("ac-cond2", seed, {"trials": trials, "width": WIDTH})
    result.checked = found.trials
    for name in ("ac_without_condition", "condition_without_ac"):
        f = getattr(found, name)
        result.details[name] = f.to_hex() if f is not None else None
        if f is None:
            result.violations.append({"missing": name})
    perf.log("ac-cond2")
    return result
