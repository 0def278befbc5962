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
"""Cross-check the subspace criterion for imprimitivity against block system scans of round function groups"""

from tbgroup import debug, perf
from tbgroup.common import InputError, SuiteResult
from tbgroup.permgroup import is_primitive
from tbgroup.tbcipher import (
    MAX_ORACLE_DIMENSION,
    PROVEN_PRIMITIVE,
    apply_primitivity_theorems,
    brute_force_imprimitivity,
    random_spec,
    round_group,
)

DEFAULT_TRIALS = 100

# Brick widths and counts of the random ciphers, used in turn
SHAPES = ((3, 2), (4, 2), (3, 3), (5, 2))


def run(trials=None, seed=0, width=None):
    """
    For random ciphers compare the exhaustive subspace criterion with the
    primitivity of the group computed by block system scans, and check
    that the theorem engine never claims primitivity for an imprimitive
    group.

    :param trials: Number of random ciphers.
    :type trials: int, optional

    :param seed: Seed of the random ciphers; cipher i uses seed + i.
    :type seed: int, optional

    :param width: Use only bricks of this width, in pairs.
    :type width: int, optional

    :rtype: SuiteResult
    """
    trials = DEFAULT_TRIALS if trials is None else trials
    shapes = SHAPES if width is None else ((width, 2),)
    for m, n in shapes:
        if m * n > MAX_ORACLE_DIMENSION:
            raise InputError(f"{n} bricks of width {m} exceed the oracle's dimension")
    result = SuiteResult("oracle-xcheck", seed, {"trials": trials, "shapes": shapes})
    imprimitive = 0
    for trial in range(trials):
        m, n = shapes[trial % len(shapes)]
        spec = random_spec(m, n, seed + trial)
        witness = brute_force_imprimitivity(spec)
        primitive = is_primitive(round_group(spec, seed=seed)).holds
        result.checked += 1
        if witness is not None:
            imprimitive += 1
        if (witness is None) != primitive:
            result.violations.append(
                {"seed": seed + trial, "m": m, "n": n, "oracle": str(witness)}
            )
        claimed = apply_primitivity_theorems(spec).primitivity == PROVEN_PRIMITIVE
        if claimed and not primitive:
            result.violations.append(
                {"seed": seed + trial, "m": m, "n": n, "unsound_theorem": True}
            )
        debug.log("progress", f"cipher {trial + 1}: primitive={primitive}")
    result.details["imprimitive"] = imprimitive
    perf.log("oracle-xcheck")
    return result
