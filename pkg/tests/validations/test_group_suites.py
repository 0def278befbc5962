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
"""Validation suite tests for groups and round functions"""

import unittest

from ..test_dir import add_src_dir
add_src_dir()

from tbgroup.common import InputError
from tbgroup.validations import affine_prop, evenness, oracle_xcheck


class TestAffineProposition(unittest.TestCase):
    def test_run(self):
        result = affine_prop.run(trials=5, seed=0, width=3)
        self.assertTrue(result.passed)
        self.assertEqual(result.checked, 5)
        self.assertEqual(result.details["d=3"]["groups"], 5)
        self.assertLessEqual(result.details["d=3"]["primitive"], 5)

    def test_dimension(self):
        with self.assertRaises(InputError):
            affine_prop.run(trials=1, width=6)


class TestEvenness(unittest.TestCase):
    def test_run(self):
        result = evenness.run(trials=5, seed=0, width=3)
        self.assertTrue(result.passed)
        translations = sum(evenness.TRANSLATION_DIMENSIONS)
        # Four spec fixtures, each with a layer and a reduced round
        self.assertEqual(result.checked, translations + 2 * 4 + 5)


class TestOracleCrossCheck(unittest.TestCase):
    def test_run(self):
        result = oracle_xcheck.run(trials=2, seed=0, width=3)
        self.assertTrue(result.passed)
        self.assertEqual(result.checked, 2)
        self.assertLessEqual(result.details["imprimitive"], 2)

    def test_dimension(self):
        with self.assertRaises(InputError):
            oracle_xcheck.run(trials=1, width=7)


if __name__ == "__main__":
    unittest.main()
