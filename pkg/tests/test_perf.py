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
"""Performance module test"""

import io
import unittest

from .test_dir import add_src_dir
add_src_dir()

from tbgroup import debug
from tbgroup import perf


class TestPerf(unittest.TestCase):
    def tearDown(self):
        debug.clear_flags()

    def test_no_output(self):

        f = io.StringIO()
        debug.set_output(f)

        perf.log("One message")
        self.assertRegex(f.getvalue(), r"^$")

    def test_output(self):

        debug.set_flags(["perf"])
        f = io.StringIO()
        debug.set_output(f)

        perf.log("phase 1")
        self.assertRegex(f.getvalue(), r"phase 1")

    def test_stopwatch(self):
        stopwatch = perf.Stopwatch()
        with stopwatch.measure("sbox"):
            pass
        with stopwatch.measure("layer"):
            pass
        self.assertEqual(list(stopwatch.durations), ["sbox", "layer"])
        self.assertGreaterEqual(stopwatch.durations["sbox"], 0)

    def test_stopwatch_exception(self):
        stopwatch = perf.Stopwatch()
        with self.assertRaises(ValueError):
            with stopwatch.measure("failing"):
                raise ValueError
        self.assertIn("failing", stopwatch.durations)

    def test_stopwatch_log(self):
        debug.set_flags(["perf"])
        f = io.StringIO()
        debug.set_output(f)

        with perf.Stopwatch().measure("theorems"):
            pass
        self.assertRegex(f.getvalue(), r"theorems\n$")


if __name__ == "__main__":
    unittest.main()
