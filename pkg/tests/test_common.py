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
"""common module test"""

import unittest

from .test_dir import add_src_dir, fixture, td
add_src_dir()

from tbgroup import common, debug
from tbgroup.common import (
    EXIT_RESOURCE_CAP,
    EXIT_INPUT_ERROR,
    InputError,
    PropertyCheck,
    ResourceCapExceeded,
    SuiteResult,
)


class TestCommon(unittest.TestCase):
    def tearDown(self):
        debug.clear_flags()

    def test_is_resource(self):
        self.assertTrue(common.is_resource(fixture("present.sbox")))
        self.assertFalse(common.is_resource("present.sbox"))

    def test_resource_data_source(self):
        line = common.data_from_uri_provider(fixture("present.sbox")).readline()
        self.assertEqual(line, b"# PRESENT S-box, f(0) ... f(15)\n")

    def test_missing_data_source(self):
        with self.assertRaises(InputError) as cm:
            common.data_from_uri_provider(td("no-such-file.sbox"))
        self.assertIn("unable to read data", str(cm.exception))
        with self.assertRaises(InputError):
            common.data_from_uri_provider(fixture("no-such-file.sbox"))

    def test_resolve_relative(self):
        self.assertEqual(
            common.resolve_relative(fixture("present.spec"), "present.sbox"),
            fixture("present.sbox"),
        )
        self.assertEqual(
            common.resolve_relative("ciphers/a.spec", "layers/a.layer"),
            "ciphers/layers/a.layer",
        )
        self.assertEqual(
            common.resolve_relative("ciphers/a.spec", "/tmp/a.layer"),
            "/tmp/a.layer",
        )
        self.assertEqual(
            common.resolve_relative("ciphers/a.spec", fixture("present.sbox")),
            fixture("present.sbox"),
        )

    def test_input_error_location(self):
        self.assertEqual(str(InputError("bad")), "bad")
        self.assertEqual(str(InputError("bad", "a.sbox")), "a.sbox: bad")
        self.assertEqual(str(InputError("bad", "a.sbox", 3)), "a.sbox:3: bad")
        error = InputError("bad", "a.sbox", 3, 9)
        self.assertEqual(str(error), "a.sbox:3:9: bad")
        self.assertEqual(error.line, 3)
        self.assertEqual(error.exit_code, EXIT_INPUT_ERROR)

    def test_resource_cap(self):
        error = ResourceCapExceeded("degree", 8192, 4096)
        self.assertEqual(error.exit_code, EXIT_RESOURCE_CAP)
        self.assertEqual(
            str(error), "degree 8192 exceeds the supported limit of 4096"
        )

    def test_property_check(self):
        self.assertTrue(PropertyCheck(True))
        check = PropertyCheck(False, witness=(1, 2))
        self.assertFalse(check)
        self.assertEqual(check.witness, (1, 2))

    def test_suite_result(self):
        result = SuiteResult("va-hull", 0)
        self.assertTrue(result.passed)
        result.violations.append({"a": 1})
        self.assertFalse(result.passed)

    def test_fail(self):
        debug.set_flags(["exception"])
        with self.assertRaises(Exception):
            common.fail("bad input")


if __name__ == "__main__":
    unittest.main()
