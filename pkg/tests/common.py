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
"""Functionality common to more than one test"""

import os
import tempfile
import unittest

from .test_dir import add_src_dir, fixture
add_src_dir()

from tbgroup import debug
from tbgroup.file_cache import get_file_cache
from tbgroup.ingest import read_spec


def load_spec(name):
    """Return the CipherSpec of the named bundled spec fixture"""
    return read_spec(fixture(name)).spec


class TempFiles(unittest.TestCase):
    """Provide a scratch directory and a clean file cache and debug state
    for each test."""

    def setUp(self):
        self.scratch = tempfile.TemporaryDirectory()
        get_file_cache().clear()
        debug.clear_flags()

    def tearDown(self):
        self.scratch.cleanup()
        debug.clear_flags()

    def path(self, name):
        """Return the path of a file in the scratch directory"""
        return os.path.join(self.scratch.name, name)

    def write(self, name, text):
        """Write text to a scratch file and return its path"""
        path = self.path(name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path
