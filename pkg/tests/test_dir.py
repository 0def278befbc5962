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
"""Locate the tests directory and the package sources"""

import os
import sys


def td(path):
    """Return the path relative the tests directory"""
    return f"{os.path.dirname(__file__)}/{path}"


def fixture(name):
    """Return the URI of a fixture bundled with the package"""
    return f"resource:fixtures/{name}"


def add_src_dir():
    """Prepend to the path the src directory.  This allows unit tests to be
    executed individually, rather than only through discover."""
    source = f"{os.path.dirname(__file__)}/../src"
    if source not in sys.path:
        sys.path.insert(0, source)
