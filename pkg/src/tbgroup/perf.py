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
"""Maintain and output time performance values."""

from contextlib import contextmanager
import time

from tbgroup import debug

PERF_FLAG = "perf"

counter = time.perf_counter
start = counter()
previous = start


def log(message):
    """Print the specified performance message and times.
    This will output the relative elapsed time from the previous
    output, the absolute time since the program's start, and
    the specified message.

    To obtain performance output messages you need to enable the
    corresponding debug flag.

    .. code-block:: python

        debug.set_flags(["perf"])

    :param message: Message to output
    :type message: str
    """
    if not debug.enabled(PERF_FLAG):
        return
    now = counter()
    relative = now - start
    # pylint: disable-next=invalid-name,global-statement
    global previous
    delta = now - previous
    debug.log(PERF_FLAG, f"{relative:10.4f} {delta:10.4f} {message}")
    previous = now


class Stopwatch:
    """Measure the wall-clock duration of a named report section.
    Durations are only copied into reports when timings are requested,
    so that reports remain byte-stable by default."""

    def __init__(self):
        self.durations = {}

    @contextmanager
    def measure(self, name):
        """Record the time spent in the body of the with statement under
        the specified name and log it through the perf flag.

        :param name: Name of the measured section.
        :type name: str
        """
        begin = counter()
        try:
            yield
        finally:
            self.durations[name] = round(counter() - begin, 6)
            log(name)
