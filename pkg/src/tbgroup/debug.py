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
"""
Debug flags and the output of the messages they enable.

Long computations (Schreier-Sims, block scans, subspace searches,
validation suites) report their progress and the witnesses they find
through named flags, which are off by default.

.. code-block:: python

    from tbgroup import debug

    debug.set_flags(["bsgs", "witness"])
    debug.log("bsgs", "base point 3 added")
    if debug.enabled("witness"):
        ...
"""

import sys


# Supported flags and what they output
FLAGS = {
    "blocks": "Block systems found by primitivity scans",
    "bsgs": "Schreier-Sims progress (base growth, phase switches)",
    "exception": "Raise an exception when an error occurs",
    "files-read": "Counts of parsed S-box, layer and spec files",
    "perf": "Performance timings",
    "progress": "Validation suite progress",
    "stderr": "Log to standard error",
    "witness": "Subspace and wall witnesses found by predicates",
}

enabled_flags = set()

output = sys.stdout


def flags_help():
    """Return the description of the supported flags, one per line."""
    return "\n".join(f"    {flag}: {text};" for flag, text in FLAGS.items())


def set_output(output_file):
    """
    Direct output to the specified output target.

    :param output_file: File object on which output the debug messages,
        e.g. `sys.stderr`.
    :type output_file: file object
    """
    # pylint: disable-next=global-statement,invalid-name
    global output
    output = output_file


def get_output():
    """Return output target"""
    return output


def set_flags(flags):
    """
    Enable the specified debug flags; see :data:`FLAGS` for the
    supported ones.

    :param flags: Flags to enable.
    :type flags: list

    :raises ValueError: If a flag is not supported; no flag is then
        enabled.
    """
    unknown = [flag for flag in flags if flag not in FLAGS]
    if unknown:
        raise ValueError(f"unknown debug flag(s): {', '.join(unknown)}")
    enabled_flags.update(flags)


def clear_flags():
    """Disable all debug flags."""
    enabled_flags.clear()


def enabled(flag):
    """Return True if the specified flag is enabled."""
    return flag in enabled_flags


def log(flag, message):
    """
    Output the specified message if the corresponding flag is enabled.

    :param flag: Flag that controls the message output.
    :type flag: str

    :param message: Message to output, or a function returning it,
        called only when the flag is enabled.
    :type message: str or callable
    """
    if flag not in enabled_flags:
        return
    if callable(message):
        message = message()
    print(message, file=output, flush=True)
