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
"""Functions and exceptions common to multiple modules"""

from dataclasses import dataclass, field
from importlib import metadata
from io import BytesIO
import os
import pkgutil
import posixpath
import subprocess
import sys

from tbgroup import debug

RESOURCE_PREFIX = "resource:"

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_RESOURCE_CAP = 3


class AnalysisError(Exception):
    """Base class of all errors raised by the analysis library."""

    exit_code = EXIT_INPUT_ERROR


class DimensionMismatch(AnalysisError, ValueError):
    """Vectors, matrices or subspaces of different ambient dimensions
    were combined."""


class InputError(AnalysisError):
    """A malformed or invalid input file or value."""

    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        location = ""
        if path is not None:
            location = f"{path}:"
            if line is not None:
                location += f"{line}:"
                if column is not None:
                    location += f"{column}:"
            location += " "
        super().__init__(f"{location}{message}")


class ResourceCapExceeded(AnalysisError):
    """A computation was refused, because it exceeds a configured cap."""

    exit_code = EXIT_RESOURCE_CAP

    def __init__(self, what, value, cap):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} {value} exceeds the supported limit of {cap}")


class ModelNotApplicable(AnalysisError):
    """The cipher model does not apply, e.g. because the key schedule
    of the proper round is not surjective."""


class ClassificationError(AnalysisError):
    """The hypotheses of a group classification are not met, or its
    outcome contradicts a known classification result."""


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of a predicate with an optional counterexample.
    Its truth value is that of the predicate."""

    holds: bool
    witness: object = None
    normalized: bool = False

    def __bool__(self):
        return self.holds


@dataclass
class SuiteResult:
    """Outcome of a validation suite: the number of checked instances
    and the counterexamples found among them."""

    suite: str
    seed: int
    parameters: dict = field(default_factory=dict)
    checked: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        """True if no violation was found"""
        return not self.violations


def is_unittest():
    """Return True if the routine is executed in a unit test."""
    return any(
        "unittest" in str(cls)
        # pylint: disable-next=protected-access
        for cls in sys._getframe(1).f_globals.values()
    )


def warn(message):
    """
    Output a warning on the standard error stream with the specified message.

    :param message: The message to output.
    :type message: str
    """
    if is_unittest():
        return
    print(f"Warning: {message}", file=sys.stderr)


def fail(message, exit_code=EXIT_INPUT_ERROR):
    """
    Output an error message on the standard error stream with the specified
    message.
    Terminate the program's execution with the specified exit code.

    :param message: The message to output.
    :type message: str

    :param exit_code: The program's exit code.
    :type exit_code: int, optional
    """
    if debug.enabled("exception"):
        # pylint: disable-next=broad-exception-raised
        raise Exception(message)
    print(f"Error: {message}", file=sys.stderr)
    print("Terminating program execution.", file=sys.stderr)
    sys.exit(exit_code)


def program_version():
    """Return a string identifying the program's version."""
    try:
        # Installed version
        return metadata.version("tbgroup")
    except metadata.PackageNotFoundError:
        # Obtain development version through Git
        res = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            stdout=subprocess.PIPE,
            check=True,
        )
        return res.stdout.decode("utf-8").strip()


def is_resource(source):
    """Return True if source names a resource bundled with the package."""
    return source.startswith(RESOURCE_PREFIX)


def resolve_relative(base, reference):
    """
    Return the location of reference, which may be relative to the
    location of the base file.
    Both may be file paths or `resource:` URIs.

    :param base: The location of the file containing the reference.
    :type base: str

    :param reference: The referenced location.
    :type reference: str
    """
    if is_resource(reference) or os.path.isabs(reference):
        return reference
    if is_resource(base):
        directory = posixpath.dirname(base[len(RESOURCE_PREFIX) :])
        return RESOURCE_PREFIX + posixpath.normpath(
            posixpath.join(directory, reference)
        )
    return os.path.join(os.path.dirname(base), reference)


def data_from_uri_provider(source):
    """
    Given a file path or this package's resource path
    return a readable source for its contents.

    :param source: A file path or an internal data source starting
        with `resource:`.
    :type source: str
    """
    if is_resource(source):
        file_path = source[len(RESOURCE_PREFIX) :]
        try:
            data = pkgutil.get_data(__name__, file_path)
        except OSError as exception:
            raise InputError(f"no such resource: {exception}", source) from None
        return BytesIO(data)
    try:
        return open(source, "rb")
    except OSError as exception:
        raise InputError(
            f"unable to read data: {exception.strerror}", source
        ) from None
