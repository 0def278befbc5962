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
Reading and writing of S-box, mixing layer and cipher spec files.

S-box file: an optional `m=<int>` header followed by either 16
hexadecimal digits (4-bit S-boxes only), read left to right as
f(0), ..., f(15), or 2^m whitespace-separated decimal integers.

Layer file: a `d=<int>` header followed by either `perm:` and d integers
(coordinate i moves to coordinate i-th integer, coordinate 0 being the
least significant bit of the state), or `matrix:` and d rows of d binary
digits (row i is the image of basis vector e_i, leftmost digit
coordinate 0).

Spec file: `key: value` lines naming the brick width `m`, the brick
count `n`, the `bricks` (one location used for every brick, or n
locations), the `layer`, and `key_schedule_surjective: true|false`.
Optional keys are `name`, `reduced_layer` (the layer used for
desk-scale reductions) and `msb0` (the bit order of the layer files).
Locations are file paths, relative to the spec file, or `resource:`
URIs.

Text after `#` is a comment in all files.
"""

from collections import namedtuple
from dataclasses import dataclass
import os
import re

from tbgroup.common import RESOURCE_PREFIX, InputError, resolve_relative
from tbgroup.file_cache import get_file_cache
from tbgroup.gf2 import Gf2Matrix
from tbgroup.mixlayer import LinearLayer
from tbgroup.tbcipher import CipherSpec
from tbgroup.vboolfn import SBox

Token = namedtuple("Token", "text line column")

HEX_DIGITS = frozenset("0123456789abcdefABCDEF")

# Integers per line when writing tables
ROW_LENGTH = 16

_HEADER = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(\S+)\s*$")
_KEY_VALUE = re.compile(r"^\s*([A-Za-z_]\w*)\s*:\s*(.*?)\s*$")

SPEC_KEYS = (
    "name",
    "m",
    "n",
    "bricks",
    "layer",
    "key_schedule_surjective",
    "reduced_layer",
    "msb0",
)


@dataclass(frozen=True)
class SpecFile:
    """A parsed cipher spec file and the locations it references."""

    spec: CipherSpec
    brick_locations: tuple
    layer_location: str
    msb0: bool = False
    reduced_layer: LinearLayer = None
    reduced_layer_location: str = None


def _lines(text):
    """Yield the line number and text of non-blank lines, without
    comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].rstrip()
        if line.strip():
            yield number, line


def _tokens(number, line, offset=0):
    for match in re.finditer(r"\S+", line[offset:]):
        yield Token(match.group(), number, offset + match.start() + 1)


def _integer(token, path, what="a decimal integer"):
    try:
        return int(token.text, 10)
    except ValueError:
        raise InputError(
            f"'{token.text}' is not {what}", path, token.line, token.column
        ) from None


def _header(lines, name, path, required):
    """Return the value of a `name=<int>` header, removing it from lines."""
    if lines:
        number, line = lines[0]
        match = _HEADER.match(line)
        if match:
            column = match.start(1) + 1
            if match.group(1) != name:
                raise InputError(
                    f"expected a '{name}=' header, not '{match.group(1)}='",
                    path,
                    number,
                    column,
                )
            del lines[0]
            token = Token(match.group(2), number, match.start(2) + 1)
            return _integer(token, path)
    if required:
        number = lines[0][0] if lines else None
        raise InputError(f"missing '{name}=' header", path, number, 1)
    return None


def _parse_hex(token, m, path):
    if m not in (None, 4):
        raise InputError(
            "hexadecimal tables are only supported for m = 4",
            path,
            token.line,
            token.column,
        )
    for i, c in enumerate(token.text):
        if c not in HEX_DIGITS:
            raise InputError(
                f"'{c}' is not a hexadecimal digit",
                path,
                token.line,
                token.column + i,
            )
    if len(token.text) != 16:
        raise InputError(
            f"a hexadecimal table needs 16 digits, not {len(token.text)}",
            path,
            token.line,
            token.column,
        )
    return 4, [int(c, 16) for c in token.text]


def parse_sbox(text, path=None):
    """
    Return the S-box described by the specified text.

    :param text: The contents of an S-box file.
    :type text: str

    :param path: The file's location, used in error messages.
    :type path: str, optional

    :rtype: SBox

    :raises InputError: If the text is malformed or does not describe a
        permutation.
    """
    lines = list(_lines(text))
    if not lines:
        raise InputError("empty S-box file", path)
    m = _header(lines, "m", path, required=False)
    tokens = [t for number, line in lines for t in _tokens(number, line)]
    if not tokens:
        raise InputError("missing S-box table", path)
    if len(tokens) == 1:
        m, table = _parse_hex(tokens[0], m, path)
    else:
        if m is None:
            raise InputError("missing 'm=' header", path, tokens[0].line, 1)
        table = [_integer(t, path) for t in tokens]
    try:
        return SBox(m, tuple(table))
    except InputError as exception:
        raise InputError(str(exception), path, tokens[0].line) from None


def _layer_body(lines, path):
    tokens = [t for number, line in lines for t in _tokens(number, line)]
    if not tokens:
        raise InputError("missing 'perm:' or 'matrix:' section", path)
    kind = tokens[0]
    if kind.text not in ("perm:", "matrix:"):
        raise InputError(
            f"expected 'perm:' or 'matrix:', not '{kind.text}'",
            path,
            kind.line,
            kind.column,
        )
    return kind, tokens[1:]


def _check_count(tokens, d, kind, path):
    if len(tokens) != d:
        where = tokens[-1] if tokens else kind
        raise InputError(
            f"'{kind.text}' needs {d} entries, not {len(tokens)}",
            path,
            where.line,
            where.column,
        )


def _matrix_rows(tokens, d, path):
    rows = []
    for token in tokens:
        for i, c in enumerate(token.text):
            if c not in "01":
                raise InputError(
                    f"'{c}' is not a binary digit", path, token.line, token.column + i
                )
        if len(token.text) != d:
            raise InputError(
                f"a matrix row needs {d} digits, not {len(token.text)}",
                path,
                token.line,
                token.column,
            )
        rows.append(token.text)
    return rows


def parse_layer(text, path=None, msb0=False):
    """
    Return the mixing layer described by the specified text.

    :param text: The contents of a layer file.
    :type text: str

    :param path: The file's location, used in error messages.
    :type path: str, optional

    :param msb0: Number coordinates from the most significant bit of the
        state integer.
    :type msb0: bool, optional

    :rtype: LinearLayer

    :raises InputError: If the text is malformed or the map is not
        invertible.
    """
    lines = list(_lines(text))
    d = _header(lines, "d", path, required=True)
    if d < 1:
        raise InputError(f"invalid dimension {d}", path, 1)
    kind, tokens = _layer_body(lines, path)
    _check_count(tokens, d, kind, path)
    try:
        if kind.text == "perm:":
            images = [_integer(t, path) for t in tokens]
            return LinearLayer.from_bit_permutation(images, msb0)
        rows = _matrix_rows(tokens, d, path)
        if msb0:
            rows = [row[::-1] for row in reversed(rows)]
        return LinearLayer(Gf2Matrix.from_bit_rows(rows))
    except InputError as exception:
        if exception.path is not None:
            raise
        raise InputError(str(exception), path, kind.line, kind.column) from None


def _boolean(value, key, path, line):
    if value in ("true", "false"):
        return value == "true"
    raise InputError(f"{key} must be 'true' or 'false', not '{value}'", path, line)


def _spec_entries(text, path):
    entries = {}
    for number, line in _lines(text):
        match = _KEY_VALUE.match(line)
        if not match:
            raise InputError("expected 'key: value'", path, number, 1)
        key = match.group(1)
        if key not in SPEC_KEYS:
            raise InputError(f"unknown key '{key}'", path, number, match.start(1) + 1)
        if key in entries:
            raise InputError(f"duplicate key '{key}'", path, number, match.start(1) + 1)
        entries[key] = (match.group(2), number, match.start(2) + 1)
    for key in ("m", "n", "bricks", "layer"):
        if key not in entries:
            raise InputError(f"missing key '{key}'", path)
    return entries


def parse_spec(text, path=None, msb0=None):
    """
    Return the cipher described by the specified spec file text,
    reading the files it references through the file cache.

    :param text: The contents of a spec file.
    :type text: str

    :param path: The file's location; references are relative to it.
    :type path: str, optional

    :param msb0: Override the bit order declared in the file.
    :type msb0: bool, optional

    :rtype: SpecFile
    """
    entries = _spec_entries(text, path)
    base = path or "."

    def integer(key):
        value, line, column = entries[key]
        return _integer(Token(value, line, column), path)

    def boolean(key, default):
        if key not in entries:
            return default
        value, line, _column = entries[key]
        return _boolean(value, key, path, line)

    m = integer("m")
    n = integer("n")
    if msb0 is None:
        msb0 = boolean("msb0", False)

    value, line, column = entries["bricks"]
    references = [t.text for t in _tokens(line, value)]
    if len(references) == 1:
        references = references * n
    elif len(references) != n:
        raise InputError(
            f"{len(references)} bricks listed for n = {n}", path, line, column
        )
    brick_locations = tuple(resolve_relative(base, r) for r in references)
    bricks = tuple(read_sbox(location) for location in brick_locations)

    layer_location = resolve_relative(base, entries["layer"][0])
    layer = read_layer(layer_location, msb0)

    reduced_layer = reduced_location = None
    if "reduced_layer" in entries:
        reduced_location = resolve_relative(base, entries["reduced_layer"][0])
        reduced_layer = read_layer(reduced_location, msb0)

    name = entries["name"][0] if "name" in entries else ""
    surjective = boolean("key_schedule_surjective", True)
    try:
        spec = CipherSpec(
            m,
            n,
            bricks,
            layer,
            proper_round_key_surjective=surjective,
            name=name,
        )
    except (InputError, ValueError) as exception:
        raise InputError(str(exception), path) from None
    return SpecFile(
        spec,
        brick_locations,
        layer_location,
        msb0,
        reduced_layer,
        reduced_location,
    )


def read_sbox(location):
    """Return the S-box in the file at the specified location."""
    return get_file_cache().read(location, parse_sbox)


def read_layer(location, msb0=False):
    """Return the mixing layer in the file at the specified location."""
    return get_file_cache().read(location, parse_layer, msb0=msb0)


def read_spec(location, msb0=None):
    """Return the SpecFile at the specified location."""
    return get_file_cache().read(location, parse_spec, msb0=msb0)


def _rows(values):
    values = [str(v) for v in values]
    return [
        " ".join(values[i : i + ROW_LENGTH])
        for i in range(0, len(values), ROW_LENGTH)
    ]


def format_sbox(f):
    """Return the text of an S-box file describing f."""
    if f.m == 4:
        body = [f.to_hex()]
    else:
        body = _rows(f.table)
    return "\n".join([f"m={f.m}"] + body) + "\n"


def format_layer(layer, msb0=False):
    """Return the text of a layer file describing the layer."""
    d = layer.d
    if layer.bit_permutation is not None:
        images = list(layer.bit_permutation)
        if msb0:
            images = [d - 1 - images[d - 1 - i] for i in range(d)]
        body = ["perm:"] + _rows(images)
    else:
        rows = layer.matrix.to_bit_rows()
        if msb0:
            rows = [row[::-1] for row in reversed(rows)]
        body = ["matrix:"] + rows
    return "\n".join([f"d={d}"] + body) + "\n"


def format_spec(spec_file):
    """Return the text of a spec file with the same content."""
    spec = spec_file.spec
    locations = spec_file.brick_locations
    if len(set(locations)) == 1:
        locations = locations[:1]
    lines = []
    if spec.name:
        lines.append(f"name: {spec.name}")
    lines += [
        f"m: {spec.m}",
        f"n: {spec.n}",
        f"bricks: {' '.join(locations)}",
        f"layer: {spec_file.layer_location}",
        "key_schedule_surjective: "
        + ("true" if spec.proper_round_key_surjective else "false"),
    ]
    if spec_file.reduced_layer_location is not None:
        lines.append(f"reduced_layer: {spec_file.reduced_layer_location}")
    if spec_file.msb0:
        lines.append("msb0: true")
    return "\n".join(lines) + "\n"


def list_fixtures(suffix=""):
    """Return the `resource:` URIs of the bundled fixture files whose
    names end with the specified suffix."""
    directory = os.path.join(os.path.dirname(os.path.realpath(__file__)), "fixtures")
    return [
        f"{RESOURCE_PREFIX}fixtures/{name}"
        for name in sorted(os.listdir(directory))
        if name.endswith(suffix)
    ]
