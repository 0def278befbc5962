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
"""Cache of read and parsed input files"""

import hashlib

from tbgroup.common import InputError, data_from_uri_provider


class FileCache:
    """Cache the reading and parsing of S-box, layer and spec files,
    which specs commonly reference many times over"""

    file_reads = 0

    def __init__(self):
        self.cached = {}
        self.digests = {}

    def read(self, path, parser, **kwargs):
        """
        Return the object parsed from the file at the specified path.

        :param path: A file path or a `resource:` URI.
        :type path: str

        :param parser: Function called with the file's text, its path,
            and the keyword arguments.
        :type parser: callable
        """
        key = (path, parser, tuple(sorted(kwargs.items())))
        if key in self.cached:
            return self.cached[key]

        with data_from_uri_provider(path) as source:
            content = source.read()
        try:
            text = content.decode("utf-8")
        except UnicodeDecodeError as exception:
            raise InputError(f"not UTF-8 text: {exception.reason}", path) from None
        self.digests[path] = hashlib.sha256(content).hexdigest()
        self.cached[key] = parser(text, path, **kwargs)
        FileCache.file_reads += 1
        return self.cached[key]

    def digest(self, path):
        """Return the SHA-256 digest of a file read through the cache."""
        return self.digests.get(path)

    def clear(self):
        """Forget all cached files."""
        self.cached.clear()
        self.digests.clear()


# Default
file_cache = FileCache()


def get_file_cache():
    """Return the file cache used"""
    return file_cache
