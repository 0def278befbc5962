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
"""Structured analysis reports rendered as text or JSON"""

import dataclasses
import json
import sys

import numpy as np

from tbgroup.file_cache import get_file_cache
from tbgroup.mixlayer import is_proper, is_strongly_proper
from tbgroup.permgroup import check_condition_2
from tbgroup.sboxprops import (
    anti_invariance_report,
    differential_uniformity,
    is_anti_crooked,
)
from tbgroup.tbcipher import (
    MAX_CONDITION_WIDTH,
    NOT_AFFINE_ONLY,
    PROVEN_ALT,
    PROVEN_PRIMITIVE,
)
from tbgroup.vboolfn import (
    anf_degree,
    nonlinearity,
    permutation_parity,
    walsh_spectrum,
)

SCHEMA = "tbgroup-report/1"

# Integers above this are reported as decimal strings
MAX_EXACT_INTEGER = 2**53

INDENT = "  "

# Violations listed in suite reports
MAX_LISTED_VIOLATIONS = 20


def plain(value):
    """
    Return value converted into JSON-compatible data: numbers, strings,
    booleans, None, lists and dictionaries with string keys.
    Vectors, subspaces, walls and other objects appear as their string
    form; integers too large for a JSON double as decimal strings.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        value = int(value)
        return value if abs(value) <= MAX_EXACT_INTEGER else str(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(plain(v) for v in value)
    if isinstance(value, (list, tuple, np.ndarray)):
        return [plain(v) for v in value]
    if dataclasses.is_dataclass(value) and type(value).__str__ is object.__str__:
        return {
            f.name: plain(getattr(value, f.name))
            for f in dataclasses.fields(value)
        }
    return str(value)


def _scalar(value):
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _render(value, depth, lines):
    prefix = INDENT * depth
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{prefix}{key}:")
                _render(item, depth + 1, lines)
            elif isinstance(item, (dict, list)):
                lines.append(f"{prefix}{key}: {'{}' if isinstance(item, dict) else '[]'}")
            else:
                lines.append(f"{prefix}{key}: {_scalar(item)}")
    else:
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{prefix}-")
                _render(item, depth + 1, lines)
            else:
                lines.append(f"{prefix}- {_scalar(item)}")


class ReportDoc:
    """
    A self-describing analysis report.
    Identical inputs and seeds yield byte-identical reports, unless
    timings are added.

    :param command: The command that produced the report.
    :type command: str

    :param seed: The seed of the randomised parts of the analysis.
    :type seed: int, optional
    """

    def __init__(self, command, seed=None):
        self.command = command
        self.seed = seed
        self.inputs = []
        self.sections = {}
        self.timings = None

    def add_input(self, role, location, digest=None):
        """
        Record an input of the analysis.

        :param role: What the input is, e.g. "sbox" or "layer".
        :type role: str

        :param location: The input's file path or resource URI.
        :type location: str

        :param digest: SHA-256 of the input; taken from the file cache
            if not given.
        :type digest: str, optional
        """
        if digest is None:
            digest = get_file_cache().digest(location)
        self.inputs.append({"role": role, "location": location, "sha256": digest})

    def add_section(self, name, content):
        """Add or replace a named section of results."""
        self.sections[name] = plain(content)

    def add_timings(self, durations):
        """Add the measured durations, in seconds, of the analysis steps."""
        self.timings = plain(durations)

    def as_dict(self):
        """Return the report as JSON-compatible data."""
        result = {"schema": SCHEMA, "command": self.command}
        if self.seed is not None:
            result["seed"] = self.seed
        result["inputs"] = self.inputs
        result.update(self.sections)
        if self.timings is not None:
            result["timings"] = self.timings
        return result

    def to_json(self):
        """Return the report as a JSON document."""
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def to_text(self):
        """Return the report as indented key-value text."""
        lines = []
        _render(self.as_dict(), 0, lines)
        return "\n".join(lines) + "\n"

    def write(self, path=None, json_format=False):
        """
        Write the report to the specified file or the standard output.

        :param path: The output file path.
        :type path: str, optional

        :param json_format: Write JSON rather than text.
        :type json_format: bool, optional
        """
        text = self.to_json() if json_format else self.to_text()
        if path is None:
            sys.stdout.write(text)
            return
        with open(path, "w", encoding="utf-8") as output:
            output.write(text)


def sbox_section(f, r_range=None, condition_2=False, seed=0):
    """
    Return the report section with all properties of an S-box.

    :param f: The S-box.
    :type f: SBox

    :param r_range: Lowest and highest anti-invariance level reported,
        by default 1 and m - 1.
    :type r_range: tuple(int, int), optional

    :param condition_2: Also check whether the translations and their
        conjugates by f generate the alternating group.
    :type condition_2: bool, optional
    """
    low, high = r_range or (1, f.m - 1)
    profile = differential_uniformity(f)
    anti = anti_invariance_report(f)
    crooked = is_anti_crooked(f)
    spectrum = walsh_spectrum(f)
    section = {
        "m": f.m,
        "table": f.to_hex() if f.m == 4 else list(f.table),
        "normalized": not f.is_normalized(),
        "parity": permutation_parity(f),
        "differential": {
            "delta": profile.delta,
            "min_derivative_image": profile.min_image_size,
            "weakly_uniform": profile.is_weakly_delta,
            "derivative_image_sizes": profile.weak_bounds,
        },
        "anti_invariance": {
            "max_r_strong": anti.max_r_strong,
            "max_r_plain": anti.max_r_plain,
            "levels": {
                r: {"strong": anti.max_r_strong >= r, "plain": anti.max_r_plain >= r}
                for r in range(low, high + 1)
            },
            "witness": list(anti.witness) if anti.witness else None,
        },
        "anti_crooked": {"holds": crooked.holds, "witness": crooked.witness},
        "nonlinearity": nonlinearity(f),
        "max_walsh": int(np.abs(spectrum[1:]).max()),
        "anf_degrees": [anf_degree(c) for c in f.components()],
    }
    if condition_2:
        section["condition_2"] = check_condition_2(
            f, max_width=MAX_CONDITION_WIDTH, seed=seed
        )
    return section


def layer_section(layer, partition):
    """Return the report section with the properness of a layer."""
    proper = is_proper(layer, partition)
    strong = is_strongly_proper(layer, partition)
    return {
        "d": layer.d,
        "m": partition.m,
        "n": partition.n,
        "form": "matrix" if layer.bit_permutation is None else "permutation",
        "walls": (1 << partition.n) - 2,
        "proper": proper.holds,
        "invariant_wall": proper.witness,
        "strongly_proper": strong.holds,
        "wall_to_wall": list(strong.witness) if strong.witness else None,
        "parity": permutation_parity(layer),
    }


def conclusion(verdict):
    """Return a sentence summarizing a verdict."""
    if verdict.group_identity == PROVEN_ALT:
        return "the round functions generate the alternating group of the state space"
    if verdict.group_identity == NOT_AFFINE_ONLY:
        return (
            "the round functions generate a primitive group that is not "
            "of affine type; no alternating group conclusion"
        )
    if verdict.primitivity == PROVEN_PRIMITIVE:
        return "the round functions generate a primitive group"
    return "no conclusion"


def _trail(firings):
    return [
        {"rule": f.label, "held": f.held, "facts": f.facts} for f in firings
    ]


def verdict_section(verdict):
    """Return the report section of a theorem engine verdict."""
    return {
        "primitivity": verdict.primitivity,
        "group": verdict.group_identity,
        "conclusion": conclusion(verdict),
        "rule_chain": verdict.rule_chain,
        "layer": verdict.layer,
        "bricks": verdict.brick_facts,
        "trail": _trail(verdict.hypothesis_trail),
        "notes": verdict.notes,
    }


def desk_check_section(check):
    """Return the report section of a desk-scale group computation."""
    return {
        "n": check.n,
        "degree": check.degree,
        "layer": check.layer_provenance,
        "seed": check.seed,
        "primitive": check.primitive,
        "block_witness": check.block_witness,
        "classification": check.classification,
        "contains_alternating": check.giant,
        "order": check.order,
        "consistent": check.consistent,
        "reduced_verdict": {
            "primitivity": check.verdict.primitivity,
            "group": check.verdict.group_identity,
            "rule_chain": check.verdict.rule_chain,
        },
    }


def suite_section(result):
    """Return the report section of a validation suite run."""
    return {
        "suite": result.suite,
        "parameters": result.parameters,
        "checked": result.checked,
        "passed": result.passed,
        "violation_count": len(result.violations),
        "violations": result.violations[:MAX_LISTED_VIOLATIONS],
        "details": result.details,
    }
