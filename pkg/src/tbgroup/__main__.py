#!/usr/bin/env python3
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
"""Command-line interface"""

import argparse
import hashlib
import importlib
import os
import shutil
import sys
import textwrap

from tbgroup.common import (
    EXIT_INPUT_ERROR,
    EXIT_SUCCESS,
    EXIT_VIOLATION,
    AnalysisError,
    InputError,
    fail,
    is_resource,
    program_version,
)
from tbgroup import debug
from tbgroup.file_cache import FileCache
from tbgroup.ingest import (
    HEX_DIGITS,
    list_fixtures,
    parse_sbox,
    read_layer,
    read_sbox,
    read_spec,
)
from tbgroup.mixlayer import BrickPartition
from tbgroup import perf
from tbgroup.report import (
    ReportDoc,
    desk_check_section,
    layer_section,
    sbox_section,
    suite_section,
    verdict_section,
)
from tbgroup.tbcipher import analyze

DESCRIPTION = (
    "tbg: Group theoretic analysis of the components of translation "
    "based block ciphers"
)

SUITES = "validations"

# Characters that mark an S-box argument as a location
PATH_CHARACTERS = set("/.:" + os.sep)
INLINE_HEX_LENGTH = 16


class CliParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the input error code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def module_get_attribute(name, attribute_name):
    """Return the attribute of the module with the specified name."""
    module = importlib.import_module(f"tbgroup.{name}")
    return getattr(module, attribute_name)


def module_name(facility):
    """Given the user-visible name of a facility (e.g. fact-4uniform)
    return the corresponding name of the module (e.g fact_4uniform)."""
    return facility.replace("-", "_")


def facility_modules(facility):
    """Return a list with the module names of the available facilities"""
    main_dir = os.path.dirname(os.path.realpath(__file__))
    python_files = os.listdir(f"{main_dir}/{facility}")
    # Remove trailing .py
    return sorted(
        os.path.splitext(f)[0]
        for f in python_files
        if f.endswith(".py") and not f.startswith("_")
    )


def facility_names(facility):
    """Return a list with the names of the available facilities."""
    # Replace _ with -
    return [s.replace("_", "-") for s in facility_modules(facility)]


def r_range(text):
    """Parse an anti-invariance level range given as LOW:HIGH or R."""
    low, _sep, high = text.partition(":")
    try:
        low = int(low)
        high = int(high) if high else low
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not LOW:HIGH") from None
    if not 1 <= low <= high:
        raise argparse.ArgumentTypeError(f"'{text}' is not an increasing range")
    return low, high


def brick_shape(text):
    """Parse a brick shape given as m,n."""
    try:
        m, n = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not m,n") from None
    return m, n


def load_sbox(argument):
    """Return an S-box and its location, given a file path, a resource
    URI, or an inline hexadecimal table."""
    if (
        not is_resource(argument)
        and not os.path.exists(argument)
        and not set(argument) & PATH_CHARACTERS
        and (len(argument) == INLINE_HEX_LENGTH or set(argument) <= HEX_DIGITS)
    ):
        return parse_sbox(argument, "argument"), None
    return read_sbox(argument), argument


def new_report(command, seed=None):
    """Return an empty report and a stopwatch for its sections."""
    return ReportDoc(command, seed), perf.Stopwatch()


def emit(args, report, stopwatch):
    """Write the report as requested by the command-line options."""
    if args.timings:
        report.add_timings(stopwatch.durations)
    report.write(args.output, args.json)


def analyze_sbox(args):
    """Report the properties of an S-box."""
    report, stopwatch = new_report("sbox", args.seed)
    f, location = load_sbox(args.sbox)
    if location is None:
        digest = hashlib.sha256(args.sbox.encode("utf-8")).hexdigest()
        report.add_input("sbox", "argument", digest)
    else:
        report.add_input("sbox", location)
    if args.r_range and args.r_range[1] >= f.m:
        raise InputError(f"anti-invariance levels must be below m = {f.m}")
    with stopwatch.measure("sbox"):
        section = sbox_section(f, args.r_range, args.condition_2, args.seed)
    report.add_section("sbox", section)
    emit(args, report, stopwatch)
    return EXIT_SUCCESS


def analyze_layer(args):
    """Report whether a mixing layer is proper and strongly proper."""
    report, stopwatch = new_report("layer")
    layer = read_layer(args.layer, args.msb0)
    report.add_input("layer", args.layer)
    m, n = args.bricks
    if m * n != layer.d:
        raise InputError(f"{n} bricks of width {m} do not make up {layer.d} bits")
    partition = BrickPartition(m, n)
    with stopwatch.measure("layer"):
        report.add_section("layer", layer_section(layer, partition))
    emit(args, report, stopwatch)
    return EXIT_SUCCESS


def analyze_cipher(args):
    """Apply the theorem engine to a cipher and optionally verify it on
    a reduced instance."""
    report, stopwatch = new_report("cipher", args.seed)
    spec_file = read_spec(args.spec, True if args.msb0 else None)
    spec = spec_file.spec
    report.add_input("spec", args.spec)
    for location in dict.fromkeys(spec_file.brick_locations):
        report.add_input("brick", location)
    report.add_input("layer", spec_file.layer_location)

    if args.desk_check is not None and args.desk_check < 2:
        raise InputError("a reduced cipher needs at least 2 bricks")
    desk_layer = spec_file.reduced_layer
    if args.desk_layer:
        desk_layer = read_layer(args.desk_layer, spec_file.msb0)
        report.add_input("reduced_layer", args.desk_layer)
    elif desk_layer is not None and args.desk_check:
        report.add_input("reduced_layer", spec_file.reduced_layer_location)
    if desk_layer is not None and args.desk_check:
        if desk_layer.d != spec.m * args.desk_check:
            raise InputError(
                f"the reduced layer acts on {desk_layer.d} bits, "
                f"not {args.desk_check} x {spec.m}"
            )

    with stopwatch.measure("theorems"):
        verdict = analyze(
            spec,
            desk_check_n=args.desk_check,
            desk_layer=desk_layer,
            seed=args.seed,
            degree_cap=args.degree_cap,
        )
    report.add_section(
        "cipher",
        {
            "name": spec.name,
            "m": spec.m,
            "n": spec.n,
            "d": spec.d,
            "key_schedule_surjective": spec.proper_round_key_surjective,
        },
    )
    report.add_section("verdict", verdict_section(verdict))
    if verdict.desk_check is not None:
        report.add_section("desk_check", desk_check_section(verdict.desk_check))
    emit(args, report, stopwatch)
    return EXIT_SUCCESS


def validate(args):
    """Run a validation suite."""
    report, stopwatch = new_report("validate", args.seed)
    run = module_get_attribute(f"{SUITES}.{module_name(args.suite)}", "run")
    with stopwatch.measure(args.suite):
        result = run(trials=args.trials, seed=args.seed, width=args.width)
    report.add_section("validation", suite_section(result))
    emit(args, report, stopwatch)
    return EXIT_SUCCESS if result.passed else EXIT_VIOLATION


def add_report_arguments(parser):
    """Add the arguments controlling the report output."""
    parser.add_argument(
        "-j",
        "--json",
        action="store_true",
        help="Output the report as JSON rather than text",
    )
    parser.add_argument(
        "-o",
        "--output",
        type=str,
        help="Output file for the report",
    )
    parser.add_argument(
        "-T",
        "--timings",
        action="store_true",
        help="Include the duration of each analysis step in the report",
    )


def add_seed_argument(parser):
    """Add the seed argument of randomized analyses."""
    parser.add_argument(
        "-s",
        "--seed",
        type=int,
        default=0,
        help="Seed of the randomized computations (default 0)",
    )


def add_subcommand_sbox(subparsers):
    """Add the arguments of the sbox subcommand."""
    parser = subparsers.add_parser(
        "sbox", help="Report the properties of an S-box."
    )
    parser.set_defaults(func=analyze_sbox)
    parser.add_argument(
        "sbox",
        help="S-box file path, resource:fixtures/... name, "
        + "or 16 hexadecimal digits",
    )
    parser.add_argument(
        "-c",
        "--condition-2",
        action="store_true",
        help="Check whether the translations and their conjugates by the "
        + "S-box generate the alternating group",
    )
    parser.add_argument(
        "-r",
        "--r-range",
        type=r_range,
        help="Anti-invariance levels to report as LOW:HIGH (default 1:m-1)",
    )
    add_seed_argument(parser)
    add_report_arguments(parser)


def add_subcommand_layer(subparsers):
    """Add the arguments of the layer subcommand."""
    parser = subparsers.add_parser(
        "layer", help="Report whether a mixing layer is (strongly) proper."
    )
    parser.set_defaults(func=analyze_layer)
    parser.add_argument("layer", help="Layer file path or resource:fixtures/...")
    parser.add_argument(
        "-b",
        "--bricks",
        type=brick_shape,
        required=True,
        help="Brick width and count as m,n",
    )
    parser.add_argument(
        "-M",
        "--msb0",
        action="store_true",
        help="Number the layer's coordinates from the most significant bit",
    )
    add_report_arguments(parser)


def add_subcommand_cipher(subparsers):
    """Add the arguments of the cipher subcommand."""
    parser = subparsers.add_parser(
        "cipher",
        help="Apply the primitivity and alternating group theorems to a cipher.",
    )
    parser.set_defaults(func=analyze_cipher)
    parser.add_argument("spec", help="Spec file path or resource:fixtures/...")
    parser.add_argument(
        "-D",
        "--desk-check",
        type=int,
        help="Verify the verdict by computing the group of a reduced "
        + "cipher with the specified number of bricks",
    )
    parser.add_argument(
        "-L",
        "--desk-layer",
        type=str,
        help="Layer file of the reduced cipher (default: the spec's "
        + "reduced_layer, else a random strongly proper layer)",
    )
    parser.add_argument(
        "-C",
        "--degree-cap",
        type=int,
        help="Largest degree for which group orders are computed "
        + "(default 4096)",
    )
    parser.add_argument(
        "-M",
        "--msb0",
        action="store_true",
        help="Number the layers' coordinates from the most significant bit",
    )
    add_seed_argument(parser)
    add_report_arguments(parser)


def add_subcommand_validate(subparsers):
    """Add the arguments of the validate subcommand."""
    parser = subparsers.add_parser(
        "validate", help="Run a validation suite of computational claims."
    )
    parser.set_defaults(func=validate)
    parser.add_argument(
        "-S",
        "--suite",
        required=True,
        choices=facility_names(SUITES),
        help="Name of the suite to run",
    )
    parser.add_argument(
        "-t",
        "--trials",
        type=int,
        help="Number of random instances (default depends on the suite)",
    )
    parser.add_argument(
        "-w",
        "--width",
        type=int,
        help="Restrict the suite to this S-box width or dimension",
    )
    add_seed_argument(parser)
    add_report_arguments(parser)


def add_subcommand_help(top_parser, subparsers):
    """Add the arguments of the help subcommand."""

    def top_level_help(_args):
        """Display top-level help."""
        top_parser.print_help()

    parser = subparsers.add_parser("help", help="Show top-level help message.")
    parser.set_defaults(func=top_level_help)


def list_facility_description(facility):
    """Print the specified facility's module descriptions."""
    indent = max(len(name) for name in facility_names(facility)) + 3

    width = shutil.get_terminal_size().columns if os.isatty(1) else 1e9
    for name in facility_names(facility):
        module = module_name(f"{facility}.{name}")
        description = module_get_attribute(module, "__doc__")
        default = module_get_attribute(module, "DEFAULT_TRIALS")
        text = f"{description}; default trials: {default}"
        wrapped = textwrap.fill(
            text,
            width=width,
            initial_indent=f"{name}:" + (" " * (indent - len(name) - 1)),
            subsequent_indent=" " * indent,
        )
        print(wrapped)


def add_subcommand_list_suites(subparsers):
    """Add the list-suites subcommand."""

    def list_suites(_args):
        """Print a description of available validation suites."""
        list_facility_description(SUITES)

    parser = subparsers.add_parser(
        "list-suites", help="List available validation suites."
    )
    parser.set_defaults(func=list_suites)


def add_subcommand_list_fixtures(subparsers):
    """Add the list-fixtures subcommand."""

    def list_bundled_fixtures(_args):
        """Print the names of the bundled fixtures."""
        for name in list_fixtures():
            print(name)

    parser = subparsers.add_parser(
        "list-fixtures", help="List bundled S-box, layer and spec files."
    )
    parser.set_defaults(func=list_bundled_fixtures)


def add_subcommand_version(subparsers):
    """Add the version subcommand."""

    def show_version(_args):
        """Display program version and exit"""
        print(f"tbg version {program_version()}")

    parser = subparsers.add_parser("version", help="Report program version")
    parser.set_defaults(func=show_version)


def get_cli_parser():
    """Return a CLI parser (used by main() and sphinx-argparse)"""

    parser = CliParser(description=DESCRIPTION)

    parser.add_argument(
        "-d",
        "--debug",
        nargs=1,
        type=str,
        default=[],
        help="Output debugging information according to the comma-separated "
        + "arguments.\n"
        + debug.flags_help(),
    )
    parser.add_argument(
        "-v",
        "--version",
        action="store_true",
        help="Report program version and exit",
    )

    # Add sub-commands
    subparsers = parser.add_subparsers(
        dest="command", help="Name of the tbg operation to perform."
    )
    add_subcommand_help(parser, subparsers)
    add_subcommand_sbox(subparsers)
    add_subcommand_layer(subparsers)
    add_subcommand_cipher(subparsers)
    add_subcommand_validate(subparsers)
    add_subcommand_list_suites(subparsers)
    add_subcommand_list_fixtures(subparsers)
    add_subcommand_version(subparsers)
    return parser


def main(argv=None):
    """Program entry point"""
    parser = get_cli_parser()
    args = parser.parse_args(argv)

    # Setup debug logging and performance monitoring
    if args.debug:
        try:
            debug.set_flags(args.debug[0].split(","))
        except ValueError as exception:
            fail(str(exception))
    if debug.enabled("stderr"):
        debug.set_output(sys.stderr)
    perf.log("Start")

    if args.version:
        print(f"tbg version {program_version()}")
        return EXIT_SUCCESS

    # Handle subcommands
    exit_code = EXIT_SUCCESS
    if args.command is not None:
        try:
            exit_code = args.func(args) or EXIT_SUCCESS
        except AnalysisError as exception:
            fail(str(exception), exception.exit_code)

    debug.log("files-read", f"{FileCache.file_reads} files read")

    return exit_code


if __name__ == "__main__":
    sys.exit(main())
