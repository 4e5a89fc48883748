#!/usr/bin/env python3
"""Command-line front end for `cliquehole`: checks, colors, and verifies m-clique hole instances, generates new
ones, runs the exact oracle, and emits the coloring diagram.

Usage:
    python3 -m cliquehole.hole_runner [--config PATH] [-v] <command> ...
"""

import os
import sys
import json
import argparse
from enum import IntEnum

from loguru import logger

from cliquehole.colorability import decide
from cliquehole.hole_errors import (CoverageMismatch, HoleError, InternalInvariant, InvalidInstance, NotColorable,
                                    PaddingStuck, Unresolved)
from cliquehole.hole_io import (GeneratorSpec, emit_diagram, emit_trace, emit_trace_json, hole_from_profile,
                                parse_coloring, parse_instance, serialize_coloring, serialize_instance)
from cliquehole.hole_utils import extract_ring, validate_clique_hole
from cliquehole.oracle.oracle_search import build_graph, chromatic_number, is_k_colorable, verify_coloring
from cliquehole.ring.ring_coloring import color_hole
from cliquehole.ring.ring_pickers import ScriptedPicker

__author__ = "Boaty McBoatface, Planey McPlaneface"
__copyright__ = "Copyright 2023, Westmont College"
__credits__ = ["Boaty McBoatface", "Planey McPlaneface", "Mike Ryu"]
__license__ = "MIT"
__email__ = "bmcboatface@westmont.edu"

DEFAULT_CONFIG_PATH = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "data",
                                   "hole_runner.config.json")

DEFAULT_CONFIG = {
  "oracle": {
    "max_vertices": 26
  },
  "output": {
    "indent": 2
  },
  "debug": False
}

VALID_CONFIG_SCHEMA = {
  "oracle": {
    "max_vertices": 0
  },
  "output": {
    "indent": 0
  },
  "debug": False
}


class ExitStatus(IntEnum):
    SUCCESS = 0
    REFUSED = 1
    INVALID_INPUT = 2
    INTERNAL = 3


def main(argv=None) -> int:
    pars = setup_argument_parser()
    args = pars.parse_args(argv)

    try:
        config = load_config(args.config)
    except (OSError, ValueError) as e:
        print("An error occurred while trying to open files:\n  ", e, file=sys.stderr)
        return ExitStatus.INVALID_INPUT

    setup_logging(config["debug"] or args.verbose)

    try:
        return args.handler(args, config)
    except OSError as e:
        print("An error occurred while trying to open files:\n  ", e, file=sys.stderr)
        return ExitStatus.INVALID_INPUT
    except HoleError as e:
        status = exit_status_for(e)
        print(e, file=sys.stderr)
        if status == ExitStatus.INTERNAL:
            dump_diagnostics(e, config)
        return status


def setup_argument_parser() -> argparse.ArgumentParser:
    pars = argparse.ArgumentParser(prog="python3 -m cliquehole.hole_runner")
    pars.add_argument("--config", type=str, default=None,
                      help="optional string containing the path to a config JSON file")
    pars.add_argument("-v", "--verbose", action="store_true",
                      help="log every balancing iteration and oracle search to stderr")
    subs = pars.add_subparsers(dest="command", required=True)

    check = subs.add_parser("check", help="validate an instance and decide m-colorability")
    check.add_argument("instance", type=str, help="path to an instance JSON file")
    check.add_argument("--json", action="store_true", help="print a machine-readable report")
    check.set_defaults(handler=cmd_check)

    color = subs.add_parser("color", help="construct and verify an m-coloring")
    color.add_argument("instance", type=str, help="path to an instance JSON file")
    color.add_argument("--i-sequence", type=csv_ints, default=None,
                       help="comma-separated deficit indices to pick in order, e.g. 7,2,5,5")
    color.add_argument("--trace", action="store_true", help="print the balancing trace table")
    color.add_argument("--trace-json", type=str, default=None, help="path to write the trace as JSON")
    color.add_argument("--out", type=str, default=None, help="path to write the coloring JSON file")
    color.set_defaults(handler=cmd_color)

    verify = subs.add_parser("verify", help="check a coloring against an instance")
    verify.add_argument("instance", type=str, help="path to an instance JSON file")
    verify.add_argument("--coloring", type=str, required=True, help="path to a coloring JSON file")
    verify.add_argument("--k", type=int, default=None, help="number of available colors (default m)")
    verify.set_defaults(handler=cmd_verify)

    gen = subs.add_parser("gen", help="generate an instance around a ring profile")
    gen.add_argument("--m", type=int, required=True, help="number of cliques")
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--profile", type=csv_ints, help="comma-separated sector sizes a1..am")
    source.add_argument("--sum", type=int, help="target intersection sum for a random profile")
    gen.add_argument("--phi", type=csv_ints, default=None, help="comma-separated clique sizes")
    gen.add_argument("--seed", type=int, default=0, help="seed for the random profile")
    gen.add_argument("--out", type=str, default=None, help="path to write the instance JSON file")
    gen.set_defaults(handler=cmd_gen)

    oracle = subs.add_parser("oracle", help="decide colorability by exact search")
    oracle.add_argument("instance", type=str, help="path to an instance JSON file")
    oracle.add_argument("--k", type=int, default=None, help="decide k-colorability instead of the chromatic number")
    oracle.add_argument("--max-vertices", type=int, default=None, help="size guard for the exact search")
    oracle.add_argument("--ring", action="store_true", help="search the ring graph only")
    oracle.set_defaults(handler=cmd_oracle)

    diagram = subs.add_parser("diagram", help="emit the coloring diagram as GraphML")
    diagram.add_argument("--m", type=int, required=True, help="odd number of cliques, at least 5")
    diagram.add_argument("--out", type=str, default=None, help="path to write the GraphML file")
    diagram.set_defaults(handler=cmd_diagram)

    return pars


def csv_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def load_config(path: str | None) -> dict:
    if path is None and not os.path.exists(DEFAULT_CONFIG_PATH):
        return DEFAULT_CONFIG

    path = path if path is not None else DEFAULT_CONFIG_PATH
    with open(path, 'r', encoding="utf-8") as fo:
        config = json.loads(fo.read())
    if not validate_config(config, VALID_CONFIG_SCHEMA):
        raise OSError(f"Invalid configuration file: {path}")
    return config


def validate_config(config, schema, sub=""):
    if not isinstance(config, dict):
        print(f"Configuration {sub}section must be a JSON object.", file=sys.stderr)
        return False

    is_valid = True
    for key in schema.keys():
        config_exists = key in config.keys()
        is_valid &= config_exists

        if not config_exists:
            print(f"Required {sub}key [{key}] is not present in the config file provided.", file=sys.stderr)
        elif isinstance(schema[key], dict):
            is_valid &= validate_config(config[key], schema[key], "sub")
        elif type(config[key]) is not type(schema[key]):
            is_valid = False
            print(f"Key [{key}] must be of type {type(schema[key]).__name__}.", file=sys.stderr)

    return is_valid


def setup_logging(debug: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if debug else "WARNING",
               format="{time:HH:mm:ss} | {level: <8} | {name}:{function} - {message}")
    logger.enable("cliquehole")


def exit_status_for(error: HoleError) -> ExitStatus:
    if isinstance(error, NotColorable):
        return ExitStatus.REFUSED
    if isinstance(error, (InternalInvariant, Unresolved, CoverageMismatch, PaddingStuck)):
        return ExitStatus.INTERNAL
    return ExitStatus.INVALID_INPUT


def dump_diagnostics(error: HoleError, config: dict) -> None:
    doc = {"error": type(error).__name__, "message": str(error), "diagnostics": error.diagnostics}
    print(json.dumps(doc, indent=config["output"]["indent"], default=str), file=sys.stderr)


def read_text(path: str) -> str:
    with open(path, 'r', encoding="utf-8") as fo:
        return fo.read()


def write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w', encoding="utf-8") as fo:
            fo.write(text)


def cmd_check(args, config) -> int:
    hole = parse_instance(read_text(args.instance), validate=False)
    report = validate_clique_hole(hole)

    if not report.is_valid:
        if args.json:
            print(json.dumps({"valid": False, "issues": [
                {"code": issue.code, "message": issue.message, "indices": list(issue.indices)} for issue in report
            ]}, indent=config["output"]["indent"]))
        else:
            print(report)
        return ExitStatus.INVALID_INPUT

    ring = extract_ring(hole)
    verdict = decide(ring)
    if args.json:
        print(json.dumps({"valid": True, "issues": [], "m": verdict.m, "profile": list(ring.sizes.a),
                          "intersection_sum": verdict.intersection_sum, "bound": verdict.bound,
                          "slack": verdict.slack, "colorable": verdict.colorable},
                         indent=config["output"]["indent"]))
    else:
        print(f"m = {verdict.m}, profile {ring.sizes}")
        print(verdict)
    return ExitStatus.SUCCESS if verdict.colorable else ExitStatus.REFUSED


def cmd_color(args, config) -> int:
    hole = parse_instance(read_text(args.instance))
    picker = ScriptedPicker(args.i_sequence) if args.i_sequence is not None else None
    result = color_hole(hole, picker, config["oracle"]["max_vertices"])

    proper, violations = verify_coloring(build_graph(hole), result.coloring, hole.m)
    if not proper:
        raise InternalInvariant("Constructed coloring failed verification.",
                                {"violations": [str(v) for v in violations]})

    ring_result = result.ring_result
    if ring_result.stuck is not None:
        print(f"padding stuck, colored by exact search: {ring_result.stuck}", file=sys.stderr)
    if ring_result.balancing_failure is not None:
        print(f"balancing failed, colored by the {ring_result.method} method: {ring_result.balancing_failure}",
              file=sys.stderr)

    trace = ring_result.trace
    if (args.trace or args.trace_json) and trace is None:
        print(f"No balancing trace: the ring was colored by the {ring_result.method} method.", file=sys.stderr)
    if args.trace and trace is not None:
        sys.stdout.write(emit_trace(trace))
    if args.trace_json and trace is not None:
        write_output(emit_trace_json(trace, config["output"]["indent"]), args.trace_json)

    if args.out is not None or not args.trace:
        write_output(serialize_coloring(result.coloring, hole.m, config["output"]["indent"]), args.out)
    return ExitStatus.SUCCESS


def cmd_verify(args, config) -> int:
    hole = parse_instance(read_text(args.instance))
    m, coloring = parse_coloring(read_text(args.coloring))
    if m != hole.m:
        raise InvalidInstance(f"The coloring is for m = {m} but the instance has m = {hole.m}.")

    k = args.k if args.k is not None else hole.m
    proper, violations = verify_coloring(build_graph(hole), coloring, k)
    for violation in violations:
        print(violation)
    if not proper:
        print(f"not a proper {k}-coloring ({len(violations)} violations)")
        return ExitStatus.REFUSED

    print(f"proper {k}-coloring using {coloring.num_colors} colors")
    return ExitStatus.SUCCESS


def cmd_gen(args, config) -> int:
    spec = GeneratorSpec(args.m, profile=args.profile, clique_sizes=args.phi, target_sum=args.sum, seed=args.seed)
    hole = hole_from_profile(spec)
    write_output(serialize_instance(hole, config["output"]["indent"]), args.out)
    return ExitStatus.SUCCESS


def cmd_oracle(args, config) -> int:
    hole = parse_instance(read_text(args.instance))
    g = build_graph(extract_ring(hole)) if args.ring else build_graph(hole)
    max_vertices = args.max_vertices if args.max_vertices is not None else config["oracle"]["max_vertices"]

    if args.k is not None:
        found, _ = is_k_colorable(g, args.k, max_vertices)
        print(f"{args.k}-colorable: {str(found).lower()}")
        return ExitStatus.SUCCESS if found else ExitStatus.REFUSED

    chi = chromatic_number(g, max_vertices)
    print(f"chromatic number: {chi} (m = {hole.m})")
    return ExitStatus.SUCCESS if chi <= hole.m else ExitStatus.REFUSED


def cmd_diagram(args, config) -> int:
    write_output(emit_diagram(args.m), args.out)
    return ExitStatus.SUCCESS


if __name__ == '__main__':
    sys.exit(main())
