"""Command-line front end.

Subcommands::

    count       print |triangulations of M_n| by one of three methods
    enumerate   list all triangulations of M_n as JSON
    arcs        list the arcs of M_n as JSON
    flip-graph  emit the flip graph in DOT or JSON form
    mutate      run a mutation sequence from the initial seed, as JSON
    verify      cross-check the counting results up to a bound

All JSON output is deterministic: keys sorted, compact separators.
Exit status is 0 on success, 1 on a refused or failed run, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arc_model import all_arcs, arc_to_json
from .enumeration import (BRUTE_FORCE_CEILING, count_brute_force,
                          count_closed_form, count_recurrence,
                          enumerate_triangulations, triangulation_to_json,
                          verify_counts)
from .flips import flip_graph, flip_graph_to_dot, flip_graph_to_json
from .quasicluster import apply_sequence, initial_seed


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _slot_sequence(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected a comma-separated list of slot numbers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobiustri",
        description="Triangulations of the Moebius strip with marked points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count triangulations of M_n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=("closed", "recurrence", "brute"),
                   default="closed")
    p.add_argument("--force", action="store_true",
                   help="allow brute-force counting past n=%d"
                        % BRUTE_FORCE_CEILING)

    p = sub.add_parser("enumerate", help="list triangulations of M_n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("arcs", help="list the arcs of M_n")
    p.add_argument("--n", type=_positive_int, required=True)

    p = sub.add_parser("flip-graph", help="emit the flip graph of M_n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")

    p = sub.add_parser(
        "mutate",
        help="mutate the initial seed of M_n along a slot sequence")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--seq", type=_slot_sequence, required=True,
                   help="comma-separated 1-based slots, e.g. 1,2,1")

    p = sub.add_parser("verify", help="cross-check the counting results")
    p.add_argument("--max-n", type=_positive_int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)

    if args.command == "count":
        if args.method == "closed":
            print(count_closed_form(args.n))
        elif args.method == "recurrence":
            print(count_recurrence(args.n))
        else:
            try:
                print(count_brute_force(args.n, force=args.force))
            except ValueError as exc:
                print("error: %s" % exc, file=sys.stderr)
                return 1
        return 0

    if args.command == "enumerate":
        out = [triangulation_to_json(t, args.n)
               for t in enumerate_triangulations(args.n)]
        print(_dumps(out))
        return 0

    if args.command == "arcs":
        print(_dumps([arc_to_json(a) for a in all_arcs(args.n)]))
        return 0

    if args.command == "flip-graph":
        graph = flip_graph(args.n)
        if args.format == "dot":
            print(flip_graph_to_dot(graph))
        else:
            print(_dumps(flip_graph_to_json(graph)))
        return 0

    if args.command == "mutate":
        seed = initial_seed(args.n)
        try:
            _, steps = apply_sequence(seed, args.seq)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        print(_dumps([step.to_json() for step in steps]))
        return 0

    if args.command == "verify":
        ok, lines = verify_counts(args.max_n)
        for line in lines:
            print(line)
        return 0 if ok else 1

    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
