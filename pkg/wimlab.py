#!/usr/bin/env python3
"""WIM Lab - weakly increasing matrices, lattice paths and Kekule structures.

Counts, enumerates, maps and draws the objects and cross-checks the counting
routes against each other.
"""

import argparse
import itertools
import json
import sys
from dataclasses import fields
from pathlib import Path
from typing import Any, Optional

# Local imports
import utils
from benzenoid import (
    build_benzenoid,
    enumerate_kekule,
    kekule_to_matrix,
    matrix_to_kekule,
)
from errors import (
    BudgetExceededError,
    StructureViolation,
    ValidationError,
    VerificationFailure,
)
from exactcount import kekule_parameters
from harness import DEFAULT_CONFIG_FILE, VerifyHarness, discover_routes, load_config
from lattice import (
    enumerate_nonintersecting_tuples,
    matrix_to_path_tuple,
    path_tuple_to_matrix,
)
from render import RenderStyle, render_kekule, render_paths
from wim import enumerate_wim, pulse_decompose

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3
EXIT_DISAGREE = 4

METHODS = ["closed", "lgv", "enumerate", "paths", "kekule", "macmahon"]


class WimlabArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EXIT_USAGE."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_document(source: Optional[str]) -> Any:
    """Parses JSON from a file, or from stdin when source is None or '-'."""
    if source is None or source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    return utils.parse_json(text)


def _emit(document: Any, pretty: bool = False):
    print(utils.pretty_json(document) if pretty else utils.canonical_json(document))


def _render_style(config: dict) -> RenderStyle:
    known = {f.name for f in fields(RenderStyle)}
    values = config.get("render", {}) or {}
    return RenderStyle(
        **{key: float(value) for key, value in values.items() if key in known}
    )


def cmd_count(args, config) -> int:
    """Prints the count for (m, n, k) as an exact decimal string."""
    route = discover_routes(verbose=False).get(args.method)
    if route is None:
        print(
            f"Error: counting route '{args.method}' is not available.",
            file=sys.stderr,
        )
        return EXIT_USAGE
    reason = route.unsupported_reason(args.m, args.n, args.k)
    if reason is not None:
        print(f"Error: {reason}", file=sys.stderr)
        return EXIT_USAGE

    print(str(route.count(args.m, args.n, args.k, config["budgets"])))
    return EXIT_OK


def cmd_enumerate(args, config) -> int:
    """Streams canonical JSON documents, one per line."""
    budgets = config["budgets"]
    if args.what == "matrices":
        stream = map(
            utils.matrix_to_document,
            enumerate_wim(args.m, args.n, args.k, max_cells=budgets["matrix_cells"]),
        )
    elif args.what == "tuples":
        stream = map(
            utils.tuple_to_document,
            enumerate_nonintersecting_tuples(
                args.m, args.n, args.k, budget=utils.tuple_budget(budgets["tuples"])
            ),
        )
    else:
        if args.p is not None:
            params = (args.p, args.q, args.r)
            if None in params:
                print(
                    "Error: --p, --q and --r must be given together.",
                    file=sys.stderr,
                )
                return EXIT_USAGE
        else:
            params = kekule_parameters(args.n, args.k)
        graph = build_benzenoid(*params)
        stream = map(
            utils.kekule_to_document,
            enumerate_kekule(graph, max_edges=budgets["kekule_edges"]),
        )

    emitted = 0
    for document in itertools.islice(stream, args.limit):
        _emit(document)
        emitted += 1

    if args.verbose:
        print(f"✓ {emitted} {args.what}", file=sys.stderr)
    return EXIT_OK


def cmd_decompose(args, config) -> int:
    matrix = utils.matrix_from_document(_read_document(args.input))
    _emit(utils.chain_to_document(pulse_decompose(matrix)), args.pretty)
    return EXIT_OK


def cmd_map(args, config) -> int:
    """Applies a bijection, or its inverse with --from."""
    document = _read_document(args.input)
    if args.to == "kekule":
        result = utils.kekule_to_document(
            matrix_to_kekule(utils.matrix_from_document(document))
        )
    elif args.to == "paths":
        result = utils.tuple_to_document(
            matrix_to_path_tuple(utils.matrix_from_document(document))
        )
    elif args.source == "kekule":
        result = utils.matrix_to_document(
            kekule_to_matrix(utils.kekule_from_document(document))
        )
    else:
        result = utils.matrix_to_document(
            path_tuple_to_matrix(utils.tuple_from_document(document))
        )
    _emit(result, args.pretty)
    return EXIT_OK


def cmd_render(args, config) -> int:
    """Draws a Kekule structure or a path tuple as SVG.

    A matrix document is accepted for either kind and mapped first.
    """
    document = _read_document(args.input)
    is_matrix = isinstance(document, dict) and "rows" in document
    style = _render_style(config)

    if args.what == "kekule":
        structure = (
            matrix_to_kekule(utils.matrix_from_document(document))
            if is_matrix
            else utils.kekule_from_document(document)
        )
        svg = render_kekule(structure, style)
    else:
        paths = (
            matrix_to_path_tuple(utils.matrix_from_document(document))
            if is_matrix
            else utils.tuple_from_document(document)
        )
        # Re-validates layout and disjointness of a hand-written tuple
        path_tuple_to_matrix(paths)
        svg = render_paths(paths, style)

    if args.output:
        utils.save_document(Path(args.output), svg, args.verbose)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_verify(args, config) -> int:
    """Cross-checks every route; raises VerificationFailure on disagreement."""
    defaults = config["verify"]

    def pick(name):
        value = getattr(args, name)
        return defaults[name] if value is None else value

    harness = VerifyHarness(config, verbose=args.verbose)
    report = harness.run(
        max_n=pick("max_n"),
        max_k=pick("max_k"),
        max_m=pick("max_m"),
        include_matchings=args.include_matchings or defaults["include_matchings"],
        max_pqr=pick("max_pqr"),
        include_rules=args.include_rules,
        workers=pick("workers"),
    )

    if args.json:
        print(json.dumps(report.to_document(), indent=2))
    else:
        print(report.to_markdown())

    if args.save_report is not None:
        harness.save_report(report, args.save_report or None)

    if not report.ok:
        raise VerificationFailure(f"{len(report.failures)} cell(s) disagree")
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = WimlabArgumentParser(
        prog="wimlab",
        description="Weakly increasing matrices, lattice paths and Kekule structures.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Count 2 x 6 matrices with entries in [1, 7]
  %(prog)s count --n 6 --k 7

  # Same count by brute force over lattice path pairs
  %(prog)s count --n 6 --k 7 --method paths

  # First five 2 x 2 matrices bounded by 3, one JSON document per line
  %(prog)s enumerate --what matrices --n 2 --k 3 --limit 5

  # Pulse decomposition of a matrix document
  %(prog)s decompose --input matrix.json

  # Matrix to Kekule structure and back
  %(prog)s map --to kekule --input matrix.json > kekule.json
  %(prog)s map --from kekule --input kekule.json

  # Draw the path pair of a matrix
  %(prog)s render --what paths --input matrix.json --output paths.svg

  # Cross-check every route, including matchings
  %(prog)s verify --max-n 4 --max-k 4 --include-matchings --save-report

Environment:
  WIMLAB_BUDGET  overrides budgets.tuples (candidate path tuples) only; the
                 matrix-cell and Kekule edge guards come from the config file.

Exit codes: 0 ok, 1 usage, 2 invalid input, 3 budget exceeded, 4 disagreement.
        """,
    )
    parser.add_argument(
        "-c",
        "--config",
        default=None,
        help=f"Config file path (default: {DEFAULT_CONFIG_FILE})",
    )
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="Quiet mode, minimal output"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="Count matrices for (m, n, k)")
    count.add_argument("--m", type=_positive, default=2, help="Rows (default: 2)")
    count.add_argument("--n", type=_positive, required=True, help="Columns")
    count.add_argument("--k", type=_positive, required=True, help="Entry bound")
    count.add_argument(
        "--method",
        choices=METHODS,
        default="closed",
        help="Counting route (default: closed)",
    )
    count.set_defaults(handler=cmd_count)

    enumerate_ = commands.add_parser("enumerate", help="Stream objects as JSON Lines")
    enumerate_.add_argument(
        "--what", choices=["matrices", "tuples", "kekule"], required=True
    )
    enumerate_.add_argument("--m", type=_positive, default=2, help="Rows (default: 2)")
    enumerate_.add_argument("--n", type=_positive, help="Columns")
    enumerate_.add_argument("--k", type=_positive, help="Entry bound")
    enumerate_.add_argument("--p", type=_positive, help="Benzenoid side p")
    enumerate_.add_argument("--q", type=_positive, help="Benzenoid side q")
    enumerate_.add_argument("--r", type=_positive, help="Benzenoid side r")
    enumerate_.add_argument("--limit", type=_positive, help="Stop after N objects")
    enumerate_.set_defaults(handler=cmd_enumerate)

    decompose = commands.add_parser(
        "decompose", help="Pulse decomposition of a 2-row matrix"
    )
    decompose.add_argument("--input", help="Matrix JSON file (default: stdin)")
    decompose.add_argument("--pretty", action="store_true", help="Indented JSON")
    decompose.set_defaults(handler=cmd_decompose)

    map_ = commands.add_parser("map", help="Apply a bijection")
    direction = map_.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to", choices=["kekule", "paths"], help="Matrix -> target")
    direction.add_argument(
        "--from", dest="source", choices=["kekule", "paths"], help="Source -> matrix"
    )
    map_.add_argument("--input", help="Input JSON file (default: stdin)")
    map_.add_argument("--pretty", action="store_true", help="Indented JSON")
    map_.set_defaults(handler=cmd_map)

    render = commands.add_parser("render", help="Draw a structure or path tuple as SVG")
    render.add_argument("--what", choices=["kekule", "paths"], required=True)
    render.add_argument("--input", help="Input JSON file (default: stdin)")
    render.add_argument("--output", help="SVG file (default: stdout)")
    render.set_defaults(handler=cmd_render)

    verify = commands.add_parser("verify", help="Cross-check all counting routes")
    verify.add_argument("--max-n", type=_positive, help="Largest n (config)")
    verify.add_argument("--max-k", type=_positive, help="Largest k (config)")
    verify.add_argument("--max-m", type=_positive, help="Largest m (config)")
    verify.add_argument(
        "--include-matchings",
        action="store_true",
        help="Add the kekule route, Kekule round trips and the p,q,r grid",
    )
    verify.add_argument("--max-pqr", type=_positive, help="Bound for the p,q,r grid")
    verify.add_argument(
        "--include-lemmas",
        dest="include_rules",
        action="store_true",
        help="Audit v-bar placement on every structure of O{n,2,r}, n,r <= 3",
    )
    verify.add_argument("--workers", type=_positive, help="Concurrent cells")
    verify.add_argument(
        "--save-report",
        nargs="?",
        const="",
        default=None,
        metavar="DIR",
        help="Write REPORT.md and report.json (default dir: output.report_dir)",
    )
    verify.add_argument("--json", action="store_true", help="Print the report as JSON")
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    """Main entry point for CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)
    args.verbose = not args.quiet

    if args.command == "enumerate":
        missing_nk = args.n is None or args.k is None
        if args.what != "kekule" and missing_nk:
            parser.error(f"enumerate --what {args.what} needs --n and --k")
        if args.what == "kekule" and args.p is None and missing_nk:
            parser.error("enumerate --what kekule needs --p/--q/--r or --n/--k")

    config_path = args.config or DEFAULT_CONFIG_FILE
    config = load_config(config_path, required=args.config is not None)

    try:
        utils.tuple_budget(config["budgets"].get("tuples"))
    except ValidationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args, config)
    except (ValidationError, StructureViolation) as e:
        print(f"✗ Invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as e:
        print(f"✗ Budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationFailure as e:
        print(f"✗ Verification failed: {e}", file=sys.stderr)
        return EXIT_DISAGREE
    except OSError as e:
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
