#!/usr/bin/env python3
"""
surreal command-line interface.

Subcommands:
    eval   Evaluate one expression
    tree   Emit the generated number tree, optionally with its condition report
    laws   Run registered laws and print one JSON report per line
    repl   Evaluate expressions line by line until ``:quit``

Exit codes: 0 success, 1 evaluation or validation failure, 2 usage or
syntax error.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from surreal import __version__
from surreal.cli.evaluator import Evaluator
from surreal.cli.parser import parse
from surreal.core.arena import Arena
from surreal.core.config import SurrealConfig
from surreal.core.constants import DEFAULT_CONFIG_PATH, EXIT_FAILURE, EXIT_OK, EXIT_USAGE
from surreal.core.errors import ConfigurationError, ExpressionSyntaxError, SurrealError
from surreal.laws.harness import run_laws
from surreal.laws.registry import registered_laws
from surreal.laws.report_store import ReportStore
from surreal.tree.emitters import to_dot, to_json
from surreal.tree.generator import check_conditions, generate

logger = logging.getLogger(__name__)

QUIT = ":quit"


def _emit(document) -> None:
    print(json.dumps(document, ensure_ascii=False))


def cmd_eval(args: argparse.Namespace, arena: Arena) -> int:
    evaluator = Evaluator(arena)
    result = evaluator.evaluate(parse(args.expr))
    if args.json:
        _emit(evaluator.describe(args.expr, result))
    else:
        for line in evaluator.details(result):
            print(line)
    return EXIT_OK


def cmd_tree(args: argparse.Namespace, arena: Arena) -> int:
    tree = generate(arena, args.days)
    if args.format == "dot":
        sys.stdout.write(to_dot(arena, tree))
    else:
        _emit(to_json(arena, tree))
    if not args.check:
        return EXIT_OK
    report = check_conditions(arena, tree)
    _emit(report.to_dict())
    if not report.ok:
        logger.warning("Tree check found %d violations", len(report.violations))
        return EXIT_FAILURE
    return EXIT_OK


def cmd_laws(args: argparse.Namespace, arena: Arena) -> int:
    if args.list:
        for law in registered_laws():
            _emit({
                "name": law.name,
                "arity": law.arity,
                "statement": law.statement,
                "filter": law.filter.value,
                "max_day": law.max_day,
                "domain": law.domain.value,
            })
        return EXIT_OK

    try:
        reports = run_laws(
            arena,
            names=args.law,
            max_day=args.max_day,
            positive=args.positive,
            limit=args.limit,
        )
    except KeyError as e:
        print(f"Error: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE

    for report in reports:
        _emit(report.to_dict())

    store = ReportStore()
    if args.output:
        store.write_run(args.output, reports)
    if args.record:
        store.record(args.record, reports)

    failed = [r.law for r in reports if not r.passed]
    if failed:
        logger.warning("Laws with failures: %s", ", ".join(failed))
        return EXIT_FAILURE
    return EXIT_OK


def cmd_repl(args: argparse.Namespace, arena: Arena) -> int:
    evaluator = Evaluator(arena)
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            print("surreal> ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line == QUIT:
            break
        try:
            print(evaluator.render(evaluator.evaluate(parse(line))))
        except SurrealError as e:
            print(f"Error: {e}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surreal",
        description="Exact arithmetic on finitely-born surreal numbers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Evaluate an expression and print its canonical cut as JSON
  python -m surreal eval "{0|1} + {0|1}" --json

  # Emit days 0..3 of the tree with the condition report
  python -m surreal tree --days 3 --format json --check

  # Check distributivity on positive numbers born by day 3
  python -m surreal laws --law DIST_POS --max-day 3 --positive
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--config",
        default=DEFAULT_CONFIG_PATH,
        help=f"Path to configuration file (default: {DEFAULT_CONFIG_PATH})",
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="Log debug output to stderr")

    commands = parser.add_subparsers(dest="command", required=True)

    p_eval = commands.add_parser("eval", help="Evaluate one expression")
    p_eval.add_argument("expr", help='Expression, e.g. "{0|1} * 2"')
    p_eval.add_argument("--json", action="store_true", help="Print a JSON document")
    p_eval.set_defaults(handler=cmd_eval)

    p_tree = commands.add_parser("tree", help="Emit the number tree")
    p_tree.add_argument("--days", type=int, required=True, help="Last day to generate")
    p_tree.add_argument("--format", choices=["dot", "json"], default="json", help="Output format (default: json)")
    p_tree.add_argument("--check", action="store_true", help="Append the tree condition report")
    p_tree.set_defaults(handler=cmd_tree)

    p_laws = commands.add_parser("laws", help="Check registered laws")
    p_laws.add_argument("--law", action="append", help="Law name (repeatable; default: all)")
    p_laws.add_argument("--max-day", type=int, help="Corpus birthday bound (default: per law)")
    p_laws.add_argument("--positive", action="store_true", help="Use the positive corpus")
    p_laws.add_argument("--limit", type=int, help="Maximum tuples per law")
    p_laws.add_argument("--list", action="store_true", help="List registered laws and exit")
    p_laws.add_argument("--output", help="Write the run's reports to this JSON file")
    p_laws.add_argument("--record", help="Append the run's reports to this JSONL history")
    p_laws.set_defaults(handler=cmd_laws)

    p_repl = commands.add_parser("repl", help=f"Read-eval-print loop ({QUIT} exits)")
    p_repl.set_defaults(handler=cmd_repl)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config = SurrealConfig.load(args.config)
        arena = Arena(config)
        return args.handler(args, arena)
    except (ExpressionSyntaxError, ConfigurationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SurrealError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
