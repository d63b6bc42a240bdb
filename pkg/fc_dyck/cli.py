"""
fc-dyck command line: one binary, one subcommand per operation, JSON on stdout.

Exit codes: 0 on success, 1 on a domain error (payload {"error", "code"}),
2 on a usage error.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__
from .config import LOGGER_NAME, setup_logging
from .decorators import log_command
from .resolvers import (
    census_logic,
    component_logic,
    dimension_logic,
    enumerate_logic,
    path_of_logic,
    render_logic,
    table_logic,
    verify_logic,
    word_of_logic,
)

logger = logging.getLogger(LOGGER_NAME)


@dataclass(frozen=True)
class CommandResult:
    payload: Any
    exit_code: int


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


@log_command
def cmd_table(args: argparse.Namespace) -> Dict[str, Any]:
    return table_logic(args.n)


@log_command
def cmd_enumerate(args: argparse.Namespace) -> Dict[str, Any]:
    return enumerate_logic(args.rank, args.length, args.as_)


@log_command
def cmd_path_of(args: argparse.Namespace) -> Dict[str, Any]:
    return path_of_logic(args.word, args.rank)


@log_command
def cmd_word_of(args: argparse.Namespace) -> Dict[str, Any]:
    payload = word_of_logic(args.path)
    return {"word": payload["word"], "rank": payload["rank"]}


@log_command
def cmd_component(args: argparse.Namespace) -> Dict[str, Any]:
    return component_logic(args.word, args.rank)


@log_command
def cmd_dim(args: argparse.Namespace) -> Dict[str, Any]:
    return dimension_logic(path=args.path, word=args.word, rank=args.rank)


@log_command
def cmd_verify(args: argparse.Namespace) -> Dict[str, Any]:
    return verify_logic(args.rank, args.height, args.orientation)


@log_command
def cmd_render(args: argparse.Namespace) -> Dict[str, Any]:
    return render_logic(args.path, svg=args.svg)


@log_command
def cmd_census(args: argparse.Namespace) -> Dict[str, Any]:
    return census_logic(args.rank)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="fc-dyck",
        description="Fully commutative elements of type A, Dyck paths and homogeneous KLR modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL (DEBUG, INFO, ...)")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_table = subparsers.add_parser("table", help="T(n,k) triangle, rows 0..N")
    p_table.add_argument("n", type=int, help="Last row")
    p_table.set_defaults(handler=cmd_table)

    p_enum = subparsers.add_parser("enumerate", help="Fully commutative elements of rank n and length k")
    p_enum.add_argument("--rank", type=int, required=True)
    p_enum.add_argument("--length", type=int, required=True)
    p_enum.add_argument("--as", dest="as_", choices=["words", "paths"], default="words")
    p_enum.set_defaults(handler=cmd_enumerate)

    p_path = subparsers.add_parser("path-of", help="Dyck path of a fully commutative word")
    p_path.add_argument("--word", required=True, help='JSON array like "[3,2,1,4,3]" or digits "32143"')
    p_path.add_argument("--rank", type=int, required=True)
    p_path.set_defaults(handler=cmd_path_of)

    p_word = subparsers.add_parser("word-of", help="Canonical word of a Dyck path")
    p_word.add_argument("path", help="Step string such as UUDD")
    p_word.set_defaults(handler=cmd_word_of)

    p_comp = subparsers.add_parser("component", help="Homogeneous component of a word")
    p_comp.add_argument("--word", required=True)
    p_comp.add_argument("--rank", type=int, required=True)
    p_comp.set_defaults(handler=cmd_component)

    p_dim = subparsers.add_parser("dim", help="Dimension of the homogeneous module of a path or word")
    p_dim.add_argument("path", nargs="?", default=None)
    p_dim.add_argument("--word", default=None)
    p_dim.add_argument("--rank", type=int, default=None)
    p_dim.set_defaults(handler=cmd_dim)

    p_verify = subparsers.add_parser("verify", help="Check the KLR relations on every homogeneous module")
    p_verify.add_argument("--rank", type=int, required=True)
    p_verify.add_argument("--height", type=int, default=None)
    p_verify.add_argument(
        "--orientation", default=None, help="right, left, or one '>'/'<' per diagram edge"
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_render = subparsers.add_parser("render", help="Draw a path on the triangular lattice")
    p_render.add_argument("path")
    p_render.add_argument("--svg", action="store_true", help="Emit a standalone SVG document")
    p_render.set_defaults(handler=cmd_render)

    p_census = subparsers.add_parser("census", help="Which dimension strategy decides each element")
    p_census.add_argument("--rank", type=int, required=True)
    p_census.set_defaults(handler=cmd_census)

    return parser


def _check_usage(args: argparse.Namespace) -> None:
    if args.command == "dim":
        if (args.path is None) == (args.word is None):
            raise UsageError("fc-dyck dim: give either a path or --word with --rank")
        if args.word is not None and args.rank is None:
            raise UsageError("fc-dyck dim: --word needs --rank")


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    """Parse argv, dispatch, and return the payload with its exit code. Never exits."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
        _check_usage(args)
    except UsageError as e:
        return CommandResult({"error": str(e), "code": "usage"}, 2)
    except SystemExit as e:
        # --help and --version
        return CommandResult(None, int(e.code or 0))
    if args.log_level:
        setup_logging(args.log_level)
    handler: Callable[[argparse.Namespace], Dict[str, Any]] = args.handler
    payload = handler(args)
    if isinstance(payload, dict) and "error" in payload:
        return CommandResult(payload, 1)
    if args.command == "verify" and not payload["passed"]:
        return CommandResult(payload, 1)
    return CommandResult(payload, 0)


def render_output(result: CommandResult) -> str:
    """Drawings print as-is; everything else is compact JSON."""
    payload = result.payload
    if result.exit_code == 0 and isinstance(payload, dict) and "drawing" in payload:
        return payload["drawing"].rstrip("\n")
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point"""
    setup_logging()
    result = run(argv)
    if result.payload is not None:
        stream = sys.stdout if result.exit_code != 2 else sys.stderr
        print(render_output(result), file=stream)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
