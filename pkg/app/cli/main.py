import argparse
import sys
from typing import Sequence

from app.cli.commands import cmd_audit, cmd_derive, cmd_eval, cmd_search, cmd_torsion
from app.cli.render import render
from app.cli.schemas import CommandResult
from app.config.logging_config import setup_logging
from app.config.settings import settings
from app.core.engine import DerivationEngine
from app.core.pipeline import AUDIT_CHECKS
from app.core.use_case import QuartetUseCase
from app.storages.quartet_storage import QuartetStorage
from app.utils.logger import DerivationLogger


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-n", type=int, default=settings.MAX_N, help="largest multiple n that may be derived")
    common.add_argument("--quiet", action="store_true", help="suppress the stage trace on stderr")

    parser = argparse.ArgumentParser(
        prog="python -m app",
        description="Parametric solutions of A^4 + B^4 = C^4 + D^4 from multiples of a point on an elliptic curve.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    derive = commands.add_parser("derive", parents=[common], help="derive the quartet of nP")
    derive.add_argument("--n", type=int, required=True)

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate the quartet of nP at (p, q)")
    evaluate.add_argument("--n", type=int, required=True)
    evaluate.add_argument("--p", type=int, required=True)
    evaluate.add_argument("--q", type=int, required=True)

    audit = commands.add_parser("audit", parents=[common], help="re-derive the reduction chain symbolically")
    audit.add_argument("--corrupt", choices=AUDIT_CHECKS, default=None, help=argparse.SUPPRESS)

    search = commands.add_parser("search", parents=[common], help="enumerate small equal sums of two fourth powers")
    search.add_argument("--limit", type=int, required=True)
    search.add_argument("--workers", type=int, default=settings.SEARCH_WORKERS)

    torsion = commands.add_parser("torsion", parents=[common], help="degree growth of X(nP), a non-torsion heuristic")
    torsion.add_argument("--bound", type=int, default=settings.TORSION_BOUND)
    return parser


def dispatch(args: argparse.Namespace, use_case: QuartetUseCase) -> CommandResult:
    if args.command == "derive":
        return cmd_derive(use_case, args.n)
    if args.command == "eval":
        return cmd_eval(use_case, args.n, args.p, args.q)
    if args.command == "audit":
        return cmd_audit(use_case, corrupt=args.corrupt)
    if args.command == "search":
        return cmd_search(use_case, args.limit, args.workers)
    return cmd_torsion(use_case, args.bound)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging()
    trace = DerivationLogger(log_dir=settings.LOG_DIR, persist=settings.SAVE_TRACE_LOG, quiet=args.quiet)
    use_case = QuartetUseCase(DerivationEngine(max_n=args.max_n, logger=trace), QuartetStorage())

    result = dispatch(args, use_case)
    output = render(result, args.format)
    if output:
        print(output)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if result.error and args.format == "text":
        print(f"error [{result.error.code}]: {result.error.message}", file=sys.stderr)
    return result.exit_code
