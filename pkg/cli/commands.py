"""
Command-line front end.

Exit codes: 0 success or consistent, 1 verification or oracle failure,
2 usage or parse error.
"""

import argparse
import logging
from typing import List, Optional

import sys
import os
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli.renderers import describe_verdict, render_elimination, render_rows
from controllers.classification_controller import ClassificationController
from data.models import CyclicQuotient, Stage
from services.basket import lcm_index, solve_gamma, verify_delta
from services.classify import elimination_report
from services.md_bound import md_bound, parse_discrepancy
from services.rr_core import a_value, b_value, c_contribution
from utils.config import AppConfig
from utils.errors import BasketFormatError, InvalidArgumentError
from utils.helpers import FileHelper, FormatHelper, ValidationHelper

logger = logging.getLogger(__name__)

fmt = FormatHelper.format_fraction


def cmd_contrib(args: argparse.Namespace) -> int:
    q = CyclicQuotient(args.r, args.b)
    text = (
        f"A = {fmt(a_value(q, args.i))}, "
        f"B = {fmt(b_value(q.r, args.i))}, "
        f"c = {fmt(c_contribution(q, args.i))}"
    )
    FileHelper.write_output(text, args.output)
    return AppConfig.EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    controller = ClassificationController()
    rows = controller.classify(Stage(args.stage))
    FileHelper.write_output(render_rows(rows, args.format), args.output)

    if not args.oracle:
        return AppConfig.EXIT_OK
    report = controller.check_oracle(args.r_max)
    if report.agrees:
        return AppConfig.EXIT_OK
    print(f"oracle over r <= {report.r_max} found {report.oracle_size} baskets", file=sys.stderr)
    for basket in report.missing:
        print(f"oracle only: {basket}", file=sys.stderr)
    for basket in report.unexpected:
        print(f"structured search only: {basket}", file=sys.stderr)
    return AppConfig.EXIT_FAILURE


def cmd_verify(args: argparse.Namespace) -> int:
    verdict = verify_delta(FileHelper.load_basket(args.path))
    FileHelper.write_output(describe_verdict(verdict), args.output)
    return AppConfig.EXIT_OK if verdict.consistent else AppConfig.EXIT_FAILURE


def cmd_index(args: argparse.Namespace) -> int:
    FileHelper.write_output(str(lcm_index(FileHelper.load_basket(args.path))), args.output)
    return AppConfig.EXIT_OK


def cmd_gamma(args: argparse.Namespace) -> int:
    result = solve_gamma(FileHelper.load_basket(args.path))
    if result.consistent:
        FileHelper.write_output(fmt(result.gamma), args.output)
        return AppConfig.EXIT_OK
    FileHelper.write_output(
        f"inconsistent at i={result.witness}: lhs {fmt(result.lhs)}, rhs {fmt(result.rhs)}",
        args.output,
    )
    return AppConfig.EXIT_FAILURE


def cmd_md_bound(args: argparse.Namespace) -> int:
    FileHelper.write_output(str(md_bound(parse_discrepancy(args.a))), args.output)
    return AppConfig.EXIT_OK


def cmd_explain(args: argparse.Namespace) -> int:
    report = elimination_report(args.type)
    FileHelper.write_output(render_elimination(args.type, report), args.output)
    return AppConfig.EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="FILE", help="write to FILE instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    parser = argparse.ArgumentParser(
        prog="crepant-index",
        description="Exact singular Riemann-Roch contributions and basket classification.",
    )
    parser.add_argument("--version", action="version",
                        version=f"{AppConfig.APP_NAME} {AppConfig.APP_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    contrib = commands.add_parser("contrib", parents=[common],
                                  help="A, B and c values of 1/r(1,-1,b) at i")
    contrib.add_argument("r", type=int)
    contrib.add_argument("b", type=int)
    contrib.add_argument("i", type=int)
    contrib.set_defaults(handler=cmd_contrib)

    classify = commands.add_parser("classify", parents=[common], help="emit Table 1 or Table 2")
    classify.add_argument("--stage", choices=[stage.value for stage in Stage],
                          default=Stage.JTILDE.value)
    classify.add_argument("--format", choices=AppConfig.OUTPUT_FORMATS,
                          default=AppConfig.DEFAULT_OUTPUT_FORMAT)
    classify.add_argument("--oracle", action="store_true",
                          help="cross-check Table 2 against brute force")
    classify.add_argument("--r-max", type=ValidationHelper.int_at_least(2),
                          default=AppConfig.DEFAULT_ORACLE_R_MAX)
    classify.set_defaults(handler=cmd_classify)

    for name, handler, text in (
        ("verify", cmd_verify, "check a basket file against the delta-difference equation"),
        ("index", cmd_index, "index r_P of a basket file"),
        ("gamma", cmd_gamma, "constant term of a basket file"),
    ):
        sub = commands.add_parser(name, parents=[common], help=text)
        sub.add_argument("path")
        sub.set_defaults(handler=handler)

    bound = commands.add_parser("md-bound", parents=[common],
                                help="index bound for a minimal discrepancy 0, 1/r or 2")
    bound.add_argument("a")
    bound.set_defaults(handler=cmd_md_bound)

    explain = commands.add_parser("explain", parents=[common],
                                  help="verdict of every b-assignment of a Table 1 type")
    explain.add_argument("--type", required=True)
    explain.set_defaults(handler=cmd_explain)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    AppConfig.configure_logging(args.verbose)
    logger.debug(f"Running {args.command}")
    try:
        return args.handler(args)
    except (InvalidArgumentError, BasketFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return AppConfig.EXIT_USAGE
