# SPDX-FileCopyrightText: 2024–2025 Mattia Rubino
# SPDX-License-Identifier: AGPL-3.0-or-later

"""
``wizardmatroid`` command line.

Every subcommand reads MatrixDocuments, calls the library and prints a table
or, with ``--json``, canonical JSON. Exit codes: 0 success, 1 failed check,
2 bad input, 3 violated invariant, 4 unsupported ring.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional

from wizardmatroid.utils.documents import read_matrix_document
from wizardmatroid.utils.errors.errors import WizardMatroidError
from wizardmatroid.utils.settings import (
    DEFAULT_RADIUS,
    DEFAULT_SAMPLE_COUNT,
    DEFAULT_SEED,
    LOG_LEVELS,
    default_log_level,
)
from wizardmatroid.wizard_cli import report
from wizardmatroid.wizard_matroid import WizardMatroid

logger = logging.getLogger(__name__)

_wizard = WizardMatroid()


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def _matroid_command(args: argparse.Namespace) -> report.Report:
    doc = read_matrix_document(args.document)
    return report.matroid_report(_wizard.matroid(doc.matrix), doc.index_base)


def _valuation_command(args: argparse.Namespace) -> report.Report:
    doc = read_matrix_document(args.document)
    vm = _wizard.lindstrom_valuation(doc.matrix, threads=args.threads)
    return report.valuation_report(vm, doc.index_base)


def _matrix_command(operation: str):
    def command(args: argparse.Namespace) -> report.Report:
        doc = read_matrix_document(args.document)
        out = getattr(_wizard, operation)(doc.matrix)
        return report.matrix_report(out, doc.index_base)

    return command


def _flock_slice_command(args: argparse.Namespace) -> report.Report:
    return report.slice_report(_wizard.flock_slice(args.document, args.alpha))


def _flock_check_command(args: argparse.Namespace) -> report.Report:
    axioms, consistency = _wizard.check_flock(args.document, args.radius, args.threads)
    return report.flock_check_report(axioms, consistency)


def _sample_verify_command(args: argparse.Namespace) -> report.Report:
    passed = _wizard.sample_verify(args.module, args.annihilator, args.count, args.seed)
    return report.sample_report(passed, args.count, args.seed)


def _examples_list_command(args: argparse.Namespace) -> report.Report:
    return report.examples_list_report(_wizard.list_examples(args.data_dir))


def _examples_run_command(args: argparse.Namespace) -> report.Report:
    return report.example_report(_wizard.run_example(args.example_id, args.threads, args.data_dir))


def _check_command(args: argparse.Namespace) -> report.Report:
    return report.module_report(_wizard.check_module(args.document, args.radius, args.threads))


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _positive_int(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {raw}")
    return value


def _nonnegative_int(raw: str) -> int:
    value = int(raw)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {raw}")
    return value


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print canonical JSON instead of a table.")
    common.add_argument(
        "--threads",
        type=_positive_int,
        default=None,
        help="Worker count (default: WIZARDMATROID_THREADS or 1). Results do not depend on it.",
    )
    common.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        type=str.upper,
        default=None,
        help="Logging level (default: WIZARDMATROID_LOG_LEVEL or WARNING).",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="wizardmatroid",
        description="Matroids, Lindström valuations and flocks of modules over endomorphism rings.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("matroid", parents=[common], help="Row matroid of a module.")
    p.add_argument("document")
    p.set_defaults(func=_matroid_command)

    p = commands.add_parser("valuation", help="Matroid valuations.")
    kinds = p.add_subparsers(dest="kind", required=True)
    q = kinds.add_parser("lindstrom", parents=[common], help="Lindström valuation v(det A[B]).")
    q.add_argument("document")
    q.set_defaults(func=_valuation_command)

    for name, operation, help_text in (
        ("dual", "dual_module", "Dual module, whose matroid is the dual matroid."),
        ("saturate", "saturate", "Saturation NQ ∩ 𝔈ⁿ."),
        ("perp", "perp", "Orthogonal complement."),
    ):
        p = commands.add_parser(name, parents=[common], help=help_text)
        p.add_argument("document")
        p.set_defaults(func=_matrix_command(operation))

    p = commands.add_parser("flock", help="Linear flocks.")
    actions = p.add_subparsers(dest="action", required=True)
    q = actions.add_parser("slice", parents=[common], help="The subspace V_alpha.")
    q.add_argument("document")
    q.add_argument("--alpha", required=True, help="Comma-separated integers, one per row, e.g. 0,0,0,1.")
    q.set_defaults(func=_flock_slice_command)
    q = actions.add_parser("check", parents=[common], help="Flock axioms and slice/valuation agreement on a box.")
    q.add_argument("document")
    q.add_argument("--radius", type=_nonnegative_int, default=DEFAULT_RADIUS)
    q.set_defaults(func=_flock_check_command)

    p = commands.add_parser("sample", help="Group points.")
    actions = p.add_subparsers(dest="action", required=True)
    q = actions.add_parser("verify", parents=[common], help="Check that an annihilator kills sampled points.")
    q.add_argument("--module", required=True, help="Right module whose points are sampled.")
    q.add_argument("--annihilator", default=None, help="Left module (default: perp of --module).")
    q.add_argument("--count", type=_nonnegative_int, default=DEFAULT_SAMPLE_COUNT)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.set_defaults(func=_sample_verify_command)

    p = commands.add_parser("examples", help="Published examples.")
    actions = p.add_subparsers(dest="action", required=True)
    q = actions.add_parser("list", parents=[common], help="Registered example ids.")
    q.add_argument("--data-dir", default=None)
    q.set_defaults(func=_examples_list_command)
    q = actions.add_parser("run", parents=[common], help="Recompute every fact of an example.")
    q.add_argument("example_id")
    q.add_argument("--data-dir", default=None)
    q.set_defaults(func=_examples_run_command)

    p = commands.add_parser("check", parents=[common], help="Full invariant suite on a right module.")
    p.add_argument("document")
    p.add_argument("--radius", type=_nonnegative_int, default=DEFAULT_RADIUS)
    p.set_defaults(func=_check_command)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Parses ``argv``, runs the command, prints its report and returns the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level or default_log_level(), format="%(levelname)s %(name)s: %(message)s")
    try:
        result = args.func(args)
    except WizardMatroidError as e:
        code = getattr(e, "code", type(e).__name__)
        print(f"error [{code}]: {e}", file=sys.stderr)
        return e.exit_code
    print(result.render(args.json))
    if not result.ok:
        logger.info(f"{args.command}: checks failed")
        return 1
    return 0


def main() -> None:
    sys.exit(run())
