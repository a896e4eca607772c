"""
Command-line front end.

    pvring check FILE
    pvring prolong FILE --level d
    pvring chain FILE --depth D
    pvring counterexample
    pvring groebner FILE --ideal NAME
    pvring member FILE --ideal NAME --poly TEXT
    pvring eliminate FILE --ideal NAME --keep x,y
    pvring saturate FILE --ideal NAME --by TEXT
    pvring constants FILE --level d [--degree-bound B]

Reports go to stdout, diagnostics and traces to stderr. Exit codes: 0
success, 1 check failed, 2 parse or usage error, 3 budget exhausted,
4 unsupported input.
"""

import argparse
import logging
import sys
from dataclasses import replace
from typing import List, Optional, Sequence

from .. import __version__
from ..config import (
    DEFAULT_CLOSURE_ROUNDS,
    DEFAULT_DEGREE_BOUND,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_LEVEL,
    DEFAULT_MAX_REDUCTIONS,
    EngineConfig,
)
from ..exceptions import (
    BudgetExhaustedError,
    ExpressionSyntaxError,
    LevelError,
    NotProperIdealError,
    PVError,
    ProblemFileError,
    StabilityError,
    UnsupportedQuotientError,
)
from ..groebner import eliminate, groebner, member, saturate
from ..jetring import JetIdeal, jet_ring
from ..prolong import (
    build_chain,
    check_consistency,
    counterexample_two_derivations,
    find_constants,
)
from ..utils.records import Record, format_records
from .problem import ProblemFile, load_problem

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4


class _Session:
    """Parsed arguments plus the derived configuration and output helpers."""

    def __init__(self, args: argparse.Namespace, out):
        self.args = args
        self.out = out
        self.trace = (lambda line: print(line, file=sys.stderr)) if args.trace else None

    def config(self, problem: Optional[ProblemFile] = None) -> EngineConfig:
        config = problem.config if problem is not None else EngineConfig()
        overrides = {
            "max_reductions": self.args.max_reductions,
            "max_degree": self.args.max_degree,
            "max_level": self.args.max_level,
            "max_closure_rounds": self.args.closure_rounds,
            "trace": bool(self.args.trace),
        }
        return replace(config, **{k: v for k, v in overrides.items() if v is not None})

    def emit(self, text: str, records: List[Record]) -> None:
        self.out.write(format_records(records) if self.args.machine else text)


def _cmd_check(session: _Session, problem: ProblemFile) -> int:
    commutation = problem.dfield.check_commutation()
    integrability = problem.system.check_integrability()
    lines = [f"commutation: {commutation.pairs_checked} pairs, {'pass' if commutation.passed else 'fail'}"]
    records: List[Record] = [
        ("commutation.pairs", str(commutation.pairs_checked)),
        ("commutation.passed", "yes" if commutation.passed else "no"),
    ]
    for k, failure in enumerate(commutation.failures):
        text = (f"{failure.first}({failure.second}({failure.variable})) = {failure.first_after_second}, "
                f"{failure.second}({failure.first}({failure.variable})) = {failure.second_after_first}")
        lines.append("  " + text)
        records.append((f"commutation.failure.{k}", text))
    lines.append(f"integrability: {'pass' if integrability.passed else 'fail'}")
    for k, check in enumerate(integrability.checks):
        lines.append("  " + check.describe())
        records.append((f"integrability.{k}", check.describe()))
    for first, second in integrability.displayed_form_only:
        note = f"{first}, {second} satisfy only the uncorrected form sigma_i(A_j) = sigma_j(A_i) A_j"
        lines.append("  note: " + note)
        records.append(("integrability.displayed_form_only", f"{first}, {second}"))
    passed = commutation.passed and integrability.passed
    lines.append(f"result: {'pass' if passed else 'fail'}")
    records.append(("check.passed", "yes" if passed else "no"))
    session.emit("\n".join(lines) + "\n", records)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _cmd_prolong(session: _Session, problem: ProblemFile) -> int:
    config = session.config(problem)
    level = session.args.level
    if level < 0 or level >= config.max_level:
        raise LevelError(f"--level must be between 0 and {config.max_level - 1}")
    ring = jet_ring(problem.dfield, problem.system.n, level)
    a = JetIdeal.generate(ring, problem.seeds.get(level, []), budget=config.budget(), trace=session.trace)
    certificate = check_consistency(a, config, session.trace)
    text = f"a: {a.to_text()}\n" + certificate.to_text()
    session.emit(text, [("prolong.a", a.to_text())] + certificate.to_records())
    return EXIT_CHECK_FAILED if certificate.trivial else EXIT_OK


def _cmd_chain(session: _Session, problem: ProblemFile) -> int:
    config = session.config(problem)
    report = build_chain(problem.system, problem.seeds, session.args.depth, config, session.trace)
    session.emit(report.to_text(), report.to_records())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_counterexample(session: _Session, problem: Optional[ProblemFile]) -> int:
    certificate = counterexample_two_derivations()
    session.emit(certificate.to_text(), certificate.to_records())
    replayed = certificate.witness is not None and certificate.witness.replay()
    return EXIT_OK if certificate.trivial and replayed else EXIT_CHECK_FAILED


def _cmd_groebner(session: _Session, problem: ProblemFile) -> int:
    block = problem.ideal(session.args.ideal)
    basis = groebner(block.presentation, session.config(problem).budget(), session.trace)
    session.emit(basis.to_text() + "\n", [("groebner.basis", basis.to_text())])
    return EXIT_OK


def _cmd_member(session: _Session, problem: ProblemFile) -> int:
    block = problem.ideal(session.args.ideal)
    f = block.presentation.ring.parse(session.args.poly)
    found = member(f, block.presentation, session.config(problem).budget())
    session.emit(("yes" if found else "no") + "\n", [("member", "yes" if found else "no")])
    return EXIT_OK if found else EXIT_CHECK_FAILED


def _cmd_eliminate(session: _Session, problem: ProblemFile) -> int:
    block = problem.ideal(session.args.ideal)
    keep = [name.strip() for name in session.args.keep.split(",") if name.strip()]
    unknown = [name for name in keep if name not in block.variables]
    if unknown:
        raise ProblemFileError(f"--keep names unknown variables: {', '.join(unknown)}")
    result = eliminate(block.presentation, keep, session.config(problem).budget(), session.trace)
    session.emit(result.to_text() + "\n", [("eliminate.ideal", result.to_text())])
    return EXIT_OK


def _cmd_saturate(session: _Session, problem: ProblemFile) -> int:
    block = problem.ideal(session.args.ideal)
    f = block.presentation.ring.parse(session.args.by)
    config = session.config(problem)
    result = groebner(saturate(block.presentation, f, config.budget(), session.trace), config.budget())
    session.emit(result.to_text() + "\n", [("saturate.basis", result.to_text())])
    return EXIT_OK


def _cmd_constants(session: _Session, problem: ProblemFile) -> int:
    config = session.config(problem)
    bound = session.args.degree_bound
    if bound is None:
        bound = config.constants_degree_bound
    chain = build_chain(problem.system, problem.seeds, session.args.level, config, session.trace)
    if not chain.passed:
        session.emit(chain.to_text(), chain.to_records())
        return EXIT_CHECK_FAILED
    report = find_constants(chain.ideal(session.args.level), problem.system, bound, config=config)
    session.emit(report.to_text(), report.to_records())
    return EXIT_OK


COMMANDS = {
    "check": _cmd_check,
    "prolong": _cmd_prolong,
    "chain": _cmd_chain,
    "counterexample": _cmd_counterexample,
    "groebner": _cmd_groebner,
    "member": _cmd_member,
    "eliminate": _cmd_eliminate,
    "saturate": _cmd_saturate,
    "constants": _cmd_constants,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvring",
        description="Exact prolongation, closure and consistency checks for parameterized Picard-Vessiot rings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trace", action="store_true", help="stream Groebner reduction steps to stderr")
    common.add_argument("--machine", action="store_true", help="print the flat key = value report")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--max-reductions", type=int, default=None,
                        help=f"S-pair reductions per Groebner computation (default: {DEFAULT_MAX_REDUCTIONS})")
    common.add_argument("--max-degree", type=int, default=None,
                        help=f"degree cap for new basis elements (default: {DEFAULT_MAX_DEGREE})")
    common.add_argument("--max-level", type=int, default=None,
                        help=f"highest jet order D_max (default: {DEFAULT_MAX_LEVEL})")
    common.add_argument("--closure-rounds", type=int, default=None,
                        help=f"closure iterations before giving up (default: {DEFAULT_CLOSURE_ROUNDS})")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="field commutation and integrability")
    p.add_argument("file")

    p = sub.add_parser("prolong", parents=[common], help="prolong the seed ideal of one level")
    p.add_argument("file")
    p.add_argument("--level", type=int, required=True)

    p = sub.add_parser("chain", parents=[common], help="build and check the ideal chain")
    p.add_argument("file")
    p.add_argument("--depth", type=int, required=True)

    sub.add_parser("counterexample", parents=[common], help="the two-derivation counterexample")

    p = sub.add_parser("groebner", parents=[common], help="reduced Groebner basis of an [ideal] section")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("member", parents=[common], help="ideal membership")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)

    p = sub.add_parser("eliminate", parents=[common], help="elimination ideal")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--keep", required=True, help="comma-separated variables to keep")

    p = sub.add_parser("saturate", parents=[common], help="saturation by a polynomial")
    p.add_argument("file")
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True)

    p = sub.add_parser("constants", parents=[common], help="bounded constants search at one chain level")
    p.add_argument("file")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--degree-bound", type=int, default=None,
                   help=f"degree of the coefficient ansatz (default: {DEFAULT_DEGREE_BOUND})")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
        out: Report stream (default: sys.stdout)

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(name)s: %(message)s")
    session = _Session(args, out or sys.stdout)
    try:
        problem = load_problem(args.file) if hasattr(args, "file") else None
        return COMMANDS[args.command](session, problem)
    except (ProblemFileError, ExpressionSyntaxError, LevelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExhaustedError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except UnsupportedQuotientError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except StabilityError as exc:
        witness = exc.witness.to_text() if exc.witness is not None else "?"
        print(f"check failed: {exc} (witness {witness})", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (NotProperIdealError, PVError) as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
