"""Command line interface.

Exit codes: 0 solved / valid, 1 input or I/O error, 2 infeasible,
3 unbounded, 4 candidate rejected or self-check failed.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import io
from .core import Status, check_solution, setopt_solve
from .errors import ContractError, InputError
from .relaxation import boundedness_check, check_feasible, extract_presolution, upper_image

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2
EXIT_UNBOUNDED = 3
EXIT_INVALID = 4

_STATUS_EXIT = {Status.SOLVED: EXIT_OK, Status.INFEASIBLE: EXIT_INFEASIBLE,
                Status.UNBOUNDED: EXIT_UNBOUNDED}


def _write(text: str, path) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = io.load_problem(args.problem)
    on_lp = None
    if args.log_lps:
        def on_lp(lp, out):
            print(io.lp_log_line(lp, out), file=sys.stderr)
    report = setopt_solve(inst, skip_rule=not args.no_skip_rule,
                          gc_values=True if args.gc else None,
                          verify=args.verify, on_lp=on_lp)
    _write(io.dumps(io.report_to_dict(report)), args.out)
    if report.verified is False:
        return EXIT_INVALID
    return _STATUS_EXIT[report.status]


def cmd_relax(args) -> int:
    inst = io.load_problem(args.problem)
    if not check_feasible(inst):
        _write(io.dumps(io.relaxation_to_dict(Status.INFEASIBLE.value)), args.out)
        return EXIT_INFEASIBLE
    ui = upper_image(inst)
    d = boundedness_check(ui, inst.cone)
    if d is not None:
        _write(io.dumps(io.relaxation_to_dict(Status.UNBOUNDED.value, ui, direction=d)), args.out)
        return EXIT_UNBOUNDED
    pre = extract_presolution(inst, ui)
    _write(io.dumps(io.relaxation_to_dict(Status.SOLVED.value, ui, pre)), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    inst = io.load_problem(args.problem)
    with open(args.candidate, encoding="utf-8") as fh:
        candidate = io.candidate_from_json(fh.read(), inst.n)
    if not check_feasible(inst):
        print("problem is infeasible", file=sys.stderr)
        return EXIT_INFEASIBLE
    if boundedness_check(upper_image(inst), inst.cone) is not None:
        print("problem is unbounded", file=sys.stderr)
        return EXIT_UNBOUNDED
    verdict = check_solution(inst, candidate)
    _write(io.dumps(io.verdict_to_dict(verdict)), args.out)
    return EXIT_OK if verdict.is_solution else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="setopt", description="Exact polyhedral set optimization.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run both phases and print a solution report")
    p.add_argument("problem")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--no-skip-rule", action="store_true", help="minimize every pre-solution point")
    p.add_argument("--gc", action="store_true", help="assert F(x) = F(x) + C and use the reduced LPs")
    p.add_argument("--verify", action="store_true", help="re-check minimality and attainment")
    p.add_argument("--log-lps", action="store_true", help="JSON line per solved LP on stderr")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("relax", help="phase 1 only: upper image and pre-solution")
    p.add_argument("problem")
    p.add_argument("--out")
    p.set_defaults(func=cmd_relax)

    p = sub.add_parser("check", help="test whether candidate points form a solution")
    p.add_argument("problem")
    p.add_argument("--candidate", required=True, help="JSON array of x-vectors (or a report)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, ContractError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
