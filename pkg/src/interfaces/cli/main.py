"""
Command-line front end.

Every command prints a single JSON document on stdout; logs go to stderr.
Exit codes: 0 success, 1 census mismatch or failed verification, 2 parse
error, 3 precondition violation, 4 internal check failure.
"""
import argparse
import json
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from src.application.census.runner import CensusRunner
from src.application.census.scanner import CensusLevel, CensusMode
from src.application.verification.suites import SUITES, run_verification
from src.interfaces import commands
from src.interfaces.models import (
    CanonicalizeRequest,
    ErrorResponse,
    EvalRequest,
    FlagRequest,
    FreudenthalRequest,
    StabilizerRequest,
    WitnessRequest,
)
from src.shared.config import settings
from src.shared.exceptions import InputParseError, Sp6FlagsError
from src.shared.logging import setup_logging

logger = logging.getLogger(__name__)

Outcome = Tuple[BaseModel, int]


def _csv(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _params(pairs: Optional[List[str]]) -> Dict[str, str]:
    params = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise InputParseError(f"Witness parameters are name=value, got {pair!r}")
        params[name.strip()] = value.strip()
    return params


def _run_eval(args: argparse.Namespace) -> Outcome:
    return commands.evaluate(EvalRequest(field=args.field, trivector=args.trivector)), 0


def _run_canonicalize(args: argparse.Namespace) -> Outcome:
    req = CanonicalizeRequest(field=args.field, y0=args.y0, v=_csv(args.v))
    return commands.canonicalize(req), 0


def _run_stabilizer(args: argparse.Namespace) -> Outcome:
    req = StabilizerRequest(field=args.field, trivector=args.trivector, extended=args.extended)
    return commands.stabilizer(req), 0


def _run_flag(args: argparse.Namespace) -> Outcome:
    req = FlagRequest(
        field=args.field, nf=_csv(args.nf), pattern=args.pattern, cross_check=not args.no_cross_check
    )
    return commands.flag(req), 0


def _run_freudenthal(args: argparse.Namespace) -> Outcome:
    req = FreudenthalRequest(
        field=args.field,
        nf=_csv(args.nf),
        pattern=args.pattern,
        cross_check=not args.no_cross_check,
        gamma=_csv(args.gamma) if args.gamma else None,
        seed=args.seed,
        samples=args.samples,
    )
    return commands.freudenthal(req), 0


def _run_witness(args: argparse.Namespace) -> Outcome:
    req = WitnessRequest(field=args.field, case=args.case, params=_params(args.param))
    report = commands.witness(req)
    return report, 0 if report.verified else 1


def _run_census(args: argparse.Namespace) -> Outcome:
    runner = CensusRunner(
        workers=args.workers,
        chunk_size=args.chunk_size,
        budget=settings.CENSUS_EXTENDED_BUDGET if args.extended_budget else None,
        sample_fraction=args.sample_fraction,
    )
    seed = settings.DEFAULT_SEED if args.seed is None else args.seed
    if CensusLevel(args.level) == CensusLevel.X:
        report = runner.count_x_fibers(args.p, seed)
    else:
        report = runner.count_v_fibers(args.p, CensusMode(args.mode), seed)
    return report, 0 if report.match else 1


def _run_verify(args: argparse.Namespace) -> Outcome:
    names = None if not args.suite or "all" in args.suite else args.suite
    report = run_verification(names, seed=args.seed, trials=args.trials)
    return report, 0 if report.passed else 1


def _add_nf(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--nf", required=True, help="Normal-form data y0,y1,y2,y3")
    sub.add_argument("--pattern", type=int, default=1, choices=(1, 2, 3), help="Canonical v-pattern m")
    sub.add_argument("--no-cross-check", action="store_true", help="Skip the stabilizer quaternion check")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sp6flags", description="Flags and orbits of Sp6 on the 14+6 representation")
    parser.add_argument("--field", default="Q", help="Field spec: Q, Q(sqrt:D) or F:p")
    parser.add_argument("--output", type=Path, help="Also write the JSON report to this file")
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("eval", help="Evaluate f, f1, f2 and semistability")
    sub.add_argument("--trivector", required=True, help='e.g. "-1*e123 - 2*e456 + 1*e156"')
    sub.set_defaults(handler=_run_eval)

    sub = subparsers.add_parser("canonicalize", help="Reduce v at the split point")
    sub.add_argument("--y0", required=True, help="Split point -e123 - y0 e456")
    sub.add_argument("--v", required=True, help="Six comma-separated scalars")
    sub.set_defaults(handler=_run_canonicalize)

    sub = subparsers.add_parser("stabilizer", help="Lie stabilizer, structure constants and Killing form")
    sub.add_argument("--trivector", required=True)
    sub.add_argument("--extended", action="store_true", help="Also solve in gsp6 + gl1 + gl1")
    sub.set_defaults(handler=_run_stabilizer)

    sub = subparsers.add_parser("flag", help="Flag descriptor of a normal form")
    _add_nf(sub)
    sub.set_defaults(handler=_run_flag)

    sub = subparsers.add_parser("freudenthal", help="Freudenthal trace forms of a flag")
    _add_nf(sub)
    sub.add_argument("--gamma", help="Comma-separated Gamma for the Freudenthal tower")
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--samples", type=int, default=5)
    sub.set_defaults(handler=_run_freudenthal)

    sub = subparsers.add_parser("witness", help="Build and verify an explicit group element")
    sub.add_argument("--case", required=True, help="Witness case; thmCD_g and spPV_chain are aliases")
    sub.add_argument("--param", action="append", help="name=value; matrices as 1,2;0,1")
    sub.set_defaults(handler=_run_witness)

    sub = subparsers.add_parser("census", help="Exhaustive fiber counts over F_p")
    sub.add_argument("--p", type=int, required=True)
    sub.add_argument("--level", choices=[c.value for c in CensusLevel], default=CensusLevel.X.value)
    sub.add_argument("--mode", choices=[c.value for c in CensusMode], default=CensusMode.FORMULA.value)
    sub.add_argument("--workers", type=int, default=None)
    sub.add_argument("--chunk-size", type=int, default=None)
    sub.add_argument("--sample-fraction", type=float, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--extended-budget", action="store_true", help="Allow up to CENSUS_EXTENDED_BUDGET points")
    sub.set_defaults(handler=_run_census)

    sub = subparsers.add_parser("verify", help="Run the randomized property suites")
    sub.add_argument("--suite", action="append", choices=["all"] + list(SUITES))
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--trials", type=int, default=None)
    sub.set_defaults(handler=_run_verify)
    return parser


def _emit(model: BaseModel, output: Optional[Path]) -> None:
    text = json.dumps(model.model_dump(mode="json"), indent=2)
    print(text)
    if output is not None:
        output.write_text(text + "\n", encoding="utf-8")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse ``argv``, dispatch the command and return its exit code."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    handler: Callable[[argparse.Namespace], Any] = args.handler
    logger.info(f"Running {args.command} over {args.field}")
    try:
        model, code = handler(args)
    except ValidationError as e:
        error = InputParseError(f"Invalid arguments: {e.errors()[0]['msg']}")
        model, code = ErrorResponse(error=error.message, type=type(error).__name__), error.exit_code
    except Sp6FlagsError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        model, code = ErrorResponse(error=e.message, type=type(e).__name__), e.exit_code
    _emit(model, args.output)
    return code
