"""Command-line front end for the toolkit.

Exit codes: 0 success, 1 usage error, 2 precondition or range failure,
3 a runtime bound or invariant check failed (the verification signal).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import fixtrig, floatrepro, oracle, verify
from .errors import PreconditionViolation, VerificationFailure
from .exact import parse_rational, rat_str, to_decimal
from .fixpoint import FixFormat

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFICATION = 3


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 in this tool, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _format(text: str) -> FixFormat:
    try:
        return FixFormat.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trigcheck",
                     description="Exact and fix-point trig computations "
                                 "with runtime-checked error bounds.")
    parser.add_argument("--config", metavar="FILE",
                        help="flat key=value file supplying subcommand defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="approximate pi by the alternating series")
    p.add_argument("--eps", type=_rational, required=True)
    p.add_argument("--json", action="store_true")

    for trig in ("cos", "sin"):
        p = sub.add_parser(trig, help=f"exact-arithmetic {trig}")
        p.add_argument("--x", type=_rational, required=True)
        p.add_argument("--eps", type=_rational, required=True)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--unbounded", action="store_true",
                          help="plain truncated series, any argument size")
        mode.add_argument("--zerone", action="store_true",
                          help="range-restricted variant for |x| <= 1")
        p.add_argument("--json", action="store_true")

    for trig in ("fixcos", "fixsin"):
        p = sub.add_parser(trig, help=f"fix-point {trig[3:]} with checked bounds")
        p.add_argument("--format", type=_format, required=True,
                       metavar="1/k:[inf,sup]")
        p.add_argument("--x", type=_rational, required=True)
        p.add_argument("--eps", type=_rational, required=True)
        p.add_argument("--trace", metavar="OUT",
                       help="write the paired trace (.csv, or .json for the mirror)")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("repro-table1", help="binary32 cosine scan")
    p.add_argument("--min", type=floatrepro.f32, default=floatrepro.f32("0"))
    p.add_argument("--max", type=floatrepro.f32, default=floatrepro.f32("30"))
    p.add_argument("--step", type=floatrepro.f32, default=floatrepro.f32("0.05"))
    p.add_argument("--eps", type=floatrepro.f32, default=floatrepro.f32("1e-6"))
    p.add_argument("--cap", type=int, default=None,
                   help=f"iteration cap (default {floatrepro.DEFAULT_ITERATION_CAP}, "
                        f"env {floatrepro.ITERATION_CAP_ENV} overrides)")
    p.add_argument("--csv", metavar="OUT", help="also write rows as CSV")

    p = sub.add_parser("golden", help="decimal golden value from the exact series")
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--eps", type=_rational, required=True)
    p.add_argument("--digits", type=int, required=True)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("--suite", choices=sorted(verify.SUITES), required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _apply_config(argv: list[str]) -> list[str]:
    """Inject key=value pairs from --config FILE as defaults after the subcommand."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    if at + 1 >= len(argv):
        return argv
    path = argv[at + 1]
    rest = argv[:at] + argv[at + 2:]
    if not rest:
        return rest
    extra: list[str] = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            extra.extend([f"--{key.strip()}", value.strip()])
    # defaults go right after the subcommand so explicit flags win
    return rest[:1] + extra + rest[1:]


def _emit_result(result, as_json: bool) -> None:
    payload = result.as_dict()
    if as_json:
        print(json.dumps(payload, sort_keys=True))
        return
    for key, value in payload.items():
        print(f"{key} = {value}")


def _run_oracle(args) -> int:
    if args.command == "pi":
        _emit_result(oracle.pi_leibniz(args.eps), args.json)
        return EXIT_OK
    if args.unbounded:
        fn = oracle.cos_unbounded if args.command == "cos" else oracle.sin_unbounded
        value = fn(args.x, args.eps)
        if args.json:
            print(json.dumps({"value": rat_str(value),
                              "decimal": to_decimal(value, 12)}, sort_keys=True))
        else:
            print(f"value = {rat_str(value)}")
            print(f"decimal = {to_decimal(value, 12)}")
        return EXIT_OK
    if args.zerone:
        fn = oracle.cos_zerone if args.command == "cos" else oracle.sin_zerone
    else:
        fn = oracle.cos_taylor if args.command == "cos" else oracle.sin_taylor
    _emit_result(fn(args.x, args.eps), args.json)
    return EXIT_OK


def _run_fixpoint(args) -> int:
    fmt: FixFormat = args.format
    x = fmt.exact(args.x)
    eps = fmt.exact(args.eps)
    if args.trace:
        trace = (fixtrig.paired_trace_cos if args.command == "fixcos"
                 else fixtrig.paired_trace_sin)(x, eps)
        result = trace.result
        if args.trace.endswith(".json"):
            with open(args.trace, "w", encoding="utf-8") as handle:
                json.dump(fixtrig.trace_to_json_obj(trace.records), handle,
                          sort_keys=True, indent=2)
        else:
            with open(args.trace, "w", encoding="utf-8", newline="") as handle:
                handle.write(fixtrig.trace_to_csv(trace.records))
        _emit_result(result, args.json)
        if not args.json:
            print(f"trace = {len(trace.records)} records -> {args.trace}")
        return EXIT_OK
    runner = fixtrig.cos_fixpoint if args.command == "fixcos" else fixtrig.sin_fixpoint
    _emit_result(runner(x, eps), args.json)
    return EXIT_OK


def _run_scan(args) -> int:
    rows = floatrepro.scan_table(args.min, args.max, args.step, args.eps,
                                 cap=args.cap)
    lines = [f"{float(x):e}  {float(value):e}" for x, value in rows]
    print("\n".join(lines))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write("x,value\n")
            for x, value in rows:
                handle.write(f"{float(x):e},{float(value):e}\n")
    return EXIT_OK


def _run_verify(args) -> int:
    suite_fn = verify.SUITES[args.suite]
    kwargs = {"seed": args.seed}
    if args.samples is not None:
        kwargs["samples"] = args.samples
    report = suite_fn(**kwargs)
    print(report.summary())
    for label in report.failures[:50]:
        print(f"  FAIL {label}")
    return EXIT_OK if report.ok() else EXIT_VERIFICATION


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        argv = _apply_config(argv)
    except OSError as exc:
        print(f"trigcheck: cannot read config: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)
    try:
        code = None
        if args.command in ("pi", "cos", "sin"):
            code = _run_oracle(args)
        elif args.command in ("fixcos", "fixsin"):
            code = _run_fixpoint(args)
        elif args.command == "repro-table1":
            code = _run_scan(args)
        elif args.command == "golden":
            print(to_decimal(oracle.cos_unbounded(args.x, args.eps), args.digits))
            code = EXIT_OK
        elif args.command == "verify":
            code = _run_verify(args)
        if code is not None:
            sys.stdout.flush()
            return code
    except VerificationFailure as exc:
        print(f"trigcheck: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (PreconditionViolation, ArithmeticError, ValueError) as exc:
        print(f"trigcheck: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BrokenPipeError:
        # the consumer closed the pipe (e.g. | head); exit quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
