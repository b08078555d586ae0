"""Command-line verifier.

Exit codes: 0 when every check passes, 1 when some check fails, 2 for
invalid input (bad flags, malformed or invariant-violating pair files).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import suites
from .report import VerificationReport
from .sympair import FAMILIES, PairInvariantError, catalog, load_pair


class InputError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED, help="RNG seed (default %(default)s)")
    p.add_argument("--timing", action="store_true",
                   help="record wall-clock runtime_ms (otherwise 0, keeping output byte-stable)")


def _add_suite_args(sub) -> None:
    p = sub.add_parser("sl2", help="graded sl2 defect, duality and delta identity")
    p.add_argument("--max-lambda", type=int, default=8)
    p.add_argument("--trials", type=int, default=100)
    _add_common(p)

    p = sub.add_parser("symplectic", help="coisotropy properties on random subspaces")
    p.add_argument("--dim", type=int, default=8, help="even ambient dimension 2m")
    p.add_argument("--trials", type=int, default=500)
    _add_common(p)

    p = sub.add_parser("pair", help="one symmetric pair from the catalog or a JSON file")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=sorted(FAMILIES))
    src.add_argument("--input", type=Path, help="JSON pair description")
    p.add_argument("--size", type=int, help="size parameter for --family")
    _add_common(p)

    p = sub.add_parser("keylemma", help="R_A, L_ij and f over a Jordan block")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", type=int, action="append", required=True, dest="primes")
    _add_common(p)

    p = sub.add_parser("all", help="every suite in the fixed order sl2, symplectic, pair, keylemma")
    _add_common(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coisotropic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run a suite and print its JSON report")
    vsub = verify.add_subparsers(dest="suite", required=True)
    _add_suite_args(vsub)

    rep = sub.add_parser("report", help="run a suite (or convert a saved report) and write it to a file")
    rep.add_argument("--format", choices=("json", "md"), required=True)
    rep.add_argument("--out", type=Path, required=True)
    rep.add_argument("--suite", choices=("sl2", "symplectic", "keylemma", "all"), default="all")
    rep.add_argument("--from", dest="source", type=Path, help="existing JSON report to render instead of running")
    _add_common(rep)
    return parser


def _run_pair(args) -> VerificationReport:
    if args.input is not None:
        try:
            data = json.loads(args.input.read_text())
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"invariant 'schema' violated: invalid JSON: {exc}") from None
        pair, reps = load_pair(data)
        return suites.pair_suite(pair, reps if "nilpotents" in data else None, seed=args.seed)
    if args.size is None:
        raise InputError("--family needs --size")
    return suites.pair_suite(catalog(args.family, args.size), seed=args.seed)


def run_suite(args) -> VerificationReport:
    name = args.suite
    if name == "sl2":
        max_lambda, trials = getattr(args, "max_lambda", 8), getattr(args, "trials", 100)
        if max_lambda < 0 or trials < 0:
            raise InputError("--max-lambda and --trials must be nonnegative")
        return suites.sl2_suite(max_lambda, trials, args.seed)
    if name == "symplectic":
        dim, trials = getattr(args, "dim", 8), getattr(args, "trials", 500)
        if dim < 2 or dim % 2 or trials < 0:
            raise InputError("--dim must be even and positive, --trials nonnegative")
        return suites.symplectic_suite(dim, trials, args.seed)
    if name == "pair":
        return _run_pair(args)
    if name == "keylemma":
        n, primes = getattr(args, "n", 2), getattr(args, "primes", [3, 5, 7])
        if not 1 <= n <= 4:
            raise InputError("--n must be between 1 and 4")
        return suites.keylemma_suite(n, primes, args.seed)
    return suites.all_suite(args.seed)


def _timed(fn, args) -> VerificationReport:
    start = time.perf_counter()
    report = fn(args)
    elapsed = int((time.perf_counter() - start) * 1000)
    if args.timing:
        report.runtime_ms = elapsed
    return report


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = _timed(run_suite, args)
            sys.stdout.write(report.to_json())
            return report.exit_code
        if args.source is not None:
            try:
                report = VerificationReport.from_json(args.source.read_text())
            except (OSError, ValueError, KeyError) as exc:
                raise InputError(f"cannot load report {args.source}: {exc}") from None
        else:
            report = _timed(run_suite, args)
        text = report.to_json() if args.format == "json" else report.to_markdown()
        try:
            args.out.write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc}") from None
        return report.exit_code
    except (InputError, PairInvariantError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
