"""Command-line entry point: ``riesz-roots {energy,coeffs,modified,verify}``.

stdout carries exactly one JSON document; logging goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import energy, numeric, verify
from .errors import RieszError

log = logging.getLogger("riesz_roots")

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3
DECIMAL_PLACES = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational_str(q) -> str:
    """Lowest-terms "p/q"; integers drop the denominator ("32", "0")."""
    return str(Fraction(q))


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _decimal(q: Fraction, places: int = DECIMAL_PLACES) -> str:
    return numeric.HighPrecisionReal.from_rational(q, places).to_decimal_string()


def _numeric_check(exact: Fraction, approx: numeric.HighPrecisionReal, d: int) -> tuple[dict, bool]:
    bound = abs(approx.value - exact) + approx.radius
    tol = Fraction(1, 10 ** (d - numeric.GUARD_DIGITS))
    report = {"value": approx.to_decimal_string(), "abs_diff_bound": f"{float(bound):.3e}"}
    return report, approx.contains(exact) and bound <= tol


def _check_digits(d):
    if d is not None and d < 2 * numeric.GUARD_DIGITS:
        raise UsageError(f"--numeric-digits must be >= {2 * numeric.GUARD_DIGITS}")


def cmd_energy(args) -> tuple[dict, int]:
    if args.s == 0 or args.s % 2:
        raise UsageError("s must be a nonzero even integer")
    if args.n < 2:
        raise UsageError("n must be >= 2")
    _check_digits(args.numeric_digits)
    exact = energy.L_exact(args.s, args.n)
    out = {"s": args.s, "n": args.n, "exact": rational_str(exact), "decimal": _decimal(exact)}
    code = EXIT_OK
    if args.numeric_digits is not None:
        approx = numeric.L_direct(args.s, args.n, args.numeric_digits)
        out["numeric_check"], ok = _numeric_check(exact, approx, args.numeric_digits)
        code = EXIT_OK if ok else EXIT_MISMATCH
    return out, code


_METHODS = {
    "ledger": energy.beta_coeffs,
    "bernoulli": energy.beta_via_bernoulli,
    "expansion": energy.beta_via_expansion,
}


def cmd_coeffs(args) -> tuple[dict, int]:
    if not 1 <= args.m <= 8:
        raise UsageError("m must be in 1..8")
    results = {name: fn(args.m).beta for name, fn in _METHODS.items()}
    agree = len(set(results.values())) == 1
    if not agree:
        log.error("coefficient methods disagree for m=%d", args.m)
    out = {"m": args.m, "beta": [rational_str(b) for b in results[args.method]], "methods_agree": agree}
    return out, EXIT_OK if agree else EXIT_MISMATCH


def cmd_modified(args) -> tuple[dict, int]:
    if args.m < 1:
        raise UsageError("m must be >= 1")
    if args.n < 2:
        raise UsageError("n must be >= 2")
    if not 0 < args.r < 1:
        raise UsageError("r must lie strictly between 0 and 1")
    _check_digits(args.numeric_digits)
    exact = energy.M_closed(args.m, args.n, args.r)
    out = {
        "m": args.m,
        "n": args.n,
        "r": rational_str(args.r),
        "exact": rational_str(exact),
        "decimal": _decimal(exact),
    }
    code = EXIT_OK
    if args.numeric_digits is not None:
        approx = numeric.M_direct(2 * args.m, args.n, args.r, args.numeric_digits)
        out["numeric_check"], ok = _numeric_check(exact, approx, args.numeric_digits)
        code = EXIT_OK if ok else EXIT_MISMATCH
    return out, code


def cmd_verify(args) -> tuple[dict, int]:
    if args.max_m < 1:
        raise UsageError("--max-m must be >= 1")
    if args.digits < 2 * numeric.GUARD_DIGITS:
        raise UsageError(f"--digits must be >= {2 * numeric.GUARD_DIGITS}")
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    opt = verify.Options(max_m=args.max_m, digits=args.digits, seed=args.seed)
    checks = verify.run_suites(names, opt)
    failed = [c for c in checks if not c.passed]
    for c in failed:
        log.error("FAIL %s/%s", c.suite, c.id)
    log.info("%d checks, %d failed", len(checks), len(failed))
    out = {
        "suite": args.suite,
        "seed": args.seed,
        "passed": not failed,
        "checks": [c.to_json() for c in checks],
    }
    return out, EXIT_OK if not failed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="riesz-roots", description="Exact Riesz energies of roots of unity for even s.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("energy", help="exact L_s(N)")
    e.add_argument("--s", type=int, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--numeric-digits", type=int)
    e.set_defaults(func=cmd_energy)

    c = sub.add_parser("coeffs", help="beta coefficients of L_{2m}(N)")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--method", choices=sorted(_METHODS), default="ledger")
    c.set_defaults(func=cmd_coeffs)

    mo = sub.add_parser("modified", help="exact M_{2m}(N; r)")
    mo.add_argument("--m", type=int, required=True)
    mo.add_argument("--n", type=int, required=True)
    mo.add_argument("--r", type=_parse_rational, required=True)
    mo.add_argument("--numeric-digits", type=int)
    mo.set_defaults(func=cmd_modified)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    v.add_argument("--max-m", type=int, default=6)
    v.add_argument("--digits", type=int, default=50)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            log.setLevel(logging.INFO)
        out, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RieszError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
