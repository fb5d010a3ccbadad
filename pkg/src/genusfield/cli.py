"""genusfield command line: compute, verify and sweep.

Exit codes: 0 ok, 1 internal error, 2 invalid input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

from .errors import DependentGenerators, InvalidInput, VerificationError
from .genus import compute
from .gf import is_prime, prime_power
from .polyring import DEFAULT_SEED
from .serialize import dumps, load_spec, report_from_dict
from .sweep import kummer_specs, nonkummer_specs, run_sweep, summarize
from .verify import all_passed, run_checks

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_FAILED = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genusfield",
        description="Genus and extended genus fields of elementary abelian l-extensions of F_q(T).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", metavar="PATH", help="spec JSON file ('-' for stdin)")
        src.add_argument("--inline", metavar="JSON", help="spec JSON given on the command line")
        p.add_argument("--format", choices=("text", "json"), default=default_format)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for polynomial factorization")
        p.add_argument("--reduce", action="store_true", help="replace dependent generators by a basis")

    p_compute = sub.add_parser("compute", help="compute K_ge and K_gex")
    common(p_compute, "text")

    p_verify = sub.add_parser("verify", help="run the independent checks")
    common(p_verify, "json")
    p_verify.add_argument("--report", metavar="PATH", help="check this report JSON instead of a fresh computation")
    p_verify.add_argument("--max-r", type=int, default=4, help="prime-support bound for the maximality enumeration")

    p_sweep = sub.add_parser("sweep", help="exhaustive compute+verify over small specs")
    p_sweep.add_argument("--q", type=_int_list, default=[7], metavar="LIST")
    p_sweep.add_argument("--l", type=_int_list, default=[3], metavar="LIST")
    p_sweep.add_argument("--max-deg", type=int, default=2, help="max degree of an irreducible factor")
    p_sweep.add_argument("--max-m", type=int, default=2, help="max number of generators (characters)")
    p_sweep.add_argument("--max-total-deg", type=int, default=4, help="max total degree of the D_j (Kummer)")
    p_sweep.add_argument("--max-r", type=int, default=4, help="max number of ramified primes")
    p_sweep.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes (output order is unaffected)")
    p_sweep.add_argument("--format", choices=("json",), default="json")
    return parser


def _read_spec(args):
    if args.inline is not None:
        text = args.inline
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {args.input}: {exc.strerror}") from None
    return load_spec(text, reduce=args.reduce, seed=args.seed)


def cmd_compute(args, out) -> int:
    spec = _read_spec(args)
    report = compute(spec)
    if args.format == "json":
        out.write(dumps(report.to_dict()) + "\n")
    else:
        out.write(report.render_text() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    spec = _read_spec(args)
    report = None
    if args.report:
        try:
            with open(args.report, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidInput(f"cannot load report {args.report}: {exc}") from None
        try:
            report = report_from_dict(data, spec)
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed report: missing or bad field {exc}") from None
    checks = run_checks(spec, report, max_r=args.max_r)
    for c in checks:
        if args.format == "json":
            out.write(dumps(c.to_dict()) + "\n")
        else:
            status = "skipped" if c.skipped else "pass" if c.passed else "FAIL"
            extra = f" ({c.detail})" if c.detail else ""
            wit = f" witness={c.witness}" if not c.passed else ""
            out.write(f"{status:7} {c.name}{extra}{wit}\n")
    return EXIT_OK if all_passed(checks) else EXIT_FAILED


def sweep_specs(qs, ls, max_deg, max_m, max_total_deg, max_r, seed=DEFAULT_SEED, skipped=None):
    """All specs for the (q, l) grid in deterministic order."""
    for q in qs:
        try:
            p, _ = prime_power(q)
        except InvalidInput:
            raise InvalidInput(f"q = {q} is not a prime power") from None
        for l in ls:
            if not is_prime(l):
                raise InvalidInput(f"l = {l} is not prime")
            if l == p:
                if skipped is not None:
                    skipped.append({"q": q, "l": l, "reason": "wild (l = p)"})
                continue
            if (q - 1) % l == 0:
                yield from kummer_specs(q, l, max_deg, max_m, max_total_deg, max_r, seed)
            else:
                yield from nonkummer_specs(q, l, max_deg, max_r, max_m)


def cmd_sweep(args, out) -> int:
    for name in ("max_deg", "max_m", "max_total_deg", "max_r"):
        if getattr(args, name) < 0:
            raise InvalidInput(f"--{name.replace('_', '-')} must be >= 0")
    skipped: list = []
    specs = list(
        sweep_specs(args.q, args.l, args.max_deg, args.max_m, args.max_total_deg, args.max_r, args.seed, skipped)
    )
    lines = []
    for i, line in run_sweep(specs, args.jobs):
        out.write(dumps({"index": i, **line}) + "\n")
        lines.append(line)
    summary = summarize(lines)
    if skipped:
        summary["skipped"] = skipped
    out.write(dumps(summary) + "\n")
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAILED


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except InvalidInput as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        if isinstance(exc, DependentGenerators):
            err.write(f"witness: {list(exc.witness)}\n")
        return EXIT_INVALID
    except VerificationError as exc:
        err.write(f"verification failed: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILED
    except Exception:  # noqa: BLE001 - the exit-code contract maps everything else to 1
        err.write("internal error:\n" + traceback.format_exc())
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
