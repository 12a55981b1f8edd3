"""Command-line entry point: ``oddperfect <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from oddperfect import lemmas
from oddperfect.arithmetic import factorize, sigma, sigma_prime_power
from oddperfect.forms import (
    EulerForm,
    euler_decompose,
    kuhnel_check,
    refined_classify,
    sigma_factorization_eq3,
    touchard_class_direct,
    touchard_from_euler,
)
from oddperfect.scan import Parity, Prefilter, ScanConfig, scan_range, verify_even_perfect

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def natural(text: str) -> int:
    if not text.isascii() or not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a nonnegative decimal integer: {text!r}")
    return int(text)


def positive(text: str) -> int:
    n = natural(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return n


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _odd_n(n: int) -> int:
    if n < 1:
        raise UsageError("N must be >= 1")
    if n % 2 == 0:
        raise UsageError("Euler form applies to odd N only")
    return n


def cmd_sigma(args) -> int:
    if args.n < 1:
        raise UsageError("N must be >= 1")
    print(sigma(factorize(args.n)))
    return EXIT_OK


def cmd_factor(args) -> int:
    if args.n < 1:
        raise UsageError("N must be >= 1")
    print(factorize(args.n))
    return EXIT_OK


def cmd_euler_form(args) -> int:
    res = euler_decompose(factorize(_odd_n(args.n)))
    _emit({"n": str(args.n), **res.to_json()})
    return EXIT_OK


def classify(n: int) -> dict:
    """Full pipeline for one odd N, as a JSON-ready dict."""
    f = factorize(_odd_n(n))
    e = euler_decompose(f)
    out = {
        "n": str(n),
        "factorization": [[str(p), str(k)] for p, k in f],
        "sigma": str(sigma(f)),
        "touchard_direct": touchard_class_direct(n).to_json(),
        "kuhnel_ok": kuhnel_check(f),
    }
    if isinstance(e, EulerForm):
        out["euler_form"] = e.to_json()
        out["touchard_from_euler"] = touchard_from_euler(e).to_json()
        out["refined"] = refined_classify(e).to_json()
    else:
        out["euler_form"] = e.to_json()
        out["touchard_from_euler"] = None
        out["refined"] = e.to_json()
    return out


def cmd_classify(args) -> int:
    _emit(classify(args.n))
    return EXIT_OK


def cmd_eq3(args) -> int:
    try:
        f = sigma_factorization_eq3(args.p, args.lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    target = sigma_prime_power(args.p, 12 * args.lam + 5)
    _emit(
        {
            "p": str(args.p),
            "lambda": str(args.lam),
            "linear": str(f.linear),
            "quartic": str(f.quartic),
            "tail": str(f.tail),
            "product": str(f.product),
            "verified": f.product == target,
        }
    )
    return EXIT_OK if f.product == target else EXIT_FAIL


def cmd_verify_lemmas(args) -> int:
    def show(r: lemmas.LemmaResult) -> None:
        status = "PASS" if r.ok else "FAIL"
        line = f"{status}  {r.name}  ({r.checked} cases)"
        if not r.ok:
            line += f"  {r.failed} failed, e.g. {r.failures}"
        print(line, flush=True)

    results = lemmas.run_all(args.prime_bound, args.alpha_bound, args.q_bound, progress=show)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_scan(args) -> int:
    if args.lo >= args.hi:
        raise UsageError("--from must be below --to")
    cfg = ScanConfig(
        lo=args.lo,
        hi=args.hi,
        parity=Parity.ODD_ONLY if args.odd_only else Parity.ALL,
        prefilter=Prefilter(args.prefilter),
        segment_size=args.segment_size,
        worker_count=args.jobs,
        near_miss=args.near_miss,
    )
    fh = open(args.out, "w") if args.out else sys.stdout
    anomalies = 0

    def sink(rec):
        nonlocal anomalies
        if rec.n % 2 == 0 and rec.sigma_n == 2 * rec.n and not verify_even_perfect(rec):
            logging.error("even perfect %d is not of Euclid-Euler shape", rec.n)
            anomalies += 1
        fh.write(json.dumps(rec.to_json()) + "\n")
        fh.flush()

    try:
        result = scan_range(cfg, on_record=sink)
        fh.write(json.dumps(result.summary.to_json()) + "\n")
    finally:
        if fh is not sys.stdout:
            fh.close()
    if result.summary.interrupted:
        return 130
    return EXIT_FAIL if anomalies else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="oddperfect", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="sum of divisors of N")
    p.add_argument("n", type=natural)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("factor", help="prime factorization of N")
    p.add_argument("n", type=natural)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("euler-form", help="Euler decomposition p^alpha Q^2 of odd N")
    p.add_argument("n", type=natural)
    p.set_defaults(func=cmd_euler_form)

    p = sub.add_parser("classify", help="full classification of odd N as JSON")
    p.add_argument("n", type=natural)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("eq3", help="factor sigma(P^(12 LAMBDA + 5)) into three parts")
    p.add_argument("p", type=natural)
    p.add_argument("lam", type=natural, metavar="LAMBDA")
    p.set_defaults(func=cmd_eq3)

    p = sub.add_parser("verify-lemmas", help="run every divisibility lemma up to the bounds")
    p.add_argument("--prime-bound", type=positive, default=10**4)
    p.add_argument("--alpha-bound", type=positive, default=13)
    p.add_argument("--q-bound", type=positive, default=45, help="largest odd Q in Euler-form sweeps")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("scan", help="scan [FROM, TO) for perfect numbers")
    p.add_argument("--from", dest="lo", type=positive, required=True)
    p.add_argument("--to", dest="hi", type=positive, required=True)
    p.add_argument("--odd-only", action="store_true")
    p.add_argument("--prefilter", choices=["none", "touchard"], default="none")
    p.add_argument("--jobs", type=positive, default=1)
    p.add_argument("--segment-size", type=positive, default=1 << 20)
    p.add_argument("--near-miss", type=natural, default=None, metavar="T")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oddperfect {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"oddperfect {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
