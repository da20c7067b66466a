"""Command-line interface.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a
verification failed, 2 bad parameters, 3 no closed form for the order,
4 the code does not have dimension m.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle, published
from .errors import DimensionMismatch, IrcodeError, ParameterError, UnsupportedOrder
from .period_poly import factorize_reduced_period
from .weights import (
    WeightDistribution,
    classify,
    code_params,
    describe_classification,
    distribution_from_factorization,
    factorization,
    resolve_method,
    weight_distribution,
)

EXIT_OK, EXIT_FAIL, EXIT_PARAM, EXIT_UNSUPPORTED, EXIT_DIMENSION = 0, 1, 2, 3, 4


def distribution_record(spec, dist, method):
    return {
        "p": spec.p,
        "s": spec.s,
        "m": spec.m,
        "N": spec.N,
        "q": spec.q,
        "r": str(spec.r),
        "n": str(spec.n),
        "N2": spec.N2,
        "dimension": spec.dimension,
        "entries": [{"weight": str(w), "frequency": str(f)} for w, f in dist.entries],
        "method": method,
        "classification": classify(spec, dist).value,
    }


def distribution_from_record(record):
    """Inverse of distribution_record, for the cache and for round-trip tests."""
    entries = tuple((int(e["weight"]), int(e["frequency"])) for e in record["entries"])
    dist = WeightDistribution(n=int(record["n"]), m=record["m"], q=record["q"], entries=entries)
    dist.check()
    return dist


# ---------------------------------------------------------------------------
# cache


def cache_path(cache_dir, p, s, m, N, method):
    return Path(cache_dir) / f"{p}_{s}_{m}_{N}_{method}.json"


def load_cached(path, spec):
    try:
        record = json.loads(path.read_text())
        dist = distribution_from_record(record)
    except (OSError, ValueError, KeyError, TypeError, AssertionError):
        return None
    if [record.get(k) for k in ("p", "s", "m", "N")] != [spec.p, spec.s, spec.m, spec.N]:
        return None
    return record, dist


def store_cached(path, record):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(record, indent=1))
    tmp.replace(path)


# ---------------------------------------------------------------------------
# commands


def _emit(args, record, text):
    if args.format == "json":
        print(json.dumps(record, indent=1))
    else:
        print(text)


def cmd_dist(args):
    spec = code_params(args.p, args.s, args.m, args.N)
    method = resolve_method(spec, args.method)
    path = cache_path(args.cache_dir, spec.p, spec.s, spec.m, spec.N, method)
    cached = None if args.no_cache else load_cached(path, spec)
    if cached:
        record, dist = cached
    else:
        if args.method == "auto":
            dist = weight_distribution(spec.p, spec.s, spec.m, spec.N, method="auto")
        else:
            dist = distribution_from_factorization(spec, factorization(spec, method))
        record = distribution_record(spec, dist, method)
        if not args.no_cache:
            store_cached(path, record)
    _emit(args, record, dist.polynomial())
    return EXIT_OK


def cmd_verify(args):
    report = oracle.verify(args.p, args.s, args.m, args.N)
    if report.reason.startswith("DimensionMismatch"):
        raise DimensionMismatch(report.reason)
    if report.reason.startswith("UnsupportedOrder"):
        raise UnsupportedOrder(report.reason)
    _emit(args, report.to_json(), report.summary_line())
    for w, a, b in report.diff:
        print(f"  weight {w}: closed {a}, oracle {b}", file=sys.stderr)
    return EXIT_FAIL if report.verdict == oracle.FAIL else EXIT_OK


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def cmd_sweep(args):
    from sympy import primerange

    grid = oracle.Grid(
        primes=tuple(args.primes or primerange(3, args.p_max + 1)),
        s_values=args.s_list,
        m_max=args.m_max,
        N_values=args.N_list,
        max_r=args.max_r,
    )
    reports = oracle.sweep(grid, jobs=args.jobs)
    counts = oracle.summarize(reports)
    if args.out:
        payload = {"summary": counts, "reports": [rep.to_json() for rep in reports]}
        Path(args.out).write_text(json.dumps(payload, indent=1))
    if args.format == "json":
        print(json.dumps({"summary": counts, "reports": [rep.to_json() for rep in reports]}, indent=1))
    else:
        for rep in reports:
            if args.verbose or rep.verdict != oracle.PASS:
                print(rep.summary_line())
        print(oracle.format_summary(counts))
    return EXIT_FAIL if counts[oracle.FAIL] else EXIT_OK


def cmd_factor(args):
    fac = factorize_reduced_period(args.p, args.s, args.m, args.N2)
    record = {"p": args.p, "s": args.s, "m": args.m, **fac.to_json()}
    _emit(args, record, str(fac.multiset()))
    return EXIT_OK


def cmd_classify(args):
    spec = code_params(args.p, args.s, args.m, args.N)
    label = classify(spec)
    text = describe_classification(spec, label)
    _emit(args, {"p": spec.p, "s": spec.s, "m": spec.m, "N": spec.N, "N2": spec.N2,
                 "classification": label.value, "description": text}, text)
    return EXIT_OK


def cmd_reproduce(args):
    """Recompute every published example and compare with the printed text."""
    status = EXIT_OK
    records = []
    for key in published.PUBLISHED:
        rep = oracle.verify(*key)
        if rep.verdict == oracle.FAIL:
            status = EXIT_FAIL
        if rep.published_match:
            note = "matches published"
        elif rep.erratum:
            note = f"differs from published, known misprint: {rep.erratum}"
        else:
            note = "DIFFERS from published"
            status = EXIT_FAIL
        records.append({**rep.to_json(), "note": note})
        if args.format == "text":
            oracle_state = "oracle " + rep.verdict if rep.oracle is not None else "closed form only"
            print(f"{key} {rep.closed.polynomial()} [{oracle_state}; {note}]")
    if args.format == "json":
        print(json.dumps(records, indent=1))
    return status


# ---------------------------------------------------------------------------


def _code_args(parser, with_N=True):
    parser.add_argument("-p", type=int, required=True, help="characteristic")
    parser.add_argument("-s", type=int, default=1, help="q = p^s")
    parser.add_argument("-m", type=int, required=True, help="r = q^m")
    if with_N:
        parser.add_argument("-N", type=int, required=True, help="N divides r-1; code length (r-1)/N")


def _format_arg(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ircode", description="Weight distributions of irreducible cyclic codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="weight distribution of C(r, N) over GF(q)")
    _code_args(p)
    p.add_argument("--method", choices=("closed", "direct", "auto"), default="auto")
    p.add_argument("--cache-dir", default="cache")
    p.add_argument("--no-cache", action="store_true")
    _format_arg(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", help="closed form against the brute-force oracle")
    _code_args(p)
    _format_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify a parameter grid")
    p.add_argument("--max-r", type=int, default=10**6)
    p.add_argument("--p-max", type=int, default=23)
    p.add_argument("--primes", type=_int_list, default=None, help="explicit primes (overrides --p-max)")
    p.add_argument("--s-list", type=_int_list, default=(1, 2))
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--N-list", type=_int_list, default=tuple(range(1, 13)))
    p.add_argument("--out", help="write a JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true", help="list passing tuples too")
    _format_arg(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("factor", help="roots of the reduced period polynomial")
    _code_args(p, with_N=False)
    p.add_argument("--N2", type=int, required=True)
    _format_arg(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("classify", help="one-weight / maximal / semi-primitive classification")
    _code_args(p)
    _format_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reproduce", help="recompute every published example")
    _format_arg(p)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except UnsupportedOrder as exc:
        print(f"error: UnsupportedOrder: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DimensionMismatch as exc:
        print(f"error: DimensionMismatch: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except IrcodeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
