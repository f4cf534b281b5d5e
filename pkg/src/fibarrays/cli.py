"""Command-line front end.

Exit codes: 0 everything checked passed, 1 a counterexample was found,
2 usage error (bad arguments, unknown identity, out-of-scope period).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from . import classic_arrays, identities, oracles
from .seq_core import (
    THEOREM_PERIOD,
    ArraySpec,
    SumSpec,
    TheoremScopeError,
    TwoTailedRow,
    build_array,
    check_theorem,
    d_series,
    parse_rational,
    parse_row,
)

EXIT_PASS, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2

PRESETS = {
    "pascal-odd": classic_arrays.ODD_PASCAL,
    "pascal-even": classic_arrays.EVEN_PASCAL,
    "trinomial": classic_arrays.TRINOMIAL,
    "catalan": classic_arrays.catalan_embedding_spec(),
}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _row(text: str) -> TwoTailedRow:
    try:
        return parse_row(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _spec_from_args(args) -> ArraySpec:
    if args.preset:
        base = PRESETS[args.preset]
    else:
        base = ArraySpec(1, 1, TwoTailedRow.delta(0))
    return ArraySpec(
        args.alpha if args.alpha is not None else base.alpha,
        args.beta if args.beta is not None else base.beta,
        args.seed if args.seed is not None else base.seed,
        args.seed_index if args.seed_index is not None else base.seed_index,
    )


def _sum_from_args(args) -> SumSpec:
    try:
        return SumSpec(args.k0, args.k1, args.period)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_array(args) -> int:
    spec = _spec_from_args(args)
    rows = build_array(spec, args.n_max)
    if args.format == "json":
        _emit({
            "alpha": str(spec.alpha),
            "beta": str(spec.beta),
            "seed_index": spec.seed_index,
            "rows": [[{"k": k, "value": str(v)} for k, v in r.items()] for r in rows],
        })
    else:
        for r in rows:
            print("\t".join(str(v) for v in r.values))
    return EXIT_PASS


def cmd_dseries(args) -> int:
    spec = _spec_from_args(args)
    d = d_series(spec, _sum_from_args(args), args.n_max)
    pairs = list(enumerate(d, start=spec.seed_index))
    if args.format == "json":
        _emit({"d": [{"n": n, "value": str(v)} for n, v in pairs]})
    else:
        for n, v in pairs:
            print(f"{n}\t{v}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    if args.ids in (None, "all"):
        ids = list(identities.IDENTITY_IDS)
    else:
        ids = sorted({i.strip() for i in args.ids.split(",") if i.strip()})
        unknown = [i for i in ids if i not in identities.REGISTRY]
        if unknown:
            raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    n_hi = 200 if args.n_max is None else args.n_max
    reports = []
    for i in ids:
        n_min = identities.REGISTRY[i].n_min
        if n_hi < n_min:
            raise UsageError(f"--n-max {n_hi} is below n_min={n_min} of {i}")
        reports.append(identities.verify_range(i, n_min, n_hi))
    failed = [r for r in reports if not r.passed]
    if args.format == "json":
        _emit({"reports": [r.to_dict() for r in reports], "passed": not failed})
    else:
        for r in reports:
            line = f"{r.id}\t{r.n_lo}..{r.n_hi}\t{r.status}"
            if r.counterexample:
                ce = r.counterexample
                line += f"\tn={ce.n}\tlhs={ce.lhs}\trhs={ce.rhs}"
            print(line)
    return EXIT_COUNTEREXAMPLE if failed else EXIT_PASS


def _random_rational(rng: random.Random) -> Fraction:
    den = 0
    while den == 0:
        den = rng.randint(-9, 9)
    return Fraction(rng.randint(-9, 9), den)


def random_case(rng: random.Random, period: int = THEOREM_PERIOD) -> tuple[ArraySpec, SumSpec]:
    """Random seed of width <= 9, entries and alpha/beta with numerators/denominators in [-9, 9]."""
    width = rng.randint(0, 9)
    offset = rng.randint(-9, 9)
    seed = TwoTailedRow(offset, tuple(_random_rational(rng) for _ in range(width)))
    spec = ArraySpec(_random_rational(rng), _random_rational(rng), seed)
    return spec, SumSpec(rng.randint(-9, 9), rng.randint(1, period - 1) if period > 1 else 1, period)


def cmd_fuzz(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    if args.period != THEOREM_PERIOD:
        raise UsageError(
            f"theorem scope: fuzzing checks the period-{THEOREM_PERIOD} recurrence only, "
            f"got --period {args.period}"
        )
    rng = random.Random(args.rng_seed)
    n_max = 25 if args.n_max is None else args.n_max
    failures = []
    for t in range(args.trials):
        spec, sum_spec = random_case(rng, args.period)
        try:
            report = check_theorem(spec, sum_spec, n_max)
        except TheoremScopeError as exc:
            raise UsageError(str(exc)) from None
        if not report.passed:
            ce = report.counterexample
            failures.append({
                "trial": t,
                "alpha": str(spec.alpha),
                "beta": str(spec.beta),
                "seed": {str(k): str(v) for k, v in spec.seed.as_dict().items()},
                "k0": sum_spec.k0,
                "k1": sum_spec.k1,
                "n": ce.n,
                "lhs": str(ce.lhs),
                "rhs": str(ce.rhs),
            })
    summary = {
        "trials": args.trials,
        "n_max": n_max,
        "rng_seed": args.rng_seed,
        "passed": args.trials - len(failures),
        "failed": len(failures),
        "failures": failures,
    }
    if args.format == "json":
        _emit(summary)
    else:
        print(f"trials\t{args.trials}\tpassed\t{summary['passed']}\tfailed\t{len(failures)}")
        for f in failures:
            print("counterexample\t" + "\t".join(f"{k}={v}" for k, v in f.items()))
    return EXIT_COUNTEREXAMPLE if failures else EXIT_PASS


def cmd_minrec(args) -> int:
    spec = _spec_from_args(args)
    sum_spec = _sum_from_args(args)
    n_max = 30 if args.n_max is None else args.n_max
    series = d_series(spec, sum_spec, n_max)
    max_order = args.max_order if args.max_order is not None else min(8, (len(series) - 2) // 2)
    try:
        rec = oracles.min_recurrence(series, max_order)
    except ValueError as exc:
        raise UsageError(f"insufficient data: {exc}") from None
    empirical = sum_spec.period != THEOREM_PERIOD
    text = rec.describe() if rec else f"none up to order {max_order}"
    if args.format == "json":
        _emit({
            "order": rec.order if rec else None,
            "coefficients": [str(c) for c in rec.coefficients] if rec else None,
            "empirical": empirical,
            "text": text,
        })
    else:
        print(("empirical " if empirical else "") + text)
    return EXIT_PASS


def cmd_oracle_catalan(args) -> int:
    n_max = 8 if args.n_max is None else args.n_max
    if not 1 <= n_max <= oracles.PATH_PAIR_MAX_N:
        raise UsageError(f"--n-max must be in 1..{oracles.PATH_PAIR_MAX_N}")
    rows = []
    ok = True
    for n in range(1, n_max + 1):
        census = oracles.enumerate_path_pairs(n)
        for k in range(1, n + 1):
            b = classic_arrays.catalan_B(n, k)
            ok &= census[k] == b
            rows.append({"n": n, "k": k, "pairs": str(census[k]), "B": str(b), "match": census[k] == b})
    if args.format == "json":
        _emit({"rows": rows, "passed": ok})
    else:
        for r in rows:
            print(f"{r['n']}\t{r['k']}\t{r['pairs']}\t{r['B']}\t{'ok' if r['match'] else 'MISMATCH'}")
    return EXIT_PASS if ok else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibarrays", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json"), default="tsv")
    common.add_argument("--n-max", type=int)

    array_opts = argparse.ArgumentParser(add_help=False)
    array_opts.add_argument("--preset", choices=sorted(PRESETS))
    array_opts.add_argument("--alpha", type=_rational)
    array_opts.add_argument("--beta", type=_rational)
    array_opts.add_argument("--seed", type=_row, help='seed row as "k:v,k:v" ("" for the zero row)')
    array_opts.add_argument("--seed-index", type=int)

    sum_opts = argparse.ArgumentParser(add_help=False)
    sum_opts.add_argument("--k0", type=int, default=0)
    sum_opts.add_argument("--k1", type=int, default=1)
    sum_opts.add_argument("--period", type=int, default=THEOREM_PERIOD)

    p = sub.add_parser("array", parents=[common, array_opts], help="print rows of a banded array")
    p.set_defaults(func=cmd_array, n_max_default=5)
    p = sub.add_parser("dseries", parents=[common, array_opts, sum_opts], help="print d_n")
    p.set_defaults(func=cmd_dseries, n_max_default=20)
    p = sub.add_parser("verify", parents=[common], help="verify registered identities")
    p.add_argument("--ids", default="all", help='comma-separated ids or "all"')
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("fuzz", parents=[common], help="random checks of the d_n recurrence")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--period", type=int, default=THEOREM_PERIOD)
    p.set_defaults(func=cmd_fuzz)
    p = sub.add_parser("minrec", parents=[common, array_opts, sum_opts],
                       help="minimal recurrence of d_n")
    p.add_argument("--max-order", type=int)
    p.set_defaults(func=cmd_minrec)
    p = sub.add_parser("oracle-catalan", parents=[common],
                       help="compare path-pair enumeration with Catalan's triangle")
    p.set_defaults(func=cmd_oracle_catalan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n_max is None and hasattr(args, "n_max_default"):
        args.n_max = args.n_max_default
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        print(f"fibarrays: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
