"""Command line front end.

Exit codes: 0 success, 2 usage or I/O problem, 3 the two engines (or the two
primes) disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from .cremona import ClampStep, CremonaStep, SortStep, UnsupportedRangeError, enumerate_neg_one_classes
from .lattice import (
    DivisorClass,
    arithmetic_genus,
    expected_dim,
    format_class,
    parse_class,
    self_intersection,
)
from .oracle import DEFAULT_PRIME, DEFAULT_PRIME2, DEFAULT_SEED, DEFAULT_TRIALS, Oracle
from .reductions import clamp, format_multiplicities, h0_of_class, normalize, parse_multiplicities
from .shgh import shgh_alpha, shgh_dim
from .sweep import OracleSettings, records_for, run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DISAGREE = 3


class UsageError(Exception):
    pass


def _parse_m(text: str) -> tuple[int, ...]:
    try:
        m = parse_multiplicities(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return m


def _parse_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"malformed degree range {text!r}; use 'a..b' or 'a'") from None


def _settings(args) -> OracleSettings:
    return OracleSettings(seed=args.seed, trials=args.trials, primes=(args.prime, args.prime2))


def _oracle(args, d: int) -> Oracle:
    return Oracle(d=d, seed=args.seed, trials=args.trials, prime=args.prime)


def _engines(args, d: int) -> tuple[bool, bool]:
    if args.engine == "shgh" and d != 2:
        raise UsageError("the shgh engine only supports d=2")
    use_shgh = args.engine in ("shgh", "both") and d == 2
    use_oracle = args.engine in ("oracle", "both")
    return use_shgh, use_oracle


def cmd_alpha(args) -> int:
    m = normalize(_parse_m(args.m))
    use_shgh, use_oracle = _engines(args, args.d)
    values = {}
    if use_shgh:
        values["shgh"] = shgh_alpha(m)
    if use_oracle:
        values["oracle"] = _oracle(args, args.d).alpha(m)
    agree = len(set(values.values())) == 1
    if args.json:
        print(json.dumps({"m": list(m), "d": args.d, **values, "agree": agree}))
    elif agree:
        print(next(iter(values.values())))
    else:
        print(" ".join(f"{k}={v}" for k, v in values.items()))
    if not agree:
        print(f"engines disagree on alpha({format_multiplicities(m)})", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_hilbert(args) -> int:
    m = normalize(_parse_m(args.m))
    ts = _parse_range(args.t)
    if len(ts) == 0 or ts.start < 0:
        raise UsageError(f"degree range must be non-empty and non-negative, got {args.t!r}")
    if args.engine == "shgh" and args.d != 2:
        raise UsageError("the shgh engine only supports d=2")
    records = records_for(m, ts, args.d, _settings(args), timestamp=not args.no_timestamp)
    status = EXIT_OK
    if not args.json:
        head = f"{'t':>4} {'monomials':>10} {'oracle':>7}"
        if args.d == 2:
            head += f" {'shgh':>5} {'chi':>5} special"
        print(head)
    for rec in records:
        if args.json:
            print(rec.dumps())
        else:
            row = f"{rec.t:>4} {comb(rec.t + args.d, args.d):>10} {rec.oracle_dim:>7}"
            if args.d == 2:
                row += f" {rec.shgh_dim:>5} {rec.chi:>5} {'yes' if rec.special else 'no'}"
            print(row)
        if not rec.ok:
            status = EXIT_DISAGREE
    if status:
        print("engines or primes disagree on at least one degree", file=sys.stderr)
    return status


def _describe(step) -> str:
    if isinstance(step, CremonaStep):
        return f"cremona {step.ijk} k0={step.k0}"
    if isinstance(step, ClampStep):
        return f"clamp   m{step.index}: {step.old} -> 0"
    if isinstance(step, SortStep):
        return f"sort    {list(step.perm)}"
    return repr(step)


def cmd_reduce(args) -> int:
    try:
        c = parse_class(args.D)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    start = clamp(c)
    rep = shgh_dim(start.m, start.t)
    oracle_dim = h0_of_class(c, _oracle(args, 2).dim)
    if args.json:
        out = rep.trace.to_json()
        out.update(conjectured_dim=rep.conjectured_dim, oracle_dim=oracle_dim)
        print(json.dumps(out))
    else:
        if start != c:
            print(f"clamped {format_class(c)} -> {format_class(start)}")
        if not rep.trace.steps:
            print("already standard; no steps")
        for i, step in enumerate(rep.trace.steps, 1):
            print(f"{i:>3}. {_describe(step)}")
        print(f"final: {format_class(rep.reduced_class.trimmed())}")
        print(f"h0: shgh={rep.conjectured_dim} oracle={oracle_dim}")
    if rep.conjectured_dim != oracle_dim:
        print("engines disagree on h0", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_sweep(args) -> int:
    def progress(rec):
        if not rec.ok:
            print(f"DISAGREE m={format_multiplicities(rec.m)} t={rec.t} "
                  f"shgh={rec.shgh_dim} oracle={rec.oracle_dims}", file=sys.stderr)

    try:
        summary = run_sweep(
            args.r_max, args.m_max, args.t_max, args.out, _settings(args),
            timestamp=not args.no_timestamp, jobs=args.jobs, on_record=progress,
        )
    except OSError as exc:
        print(f"cannot write sweep log: {exc}", file=sys.stderr)
        return EXIT_USAGE
    info = {
        "instances": summary.instances,
        "skipped": summary.skipped,
        "computed": summary.written,
        "agreements": summary.agreements,
        "disagreements": len(summary.disagreements),
        "special": len(summary.special),
    }
    if args.json:
        info["special_systems"] = [[list(m), t] for m, t in summary.special]
        print(json.dumps(info))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
        shown = summary.special[:20]
        for m, t in shown:
            print(f"  special: t={t} m=({format_multiplicities(m)})")
        if len(summary.special) > len(shown):
            print(f"  ... {len(summary.special) - len(shown)} more")
    return EXIT_OK if summary.ok else EXIT_DISAGREE


def cmd_neg_one(args) -> int:
    try:
        classes = enumerate_neg_one_classes(args.r)
    except UnsupportedRangeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    failed = 0
    rows = []
    for c in classes:
        sq, g = self_intersection(c), arithmetic_genus(c)
        ok = sq >= g - 1
        failed += not ok
        rows.append({"class": format_class(c), "self_intersection": sq, "genus": g, "conj2": ok})
    if args.json:
        print(json.dumps({"r": args.r, "count": len(classes), "classes": rows}))
    else:
        for row in rows:
            print(f"{row['class']:<24} C^2={row['self_intersection']} g={row['genus']} "
                  f"C^2>=g-1: {'ok' if row['conj2'] else 'FAIL'}")
        print(f"{len(classes)} classes")
    return EXIT_OK if not failed else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="oracle prime")
    common.add_argument("--prime2", type=int, default=DEFAULT_PRIME2, help="second oracle prime")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-timestamp", action="store_true", help="omit timestamps from records")

    parser = argparse.ArgumentParser(
        prog="fatpoints",
        description="Hilbert functions and alpha of generic fat points: SHGH engine vs. finite-field oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", parents=[common], help="least degree of a form with given multiplicities")
    p.add_argument("-m", required=True, help="multiplicities, e.g. 3,2^4,1")
    p.add_argument("-d", type=int, default=2)
    p.add_argument("--engine", choices=["shgh", "oracle", "both"], default="both")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert function over a degree range")
    p.add_argument("-m", required=True)
    p.add_argument("-d", type=int, default=2)
    p.add_argument("-t", default="0..10", help="degree or range a..b")
    p.add_argument("--engine", choices=["shgh", "oracle", "both"], default="both")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("reduce", parents=[common], help="Cremona-reduce a plane class to standard form")
    p.add_argument("-D", required=True, help="class 't;m1,...,mr'")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("sweep", parents=[common], help="dual-engine verification sweep (d=2)")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--out", default=None, help="JSONL log (appended to, resumable)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("neg-one", parents=[common], help="list (-1)-classes on X_r, r <= 8")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_neg_one)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
