"""Command-line front end: subcommands pi, dist, code, table, verify.

Exit status: 0 on success, 1 on operational errors, 2 when a mathematical
inconsistency is detected (formula vs oracle mismatch, inconsistent record).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import codes, verify
from .bsymbol import dist_b_formula, dist_b_oracle, pi_b
from .codes import CyclicCodeSpec, build_record, record_to_dict
from .errors import BsymError, UsageError
from .gf import make_field
from .polyring import Word, field_word


def parse_range(text: str):
    """Inclusive `a..b` range, or a single value."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def parse_generic_word(text: str) -> Word:
    try:
        return Word(tuple(int(s) for s in text.split(",")))
    except ValueError as exc:
        raise UsageError(f"cannot parse word {text!r}: {exc}") from None


def parse_field_word(f, text: str) -> Word:
    symbols = []
    for token in text.split(","):
        if ":" in token:
            symbols.append(f.element([int(c) for c in token.split(":")]))
        else:
            symbols.append(f.from_int(int(token)))
    return field_word(f, symbols)


def parse_modulus(text: str):
    return [int(c) for c in text.split(",")]


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bsym",
        description="b-symbol weights/distances and repeated-root cyclic code tables",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_pi = sub.add_parser("pi", help="print the b-symbol read vector of a word")
    p_pi.add_argument("--n", type=int, default=None)
    p_pi.add_argument("--b", type=int, required=True)
    p_pi.add_argument("--word", required=True)

    p_dist = sub.add_parser("dist", help="b-symbol distance between two words")
    p_dist.add_argument("--b", type=int, required=True)
    p_dist.add_argument("--x", required=True)
    p_dist.add_argument("--y", required=True)
    p_dist.add_argument("--method", choices=["formula", "oracle", "both"],
                        default="both")

    p_code = sub.add_parser("code", help="distances of one code C_i")
    p_code.add_argument("--p", type=int, required=True)
    p_code.add_argument("--e", type=int, required=True)
    p_code.add_argument("--m", type=int, default=1)
    p_code.add_argument("--modulus", default=None)
    p_code.add_argument("--i", type=int, required=True)
    p_code.add_argument("--b", type=int, required=True)
    p_code.add_argument("--method", choices=["closed", "brute", "both"],
                        default="both")
    p_code.add_argument("--cap", type=int, default=None)
    p_code.add_argument("--format", choices=["plain", "csv", "json"],
                        default="plain")

    p_table = sub.add_parser("table", help="sweep i and b, emit CSV/JSON rows")
    p_table.add_argument("--p", type=int, required=True)
    p_table.add_argument("--e", type=int, required=True)
    p_table.add_argument("--m", type=int, default=1)
    p_table.add_argument("--modulus", default=None)
    p_table.add_argument("--b", required=True, help="range a..b or single value")
    p_table.add_argument("--i", default=None, help="range a..b; default 0..p^e")
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--out", default=None)
    p_table.add_argument("--cap", type=int, default=None)
    p_table.add_argument("--no-brute", action="store_true")

    p_ver = sub.add_parser("verify", help="run the formula-vs-oracle suites")
    p_ver.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    p_ver.add_argument("--seed", type=int, default=42)
    p_ver.add_argument("--trials", type=int, default=100_000)
    p_ver.add_argument("--cap", type=int, default=None)
    p_ver.add_argument("--format", choices=["json"], default="json")

    return ap


def _cmd_pi(args) -> int:
    w = parse_generic_word(args.word)
    if args.n is not None and args.n != w.n:
        raise UsageError(f"--n {args.n} does not match word length {w.n}")
    for window in pi_b(w, args.b):
        print(",".join(str(s) for s in window))
    return 0


def _cmd_dist(args) -> int:
    x = parse_generic_word(args.x)
    y = parse_generic_word(args.y)
    if args.method == "formula":
        print(dist_b_formula(x, y, args.b))
        return 0
    if args.method == "oracle":
        print(dist_b_oracle(x, y, args.b))
        return 0
    f = dist_b_formula(x, y, args.b)
    o = dist_b_oracle(x, y, args.b)
    match = f == o
    print(f"formula={f} oracle={o} match={str(match).lower()}")
    return 0 if match else 2


def _make_spec(args) -> CyclicCodeSpec:
    modulus = parse_modulus(args.modulus) if args.modulus else None
    f = make_field(args.p, args.m, modulus)
    return CyclicCodeSpec(f, args.e, args.i)


def _emit_records(records, fmt: str, out_path):
    stream = open(out_path, "w", newline="") if out_path else sys.stdout
    try:
        if fmt == "csv":
            writer = csv.writer(stream)
            writer.writerow(codes.CSV_COLUMNS)
            for rec in records:
                d = record_to_dict(rec)
                writer.writerow(
                    ["" if d[c] is None else d[c] for c in codes.CSV_COLUMNS]
                )
        else:
            json.dump([record_to_dict(r) for r in records], stream, indent=2)
            stream.write("\n")
    finally:
        if out_path:
            stream.close()


def _cmd_code(args) -> int:
    spec = _make_spec(args)
    cap = args.cap if args.cap is not None else codes.enumeration_cap()
    rec = build_record(spec, args.b, cap, with_brute=args.method in ("brute", "both"))
    if args.format == "plain":
        d = record_to_dict(rec)
        print(" ".join(f"{k}={'' if v is None else v}" for k, v in d.items()))
    else:
        _emit_records([rec], args.format, None)
    return 0 if rec.consistent else 2


def _cmd_table(args) -> int:
    modulus = parse_modulus(args.modulus) if args.modulus else None
    f = make_field(args.p, args.m, modulus)
    n = args.p ** args.e
    b_lo, b_hi = parse_range(args.b)
    i_lo, i_hi = parse_range(args.i) if args.i else (0, n)
    cap = args.cap if args.cap is not None else codes.enumeration_cap()
    records = []
    for i in range(i_lo, i_hi + 1):
        spec = CyclicCodeSpec(f, args.e, i)
        for b in range(b_lo, b_hi + 1):
            records.append(build_record(spec, b, cap, with_brute=not args.no_brute))
    _emit_records(records, args.format, args.out)
    return 0 if all(r.consistent for r in records) else 2


def _cmd_verify(args) -> int:
    cfg = verify.SuiteConfig(
        seed=args.seed,
        trials=args.trials,
        cap=args.cap if args.cap is not None else codes.DEFAULT_CAP,
    )
    reports = verify.run_suites(cfg, args.suite)
    print(verify.report_json(reports))
    return 0 if all(r.passed for r in reports.values()) else 2


_COMMANDS = {
    "pi": _cmd_pi,
    "dist": _cmd_dist,
    "code": _cmd_code,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except BsymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
