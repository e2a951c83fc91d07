"""Command-line entry point: ``hermlift <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import bounds, codec, curve, goodness, verify
from .errors import HermliftError
from .field import GF2m

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _summary(record: dict) -> None:
    sys.stderr.write(json.dumps(record) + "\n")


def read_symbols(path: str, F: Optional[GF2m] = None) -> list[Optional[int]]:
    """Newline-separated hex symbols; ``*`` marks an erasure."""
    out: list[Optional[int]] = []
    for raw in Path(path).read_text().splitlines():
        s = raw.strip()
        if not s:
            continue
        if s == "*":
            out.append(None)
        else:
            out.append(F.from_hex(s) if F else int(s, 16))
    return out


def format_symbols(F: GF2m, symbols: Sequence[Optional[int]]) -> str:
    return "".join(("*" if s is None else F.to_hex(s)) + "\n" for s in symbols)


def _k_from_length(n: int) -> int:
    for k in range(1, 9):
        if 8**k == n:
            return k
    raise HermliftError(f"word length {n} is not q^3 for q = 2^k")


# -- subcommands ----------------------------------------------------------------


def cmd_points(args) -> int:
    F = GF2m(args.k)
    pts = curve.hermitian_points(F)
    rows = [[F.to_hex(p.alpha), F.to_hex(p.beta)] for p in pts]
    if args.format == "human":
        _emit("".join(f"{a} {b}\n" for a, b in rows), args.out)
    else:
        _emit(dump_json(rows), args.out)
    _summary({**F.describe(), "points": len(rows)})
    return EXIT_OK


def cmd_lines(args) -> int:
    F = GF2m(args.k)
    lines = curve.hermitian_lines(F)
    rows = [[F.to_hex(ln.a), F.to_hex(ln.b)] for ln in lines]
    if args.format == "human":
        _emit("".join(f"{a} {b}\n" for a, b in rows), args.out)
    else:
        _emit(dump_json(rows), args.out)
    _summary({**F.describe(), "lines": len(rows)})
    return EXIT_OK


def cmd_good(args) -> int:
    F = GF2m(args.k)
    if args.probe:
        rows = []
        for m in goodness.all_monomials(F.q):
            rows.append({"i": m.i, "j": m.j, "certified": goodness.is_good_certified(m, F.q),
                         "probe": goodness.probe_good(F, m, args.probe, args.seed)})
        _emit(dump_json({"heuristic": True, "sampled_lines": args.probe, "rows": rows}),
              args.json or args.out)
        return EXIT_OK
    reports = goodness.classify(F, args.mode, threads=args.threads, allow_long=args.q16_exact)
    rows = []
    for r in reports:
        w = r.witness_line
        rows.append({
            "i": r.monomial.i,
            "j": r.monomial.j,
            "certified": r.certified,
            "exact": r.exact,
            "witness": None if w is None else {"a": F.to_hex(w.a), "b": F.to_hex(w.b)},
        })
    flag = "exact" if args.mode == "exact" else "certified"
    count = sum(1 for row in rows if row[flag])
    if args.json:
        Path(args.json).write_text(dump_json(rows))
    if args.format == "json":
        _emit(dump_json(rows), args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "certified", "exact", "witness_a", "witness_b"])
        for row in rows:
            w = row["witness"] or {}
            writer.writerow([row["i"], row["j"], row["certified"], row["exact"],
                             w.get("a", ""), w.get("b", "")])
        _emit(buf.getvalue(), args.out)
    else:
        good = [f"X^{row['i']}Y^{row['j']}" for row in rows if row[flag]]
        _emit(f"q={F.q} mode={args.mode} good={count} of {len(rows)}\n"
              + " ".join(good) + "\n", args.out)
    _summary({**F.describe(), "mode": args.mode, "monomials": len(rows), "good": count})
    return EXIT_OK


BOUNDS_COLUMNS = ["k", "q", "bound_old_rat", "bound_old_floor", "bound_new_rat",
                  "bound_new_floor", "rate_old", "rate_new"]


def _bounds_row(rep: bounds.BoundsReport) -> dict:
    return {
        "k": rep.k,
        "q": rep.q,
        "bound_old_rat": rat(rep.bound_old),
        "bound_old_floor": rep.bound_old_floor,
        "bound_new_rat": rat(rep.bound_new),
        "bound_new_floor": rep.bound_new_floor,
        "rate_old": rat(rep.rate_old),
        "rate_new": rat(rep.rate_new),
    }


def cmd_bounds(args) -> int:
    rows = [_bounds_row(rep) for rep in bounds.rate_table(args.kmax)]
    fmt = "csv" if args.csv else args.format
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=BOUNDS_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue(), args.csv or args.out)
    elif fmt == "json":
        _emit(dump_json(rows), args.out)
    else:
        lines = [f"{'k':>3} {'q':>8} {'old floor':>14} {'new floor':>14} {'rate_old':>10} {'rate_new':>10}"]
        for rep in bounds.rate_table(args.kmax):
            lines.append(f"{rep.k:>3} {rep.q:>8} {rep.bound_old_floor:>14} {rep.bound_new_floor:>14} "
                         f"{float(rep.rate_old):>10.6f} {float(rep.rate_new):>10.6f}")
        lines.append(f"limits: rate_old -> {rat(bounds.rate_limit_old())}, "
                     f"rate_new -> {rat(bounds.rate_limit_new())}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_dim(args) -> int:
    F = GF2m(args.k)
    allow = args.q16_dim
    count, _ = goodness.enumerate_good(F, "exact", threads=args.threads, allow_long=allow)
    dim = bounds.exact_dimension(F, allow_long=allow)
    record = {"q": F.q, "exact_good_count": count, "exact_dimension": dim,
              "bound_new_floor": bounds.BoundsReport(F.k, F.q, bounds.bound_old(F.k),
                                                     bounds.bound_new(F.k)).bound_new_floor}
    if args.format == "human":
        _emit("".join(f"{key}: {val}\n" for key, val in record.items()), args.out)
    else:
        _emit(dump_json(record), args.out)
    return EXIT_OK


def cmd_encode(args) -> int:
    F = GF2m(args.k)
    spec = codec.build_code(F, args.mode, threads=args.threads)
    msg = read_symbols(args.msg, F)
    if any(s is None for s in msg):
        raise HermliftError("message file may not contain erasures")
    word = codec.encode(spec, msg)
    _emit(format_symbols(F, word), args.out)
    _summary({**F.describe(), "mode": args.mode, "K": spec.dimension, "n": spec.n})
    return EXIT_OK


def cmd_recover(args) -> int:
    word = read_symbols(args.word)
    k = args.k or _k_from_length(len(word))
    F = GF2m(k)
    if len(word) != F.q**3:
        raise HermliftError(f"word has {len(word)} symbols, expected {F.q**3}")
    if any(s is not None and s >= F.order for s in word):
        raise HermliftError(f"symbol outside GF(2^{F.m})")
    if args.erased:
        for tok in args.erased.split(","):
            word[int(tok)] = None
    # repair uses only the line geometry, not the message basis
    spec = codec.CodeSpec(F, curve.hermitian_points(F), [])
    res = codec.peel_decode(spec, word)
    _emit(format_symbols(F, res.word), args.out)
    _summary({"repaired": len(res.repaired), "stuck": res.stuck, "reads": res.reads})
    return EXIT_OK if res.success else EXIT_FAIL


def cmd_simulate(args) -> int:
    F = GF2m(args.k)
    spec = codec.build_code(F, args.mode, threads=args.threads)
    if not 0 <= args.fail <= args.nodes:
        raise HermliftError("--fail must be between 0 and --nodes")
    layout = codec.round_robin_layout(spec.n, args.nodes)
    failures = sorted(random.Random(args.seed).sample(range(args.nodes), args.fail))
    rep = codec.simulate_repair(spec, layout, failures, seed=args.seed)
    record = {"q": F.q, "n": spec.n, "K": spec.dimension, "nodes": args.nodes,
              "failed_nodes": failures, "seed": args.seed, **rep.to_dict()}
    text = dump_json(record)
    if args.json:
        Path(args.json).write_text(text)
    if args.format == "human":
        _emit(f"erased={rep.erased} repaired={rep.repaired} stuck={rep.stuck} "
              f"reads={rep.total_reads} max_reads={rep.max_reads} correct={rep.correct}\n", args.out)
    elif not args.json:
        _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = verify.run_checks(args.k, seed=args.seed)
    if args.format == "json":
        _emit(dump_json([{"name": c.name, "status": c.status, "detail": c.detail}
                         for c in checks]), args.out)
    else:
        _emit("".join(f"{c.status} {c.name}" + (f" ({c.detail})" if c.detail else "") + "\n"
                      for c in checks), args.out)
    return EXIT_FAIL if any(c.passed is False for c in checks) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermlift", description="Hermitian lifted codes: construction, bounds and repair.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json", "csv"], default="human")
    common.add_argument("--out", help="write the main output here instead of stdout")
    common.add_argument("--threads", type=int, default=1, help="worker threads for classification")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def k_arg(p, required=True):
        p.add_argument("--k", type=int, required=required, help="q = 2^k")

    p = add("points", cmd_points, "list the affine Hermitian points")
    k_arg(p)
    p = add("lines", cmd_lines, "list the secant lines (a, b)")
    k_arg(p)

    p = add("good", cmd_good, "classify footprint monomials")
    k_arg(p)
    p.add_argument("--mode", choices=["exact", "certified"], default="exact")
    p.add_argument("--json", help="also write classification rows to this file")
    p.add_argument("--q16-exact", action="store_true", help="allow the long exact run at k=4")
    p.add_argument("--probe", type=int, default=0, metavar="N",
                   help="heuristic: test each monomial on N sampled lines only")

    p = add("bounds", cmd_bounds, "old/new dimension bounds and rates")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--csv", help="write the table as CSV to this file")

    p = add("dim", cmd_dim, "exact good-monomial count and parity-check dimension")
    k_arg(p)
    p.add_argument("--q16-dim", action="store_true", help="allow the long rank run at k=4")

    p = add("encode", cmd_encode, "encode a message file")
    k_arg(p)
    p.add_argument("--mode", choices=["exact", "certified"], default="exact")
    p.add_argument("--msg", required=True, help="newline-separated hex message symbols")

    p = add("recover", cmd_recover, "repair erasures in a codeword file by peeling")
    k_arg(p, required=False)
    p.add_argument("--word", required=True, help="newline-separated hex symbols, * = erased")
    p.add_argument("--erased", default="", help="comma-separated positions to erase first")

    p = add("simulate", cmd_simulate, "node-failure repair simulation")
    k_arg(p)
    p.add_argument("--mode", choices=["exact", "certified"], default="exact")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--fail", type=int, required=True)
    p.add_argument("--json", help="write the repair report to this file")

    p = add("verify", cmd_verify, "run the invariant checks for one k")
    k_arg(p)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (HermliftError, OSError) as exc:
        sys.stderr.write(f"hermlift {args.command}: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
