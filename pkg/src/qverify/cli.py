"""Command line entry point: ``list``, ``verify`` and ``wz`` subcommands.

Exit status is 0 when every record holds, 1 when any record fails or errors,
and 2 on usage errors.
"""

import argparse
import csv
import io
import json
import sys
import time

from . import wzengine
from .ntheory import primes_in
from .suite import (UnknownStatement, VerificationResult, get_statement,
                    list_statements, verify_range)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_range(text, what):
    try:
        lo, hi = (int(x) for x in text.split("..", 1))
    except ValueError:
        raise UsageError(f"{what}: expected A..B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"{what}: empty range {text}")
    return lo, hi


def odd_range(text):
    lo, hi = _parse_range(text, "--odd-range")
    if lo < 1 or lo % 2 == 0 or hi % 2 == 0:
        raise UsageError(f"--odd-range: endpoints must be odd and positive, got {text}")
    return list(range(lo, hi + 1, 2))


def prime_range(text):
    lo, hi = _parse_range(text, "--primes")
    if lo < 2:
        raise UsageError(f"--primes: lower end must be at least 2, got {text}")
    return primes_in(lo, hi)


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def _split_ids(values):
    out = []
    for v in values or ():
        out.extend(x for x in v.split(",") if x)
    return out


# -- output ------------------------------------------------------------------

def _text_line(rec):
    status = {True: "PASS", False: "FAIL", None: "ERROR"}[rec["holds"]]
    params = " ".join(f"{k}={v}" for k, v in rec["params"].items() if v is not None)
    line = f"{status:5} {rec['id']:22} {params:24} deg {rec['modulus_degree']:<5} {rec['elapsed_ms']} ms"
    if rec["warnings"]:
        line += "  [" + "; ".join(rec["warnings"]) + "]"
    return line


CSV_FIELDS = ("id", "params", "holds", "modulus_degree", "elapsed_ms", "warnings")


def render(records, fmt):
    if fmt == "json":
        return json.dumps(records, ensure_ascii=False, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in records:
            writer.writerow([r["id"], json.dumps(r["params"], ensure_ascii=False),
                             json.dumps(r["holds"]), r["modulus_degree"], r["elapsed_ms"],
                             json.dumps(r["warnings"], ensure_ascii=False)])
        return buf.getvalue()
    return "".join(_text_line(r) + "\n" for r in records)


def parse_report(text):
    """Inverse of the JSON rendering."""
    return [VerificationResult.from_record(r) for r in json.loads(text)]


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _status(records):
    return EXIT_OK if all(r["holds"] is True for r in records) else EXIT_FAIL


# -- subcommands ---------------------------------------------------------------

def cmd_list(args):
    stmts = list_statements()
    if args.id:
        wanted = _split_ids(args.id)
        unknown = [i for i in wanted if get_statement(i) is None]
        if unknown:
            raise UsageError(f"unknown statement id(s): {', '.join(unknown)}")
        stmts = [get_statement(i) for i in wanted]
    if args.format == "json":
        rows = [{"id": s.id, "kind": s.kind.value, "modulus": s.modulus_label,
                 "domain": s.domain.description, "variants": list(s.variants),
                 "title": s.title} for s in stmts]
        _emit(json.dumps(rows, ensure_ascii=False, indent=2) + "\n", args.out)
    else:
        lines = []
        for s in stmts:
            variants = f" variants {', '.join(s.variants)}" if s.variants else ""
            lines.append(f"{s.id:22} {s.kind.value:13} mod {s.modulus_label:26} "
                         f"{s.domain.description:14}{variants}  {s.title}\n")
        _emit("".join(lines), args.out)
    return EXIT_OK


def cmd_verify(args):
    if args.all and args.id:
        raise UsageError("use either --id or --all")
    if args.all:
        ids = [s.id for s in list_statements()]
    else:
        ids = _split_ids(args.id)
        if not ids:
            raise UsageError("no statements selected (use --id or --all)")
    unknown = [i for i in ids if get_statement(i) is None]
    if unknown:
        raise UsageError(f"unknown statement id(s): {', '.join(unknown)}")
    n_values = odd_range(args.odd_range) if args.odd_range else []
    p_values = prime_range(args.primes) if args.primes else []
    if not n_values and not p_values:
        raise UsageError("give --odd-range and/or --primes")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    results = verify_range(ids, n_values, p_values, parallelism=args.jobs,
                           fail_fast=args.fail_fast)
    records = [r.to_record() for r in results]
    _emit(render(records, args.format), args.out)
    return _status(records)


def _wz_record(rid, params, check):
    start = time.perf_counter()
    warnings = []
    try:
        holds = check(warnings)
    except Exception as exc:
        holds = None
        warnings.append(f"Error: {type(exc).__name__}: {exc}")
    elapsed = int((time.perf_counter() - start) * 1000)
    return {"id": rid, "params": params, "holds": holds, "modulus_degree": 0,
            "elapsed_ms": elapsed, "warnings": warnings}


def cmd_wz(args):
    try:
        pairs = [wzengine.WZPairId(args.pair)] if args.pair else list(wzengine.WZPairId)
    except ValueError:
        raise UsageError(f"unknown pair {args.pair!r} (expected sec2 or sec3)") from None
    if args.max_m < 0 or args.max_k < 0:
        raise UsageError("--max-m and --max-k must be nonnegative")
    ns = _int_list(args.n) if args.n else []
    for n in ns:
        if n < 3 or n % 2 == 0:
            raise UsageError(f"--n values must be odd and at least 3, got {n}")
    records = []
    for pair in pairs:
        def relation(warnings, pair=pair):
            bad = [(m, k) for m in range(args.max_m + 1) for k in range(1, args.max_k + 1)
                   if not wzengine.wz_relation_check(pair, m, k)]
            warnings.extend(f"relation fails at m={m}, k={k}" for m, k in bad)
            return not bad
        records.append(_wz_record(f"wz-relation-{pair.value}",
                                  {"max_m": args.max_m, "max_k": args.max_k}, relation))
        if args.fail_fast and records[-1]["holds"] is not True:
            break
        for n in ns:
            def tele(warnings, pair=pair, n=n):
                report = wzengine.telescoping_report(pair, n)
                report["boundary vanishing"] = wzengine.boundary_check(pair, n)
                if pair is wzengine.WZPairId.SEC3:
                    report["tail vanishing"] = wzengine.tail_vanishing_check(n)
                warnings.extend(f"{name} fails" for name, ok in report.items() if not ok)
                return all(report.values())
            records.append(_wz_record(f"wz-telescoping-{pair.value}", {"n": n}, tele))
            if args.fail_fast and records[-1]["holds"] is not True:
                break
    _emit(render(records, args.format), args.out)
    return _status(records)


# -- parser ------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="qverify", description="Exact verification of q-supercongruences and p-adic congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = dict(choices=("text", "json", "csv"), default="text")

    p_list = sub.add_parser("list", help="list registered statements")
    p_list.add_argument("--id", action="append", help="restrict to these ids")
    p_list.add_argument("--format", choices=("text", "json"), default="text")
    p_list.add_argument("--out", help="write to this file instead of stdout")
    p_list.set_defaults(func=cmd_list)

    p_ver = sub.add_parser("verify", help="verify statements over parameter ranges")
    p_ver.add_argument("--id", action="append", help="statement id (repeatable, comma separated)")
    p_ver.add_argument("--all", action="store_true", help="every registered statement")
    p_ver.add_argument("--odd-range", metavar="A..B", help="odd n from A to B inclusive")
    p_ver.add_argument("--primes", metavar="A..B", help="primes p from A to B inclusive")
    p_ver.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_ver.add_argument("--format", **fmt)
    p_ver.add_argument("--out", help="write the report to this file")
    p_ver.add_argument("--fail-fast", action="store_true", help="stop after the first failing record")
    p_ver.set_defaults(func=cmd_verify)

    p_wz = sub.add_parser("wz", help="check the WZ pairs and their telescoping")
    p_wz.add_argument("--pair", help="sec2 or sec3 (default both)")
    p_wz.add_argument("--max-m", type=int, default=10)
    p_wz.add_argument("--max-k", type=int, default=10)
    p_wz.add_argument("--n", help="comma separated odd n for telescoping checks")
    p_wz.add_argument("--format", **fmt)
    p_wz.add_argument("--out", help="write the report to this file")
    p_wz.add_argument("--fail-fast", action="store_true")
    p_wz.set_defaults(func=cmd_wz)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, UnknownStatement) as exc:
        print(f"qverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
