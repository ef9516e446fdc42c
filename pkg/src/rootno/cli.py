"""Command line front end.

Subcommands: root-number (one fibre, with per-prime breakdown), check
(constancy of the sign on t = a*u + b), scan (a window of fibres as
text/CSV/JSON), rank-jump (conditional rank prediction for the quartic
shape), audit (re-derive the worked-example claims and print the
divergence ledger), search (constant progressions in a box).

Exit codes: 0 success, constant verdict, or empty audit ledger;
1 non-constant verdict; 2 singular fibre; 3 audit ledger has records;
64 usage or malformed arguments.
"""

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .audit import falsify_constancy, ledger_json, run_paper_examples
from .constancy import check_f, check_f_table1
from .families import is_singular, l_to_f
from .local_signs import w_star_hit
from .rank_jump import rank_jump_report
from .root_number import breakdown_f

EXIT_OK = 0
EXIT_NONCONSTANT = 1
EXIT_SINGULAR = 2
EXIT_RECORDS = 3
EXIT_USAGE = 64

_WITNESS_BUDGET = 200


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the contract here is 64
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _sign_text(w) -> str:
    return "+1" if w == 1 else "-1"


def _print_factors(factors) -> None:
    for p in sorted(factors):
        print("  %d: %s" % (p, _sign_text(factors[p])))


# ---------------------------------------------------------------------------
# root-number
# ---------------------------------------------------------------------------

def cmd_root_number(args) -> int:
    if args.family == "l":
        if args.w is None or args.v is None:
            raise _UsageError("--family l needs --w and --v")
        S, T = l_to_f(Fraction(args.w), Fraction(args.s), Fraction(args.v),
                      Fraction(args.t))
        if S.denominator != 1 or T.denominator != 1:
            raise _UsageError("reduction (s*w^2, w*(t^2+v)) is not integral")
        S, T = S.numerator, T.numerator
    else:
        if args.w is not None or args.v is not None:
            raise _UsageError("--w/--v only apply to --family l")
        S, T = args.s, args.t
    if is_singular(S, T):
        print("singular fibre (s=%d, t=%d)" % (S, T), file=sys.stderr)
        return EXIT_SINGULAR
    bd = breakdown_f(S, T)
    if args.json:
        record = {"family": args.family, "s": args.s, "t": args.t}
        if args.family == "l":
            record["w"] = args.w
            record["v"] = args.v
            record["reduced_s"] = S
            record["reduced_t"] = T
        record["W"] = bd.w
        record["factors"] = {str(p): bd.factors[p] for p in sorted(bd.factors)}
        print(json.dumps(record))
        return EXIT_OK
    print("W = %s" % _sign_text(bd.w))
    if args.family == "l":
        print("reduced: s = %d, t = %d" % (S, T))
    _print_factors(bd.factors)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    if args.s == 0:
        raise _UsageError("s must be nonzero")
    try:
        verdict = check_f(args.s, args.a, args.b)
        row = check_f_table1(args.s, args.a, args.b) if args.table1 else None
    except ValueError as exc:
        raise _UsageError(str(exc))
    witnesses = None
    if not verdict.constant:
        pair = falsify_constancy(args.s, args.a, args.b, _WITNESS_BUDGET)
        if pair is not None:
            witnesses = [
                {"u": u, "t": args.a * u + args.b, "W": w} for u, w in pair
            ]
    if args.json:
        record = {
            "constant": verdict.constant,
            "sign": verdict.sign,
            "matched": list(verdict.matched),
            "reason": verdict.reason,
            "witnesses": witnesses,
        }
        if args.table1:
            record["table1_row"] = row
        print(json.dumps(record))
        return EXIT_OK if verdict.constant else EXIT_NONCONSTANT
    print(str(verdict))
    if args.table1:
        print("table route: %s" % (row if row is not None else "no matching row"))
    if verdict.constant:
        return EXIT_OK
    if witnesses is not None:
        for rec in witnesses:
            print("witness: W = %s at u=%d (t=%d)"
                  % (_sign_text(rec["W"]), rec["u"], rec["t"]))
    else:
        print("no witness fibre found within the search budget")
    print("see: rootno audit --suite paper-examples")
    return EXIT_NONCONSTANT


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def _scan_record(job) -> dict:
    s, a, b, u = job
    t = a * u + b
    if is_singular(s, t):
        return {"u": u, "t": t, "singular": True, "W": None, "factors": {}}
    bd = breakdown_f(s, t)
    return {"u": u, "t": t, "singular": False, "W": bd.w,
            "factors": dict(bd.factors)}


def _resolve_jobs(args) -> int:
    if args.jobs is not None:
        jobs = args.jobs
    else:
        raw = os.environ.get("ROOTNO_JOBS", "1")
        try:
            jobs = int(raw)
        except ValueError:
            raise _UsageError("ROOTNO_JOBS must be an integer, got %r" % raw)
    if jobs < 1:
        raise _UsageError("jobs must be >= 1")
    return jobs


def cmd_scan(args) -> int:
    if args.s == 0:
        raise _UsageError("s must be nonzero")
    if args.a == 0:
        raise _UsageError("a must be nonzero")
    if args.u_min > args.u_max:
        raise _UsageError("--u-min must not exceed --u-max")
    jobs = _resolve_jobs(args)
    work = [(args.s, args.a, args.b, u)
            for u in range(args.u_min, args.u_max + 1)]
    if jobs == 1 or len(work) < 2:
        rows = [_scan_record(job) for job in work]
    else:
        # ordered map keeps the output byte-identical for any job count
        chunk = max(1, len(work) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_record, work, chunksize=chunk))
    plus = sum(1 for r in rows if r["W"] == 1)
    minus = sum(1 for r in rows if r["W"] == -1)
    singular = sum(1 for r in rows if r["singular"])
    average = Fraction(plus - minus, plus + minus) if plus + minus else None
    if args.json:
        doc = {
            "s": args.s, "a": args.a, "b": args.b,
            "u_min": args.u_min, "u_max": args.u_max,
            "rows": [
                {"u": r["u"], "t": r["t"], "singular": r["singular"],
                 "W": r["W"],
                 "factors": {str(p): r["factors"][p]
                             for p in sorted(r["factors"])}}
                for r in rows
            ],
            "summary": {"plus": plus, "minus": minus, "singular": singular,
                        "average": str(average) if average is not None else None},
        }
        print(json.dumps(doc))
        return EXIT_OK
    summary = ("summary: plus=%d minus=%d singular=%d average=%s"
               % (plus, minus, singular,
                  average if average is not None else "n/a"))
    if args.csv:
        base = sorted({p for r in rows for p in r["factors"]})
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["u", "t", "singular", "W"]
                        + ["w_%d" % p for p in base])
        for r in rows:
            if r["singular"]:
                writer.writerow([r["u"], r["t"], "true", ""] + [""] * len(base))
            else:
                # a union prime outside this fibre's base does not divide
                # 6 s (t^2 - s), so its local sign is +1
                writer.writerow([r["u"], r["t"], "false", r["W"]]
                                + [r["factors"].get(p, 1) for p in base])
        print(summary, file=sys.stderr)
        return EXIT_OK
    for r in rows:
        if r["singular"]:
            print("u=%d t=%d singular" % (r["u"], r["t"]))
        else:
            print("u=%d t=%d W=%s" % (r["u"], r["t"], _sign_text(r["W"])))
    print(summary)
    return EXIT_OK


# ---------------------------------------------------------------------------
# rank-jump / audit / search
# ---------------------------------------------------------------------------

def cmd_rank_jump(args) -> int:
    try:
        report = rank_jump_report(args.s, args.a, args.b)
    except ValueError as exc:
        raise _UsageError(str(exc))
    doc = {}
    for key, value in report.items():
        if key == "per_prime":
            doc[key] = {str(p): value[p] for p in value}
        else:
            doc[key] = value
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def _classical_cross_check(out: dict) -> None:
    root = os.environ.get("ROOTNO_CLASSICAL_DATA")
    path = os.path.join(root, "local_signs.json") if root else None
    if path is None or not os.path.exists(path):
        print("rootno: classical oracle has no data; skipping oracle rows",
              file=sys.stderr)
        return
    with open(path) as fh:
        data = json.load(fh)
    compared = 0
    for key in sorted(data):
        p, s, t = (int(x) for x in key.split(":"))
        try:
            hit = w_star_hit(p, s, t)
        except ValueError:
            continue
        compared += 1
        if hit.sign != data[key]:
            out["records"].append({
                "kind": "classical-vs-table",
                "p": p, "s": s, "t": t,
                "classical": data[key], "table": hit.sign,
                "table_row": "%s:%s" % (hit.table, hit.row_id),
            })
    out["checked"].append("classical oracle: compared %d local signs" % compared)


def cmd_audit(args) -> int:
    out = run_paper_examples()
    if args.with_classical_oracle:
        _classical_cross_check(out)
    sys.stdout.write(ledger_json(out))
    return EXIT_RECORDS if out["records"] else EXIT_OK


def cmd_search(args) -> int:
    if args.a_max < 1 or args.b_max < 1:
        raise _UsageError("--a-max and --b-max must be >= 1")
    for a in range(1, args.a_max + 1):
        for b in range(1, args.b_max + 1):
            try:
                verdict = check_f(args.s, a, b)
            except ValueError as exc:
                raise _UsageError(str(exc))
            if verdict.constant:
                print("a=%d b=%d %s" % (a, b, verdict))
    return EXIT_OK


# ---------------------------------------------------------------------------
# wiring
# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="rootno", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root-number", help="root number of one fibre")
    p.add_argument("--family", choices=("f", "l"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--w", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_root_number)

    p = sub.add_parser("check", help="constancy of the sign on t = a*u + b")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--table1", action="store_true",
                   help="also print the table-lookup route")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="scan a window of fibres")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--u-min", type=int, required=True)
    p.add_argument("--u-max", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int,
                   help="worker processes (default: $ROOTNO_JOBS or 1)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("rank-jump", help="conditional rank-jump report")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_rank_jump)

    p = sub.add_parser("audit", help="re-derive worked-example claims")
    p.add_argument("--suite", choices=("paper-examples",), required=True)
    p.add_argument("--with-classical-oracle", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("search", help="constant progressions in a box")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print("rootno: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
