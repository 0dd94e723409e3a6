"""Command-line front end: list, verify, sweep, oracle, polyid.

Exit codes: 0 all verified records hold, 1 at least one counterexample,
2 usage error. Machine output (jsonl/csv) is byte-identical across --jobs
settings; per-record timings are zeroed unless --timings is given, since
real timings would break that reproducibility.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .checks import (
    InapplicablePrime,
    UnknownCheck,
    get_check,
    list_checks,
    run_check,
    run_grid,
    sweep_reports,
)
from .checks.oracle import exact_intermediates, exact_lhs_string
from .checks.registry import default_sweep_ids

_CSV_HEADER = "check,p,k,lhs,rhs,holds,us"


def _record(report, timings: bool) -> dict:
    return {
        "check": report.check_id,
        "p": report.p,
        "k": report.instance.mod_exponent,
        "lhs": str(report.lhs),
        "rhs": str(report.rhs),
        "holds": report.holds,
        "us": report.elapsed_us if timings else 0,
    }


def _emit(lines, out: str | None):
    text = "".join(f"{line}\n" for line in lines)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _format_reports(reports, fmt: str, timings: bool, verbose: bool, summary: str):
    lines = []
    if fmt == "jsonl":
        for r in reports:
            lines.append(json.dumps(_record(r, timings), separators=(",", ":")))
    elif fmt == "csv":
        lines.append(_CSV_HEADER)
        for r in reports:
            d = _record(r, timings)
            lines.append(
                f'{d["check"]},{d["p"]},{d["k"]},{d["lhs"]},{d["rhs"]},'
                f'{str(d["holds"]).lower()},{d["us"]}'
            )
    else:
        for r in reports:
            if verbose or not r.holds:
                status = "ok" if r.holds else "FAIL"
                lines.append(
                    f"{status} {r.check_id} p={r.p} (mod p^{r.instance.mod_exponent}): "
                    f"lhs={r.lhs} rhs={r.rhs}"
                )
        lines.append(summary)
    return lines


def _parse_class(text: str) -> tuple[int, int] | None:
    # "1mod3" -> (3, 1)
    if "mod" in text:
        r, m = text.split("mod", 1)
        try:
            return int(m), int(r)
        except ValueError:
            return None
    return None


def cmd_list(args) -> int:
    defs = list_checks()
    if args.klass:
        parsed = _parse_class(args.klass)
        if parsed is None:
            print(f"unrecognized class filter: {args.klass}", file=sys.stderr)
            return 2
        defs = [d for d in defs if parsed in d.classes]
    if args.format == "json":
        rows = [
            {
                "id": d.id,
                "statement": d.statement,
                "class": d.class_desc,
                "k": d.k,
                "cost": d.cost,
                "expected_fail": d.expected_fail,
                "cap": d.cap,
                "notes": d.notes,
            }
            for d in defs
        ]
        print(json.dumps(rows, indent=2))
        return 0
    for d in defs:
        status = " EXPECTED-FAIL" if d.expected_fail else ""
        mod = f"mod p^{d.k}" if d.k else "exact"
        cost = {"sweep": "O(p)", "small": f"small-p (<= {d.cap})", "grid": "grid"}[d.cost]
        print(f"{d.id:16s} | {d.class_desc:28s} | {mod:8s} | {cost}{status}")
        if args.verbose:
            print(f"{'':16s} | {d.statement}")
            if d.notes:
                print(f"{'':16s} | note: {d.notes}")
    return 0


def cmd_verify(args) -> int:
    try:
        cd = get_check(args.check)
    except UnknownCheck:
        print(f"unknown check id: {args.check}", file=sys.stderr)
        return 2
    if cd.cost == "grid":
        print(f"{args.check} is a prime-free grid check; use `pcv polyid`", file=sys.stderr)
        return 2
    if cd.cap is not None and args.pmax > cd.cap and not args.force:
        print(
            f"{args.check} is capped at p <= {cd.cap}; pass --force to go higher",
            file=sys.stderr,
        )
        return 2
    t0 = time.perf_counter()
    reports = sweep_reports(
        [args.check], pmin=args.pmin, pmax=args.pmax, jobs=args.jobs, force=args.force
    )
    wall = time.perf_counter() - t0
    fails = [r for r in reports if not r.holds]
    summary = (
        f"{args.check}: {len(reports)} primes checked in [{args.pmin}, {args.pmax}], "
        f"{len(fails)} counterexamples, {wall:.2f}s"
    )
    lines = _format_reports(reports, args.format, args.timings, args.verbose, summary)
    _emit(lines, args.out)
    return 0 if not fails else 1


def cmd_sweep(args) -> int:
    if args.checks:
        ids = [c.strip() for c in args.checks.split(",") if c.strip()]
        try:
            for cid in ids:
                if get_check(cid).cost == "grid":
                    print(f"{cid} is a grid check; use `pcv polyid`", file=sys.stderr)
                    return 2
        except UnknownCheck as exc:
            print(f"unknown check id: {exc.args[0]}", file=sys.stderr)
            return 2
    else:
        ids = default_sweep_ids()
    if args.klass:
        parsed = _parse_class(args.klass)
        if parsed is None:
            print(f"unrecognized class filter: {args.klass}", file=sys.stderr)
            return 2
        ids = [cid for cid in ids if parsed in get_check(cid).classes]
        if not ids:
            print(f"no selected checks in class {args.klass}", file=sys.stderr)
            return 2
    t0 = time.perf_counter()
    reports = sweep_reports(
        ids, pmin=args.pmin, pmax=args.pmax, jobs=args.jobs, force=args.force
    )
    wall = time.perf_counter() - t0
    fails = [r for r in reports if not r.holds]
    primes = len({r.p for r in reports})
    summary = (
        f"sweep: {len(ids)} checks, {primes} primes, {len(reports)} records, "
        f"{len(fails)} failures, {wall:.2f}s"
    )
    lines = _format_reports(reports, args.format, args.timings, args.verbose, summary)
    _emit(lines, args.out)
    return 0 if not fails else 1


def cmd_oracle(args) -> int:
    try:
        cd = get_check(args.check)
    except UnknownCheck:
        print(f"unknown check id: {args.check}", file=sys.stderr)
        return 2
    if cd.cost == "grid":
        print(f"{args.check} is a prime-free grid check; use `pcv polyid`", file=sys.stderr)
        return 2
    trace: dict = {}
    try:
        report = run_check(args.check, args.p, trace=trace)
    except InapplicablePrime as exc:
        print(str(exc), file=sys.stderr)
        return 2
    print(f"check:     {cd.id}")
    print(f"statement: {cd.statement}")
    print(f"prime:     {args.p}  (mod p^{report.instance.mod_exponent})")
    exact = exact_lhs_string(cd.id, args.p)
    if exact is not None:
        print(f"exact lhs: {exact}")
    print(f"lhs:       {report.lhs}")
    print(f"rhs:       {report.rhs}")
    print(f"verdict:   {'holds' if report.holds else 'FAILS'}")
    for key, val in exact_intermediates(cd.id, args.p).items():
        print(f"{key}: {val}")
    for key, val in trace.items():
        if key == "instances":
            print("instances:")
            for row in val[: 20 if not args.verbose else None]:
                print(f"    {row}")
        elif key == "items":
            print("items:")
            for name, lhs, rhs, k in val:
                mark = "ok" if lhs == rhs else "FAIL"
                print(f"    {mark} {name}: {lhs} vs {rhs} (mod p^{k})")
        else:
            print(f"{key}: {val}")
    return 0 if report.holds else 1


def cmd_polyid(args) -> int:
    ids = ["polid1", "polid2", "coeffid", "ek2004"]
    if args.checks:
        ids = [c.strip() for c in args.checks.split(",") if c.strip()]
        for cid in ids:
            if cid not in ("polid1", "polid2", "coeffid", "ek2004"):
                print(f"not a grid check: {cid}", file=sys.stderr)
                return 2
    lines = []
    bad = 0
    total = 0
    t0 = time.perf_counter()
    for cid in ids:
        nmax = args.nmax
        if cid == "coeffid":
            nmax = min(nmax, args.coeffid_nmax)
        if cid == "ek2004":
            nmax = min(nmax, 12)
        for params, holds in run_grid(cid, nmax):
            total += 1
            if not holds:
                bad += 1
            if args.format == "jsonl":
                rec = {"check": cid, **params, "holds": holds}
                lines.append(json.dumps(rec, separators=(",", ":")))
            elif not holds or args.verbose:
                lines.append(f"{'ok' if holds else 'FAIL'} {cid} {params}")
    wall = time.perf_counter() - t0
    if args.format != "jsonl":
        lines.append(f"polyid: {total} cells, {bad} failures, {wall:.2f}s")
    _emit(lines, args.out)
    return 0 if bad == 0 else 1


def _add_common(sp, pmax_default=10**4):
    sp.add_argument("--pmin", type=int, default=3)
    sp.add_argument("--pmax", type=int, default=pmax_default)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--format", choices=("human", "jsonl", "csv"), default="human")
    sp.add_argument("--out", default=None, help="write output to a file")
    sp.add_argument("--force", action="store_true", help="ignore small-p caps")
    sp.add_argument("--verbose", action="store_true")
    sp.add_argument(
        "--timings",
        action="store_true",
        help="emit real per-record microseconds (breaks byte-reproducibility)",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pcv", description="prime congruence verifier for central binomial sums"
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("list", help="show the check registry")
    sp.add_argument("--class", dest="klass", default=None, help="filter, e.g. 1mod3")
    sp.add_argument("--format", choices=("human", "json"), default="human")
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(fn=cmd_list)

    sp = sub.add_parser("verify", help="run one check over a prime range")
    sp.add_argument("check")
    _add_common(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("sweep", help="run many checks over a prime range")
    sp.add_argument("--checks", default=None, help="comma-separated check ids")
    sp.add_argument("--class", dest="klass", default=None, help="filter, e.g. 1mod3")
    _add_common(sp)
    sp.set_defaults(fn=cmd_sweep)

    sp = sub.add_parser("oracle", help="dump both sides and intermediates at one prime")
    sp.add_argument("check")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(fn=cmd_oracle)

    sp = sub.add_parser("polyid", help="run the prime-free polynomial/series grids")
    sp.add_argument("--checks", default=None, help="subset of polid1,polid2,coeffid,ek2004")
    sp.add_argument("--nmax", type=int, default=30)
    sp.add_argument("--coeffid-nmax", type=int, default=20)
    sp.add_argument("--format", choices=("human", "jsonl"), default="human")
    sp.add_argument("--out", default=None)
    sp.add_argument("--verbose", action="store_true")
    sp.set_defaults(fn=cmd_polyid)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


def run():  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
