"""Command-line interface: single-knot computation, batch census
processing, a direct Smith-oracle mode, and timing benchmarks.

Exit codes: 0 success, 1 input error (unparseable PD, unreadable or
malformed file), 2 internal error or an ambiguous result under a policy
with no fallback.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .exactla import PolyMatrix
from .invariants import AlexanderInvariants, compute_invariants
from .knotdiag import alexander_matrix, parse_pd
from .polyring import IntPoly
from .smithoracle import smith_form

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2

BATCH_FIELDS = ("name", "delta", "Delta", "method", "elapsed", "error")


def poly_str(coeffs: Sequence[int]) -> str:
    """Human form of an ascending coefficient tuple, highest power first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "t" if i == 1 else f"t^{i}"
            body = var if mag == 1 else f"{mag}*{var}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _policy_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--policy",
        choices=("fast", "fast-with-fallback", "oracle-only"),
        default="fast-with-fallback",
        help="evidence route, evidence with Smith fallback, or Smith only",
    )


def _format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=("json", "pretty"),
        default="pretty",
        help="machine JSON or human-readable polynomials",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alexinv",
        description="Invariant factors and higher Alexander polynomials "
        "of knots from PD codes, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="invariants of a single knot diagram")
    p_compute.add_argument("--pd", required=True,
                           help='PD code, e.g. "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"')
    _policy_arg(p_compute)
    _format_arg(p_compute)

    p_batch = sub.add_parser("batch", help="process a census file")
    p_batch.add_argument("--input", required=True,
                         help="CSV with header name,pd or JSON lines")
    p_batch.add_argument("--output", required=True,
                         help="result file; .csv or JSON lines")
    _policy_arg(p_batch)
    p_batch.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker processes (default: machine parallelism)")

    p_bench = sub.add_parser(
        "bench", help="timing by crossing number over a census file")
    p_bench.add_argument("--input", required=True)
    _policy_arg(p_bench)
    _format_arg(p_bench)
    p_bench.add_argument("--compare", action="store_true",
                         help="also time the oracle-only policy")

    p_smith = sub.add_parser(
        "smith", help="Smith oracle on a polynomial matrix file")
    p_smith.add_argument("--input", required=True,
                         help="JSON: array of arrays of coefficient arrays "
                         "(ascending)")
    _format_arg(p_smith)
    return parser


def _internal_policy(flag: str) -> str:
    return flag.replace("-", "_")


# ------------------------------------------------------------------ compute


def _render_compute(inv: AlexanderInvariants, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(inv.to_json_dict())
    lines = []
    for i, d in enumerate(inv.delta, start=1):
        lines.append(f"delta_{i} = {poly_str(d.coeffs)}")
    for i in range(1, len(inv.higher) + 2):
        lines.append(f"Delta_{i} = {poly_str(inv.big_delta(i).coeffs)}")
    if inv.ambiguous:
        shown = ", ".join(poly_str(p.coeffs) for p in inv.ambiguous)
        lines.append(f"ambiguous: {shown}")
    lines.append(f"method = {inv.method}")
    return "\n".join(lines)


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        pd = parse_pd(args.pd)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        inv = compute_invariants(
            alexander_matrix(pd), policy=_internal_policy(args.policy))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(_render_compute(inv, args.format))
    if inv.ambiguous:
        return EXIT_INTERNAL
    return EXIT_OK


# -------------------------------------------------------------------- batch


def _read_rows(path: Path) -> list[dict]:
    """Input rows as dicts with keys name, pd; CSV or JSON lines."""
    text = path.read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        rows = [json.loads(line) for line in text.splitlines() if line.strip()]
    else:
        rows = list(csv.DictReader(text.splitlines()))
    out = []
    for i, row in enumerate(rows):
        if not row or row.get("name") is None or row.get("pd") is None:
            raise ValueError(f"row {i + 1}: expected fields name, pd")
        out.append({"name": row["name"], "pd": row["pd"]})
    return out


def _process_row(task: tuple[dict, str]) -> dict:
    row, policy = task
    start = time.perf_counter()
    try:
        inv = compute_invariants(
            alexander_matrix(parse_pd(row["pd"])), policy=policy)
        result = inv.to_json_dict()
        out = {
            "name": row["name"],
            "delta": result["delta"],
            "Delta": result["Delta"],
            "method": result["method"],
            "error": "",
        }
    except Exception as exc:  # per-row failures never abort the batch
        out = {"name": row["name"], "delta": [], "Delta": [],
               "method": "error", "error": str(exc)}
    out["elapsed"] = time.perf_counter() - start
    return out


def _run_batch(rows: list[dict], policy: str, jobs: int) -> list[dict]:
    tasks = [(row, policy) for row in rows]
    if jobs > 1 and len(rows) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_process_row, tasks))
    return [_process_row(t) for t in tasks]


def _write_rows(path: Path, results: list[dict]) -> None:
    if path.suffix.lower() == ".csv":
        with open(path, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=BATCH_FIELDS)
            writer.writeheader()
            for r in results:
                row = dict(r)
                row["delta"] = json.dumps(r["delta"])
                row["Delta"] = json.dumps(r["Delta"])
                writer.writerow(row)
    else:
        with open(path, "w") as fh:
            for r in results:
                fh.write(json.dumps(r) + "\n")


def cmd_batch(args: argparse.Namespace) -> int:
    try:
        rows = _read_rows(Path(args.input))
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    results = _run_batch(rows, _internal_policy(args.policy), args.jobs)
    total = time.perf_counter() - start
    try:
        _write_rows(Path(args.output), results)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    failures = sum(1 for r in results if r["error"])
    rate = len(results) / total if total > 0 else float("inf")
    print(f"{len(results)} knots, {failures} failures, "
          f"{total:.3f} s, {rate:.1f} knots/s")
    return EXIT_OK


# -------------------------------------------------------------------- bench


def _crossing_count(pd_text: str) -> int:
    return parse_pd(pd_text).n_crossings


def _time_policy(rows: list[dict], policy: str) -> float:
    start = time.perf_counter()
    for row in rows:
        compute_invariants(
            alexander_matrix(parse_pd(row["pd"])), policy=policy)
    return (time.perf_counter() - start) / len(rows)


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        rows = _read_rows(Path(args.input))
        groups: dict[int, list[dict]] = {}
        for row in rows:
            groups.setdefault(_crossing_count(row["pd"]), []).append(row)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    policy = _internal_policy(args.policy)
    table = []
    for crossings in sorted(groups):
        entry = {
            "crossings": crossings,
            "knots": len(groups[crossings]),
            "avg_seconds": _time_policy(groups[crossings], policy),
        }
        if args.compare:
            entry["avg_seconds_oracle"] = _time_policy(
                groups[crossings], "oracle_only")
        table.append(entry)
    avgs = [e["avg_seconds"] for e in table]
    trend = all(a < b for a, b in zip(avgs, avgs[1:]))
    if args.format == "json":
        print(json.dumps({"groups": table, "trend_increasing": trend}))
        return EXIT_OK
    header = f"{'crossings':>9}  {'knots':>5}  {'avg s/knot':>12}"
    if args.compare:
        header += f"  {'oracle s/knot':>13}  {'speedup':>7}"
    print(header)
    for e in table:
        line = (f"{e['crossings']:>9}  {e['knots']:>5}  "
                f"{e['avg_seconds']:>12.6f}")
        if args.compare:
            ratio = e["avg_seconds_oracle"] / e["avg_seconds"]
            line += f"  {e['avg_seconds_oracle']:>13.6f}  {ratio:>6.1f}x"
        print(line)
    print(f"trend: {'increasing' if trend else 'not monotone'} "
          "with crossing number")
    return EXIT_OK


# -------------------------------------------------------------------- smith


def cmd_smith(args: argparse.Namespace) -> int:
    try:
        data = json.loads(Path(args.input).read_text())
        rows = [[IntPoly(tuple(c)) for c in row] for row in data]
        matrix = PolyMatrix.from_rows(rows)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    result = smith_form(matrix)
    factors = [list(f.coeffs) for f in result.invariant_factors]
    if args.format == "json":
        print(json.dumps({"invariant_factors": factors}))
    else:
        if not factors:
            print("module is trivial")
        for i, f in enumerate(result.invariant_factors, start=1):
            print(f"delta_{i} = {poly_str(f.coeffs)}")
    return EXIT_OK


def main(argv: Optional[Iterable[str]] = None) -> int:
    args = build_parser().parse_args(
        list(argv) if argv is not None else None)
    handler = {
        "compute": cmd_compute,
        "batch": cmd_batch,
        "bench": cmd_bench,
        "smith": cmd_smith,
    }[args.command]
    try:
        return handler(args)
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
