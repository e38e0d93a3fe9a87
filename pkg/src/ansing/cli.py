"""Command-line surface: one verb per computation, JSON (default) or CSV out.

Exit codes: 0 success, 2 invalid input, 3 verification failure (formula vs
oracle mismatch, integrality failure, non-rational group average, or an
unfittable sequence).  Verification verbs exit nonzero on mismatch so CI can
gate on them.  Rationals are serialized as "p/q" everywhere, timestamps are
suppressed with --no-timestamp, and sweeps can fan out over worker processes
and persist rows in an append-only checksummed cache.
"""

from __future__ import annotations

import argparse
import csv
import datetime
import hashlib
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import asymptotics, bigness, extension, invariants, latticesum, oracle, quasifit
from .exactmath import format_rational
from .invariants import NonRationalError
from .quasifit import FitRequest, InsufficientSamplesError, NoPeriodFitsError


class CliInputError(ValueError):
    pass


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CliInputError(message)


# ---------------------------------------------------------------------------
# sweep rows and cache
# ---------------------------------------------------------------------------


def _sweep_row(task: tuple[int, int]) -> dict:
    n, m = task
    rec = invariants.invariant_record(n, m)
    return {
        "m": m,
        "hsum": rec["hsum"],
        "mu": format_rational(rec["mu"]),
        "chi_orb": format_rational(rec["chi_orb"]),
        "h1": format_rational(rec["h1"]),
    }


_ROW_FIELDS = ("m", "hsum", "mu", "chi_orb", "h1")


def _row_checksum(n: int, row: dict) -> str:
    canonical = json.dumps({"n": n, "row": row}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _load_cache(path: Path, n: int) -> dict[int, dict]:
    rows: dict[int, dict] = {}
    if not path.exists():
        return rows
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
            if record.get("n") != n:
                continue
            row = record["row"]
            if record.get("checksum") != _row_checksum(n, row):
                continue  # corrupted row: recompute
            # normalize key order: the cache serializes rows with sorted keys
            rows[row["m"]] = {field: row[field] for field in _ROW_FIELDS}
        except (json.JSONDecodeError, KeyError, TypeError):
            continue  # unreadable line: recompute
    return rows


def _append_cache(path: Path, n: int, rows: list[dict]) -> None:
    with path.open("a", encoding="utf-8") as handle:
        for row in rows:
            record = {"n": n, "row": row, "checksum": _row_checksum(n, row)}
            handle.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")


def sweep(
    n: int,
    m_from: int,
    m_to: int,
    parallel: int = 1,
    cache_path: Path | None = None,
) -> list[dict]:
    """Rows {m, hsum, mu, chi_orb, h1} for m_from..m_to, ordered by m."""
    wanted = list(range(m_from, m_to + 1))
    cached = _load_cache(cache_path, n) if cache_path else {}
    rows = {m: cached[m] for m in wanted if m in cached}
    missing = [m for m in wanted if m not in rows]
    if missing:
        tasks = [(n, m) for m in missing]
        if parallel > 1:
            with ProcessPoolExecutor(max_workers=parallel) as pool:
                computed = list(pool.map(_sweep_row, tasks))
        else:
            computed = [_sweep_row(task) for task in tasks]
        for row in computed:
            rows[row["m"]] = row
        if cache_path:
            _append_cache(cache_path, n, computed)
    return [rows[m] for m in wanted]


# ---------------------------------------------------------------------------
# verb handlers: each returns (payload, exit_code)
# ---------------------------------------------------------------------------


def _need_nm(args, m_min: int = 0) -> tuple[int, int]:
    _require(args.n is not None and args.n >= 1, "--n must be an integer >= 1")
    _require(args.m is not None and args.m >= m_min, f"--m must be an integer >= {m_min}")
    return args.n, args.m


def _cmd_hsum(args):
    n, m = _need_nm(args)
    return {"n": n, "m": m, "hsum": latticesum.hsum(n, m)}, 0


def _cmd_sweep(args):
    _require(args.n is not None and args.n >= 1, "--n must be an integer >= 1")
    _require(args.m_from is not None and args.m_from >= 0, "--m-from must be >= 0")
    _require(args.m_to is not None and args.m_to >= -1, "--m-to must be >= -1")
    _require(args.m_from <= args.m_to + 1, "--m-from must be <= --m-to + 1")
    _require(args.parallel >= 1, "--parallel must be >= 1")
    cache_path = Path(args.cache) if args.cache else None
    rows = sweep(args.n, args.m_from, args.m_to, args.parallel, cache_path)
    return {"n": args.n, "rows": rows}, 0


def _cmd_oracle_verify(args):
    n, m = _need_nm(args)
    formula = latticesum.hsum(n, m)
    brute = oracle.hsum_oracle(n, m)
    match = formula == brute
    return {"n": n, "m": m, "formula": formula, "oracle": brute, "match": match}, (
        0 if match else 3
    )


def _cmd_omega(args):
    _require(args.n is not None and args.n >= 1, "--n must be an integer >= 1")
    return {
        "n": args.n,
        "h0_omega": asymptotics.h0_omega(args.n),
        "h1_omega": invariants.h1_omega(args.n),
    }, 0


def _cmd_mu(args):
    n, m = _need_nm(args)
    return {"n": n, "m": m, "mu": invariants.mu(n, m)}, 0


def _cmd_chi_orb(args):
    n, m = _need_nm(args)
    return {"n": n, "m": m, "chi_orb": invariants.chi_orb(n, m)}, 0


def _cmd_h1(args):
    n, m = _need_nm(args)
    rec = invariants.invariant_record(n, m)
    value = rec["h1"]
    ok = value.denominator == 1 and value >= 0
    payload = dict(rec)
    payload["integral_and_nonnegative"] = ok
    return payload, 0 if ok else 3


def _cmd_divisor(args):
    n, m = _need_nm(args)
    return extension.divisor_record(n, m), 0


def _cmd_polygon(args):
    n, m = _need_nm(args)
    poly = latticesum.polygon(n, m)
    piece_payload = []
    for piece in asymptotics.pieces(n, m):
        piece_payload.append(
            {
                "label": piece.label,
                "vertices": [[x, y] for x, y in piece.vertices],
                "weight": {
                    "x1": piece.weight.a,
                    "x2": piece.weight.b,
                    "m": piece.weight.c,
                    "const": piece.weight.d,
                },
            }
        )
    return {
        "n": n,
        "m": m,
        "half_planes": [list(plane) for plane in poly.half_planes],
        "pieces": piece_payload,
    }, 0


def _cmd_fit(args):
    _require(args.n is not None and args.n >= 1, "--n must be an integer >= 1")
    _require(args.degree >= 0, "--degree must be >= 0")
    _require(args.max_period >= 1, "--max-period must be >= 1")
    m_to = args.m_to
    if m_to is None:
        m_to = (args.degree + 3) * args.max_period - 1
    _require(m_to >= 0, "--m-to must be >= 0")
    values = tuple(
        (m, Fraction(latticesum.hsum(args.n, m))) for m in range(m_to + 1)
    )
    qp = quasifit.fit(FitRequest(values=values, degree=args.degree, max_period=args.max_period))
    return {
        "n": args.n,
        "degree": args.degree,
        "max_period": args.max_period,
        "m_to": m_to,
        "period": qp.period,
        "branches": [list(branch) for branch in qp.branches],
    }, 0


def _cmd_integral_check(args):
    n, m = _need_nm(args)
    return asymptotics.integral_vs_sum_check(n, m), 0


def _cmd_bigness(args):
    _require(args.config is not None, "--config PATH is required")
    cfg = bigness.load_config(args.config)
    return bigness.evaluate_criterion(cfg), 0


def _cmd_limits(args):
    _require(args.n is not None and args.n >= 2, "--n (the n_max to scan) must be >= 2")
    return {
        "h0": asymptotics.h0_omega_limit_report(args.n),
        "h1": invariants.h1_omega_limit_report(args.n),
    }, 0


_HANDLERS = {
    "hsum": _cmd_hsum,
    "hsum-sweep": _cmd_sweep,
    "oracle-verify": _cmd_oracle_verify,
    "omega": _cmd_omega,
    "mu": _cmd_mu,
    "chi-orb": _cmd_chi_orb,
    "h1": _cmd_h1,
    "divisor": _cmd_divisor,
    "polygon": _cmd_polygon,
    "fit": _cmd_fit,
    "integral-check": _cmd_integral_check,
    "bigness": _cmd_bigness,
    "limits": _cmd_limits,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ansing",
        description="Exact invariants of A_n surface singularities.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in _HANDLERS:
        p = sub.add_parser(verb)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--m-from", dest="m_from", type=int, default=None)
        p.add_argument("--m-to", dest="m_to", type=int, default=None)
        p.add_argument("--degree", type=int, default=3)
        p.add_argument("--max-period", dest="max_period", type=int, default=12)
        p.add_argument("--csv", action="store_true")
        p.add_argument("--json", action="store_true", help="JSON output (the default)")
        p.add_argument("--cache", type=str, default=None)
        p.add_argument("--parallel", type=int, default=1)
        p.add_argument("--config", type=str, default=None)
        p.add_argument("--no-timestamp", dest="no_timestamp", action="store_true")
    return parser


def _csv_rows(payload: dict) -> list[dict]:
    if "rows" in payload:
        return payload["rows"]
    if "pieces" in payload:
        return [
            {
                "label": piece["label"],
                "vertices": json.dumps(piece["vertices"]),
                **{f"weight_{key}": val for key, val in piece["weight"].items()},
            }
            for piece in payload["pieces"]
        ]
    if "branches" in payload:
        return [
            {"residue": idx, **{f"c{k}": c for k, c in enumerate(branch)}}
            for idx, branch in enumerate(payload["branches"])
        ]
    return [payload]


def _emit_csv(payload: dict) -> str:
    rows = _csv_rows(payload)
    buffer = io.StringIO()
    fields: list[str] = []
    for row in rows:
        for key in row:
            if key not in fields:
                fields.append(key)
    writer = csv.DictWriter(buffer, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                key: json.dumps(val) if isinstance(val, (list, dict)) else val
                for key, val in row.items()
            }
        )
    return buffer.getvalue()


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        payload, code = _HANDLERS[args.verb](args)
    except (CliInputError, bigness.ConfigError, InsufficientSamplesError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except (NonRationalError, NoPeriodFitsError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 3
    payload = _jsonable(payload)
    if args.csv:
        sys.stdout.write(_emit_csv(payload))
    else:
        if not args.no_timestamp:
            payload["timestamp"] = (
                datetime.datetime.now(datetime.timezone.utc).isoformat()
            )
        sys.stdout.write(json.dumps(payload) + "\n")
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
