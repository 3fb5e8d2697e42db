"""Command-line interface: ``cohsys info|critical|poincare|report|sweep``.

Payloads go to stdout as JSON (or CSV where offered); diagnostics go to
stderr. Exit codes:

    0  success
    2  invalid parameters or range
    3  alpha is a wall (critical value)
    4  even degree where an odd-degree formula is required
    5  output path not writable
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import CohSysError, CriticalAlpha, ParityError
from .moduli import (
    SystemType,
    alpha_I_bound,
    alpha_T,
    alpha_max,
    beta,
    candidate_critical_values,
    certified_walls_k_n_minus_2,
    is_nonempty,
    kbound_holds,
)
from .poincare import (
    ChamberQuery,
    chamber_intervals,
    chamber_query,
    p_G_chamber,
    wall_crossing_difference,
)
from .report import topology_report
from .serialize import (
    poincare_payload,
    poly_to_json,
    rational_to_json,
    report_to_json,
    type_to_json,
    walls_to_json,
)

EXIT_OK, EXIT_INVALID, EXIT_CRITICAL, EXIT_PARITY, EXIT_IO = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INVALID):
        super().__init__(message)
        self.code = code


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _int_range(text: str) -> Tuple[int, int]:
    """``"a:b"`` (inclusive) or a single integer."""
    try:
        if ":" in text:
            a, b = text.split(":", 1)
            return int(a), int(b)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer range: {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _system(args, k: Optional[int] = None) -> SystemType:
    return SystemType(args.n, args.d, args.k if k is None else k, args.g)


def cmd_info(args) -> None:
    s = _system(args)
    out = {"type": type_to_json(s), "beta": beta(s), "N": s.N}
    wall_ok = 0 < s.k < s.n
    out["alpha_T"] = rational_to_json(alpha_T(s)) if wall_ok else None
    out["alpha_I_bound"] = rational_to_json(alpha_I_bound(s)) if 1 <= s.k <= s.n else None
    if s.n >= 2 and 0 < s.k <= s.n:
        if s.k < s.n:
            hi = alpha_max(s)
            probe = hi / 2
        else:
            hi, probe = None, Fraction(1)
        ok = is_nonempty(s, probe) if (hi is None or hi > 0) else False
        out["nonempty"] = ok
        out["nonempty_range"] = (
            {"lo": rational_to_json(0), "hi": rational_to_json(hi), "open": True}
            if ok else None
        )
    else:
        out["nonempty"] = None
        out["nonempty_range"] = None
    _emit(out)


def cmd_critical(args) -> None:
    s = _system(args)
    if args.certified:
        walls = certified_walls_k_n_minus_2(s)
        lo = args.lo if args.lo is not None else alpha_T(s)
        hi = args.hi if args.hi is not None else alpha_max(s)
        if lo >= hi:
            raise CliError(f"empty range ({lo}, {hi})")
        groups = {}
        for w in walls:
            if lo < w.alpha < hi:
                groups.setdefault(w.alpha, []).append(w)
        _emit(walls_to_json(sorted(groups.items())))
    else:
        lo = args.lo if args.lo is not None else Fraction(0)
        hi = args.hi if args.hi is not None else alpha_max(s)
        _emit(walls_to_json(candidate_critical_values(s, lo, hi)))


def _poincare_row(s: SystemType, q: ChamberQuery, chamber: Optional[int]) -> dict:
    poly = p_G_chamber(q)
    out = {"type": type_to_json(s), "alpha": rational_to_json(q.alpha_prime)}
    if chamber is not None:
        out["chamber"] = chamber
    out.update(poincare_payload(poly, beta(s)))
    return out


def _csv_text(rows: Sequence[dict]) -> str:
    width = max((len(r["coeffs"]) for r in rows if r.get("coeffs") is not None), default=0)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["n", "d", "k", "g", "chamber", "alpha_num", "alpha_den", "beta", "degree", "palindrome"]
        + [f"b{i}" for i in range(width)]
    )
    for r in rows:
        t, a = r["type"], r["alpha"]
        coeffs = list(r.get("coeffs") or [])
        w.writerow(
            [t["n"], t["d"], t["k"], t["g"], r.get("chamber", ""), a["num"], a["den"],
             r["beta"], r.get("degree", ""), r.get("palindrome", "")]
            + coeffs + [""] * (width - len(coeffs))
        )
    return buf.getvalue()


def cmd_poincare(args) -> None:
    s = SystemType(args.n, args.d, args.n - 2, args.g)
    if s.d % 2 == 0:
        raise ParityError(f"d must be odd, got d={s.d}")
    if args.alpha is not None:
        q, chamber = ChamberQuery(s, args.alpha), None
    else:
        q, chamber = chamber_query(s, args.chamber), args.chamber
    row = _poincare_row(s, q, chamber)
    if args.format == "csv":
        sys.stdout.write(_csv_text([row]))
    else:
        _emit(row)


def cmd_report(args) -> None:
    s = _system(args)
    _emit(report_to_json(topology_report(s, args.alpha, conjectures=args.conjectures)))


@dataclass(frozen=True)
class SweepSpec:
    n: Tuple[int, int]
    d: Tuple[int, int]
    g: Tuple[int, int]
    parity: str = "odd"
    sample: str = "mid"
    out: str = "-"

    def __post_init__(self):
        if self.parity not in ("odd", "even", "all"):
            raise CliError(f"parity must be odd, even or all, not {self.parity!r}")
        if self.sample != "mid":
            raise CliError(f"unknown chamber sampling rule {self.sample!r}")

    def types(self) -> List[SystemType]:
        out = []
        for n in range(self.n[0], self.n[1] + 1):
            for d in range(self.d[0], self.d[1] + 1):
                if self.parity == "odd" and d % 2 == 0:
                    continue
                if self.parity == "even" and d % 2 == 1:
                    continue
                for g in range(max(self.g[0], 2), self.g[1] + 1):
                    if n < 3 or d <= 0:
                        continue
                    s = SystemType(n, d, n - 2, g)
                    if kbound_holds(s):
                        out.append(s)
        return out


def sweep_lines(s: SystemType) -> List[dict]:
    """One record per chamber of ``s``, ascending in alpha."""
    walls = certified_walls_k_n_minus_2(s)
    wall_json = walls_to_json([(w.alpha, [w]) for w in walls])
    rows = []
    for i, (lo, hi) in enumerate(chamber_intervals(s)):
        q = ChamberQuery(s, (lo + hi) / 2)
        row = {
            "n": s.n, "d": s.d, "k": s.k, "g": s.g, "chamber": i,
            "interval": {"lo": rational_to_json(lo), "hi": rational_to_json(hi)},
            "alpha": rational_to_json(q.alpha_prime),
            "beta": beta(s),
            "walls": wall_json,
        }
        if s.d % 2 == 1:
            row["poincare"] = poincare_payload(p_G_chamber(q), beta(s))
            row["difference"] = None
        else:
            row["poincare"] = None
            row["difference"] = poly_to_json(wall_crossing_difference(q))
        rows.append(row)
    return rows


def _workers() -> int:
    env = os.environ.get("COHSYS_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise CliError(f"COHSYS_THREADS must be an integer, got {env!r}") from None
    return os.cpu_count() or 1


def run_sweep(spec: SweepSpec) -> List[dict]:
    types = spec.types()
    workers = min(_workers(), len(types))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            chunks = list(ex.map(sweep_lines, types))
    else:
        chunks = [sweep_lines(s) for s in types]
    return [row for chunk in chunks for row in chunk]


def cmd_sweep(args) -> None:
    spec = SweepSpec(args.n, args.d, args.g, args.parity, args.sample, args.out)
    rows = run_sweep(spec)
    if args.format == "csv":
        flat = []
        for r in rows:
            t = {"n": r["n"], "d": r["d"], "k": r["k"], "g": r["g"]}
            pc = r["poincare"] or {}
            flat.append({
                "type": t, "alpha": r["alpha"], "chamber": r["chamber"], "beta": r["beta"],
                "coeffs": pc.get("coeffs"), "degree": pc.get("degree", ""),
                "palindrome": pc.get("palindrome", ""),
            })
        text = _csv_text(flat) if flat else ""
    else:
        text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    if spec.out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(spec.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {spec.out}: {exc.strerror}", EXIT_IO) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cohsys",
        description="Chamber structure and Poincare polynomials of coherent-system moduli.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def type_args(p, with_k=True):
        p.add_argument("--n", type=int, required=True, help="rank")
        p.add_argument("--d", type=int, required=True, help="degree")
        if with_k:
            p.add_argument("--k", type=int, required=True, help="number of sections")
        p.add_argument("--g", type=int, required=True, help="genus (>= 2)")

    p = sub.add_parser("info", help="dimension, thresholds and non-emptiness")
    type_args(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("critical", help="list walls in a range of alpha")
    type_args(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--certified", action="store_true", help="flip walls (k = n-2 only)")
    mode.add_argument("--candidates", action="store_true", help="all numerical walls (default)")
    p.add_argument("--lo", type=_rational)
    p.add_argument("--hi", type=_rational)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("poincare", help="Poincare polynomial for k = n-2, d odd")
    type_args(p, with_k=False)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--alpha", type=_rational)
    where.add_argument("--chamber", type=int, help="chamber index, 0 = lowest, -1 = last")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("report", help="Picard and homotopy groups")
    type_args(p)
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--conjectures", action="store_true",
                   help="include statements that are conjectural, tagged as such")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("sweep", help="Poincare polynomials over a grid of types (k = n-2)")
    p.add_argument("--n", type=_int_range, required=True, help="a:b inclusive")
    p.add_argument("--d", type=_int_range, required=True)
    p.add_argument("--g", type=_int_range, required=True)
    p.add_argument("--parity", choices=("odd", "even", "all"), default="odd")
    p.add_argument("--sample", default="mid", help="chamber sampling rule (only 'mid')")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CriticalAlpha as exc:
        print(f"cohsys: {exc}", file=sys.stderr)
        return EXIT_CRITICAL
    except ParityError as exc:
        print(f"cohsys: {exc}", file=sys.stderr)
        return EXIT_PARITY
    except CliError as exc:
        print(f"cohsys: {exc}", file=sys.stderr)
        return exc.code
    except CohSysError as exc:
        print(f"cohsys: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
