"""Command line front end: ``table``, ``compute``, ``verify``, ``render``, ``scan``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_UP, Decimal

from . import arc, center
from .errors import LighthouseError, NoIlluminator
from .scene import Darkness, Variant, build_scene

DEFAULT_SEED = 42


def default_seed() -> int:
    return int(os.environ.get("LIGHTHOUSE_SEED", DEFAULT_SEED))


@dataclass
class CaseReport:
    n: int
    variant: str
    classification: str
    apex_x: float | None = None
    dark_single: float | None = None
    dark_total: float | None = None
    illuminator_k: int | None = None
    oracle: dict | None = None

    def __post_init__(self):
        if self.classification == Darkness.FINITE.value:
            if None in (self.apex_x, self.dark_single, self.dark_total):
                raise ValueError("finite reports need apex_x, dark_single and dark_total")
            if abs(self.dark_total - self.n * self.dark_single) > 1e-9:
                raise ValueError("dark_total must equal n * dark_single")

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    @classmethod
    def from_dict(cls, d: dict) -> CaseReport:
        return cls(**d)


def build_report(n: int, variant: Variant) -> CaseReport:
    if variant is Variant.CENTER:
        result = center.total_dark_area(n)
        if result.is_finite:
            x = center.apex_x_closed(n)
            return CaseReport(n, variant.value, "finite", x, center.dark_single(x), result.value)
        k = None
    else:
        result = arc.total_dark_area_arc(n)
        if result.is_finite:
            k, sol = arc.find_illuminator(build_scene(n))
            return CaseReport(n, variant.value, "finite", sol.x, center.dark_single(sol.x), result.value, k)
        k = None
    if result.tag is Darkness.ZERO:
        return CaseReport(n, variant.value, "zero", dark_single=0.0, dark_total=0.0, illuminator_k=k)
    return CaseReport(n, variant.value, "unbounded")


def round4(v: float) -> str:
    return str(Decimal(repr(v)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def _cell(r: CaseReport, unbounded: str = "inf") -> str:
    if r.classification == "unbounded":
        return unbounded
    if r.classification == "zero":
        return "0"
    return round4(r.dark_total)


def _variants(name: str) -> list[Variant]:
    return [Variant.CENTER, Variant.ARC] if name == "both" else [Variant(name)]


def cmd_table(max_n: int, variant: str = "both", fmt: str = "text") -> str:
    if max_n < 1:
        raise LighthouseError("--max-n must be at least 1")
    variants = _variants(variant)
    rows = [(n, [build_report(n, v) for v in variants]) for n in range(1, max_n + 1)]
    if fmt == "json":
        return json.dumps([r.to_dict() for _, reps in rows for r in reps], indent=2) + "\n"
    header = ["n"] + [v.value for v in variants]
    table = [[str(n)] + [_cell(r) for r in reps] for n, reps in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(table)
        return buf.getvalue()
    widths = [max(len(row[i]) for row in [header] + table) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in [header] + table]
    return "\n".join(lines) + "\n"


def _format_report(r: CaseReport, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(r.to_dict(), indent=2) + "\n"
    if fmt == "csv":
        d = r.to_dict()
        d.pop("oracle", None)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(d), lineterminator="\n")
        writer.writeheader()
        writer.writerow(d)
        return buf.getvalue()
    return "\n".join(f"{k}: {v}" for k, v in r.to_dict().items()) + "\n"


def cmd_compute(n: int, variant: str) -> CaseReport:
    return build_report(n, Variant(variant))


def cmd_verify(n: int, variant: str, samples: int, seed: int, workers: int = 1) -> dict:
    from .oracle import OracleConfig, estimate_dark_area

    report = build_report(n, Variant(variant))
    if report.classification != "finite":
        raise LighthouseError(f"verify needs a finite dark area; n={n} {variant} is {report.classification}")
    est = estimate_dark_area(build_scene(n), Variant(variant), OracleConfig(), samples, seed, workers=workers)
    target = report.dark_single
    tolerance = max(3.0 * est.std_error, 0.02 * target)
    deviation = abs(est.mean - target)
    report.oracle = asdict(est)
    return {
        "report": report.to_dict(),
        "analytic_dark_single": target,
        "oracle_mean": est.mean,
        "deviation": deviation,
        "tolerance": tolerance,
        "pass": deviation <= tolerance,
    }


def cmd_render(n: int, variant: str, out: str, width: int = 800, height: int = 800, rays=True, dark=True) -> str:
    from .render import RenderOptions, render_scene

    v = Variant(variant)
    scene = build_scene(n)
    sol = None
    if v is Variant.CENTER and n >= 3 and n % 2:
        sol = center.center_tangent(n)
    elif v is Variant.ARC and n >= 2:
        try:
            sol = arc.find_illuminator(scene)[1]
        except NoIlluminator:
            sol = None
    opts = RenderOptions(width, height, rays, dark, v)
    svg = render_scene(scene, opts, sol)
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror}") from exc
    return out


def cmd_scan(kind: str, n_max: int, fmt: str = "text") -> str:
    if kind == "illuminator":
        header, rows = ["n", "k"], arc.illuminator_scan(n_max)
    else:
        header, rows = ["n", "D"], center.odd_growth_scan(n_max)
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    sep = "," if fmt == "csv" else "  "
    fmt_cell = lambda v: round4(v) if isinstance(v, float) else str(v)  # noqa: E731
    return "\n".join(sep.join(map(fmt_cell, r)) for r in [header] + rows) + "\n"


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lighthouse", description="Dark area around n facing lighthouses.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="total dark area for n = 1..max-n")
    t.add_argument("--max-n", type=int, default=5)
    t.add_argument("--variant", choices=["center", "arc", "both"], default="both")
    t.add_argument("--format", choices=["text", "csv", "json"], default="text")

    c = sub.add_parser("compute", help="analytic report for one n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--variant", choices=["center", "arc"], default="center")
    c.add_argument("--format", choices=["text", "csv", "json"], default="text")

    v = sub.add_parser("verify", help="compare the analytic area with Monte Carlo")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--variant", choices=["center", "arc"], default="center")
    v.add_argument("--samples", type=int, default=1_000_000)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=["json", "text"], default="json")

    r = sub.add_parser("render", help="write an SVG drawing")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--variant", choices=["center", "arc"], default="center")
    r.add_argument("--out", required=True)
    r.add_argument("--width", type=int, default=800)
    r.add_argument("--height", type=int, default=800)
    r.add_argument("--no-rays", action="store_true")
    r.add_argument("--no-dark", action="store_true")

    s = sub.add_parser("scan", help="illuminator index k(n) or odd-n growth of D(n)")
    s.add_argument("kind", choices=["illuminator", "growth"])
    s.add_argument("n_max", type=int, nargs="?")
    s.add_argument("--max-n", type=int, dest="max_n_flag")
    s.add_argument("--format", choices=["text", "csv", "json"], default="text")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "table":
            sys.stdout.write(cmd_table(args.max_n, args.variant, args.format))
        elif args.command == "compute":
            sys.stdout.write(_format_report(cmd_compute(args.n, args.variant), args.format))
        elif args.command == "verify":
            seed = default_seed() if args.seed is None else args.seed
            res = cmd_verify(args.n, args.variant, args.samples, seed, args.workers)
            if args.format == "json":
                sys.stdout.write(json.dumps(res, indent=2) + "\n")
            else:
                verdict = "PASS" if res["pass"] else "FAIL"
                sys.stdout.write(
                    f"{verdict} n={args.n} {args.variant}: analytic {res['analytic_dark_single']:.6f} "
                    f"oracle {res['oracle_mean']:.6f} |diff| {res['deviation']:.6f} <= {res['tolerance']:.6f}\n"
                )
            return 0 if res["pass"] else 1
        elif args.command == "render":
            path = cmd_render(
                args.n, args.variant, args.out, args.width, args.height, not args.no_rays, not args.no_dark
            )
            sys.stderr.write(f"wrote {path}\n")
        elif args.command == "scan":
            n_max = args.n_max if args.n_max is not None else args.max_n_flag
            if n_max is None:
                raise LighthouseError("scan needs n_max")
            sys.stdout.write(cmd_scan(args.kind, n_max, args.format))
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
