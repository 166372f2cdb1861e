"""Command-line front door: solve, predict, verify, census, and demo pipelines.

Specs are JSON files; complex numbers serialize as {"re": .., "im": ..}.
Results are emitted as modulus-sorted CSV tables, JSON verification reports,
and optional static SVG plots (points, sector rays, zero/pole circles).
All numeric output is printed with 17 significant digits.

Exit status is 0 exactly when every requested verification passed.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys

from .checks import (
    VerificationReport,
    Violation,
    normalized_alpha,
    points_census,
    predict_first_location,
    predict_next_sector,
    verify_first_location,
    verify_generic_interlacing,
    verify_k2_distribution,
    verify_real_power_case,
)
from .functions import SeriesFunction, StructuredFunction, truncate_series
from .qseries import QSeriesSpec, disturbed_exp_coeffs, partial_theta_coeffs
from .sectors import real_direction_index
from .solver import alpha_points
from .winding import sector_census


def _default_tol() -> float:
    return float(os.environ.get("ALPHASECTORS_TOL", "1e-9"))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace("i", "j").replace(" ", ""))
    except ValueError as exc:
        raise SystemExit(f"error: cannot parse complex number {text!r}") from exc


def _complex_from_json(obj, where: str) -> complex:
    if isinstance(obj, (int, float)):
        return complex(obj)
    if isinstance(obj, dict) and set(obj) <= {"re", "im"}:
        return complex(obj.get("re", 0.0), obj.get("im", 0.0))
    raise SystemExit(f"error: field {where}: expected a number or {{'re':..,'im':..}}")


def _complex_to_json(z: complex):
    return {"re": z.real, "im": z.imag}


def parse_spec_file(path: str) -> StructuredFunction | SeriesFunction:
    """Load and validate a JSON function spec; errors name the failing field."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise SystemExit(f"error: spec file {path!r} not found")
    except json.JSONDecodeError as exc:
        raise SystemExit(f"error: {path}: invalid JSON at line {exc.lineno}: {exc.msg}")
    return spec_from_dict(data, path)


def spec_from_dict(data: dict, where: str = "<spec>") -> StructuredFunction | SeriesFunction:
    kind = data.get("type")
    if kind == "rational":
        kwargs = {}
        for name in ("p", "k"):
            if name not in data:
                raise SystemExit(f"error: {where}: missing required field {name!r}")
            kwargs[name] = int(data[name])
        for name in ("a", "b", "c", "d"):
            vals = data.get(name, [])
            if not isinstance(vals, list):
                raise SystemExit(f"error: {where}: field {name!r} must be a list")
            kwargs[name] = tuple(float(v) for v in vals)
        for name in ("A", "A0"):
            kwargs[name] = float(data.get(name, 0.0))
        try:
            return StructuredFunction(**kwargs)
        except ValueError as exc:
            raise SystemExit(f"error: {where}: {exc}")
    if kind == "series":
        if "family" in data:
            try:
                qspec = QSeriesSpec(
                    data["family"],
                    _complex_from_json(data.get("q"), "q"),
                    int(data.get("N", 0)),
                )
            except (ValueError, KeyError) as exc:
                raise SystemExit(f"error: {where}: {exc}")
            src = _family_source(qspec)
            return truncate_series(SeriesFunction(tuple(src)), qspec.N, data.get("tail_tol", 1e-9))
        if "coeffs" in data:
            coeffs = [_complex_from_json(c, f"coeffs[{i}]") for i, c in enumerate(data["coeffs"])]
            try:
                return SeriesFunction(tuple(coeffs), float(data.get("trust_radius", 0.0)))
            except ValueError as exc:
                raise SystemExit(f"error: {where}: {exc}")
        raise SystemExit(f"error: {where}: series spec needs 'family' or 'coeffs'")
    raise SystemExit(f"error: {where}: field 'type' must be 'rational' or 'series'")


def _family_source(qspec: QSeriesSpec) -> list[complex]:
    """Coefficients up to degree N+10, the headroom the certifier needs."""
    wide = QSeriesSpec(qspec.family, qspec.q, qspec.N + 10)
    if qspec.family == "sokal-poly":
        # exact polynomial: pad with zeros, trivially certified
        return QSeriesSpec(qspec.family, qspec.q, qspec.N).coefficients() + [0j] * 10
    return wide.coefficients()


def spec_to_dict(spec: StructuredFunction | SeriesFunction) -> dict:
    if isinstance(spec, StructuredFunction):
        return {
            "type": "rational",
            "p": spec.p,
            "k": spec.k,
            "a": list(spec.a),
            "b": list(spec.b),
            "c": list(spec.c),
            "d": list(spec.d),
            "A": spec.A,
            "A0": spec.A0,
        }
    return {
        "type": "series",
        "coeffs": [_complex_to_json(c) for c in spec.coeffs],
        "trust_radius": spec.trust_radius,
    }


def emit_results(points, reports, config) -> list[str]:
    """Write CSV/JSON/SVG artifacts per the config; returns the paths written."""
    try:
        return _emit_results(points, reports, config)
    except OSError as exc:
        raise SystemExit(f"error: cannot write {exc.filename!r}: {exc.strerror}")


def _emit_results(points, reports, config) -> list[str]:
    written = []
    if config.get("csv"):
        path = config["csv"]
        with open(path, "w") as fh:
            fh.write("index,re,im,modulus,sector,boundary,multiplicity,residual\n")
            for i, pt in enumerate(points):
                fh.write(
                    f"{i},{_fmt(pt.value.real)},{_fmt(pt.value.imag)},{_fmt(pt.modulus)},"
                    f"{pt.sector.s},{str(pt.boundary).lower()},{pt.multiplicity},{_fmt(pt.residual)}\n"
                )
        written.append(path)
    if config.get("json"):
        path = config["json"]
        payload = {
            "points": [
                {
                    "value": _complex_to_json(pt.value),
                    "modulus": pt.modulus,
                    "sector": pt.sector.s,
                    "boundary": pt.boundary,
                    "multiplicity": pt.multiplicity,
                    "residual": pt.residual,
                }
                for pt in points
            ],
            "reports": [r.as_dict() for r in reports],
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
        written.append(path)
    if config.get("svg"):
        path = config["svg"]
        with open(path, "w") as fh:
            fh.write(render_svg(points, config.get("spec"), config.get("k", 2)))
        written.append(path)
    return written


def render_svg(points, spec, k: int, size: int = 640) -> str:
    """Static plot: alpha-points, the 2k sector rays, zero/pole modulus circles."""
    extent = 1.0
    if points:
        extent = max(extent, max(pt.modulus for pt in points))
    circles = []
    if isinstance(spec, StructuredFunction):
        k = spec.k
        circles += [(a ** (1.0 / k), "#2d7dd2") for a in spec.a]
        circles += [(b ** (1.0 / k), "#d22d2d") for b in spec.b]
        circles += [(c ** (-1.0 / k), "#2d7dd2") for c in spec.c]
        circles += [(d ** (-1.0 / k), "#d22d2d") for d in spec.d]
        extent = max([extent] + [r for r, _ in circles])
    extent *= 1.15
    half = size / 2

    def xy(z: complex) -> tuple[float, float]:
        return half + z.real / extent * half, half - z.imag / extent * half

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for s in range(2 * k):
        x, y = xy(extent * cmath.exp(1j * math.pi * s / k))
        parts.append(
            f'<line x1="{half}" y1="{half}" x2="{x:.2f}" y2="{y:.2f}" '
            f'stroke="#cccccc" stroke-width="1"/>'
        )
    for r, color in circles:
        parts.append(
            f'<circle cx="{half}" cy="{half}" r="{r / extent * half:.2f}" '
            f'fill="none" stroke="{color}" stroke-dasharray="4 3" stroke-width="1"/>'
        )
    for pt in points:
        x, y = xy(pt.value)
        fill = "#111111" if not pt.boundary else "#e08700"
        rad = 4 + 2 * (pt.multiplicity - 1)
        parts.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{rad}" fill="{fill}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _solve(spec, alpha, radius, tol):
    return alpha_points(spec, alpha, radius, tol=tol)


def cmd_solve(args) -> int:
    spec = parse_spec_file(args.spec)
    alpha = _parse_complex(args.alpha)
    radius = _resolve_radius(spec, args.radius)
    points = _solve(spec, alpha, radius, args.tol)
    for i, pt in enumerate(points):
        print(
            f"{i}: z = {_fmt(pt.value.real)} {'+' if pt.value.imag >= 0 else '-'} "
            f"{_fmt(abs(pt.value.imag))}i  |z| = {_fmt(pt.modulus)}  Q{pt.sector.s}"
            f"{' (boundary)' if pt.boundary else ''}  mult {pt.multiplicity}"
        )
    emit_results(points, [], _emit_config(args, spec))
    return 0


def _resolve_radius(spec, radius_arg: str) -> float:
    if radius_arg == "trust":
        if isinstance(spec, SeriesFunction):
            return spec.trust_radius
        raise SystemExit("error: --radius trust is only meaningful for series specs")
    return float(radius_arg)


def _emit_config(args, spec) -> dict:
    return {
        "csv": getattr(args, "csv", None),
        "json": getattr(args, "json_out", None),
        "svg": getattr(args, "svg", None),
        "spec": spec,
        "k": spec.k if isinstance(spec, StructuredFunction) else 2,
    }


def cmd_predict(args) -> int:
    spec = parse_spec_file(args.spec)
    if not isinstance(spec, StructuredFunction):
        raise SystemExit("error: predict requires a rational spec")
    alpha = _parse_complex(args.alpha)
    fc = predict_first_location(spec, alpha)
    out = {
        "kind": fc.kind,
        "sectors": [s.s for s in fc.sectors],
        "ray_rotation": fc.ray_rotation,
        "ray_index": fc.ray_index,
    }
    print(json.dumps(out, indent=2))
    return 0


def _k2_args(spec: StructuredFunction):
    j = (spec.p - 1) // 2
    return j, 1 if spec.p > 0 else -1


def cmd_verify(args) -> int:
    spec = parse_spec_file(args.spec)
    if not isinstance(spec, StructuredFunction):
        raise SystemExit("error: verify works on rational specs; use demo for series targets")
    alpha = _parse_complex(args.alpha)
    radius = _resolve_radius(spec, args.radius)
    try:
        points = _solve(spec, alpha, radius, args.tol)
        reports = _verify_reports(spec, alpha, points, args.theorem)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    emit_results(points, reports, _emit_config(args, spec))
    ok = all(r.passed for r in reports)
    for r in reports:
        print(f"{r.theorem}: {'passed' if r.passed else 'FAILED'} ({r.checks_run} checks)")
        for v in r.violations:
            print(f"  violation: {v}")
    return 0 if ok else 1


def _verify_reports(spec, alpha, points, theorem):
    reports = []
    if theorem in (None, "auto"):
        an = normalized_alpha(spec, alpha)
        theorem = "main" if real_direction_index(an, spec.p, spec.k) is None else "main2"
    if theorem == "main":
        reports.append(verify_generic_interlacing(points, alpha, spec))
    elif theorem == "main2":
        reports.append(verify_real_power_case(points, alpha, spec))
    elif theorem == "first":
        fc = predict_first_location(spec, alpha)
        reports.append(verify_first_location(points, fc, spec.k))
    elif theorem == "k2":
        if spec.k != 2:
            raise SystemExit("error: --theorem k2 requires k = 2")
        j, sign = _k2_args(spec)
        reports.append(
            verify_k2_distribution(
                points,
                normalized_alpha(spec, alpha),
                j,
                sign,
                # the first-point claims hold for the meromorphic subfamily only
                first_point_checks=spec.is_meromorphic_form,
            )
        )
    else:
        raise SystemExit(f"error: unknown theorem {theorem!r}")
    return reports


def cmd_census(args) -> int:
    spec = parse_spec_file(args.spec)
    alpha = _parse_complex(args.alpha)
    counts = sector_census(spec, alpha, args.rin, args.rout, quad_tol=args.tol)
    for s, n in enumerate(counts):
        print(f"Q{s},{n}")
    print(f"total,{sum(counts)}")
    return 0


# ---------------------------------------------------------------------------
# bundled figure demos
# ---------------------------------------------------------------------------

FIG1_SPEC = StructuredFunction(p=-1, k=3, a=(0.1, 1.0, 4.0), b=(1.0, 5.0))
FIG2_A = StructuredFunction(p=1, k=3, a=(1.0, 3.0, 4.0), b=(1.0, 5.0))
FIG2_B = StructuredFunction(p=-1, k=3, a=(1.0, 3.0, 4.0), b=(1.0, 5.0))
FIG3_SPEC = StructuredFunction(p=1, k=2, a=(3.0,), b=(1.0, 5.0))

DEMO_NAMES = ("fig1", "fig2a", "fig2b", "fig3", "theta", "dexp")


def _demo_fig1(tol: float):
    alpha = -1 - 1j
    points = alpha_points(FIG1_SPEC, alpha, 10.0, tol=tol)
    reports = [verify_generic_interlacing(points, alpha, FIG1_SPEC)]
    counts = sector_census(FIG1_SPEC, alpha, 0.01, 10.0)
    solver_counts = points_census(points, 3, 0.01, 10.0)
    if counts != solver_counts:
        reports.append(
            VerificationReport(
                "winding census", False, 1,
                (Violation("census-mismatch", (), (counts, solver_counts)),),
            )
        )
    else:
        reports.append(VerificationReport("winding census", True, 1, (), (f"counts={counts}",)))
    return points, reports, FIG1_SPEC


def _demo_first_points(spec, tol: float):
    alphas = [cmath.exp(1j * math.pi / 3), cmath.exp(1j * math.pi / 2), cmath.exp(2j * math.pi / 3)]
    all_points = []
    reports = []
    for alpha in alphas:
        points = alpha_points(spec, alpha, 10.0, tol=tol)
        fc = predict_first_location(spec, alpha)
        rep = verify_first_location(points, fc, spec.k)
        reports.append(rep)
        all_points = points  # emit the last run's table
    return all_points, reports, spec


def _demo_fig3(tol: float):
    reports = []
    points_out = []
    for alpha in (1j, 0.2j):
        points = alpha_points(FIG3_SPEC, alpha, 10.0, tol=tol)
        reports.append(verify_real_power_case(points, alpha, FIG3_SPEC))
        j, sign = _k2_args(FIG3_SPEC)
        reports.append(
            verify_k2_distribution(points, normalized_alpha(FIG3_SPEC, alpha), j, sign)
        )
        points_out = points
    return points_out, reports, FIG3_SPEC


def _rotated_zero_points(series: SeriesFunction, radius: float, tol: float):
    """Zeros of the truncation, rotated by mu = exp(i pi/4) into theorem position."""
    from .functions import AlphaPoint
    from .sectors import classify_sector

    zeros = alpha_points(series, 0.0, radius, tol=tol, k=2)
    mu = cmath.exp(1j * math.pi / 4)
    rotated = []
    for pt in zeros:
        z = mu * pt.value
        sector, boundary = classify_sector(z, 2)
        rotated.append(AlphaPoint(z, abs(z), sector, boundary, pt.multiplicity, pt.residual))
    return zeros, rotated


def _demo_series(family: str, q: complex, n_trunc: int, source, tol: float):
    src = SeriesFunction(tuple(source))
    series = truncate_series(src, n_trunc, 1e-9)
    radius = series.trust_radius
    zeros, rotated = _rotated_zero_points(series, radius, tol)
    alpha_rot = -cmath.exp(-1j * math.pi / 4)  # -conj(mu) * f1/f0 with f1 = f0 = 1
    rep = verify_k2_distribution(
        rotated,
        alpha_rot,
        j=-1,
        sign_of_p=-1,
        notes=(f"{family}: zeros rotated by exp(i pi/4); trust radius {radius:.6g}",),
    )
    return series, zeros, [rep]


def _demo_theta(tol: float):
    q = 0.7j
    series, zeros, reports = _demo_series(
        "partial-theta", q, 64, partial_theta_coeffs(q, 74), tol
    )
    return zeros, reports, series


def _demo_dexp(tol: float):
    q = 1j
    series, zeros, reports = _demo_series(
        "disturbed-exp", q, 40, disturbed_exp_coeffs(q, 50), tol
    )
    return zeros, reports, series


def run_demo(name: str, outdir: str = ".", tol: float | None = None) -> int:
    tol = _default_tol() if tol is None else tol
    """Execute a bundled fixture end to end; nonzero exit on any failure."""
    if name == "fig1":
        points, reports, spec = _demo_fig1(tol)
    elif name == "fig2a":
        points, reports, spec = _demo_first_points(FIG2_A, tol)
    elif name == "fig2b":
        points, reports, spec = _demo_first_points(FIG2_B, tol)
    elif name == "fig3":
        points, reports, spec = _demo_fig3(tol)
    elif name == "theta":
        points, reports, spec = _demo_theta(tol)
    elif name == "dexp":
        points, reports, spec = _demo_dexp(tol)
    else:
        raise SystemExit(f"error: unknown demo {name!r}; choose from {DEMO_NAMES}")
    os.makedirs(outdir, exist_ok=True)
    config = {
        "csv": os.path.join(outdir, f"{name}.csv"),
        "json": os.path.join(outdir, f"{name}_report.json"),
        "svg": os.path.join(outdir, f"{name}.svg"),
        "spec": spec if isinstance(spec, StructuredFunction) else None,
        "k": spec.k if isinstance(spec, StructuredFunction) else 2,
    }
    emit_results(points, reports, config)
    ok = all(r.passed for r in reports)
    for r in reports:
        print(f"{name}: {r.theorem}: {'passed' if r.passed else 'FAILED'} ({r.checks_run} checks)")
        for v in r.violations:
            print(f"  violation: {v}")
    return 0 if ok else 1


def cmd_demo(args) -> int:
    return run_demo(args.name, args.outdir, args.tol)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphasectors",
        description="Locate and verify alpha-points of k-fold symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha=True):
        p.add_argument("--spec", required=True, help="path to a JSON function spec")
        if alpha:
            p.add_argument("--alpha", required=True, help="complex target, e.g. -1-1i")
        p.add_argument("--tol", type=float, default=_default_tol(), help="solver tolerance")
        p.add_argument("--csv", help="write a points CSV here")
        p.add_argument("--json", dest="json_out", help="write a JSON report here")
        p.add_argument("--svg", help="write a static SVG plot here")

    p = sub.add_parser("solve", help="find all alpha-points in a disk")
    common(p)
    p.add_argument("--radius", required=True, help="disk radius (or 'trust' for series)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("predict", help="forecast the first alpha-point location")
    common(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="solve and check theorem predictions")
    common(p)
    p.add_argument("--radius", required=True)
    p.add_argument("--theorem", choices=["auto", "main", "main2", "first", "k2"], default="auto")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="argument-principle sector census")
    common(p)
    p.add_argument("--rin", type=float, required=True)
    p.add_argument("--rout", type=float, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("demo", help="run a bundled fixture end to end")
    p.add_argument("name", choices=DEMO_NAMES)
    p.add_argument("--outdir", default=".")
    p.add_argument("--tol", type=float, default=_default_tol())
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
