"""Command-line toolkit: orchestration, validation, and deterministic output.

Subcommands
-----------
essential   essential-spectrum intervals as JSON
eigs        modal eigenvalues (box domain, constant damping) as CSV
enclosure   enclosure constants as JSON, or the boundary cloud as CSV
discretize  1D finite-difference eigenvalues as CSV with containment report
validate    run the invariant suite; exit 0 on success, 1 on failure

Exit codes: 0 success, 1 validation failure, 2 configuration or hypothesis
error.  Identical inputs and flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import boxmodes, enclosure, pencil, scalar
from .config import ProblemSpec, parse_config
from .errors import ConfigError, HypothesisError, MemspecError
from .records import EigenvalueRecord

CSV_HEADER = "re,im,source,branch,residual,jordan_ok"

_REAL_IM_TOL = 1e-9
_JORDAN_FLOOR = 1e-3


def _fmt(x) -> str:
    """Shortest representation capped at 12 significant digits."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    return f"{x:.12g}"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


def _record_row(rec: EigenvalueRecord) -> str:
    return ",".join([
        _fmt(rec.re), _fmt(rec.im), rec.source, rec.branch,
        _fmt(rec.residual), _fmt(rec.jordan_ok),
    ])


def _records_csv(records, extra_lines=()) -> str:
    lines = [CSV_HEADER]
    lines.extend(_record_row(r) for r in records)
    lines.extend(extra_lines)
    return "\n".join(lines) + "\n"


def _effective_bounds(spec: ProblemSpec) -> scalar.DampingBound:
    return spec.damping.bounds()


def _mode_records(spec: ProblemSpec, alpha_cap: float,
                  imag_cap: float) -> list[EigenvalueRecord]:
    """Per-mode eigenvalue records for a box domain with constant damping."""
    k = spec.kernel
    b = spec.damping.value
    box = boxmodes.BoxDomain(spec.domain.lengths)
    records: list[EigenvalueRecord] = []
    for mode in boxmodes.enumerate_modes(spec.coefficient_a, box, alpha_cap):
        m = scalar.ModeCoefficients(mode.alpha, b * mode.alpha)
        source = "m=" + "-".join(str(i) for i in mode.indices)
        for z in scalar.mode_eigenvalues(k, m):
            if abs(z.imag) > imag_cap:
                continue
            residual = abs(scalar.rational_symbol(k, m, z)) / (1.0 + m.alpha)
            if z.imag == 0.0:
                jordan = None
                if z.real != 0.0:
                    jordan = bool(
                        abs(scalar.jordan_condition(k, b, float(z.real)))
                        > _JORDAN_FLOOR
                    )
                records.append(EigenvalueRecord(
                    float(z.real), 0.0, source, "real", float(residual),
                    jordan))
            else:
                records.append(EigenvalueRecord(
                    float(z.real), float(z.imag), source, "complex-pair",
                    float(residual)))
    return records


def _region_for(spec: ProblemSpec, w_min: float, sweep: int,
                alphas=None, samples_beta: int = 11) -> enclosure.EnclosureRegion:
    """One-pole region when possible, cloud-backed interval otherwise."""
    k = spec.kernel
    bounds = _effective_bounds(spec)
    if k.n_terms == 1:
        return enclosure.one_pole_region(k, bounds, w_min, sweep)
    c0, c1 = enclosure.enclosure_interval(k, bounds, w_min, sweep)
    if alphas is None:
        alphas = enclosure.synthetic_alpha_grid(w_min)
    cloud = enclosure.boundary_cloud(k, bounds, alphas, samples_beta)
    return enclosure.EnclosureRegion(c0, c1, None, tuple(cloud),
                                     float(np.max(alphas)))


def cmd_essential(spec: ProblemSpec, args) -> int:
    ess = enclosure.essential_spectrum(spec.kernel, _effective_bounds(spec),
                                       args.sweep)
    doc = {"intervals": [[lo, hi] for lo, hi in ess.intervals]}
    _emit(json.dumps(doc) + "\n", args.output)
    pretty = " U ".join(f"[{_fmt(lo)}, {_fmt(hi)}]" for lo, hi in ess.intervals)
    _info(f"essential spectrum: {pretty}")
    return 0


def cmd_eigs(spec: ProblemSpec, args) -> int:
    if spec.domain.kind != "box" or spec.damping.kind != "constant":
        raise ConfigError(
            "eigs needs a box domain with constant damping; "
            "use 'discretize' for graded profiles"
        )
    box = boxmodes.BoxDomain(spec.domain.lengths)
    w_min = boxmodes.min_stiffness(spec.coefficient_a, box)
    alpha_cap = args.alpha_cap
    if alpha_cap is None:
        alpha_cap = (1.1 * args.imag_cap) ** 2 + w_min
    records = _mode_records(spec, alpha_cap, args.imag_cap)
    if args.format == "json":
        doc = {"counts": {"eigenvalues": len(records)},
               "eigenvalues": [
                   {"re": r.re, "im": r.im, "source": r.source,
                    "branch": r.branch, "residual": r.residual,
                    "jordan_ok": r.jordan_ok}
                   for r in records
               ]}
        _emit(json.dumps(doc) + "\n", args.output)
    else:
        _emit(_records_csv(records), args.output)
    _info(f"{len(records)} eigenvalues with |Im| <= {args.imag_cap:g}")
    return 0


def cmd_enclosure(spec: ProblemSpec, args) -> int:
    if spec.domain.kind != "box":
        raise ConfigError("enclosure needs a box domain for the ground mode")
    k = spec.kernel
    bounds = _effective_bounds(spec)
    box = boxmodes.BoxDomain(spec.domain.lengths)
    w_min = boxmodes.min_stiffness(spec.coefficient_a, box)
    if args.alpha_cap is not None:
        modes = boxmodes.enumerate_modes(spec.coefficient_a, box,
                                         args.alpha_cap)
        alphas = [m.alpha for m in modes]
    else:
        alphas = list(enclosure.synthetic_alpha_grid(w_min))
    region = _region_for(spec, w_min, args.sweep)
    cloud_rows = []
    for alpha in alphas:
        if bounds.is_constant:
            betas = [bounds.b_max * alpha]
        else:
            betas = np.linspace(bounds.b_min * alpha, bounds.b_max * alpha,
                                args.beta_samples)
        for beta in betas:
            m = scalar.ModeCoefficients(float(alpha), float(beta))
            for z in scalar.mode_eigenvalues(k, m):
                cloud_rows.append((z.real, z.imag, float(alpha), float(beta)))
    if args.format == "csv":
        lines = ["re,im,alpha,beta"]
        lines.extend(",".join(_fmt(v) for v in row) for row in cloud_rows)
        _emit("\n".join(lines) + "\n", args.output)
    else:
        strips = region.one_pole
        doc = {
            "c0": region.c0,
            "c1": region.c1,
            "d0": strips.d0 if strips else None,
            "d1": strips.d1 if strips else None,
            "hat_d": strips.hat_d if strips else None,
            "counts": {"cloud": len(cloud_rows), "alphas": len(alphas)},
        }
        _emit(json.dumps(doc) + "\n", args.output)
    _info(f"enclosure interval [{_fmt(region.c0)}, {_fmt(region.c1)}], "
          f"{len(cloud_rows)} cloud points")
    return 0


def _fd_profile(spec: ProblemSpec, n_points: int) -> np.ndarray:
    nodes = np.arange(1, n_points + 1) / (n_points + 1)
    if spec.damping.kind == "constant":
        return np.full(n_points, spec.damping.value)
    if spec.damping.kind == "profile_1d":
        samples = np.asarray(spec.damping.samples)
        grid = np.linspace(0.0, 1.0, samples.size)
        return np.interp(nodes, grid, samples)
    raise ConfigError(
        "discretize needs damping kind 'constant' or 'profile_1d'"
    )


def cmd_discretize(spec: ProblemSpec, args) -> int:
    if spec.domain.kind != "interval_fd":
        raise ConfigError("discretize needs an interval_fd domain")
    k = spec.kernel
    n_points = spec.domain.grid_points
    if (k.n_terms + 2) * n_points > 2000:
        raise ConfigError(
            f"companion size {(k.n_terms + 2) * n_points} exceeds 2000; "
            "reduce grid_points"
        )
    profile = _fd_profile(spec, n_points)
    mat_a, mat_b = pencil.discretize_1d(spec.coefficient_a, profile, n_points,
                                        spec.domain.length)
    records = pencil.nonlinear_eigenvalues_fd(mat_a, mat_b, k, args.imag_cap)
    w_min = float(np.linalg.eigvalsh(mat_a)[0])
    stiff_eigs = np.linalg.eigvalsh(mat_a)
    region = _region_for(spec, w_min, args.sweep, alphas=stiff_eigs,
                         samples_beta=args.beta_samples)
    scale = float(np.linalg.norm(mat_a, 2))
    tol = args.tolerance if args.tolerance is not None \
        else 1e-8 * (1.0 + scale)
    inside = outside = 0
    worst = 0.0
    for rec in records:
        if region.contains(rec.value, tol):
            inside += 1
        else:
            outside += 1
            worst = max(worst, _containment_violation(region, rec.value))
    report = [
        f"# inside={inside}",
        f"# outside={outside}",
        f"# max_violation={_fmt(worst)}",
    ]
    _emit(_records_csv(records, report), args.output)
    _info(f"{len(records)} fd eigenvalues; containment {inside} inside / "
          f"{outside} outside (tol {_fmt(tol)})")
    return 0


def _containment_violation(region: enclosure.EnclosureRegion,
                           lam: complex) -> float:
    """Distance by which a point misses the region (0 when inside)."""
    lam = complex(lam)
    dist_real = max(region.c0 - lam.real, lam.real - region.c1, 0.0)
    d_interval = float(np.hypot(dist_real, lam.imag))
    if region.one_pole is None:
        return d_interval
    s = region.one_pole
    dx = max(s.d0 - lam.real, lam.real - s.d1, 0.0)
    dy = max(s.hat_d - abs(lam.imag), 0.0)
    return min(d_interval, float(np.hypot(dx, dy)))


def _validation_modes(spec: ProblemSpec) -> list[float]:
    """Small set of stiffness values used by the validate suite."""
    if spec.domain.kind == "box":
        box = boxmodes.BoxDomain(spec.domain.lengths)
        w_min = boxmodes.min_stiffness(spec.coefficient_a, box)
        modes = boxmodes.enumerate_modes(spec.coefficient_a, box,
                                         25.0 * w_min)
        return [m.alpha for m in modes[:12]]
    n_points = spec.domain.grid_points
    profile = _fd_profile(spec, n_points)
    mat_a, _ = pencil.discretize_1d(spec.coefficient_a, profile, n_points,
                                    spec.domain.length)
    return list(np.linalg.eigvalsh(mat_a)[:12])


def cmd_validate(spec: ProblemSpec, args) -> int:
    k = spec.kernel
    bounds = _effective_bounds(spec)
    alphas = _validation_modes(spec)
    w_min = min(alphas)
    rng = np.random.default_rng(0)
    failures: list[str] = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        if ok:
            print(f"PASS {name}")
        else:
            print(f"FAIL {name}: {detail}")
            failures.append(name)

    beta_mid = 0.5 * (bounds.b_min + bounds.b_max)
    eig_sets = []
    for alpha in alphas:
        m = scalar.ModeCoefficients(alpha, beta_mid * alpha)
        eig_sets.append((m, scalar.mode_eigenvalues(k, m)))

    sym_ok = all(
        min(abs(np.conj(z) - w) for w in roots) <= 1e-8 * (1.0 + abs(z))
        for _, roots in eig_sets for z in roots
    )
    check("conjugate_symmetry", sym_ok)

    half_ok = all(z.real <= 1e-10 for _, roots in eig_sets for z in roots)
    check("left_half_plane", half_ok)

    ess = enclosure.essential_spectrum(k, bounds, args.sweep)
    c0, c1 = enclosure.enclosure_interval(k, bounds, w_min, args.sweep)
    tol = 1e-10
    ess_ok = all(c0 - tol <= lo and hi <= c1 + tol
                 for lo, hi in ess.intervals)
    check("essential_in_interval", ess_ok,
          f"intervals {ess.intervals} vs [{c0}, {c1}]")

    res_ok, char_ok, excl_ok = True, True, True
    for _ in range(40):
        alpha = float(rng.uniform(w_min, 10.0 * w_min))
        bhat = float(rng.uniform(max(bounds.b_min, 1e-3), bounds.b_max))
        mp = pencil.ModePencil(alpha, bhat * alpha, k)
        lam = complex(rng.normal(scale=2.0), rng.normal(scale=2.0))
        if abs(lam) < 1e-3:
            lam += 0.5
        res = mp.equivalence_residual(lam)
        res_ok &= res <= 1e-12 * (1.0 + abs(lam) ** 2) * (1.0 + alpha)
        m = scalar.ModeCoefficients(alpha, bhat * alpha)
        want = ((-1.0) ** mp.size) * scalar.cleared_mode_polynomial(k, m)(lam)
        got = np.linalg.det(mp.system_operator() - lam * np.eye(mp.size))
        char_ok &= abs(got - want) <= 1e-10 * (1.0 + abs(want))
        for j, (a_j, b_j) in enumerate(zip(k.amplitudes, k.rates)):
            det_p = np.linalg.det(mp.block_function(-b_j))
            excl_ok &= abs(det_p) >= a_j * b_j * mp.beta / 2.0
    check("equivalence_residuals", res_ok)
    check("char_poly_identity", char_ok)
    check("pole_exclusion", excl_ok)

    if bounds.is_constant and bounds.b_max > 0.0:
        jordan_ok = True
        for m, roots in eig_sets:
            for z in roots:
                if z.imag == 0.0 and z.real != 0.0:
                    val = scalar.jordan_condition(k, bounds.b_max, z.real)
                    jordan_ok &= abs(val) > _JORDAN_FLOOR
        check("jordan_condition", jordan_ok)

    return 1 if failures else 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", required=True, help="JSON problem description")
    p.add_argument("--alpha-cap", type=float, default=None,
                   help="largest stiffness eigenvalue to enumerate")
    p.add_argument("--imag-cap", type=float, default=50.0,
                   help="drop eigenvalues with |Im| above this")
    p.add_argument("--sweep", type=int, default=129,
                   help="damping sweep grid points")
    p.add_argument("--beta-samples", type=int, default=11,
                   help="beta samples per alpha in cloud sampling")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--output", default=None, help="output path (default stdout)")
    p.add_argument("--tolerance", type=float, default=None,
                   help="containment / validation tolerance override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="memspec",
        description="Spectra and enclosures of memory-damped wave symbols",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "essential": cmd_essential,
        "eigs": cmd_eigs,
        "enclosure": cmd_enclosure,
        "discretize": cmd_discretize,
        "validate": cmd_validate,
    }
    for name, handler in handlers.items():
        p = sub.add_parser(name)
        _add_common(p)
        p.set_defaults(handler=handler)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.handler in (cmd_eigs, cmd_discretize) \
            else "json"
    try:
        spec = parse_config(args.config)
        return args.handler(spec, args)
    except (ConfigError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MemspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
