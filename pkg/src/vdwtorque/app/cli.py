"""Command-line interface.

Subcommands: tensor, delta, torque, sweep, reproduce.  Exit codes follow
the artifact contract: 0 = success with every quadrature converged,
1 = usage or parse error, 2 = results written but at least one point did
not converge.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from ..geometry import plate1_tensor, plate2_tensor
from ..materials import (
    anisotropy_delta,
    eval_eps_offdiag_voigt,
    eval_eps_parallel,
    eval_eps_voigt_perp,
)
from ..quadrature import LOG_SUBSTITUTION, RATIONAL_SUBSTITUTION, QuadratureError
from .figures import FIGURE_IDS, recipe_for, reproduce_figure
from .matfile import DrudeSlab, MaterialFileError, parse_material_file
from .svgchart import write_line_chart
from .sweep import SWEEP_VARIABLES, SweepSpec, all_converged, run_sweep, write_sweep_csv


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors by default; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_length(text: str) -> float:
    """'100nm' or '0.1um' -> meters."""
    raw = text.strip()
    for suffix, factor in (("nm", 1e-9), ("um", 1e-6)):
        if raw.endswith(suffix):
            return float(raw[: -len(suffix)]) * factor
    raise ValueError(f"length {text!r} needs an explicit nm or um suffix")


def parse_angle(text: str) -> float:
    """Radians by default; '45deg' converts, 'rad' suffix is accepted."""
    raw = text.strip()
    if raw.endswith("deg"):
        return math.radians(float(raw[:-3]))
    if raw.endswith("rad"):
        return float(raw[:-3])
    return float(raw)


def parse_field(text: str) -> float:
    """'1.0T' or '1e4G' -> tesla."""
    raw = text.strip()
    if raw.endswith("T"):
        return float(raw[:-1])
    if raw.endswith("G"):
        return float(raw[:-1]) * 1e-4
    raise ValueError(f"magnetic field {text!r} needs an explicit T or G suffix")


def _add_field_flags(parser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--omega-c", type=float, default=None, metavar="RATIO",
                       help="cyclotron-to-plasma frequency ratio Omega_c")
    group.add_argument("--bfield", type=parse_field, default=None, metavar="B",
                       help="static field with T or G suffix (e.g. 1.0T, 1e4G)")


def _add_quadrature_flags(parser) -> None:
    parser.add_argument("--rel-tol", type=float, default=1e-8)
    parser.add_argument("--abs-tol", type=float, default=0.0)
    parser.add_argument("--max-evals", type=int, default=100_000)
    parser.add_argument("--transform", choices=(LOG_SUBSTITUTION, RATIONAL_SUBSTITUTION),
                        default=LOG_SUBSTITUTION)


def _add_problem_flags(parser) -> None:
    parser.add_argument("--plate1", required=True, type=Path, help="material file for the top plate")
    parser.add_argument("--plate2", required=True, type=Path, help="material file for the bottom plate")
    parser.add_argument("--gap", required=True, type=Path, help="material file for the gap medium")
    parser.add_argument("--L", type=parse_length, default=100e-9, metavar="LEN",
                        help="plate separation with nm or um suffix (default 100nm)")
    parser.add_argument("--theta", type=parse_angle, default=math.pi / 4,
                        help="misalignment angle, radians or e.g. 45deg (default pi/4)")
    parser.add_argument("--area", type=float, default=1e-4, help="plate area in m^2 (default 1e-4)")
    parser.add_argument("--temperature", type=float, default=300.0, help="kelvin, validity check only")
    parser.add_argument("--voigt-effective", action="store_true",
                        help="fold the gyrotropic component into eps_perp of field-biased plates")
    _add_field_flags(parser)
    _add_quadrature_flags(parser)


def _drude_slab(path: Path) -> DrudeSlab:
    material = parse_material_file(path)
    if not isinstance(material, DrudeSlab):
        raise MaterialFileError(f"{path}: this command needs a magneto_drude material")
    return material


def _zeta_grid(args) -> np.ndarray:
    if args.points < 2:
        raise ValueError("--points must be >= 2")
    return np.logspace(math.log10(args.zeta_min), math.log10(args.zeta_max), args.points)


def _cmd_tensor(args) -> int:
    slab = _drude_slab(args.plate)
    omega_c = slab.omega_c_from(args.omega_c, args.bfield)
    params = slab.params(omega_c)
    ratio = omega_c / slab.omega_p

    if args.zeta is not None:
        zeta = args.zeta * slab.omega_p
        epar = eval_eps_parallel(params, zeta)
        eperp = eval_eps_voigt_perp(params, zeta)
        eyz = eval_eps_offdiag_voigt(params, zeta)
        print(f"material: {slab.source}  omega_p = {slab.omega_p:.6e} rad/s  Omega_c = {ratio:g}")
        print(f"zeta = {args.zeta:g} * omega_p = {zeta:.6e} rad/s")
        print(f"eps_parallel   = {epar:.12g}")
        print(f"eps_voigt_perp = {eperp:.12g}")
        print(f"eps_offdiag    = {eyz:.12g}  (diagnostic; not used by the torque)")
        print("plate-1 orientation (distinguished axis along x):")
        _print_matrix(plate1_tensor(epar, eperp).entries)
        print(f"plate-2 orientation, rotated in-plane by theta = {args.theta:g} rad:")
        _print_matrix(plate2_tensor(epar, eperp, args.theta).entries)
        return 0

    ratios = _zeta_grid(args)
    zeta = ratios * slab.omega_p
    exx = eval_eps_parallel(params, zeta)
    eyy = eval_eps_voigt_perp(params, zeta)
    eyz = np.abs(eval_eps_offdiag_voigt(params, zeta))
    lines = [
        "# vdwtorque tensor",
        f"# material = {slab.source} (magneto_drude)",
        f"# omega_c_ratio = {ratio!r}",
        f"# omega_p_rad_s = {slab.omega_p!r}",
        "zeta_over_omega_p,eps_parallel,eps_voigt_perp,abs_eps_offdiag",
    ]
    lines += [
        f"{repr(float(r))},{repr(float(a))},{repr(float(b))},{repr(float(c))}"
        for r, a, b, c in zip(ratios, exx, eyy, eyz)
    ]
    _write_text(args.out, lines)
    if args.svg:
        write_line_chart(
            args.svg,
            f"Dielectric tensor components (Omega_c = {ratio:g})",
            "zeta / omega_p", "epsilon(i zeta)",
            [("eps_parallel", ratios, exx), ("eps_voigt_perp", ratios, eyy),
             ("|eps_offdiag|", ratios, eyz)],
            log_x=True, log_y=True,
        )
    return 0


def _cmd_delta(args) -> int:
    material = parse_material_file(args.plate)
    if isinstance(material, DrudeSlab):
        omega_c = material.omega_c_from(args.omega_c, args.bfield)
        plate = material.as_plate(omega_c, args.voigt_effective)
        ratios = _zeta_grid(args)
        zeta = ratios * material.omega_p
        scale_comment = f"# omega_p_rad_s = {material.omega_p!r}"
        first_col = ("zeta_over_omega_p", ratios)
    else:
        if args.omega_c is not None or args.bfield is not None:
            raise ValueError("--omega-c/--bfield only apply to magneto_drude materials")
        plate = material.as_plate()
        zeta = np.logspace(13.0, 17.0, args.points)
        scale_comment = "# zeta grid: absolute rad/s"
        first_col = ("zeta_rad_s", zeta)
    delta = anisotropy_delta(plate.par, plate.perp, zeta)
    lines = [
        "# vdwtorque delta",
        f"# material = {material.source}",
        scale_comment,
        f"{first_col[0]},delta",
    ]
    lines += [f"{repr(float(x))},{repr(float(d))}" for x, d in zip(first_col[1], delta)]
    _write_text(args.out, lines)
    if args.svg:
        write_line_chart(
            args.svg, f"Degree of anisotropy: {material.source}",
            first_col[0], "delta",
            [("delta", first_col[1], delta)], log_x=True, log_y=True,
        )
    return 0


def _sweep_spec_from_args(args, variable: str, grid: tuple[float, ...]) -> SweepSpec:
    return SweepSpec(
        variable=variable,
        grid=grid,
        plate1=parse_material_file(args.plate1),
        plate2=parse_material_file(args.plate2),
        gap=parse_material_file(args.gap),
        separation=args.L,
        theta=args.theta,
        area=args.area,
        temperature=args.temperature,
        omega_c_ratio=args.omega_c,
        bfield_tesla=args.bfield,
        rel_tol=args.rel_tol,
        abs_tol=args.abs_tol,
        max_evals=args.max_evals,
        transform=args.transform,
        voigt_effective=args.voigt_effective,
    )


def _cmd_torque(args) -> int:
    spec = _sweep_spec_from_args(args, "theta", (args.theta,))
    row = run_sweep(spec)[0]
    ev = row.evaluation
    print(f"plate1 = {spec.plate1.source}, plate2 = {spec.plate2.source}, gap = {spec.gap.source}")
    print(f"L = {row.separation_m:.6e} m, theta = {row.theta_rad:.9g} rad, "
          f"Omega_c = {row.omega_c_ratio:.6g}, S = {spec.area:g} m^2")
    print(f"wbar             = {ev.wbar.value:.9e} rad/s "
          f"(error estimate {ev.wbar.error_estimate:.3e}, {ev.wbar.evals} evals, "
          f"{'converged' if ev.wbar.converged else 'NOT CONVERGED'})")
    print(f"torque           = {ev.torque:.9e} N m")
    print(f"torque_per_area  = {ev.torque_per_area:.9e} N/m")
    print(f"free_energy      = {ev.free_energy:.9e} J (angle-dependent part)")
    v = ev.validity
    status = "ok" if v.valid else "WARNING: beyond non-retarded bound"
    print(f"validity         = {status} (L = {v.separation:.3e} m, bound = {v.bound:.3e} m "
          f"at T = {v.temperature:g} K)")
    return 0 if ev.wbar.converged else 2


def _cmd_sweep(args) -> int:
    value_parser = {
        "theta": parse_angle,
        "separation": parse_length,
        "omega_c_ratio": float,
        "bfield": parse_field,
        "zeta": float,
    }[args.variable]
    if args.variable == "theta" and args.start is None and args.stop is None:
        start, stop = 0.0, math.pi
    else:
        if args.start is None or args.stop is None:
            raise ValueError(f"--start and --stop are required for a {args.variable} sweep")
        start, stop = value_parser(args.start), value_parser(args.stop)
    if args.log_grid:
        if start <= 0.0:
            raise ValueError("--log-grid needs a positive start value")
        grid = tuple(np.logspace(math.log10(start), math.log10(stop), args.points))
    else:
        grid = tuple(np.linspace(start, stop, args.points))

    spec = _sweep_spec_from_args(args, args.variable, grid)
    rows = run_sweep(spec, jobs=args.jobs)
    write_sweep_csv(args.out, spec, rows)
    if args.svg and args.variable != "zeta":
        xs = [getattr(row, {
            "theta": "theta_rad", "separation": "separation_m",
            "omega_c_ratio": "omega_c_ratio", "bfield": "bfield_tesla",
        }[args.variable]) for row in rows]
        write_line_chart(
            args.svg, f"torque/area vs {args.variable}",
            args.variable, "torque / area (N/m)",
            [("torque_per_area", xs, [row.evaluation.torque_per_area for row in rows])],
        )
    return 0 if all_converged(rows) else 2


def _cmd_reproduce(args) -> int:
    recipe = recipe_for(args.figure)
    if args.rel_tol is not None:
        from dataclasses import replace
        recipe = replace(recipe, rel_tol=args.rel_tol)
    paths, converged = reproduce_figure(
        recipe, outdir=args.outdir, materials_dir=args.materials_dir, jobs=args.jobs,
    )
    for path in paths:
        print(path)
    return 0 if converged else 2


def _print_matrix(entries: np.ndarray) -> None:
    for row in entries:
        print("  [" + "  ".join(f"{v: .9g}" for v in row) + "]")


def _write_text(path, lines) -> None:
    if path is None:
        sys.stdout.write("\n".join(lines) + "\n")
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="vdwtorque",
        description="Field-induced van der Waals torque between anisotropic slabs.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_tensor = sub.add_parser("tensor", help="magneto-Drude tensor components on the imaginary axis")
    p_tensor.add_argument("--plate", required=True, type=Path, help="magneto_drude material file")
    _add_field_flags(p_tensor)
    p_tensor.add_argument("--zeta-min", type=float, default=1e-2, help="grid start, units of omega_p")
    p_tensor.add_argument("--zeta-max", type=float, default=1e2, help="grid end, units of omega_p")
    p_tensor.add_argument("--points", type=int, default=201)
    p_tensor.add_argument("--zeta", type=float, default=None,
                          help="single zeta/omega_p: print components and the 3x3 plate tensors")
    p_tensor.add_argument("--theta", type=parse_angle, default=0.0,
                          help="rotation for the plate-2 tensor dump (with --zeta)")
    p_tensor.add_argument("--out", type=Path, default=None, help="CSV path (default stdout)")
    p_tensor.add_argument("--svg", type=Path, default=None)
    p_tensor.set_defaults(func=_cmd_tensor)

    p_delta = sub.add_parser("delta", help="degree of anisotropy |eps_par/eps_perp - 1| vs zeta")
    p_delta.add_argument("--plate", required=True, type=Path)
    _add_field_flags(p_delta)
    p_delta.add_argument("--voigt-effective", action="store_true")
    p_delta.add_argument("--zeta-min", type=float, default=1e-2)
    p_delta.add_argument("--zeta-max", type=float, default=1e2)
    p_delta.add_argument("--points", type=int, default=201)
    p_delta.add_argument("--out", type=Path, default=None, help="CSV path (default stdout)")
    p_delta.add_argument("--svg", type=Path, default=None)
    p_delta.set_defaults(func=_cmd_delta)

    p_torque = sub.add_parser("torque", help="single-point torque evaluation")
    _add_problem_flags(p_torque)
    p_torque.set_defaults(func=_cmd_torque)

    p_sweep = sub.add_parser("sweep", help="sweep one variable, write a CSV table")
    _add_problem_flags(p_sweep)
    p_sweep.add_argument("--variable", required=True, choices=SWEEP_VARIABLES)
    p_sweep.add_argument("--start", default=None,
                         help="grid start (same unit rules as the swept flag)")
    p_sweep.add_argument("--stop", default=None, help="grid end")
    p_sweep.add_argument("--points", type=int, default=129)
    p_sweep.add_argument("--log-grid", action="store_true", help="log-spaced grid")
    p_sweep.add_argument("--out", required=True, type=Path)
    p_sweep.add_argument("--svg", type=Path, default=None)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_rep = sub.add_parser("reproduce", help="regenerate a case-study figure (CSV + SVG)")
    p_rep.add_argument("--figure", required=True,
                       help=f"2|3|4|5 or one of {', '.join(FIGURE_IDS)}")
    p_rep.add_argument("--outdir", type=Path, default=Path("figures"))
    p_rep.add_argument("--materials-dir", type=Path, default=None,
                       help="directory with calcite.mat, insb.mat, ethanol.mat "
                            "(default: packaged database)")
    p_rep.add_argument("--jobs", type=int, default=1)
    p_rep.add_argument("--rel-tol", type=float, default=None)
    p_rep.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MaterialFileError as exc:
        print(f"vdwtorque: error: {exc}", file=sys.stderr)
        return 1
    except QuadratureError as exc:
        print(f"vdwtorque: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"vdwtorque: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
