"""Baked figure recipes for the calcite / ethanol / InSb case study.

Each recipe produces a CSV table plus a standalone SVG chart:

* fig2_tensor: magneto-Drude tensor components of InSb on the imaginary
  axis at Omega_c = 0.2.
* fig3_delta:  degree of anisotropy of InSb for Omega_c in {0.1, 0.2, 0.4}.
* fig4_theta:  torque per unit area vs. misalignment angle at L = 100 nm
  for the same three field strengths.
* fig5_field:  torque per unit area vs. Omega_c at theta = pi/4 for
  L in {50 nm, 100 nm}.  The Omega_c axis spans [0.02, 0.45], covering the
  0.5-2.1 T range reachable with ordinary laboratory magnets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from ..materials import (
    anisotropy_delta,
    eval_eps_offdiag_voigt,
    eval_eps_parallel,
    eval_eps_voigt_perp,
)
from .matfile import DrudeSlab, MaterialFileError, ParsedMaterial, parse_material_file, parse_material_text
from .svgchart import write_line_chart
from .sweep import SweepRow, SweepSpec, all_converged, provenance_lines, run_sweep

FIGURE_IDS = ("fig2_tensor", "fig3_delta", "fig4_theta", "fig5_field")

_ZETA_GRID_POINTS = 201          # log grid on zeta/omega_p in [1e-2, 1e2]
_THETA_GRID_POINTS = 129         # resolves the sin(2 theta) extrema exactly
_FIELD_GRID = tuple(round(0.02 + 0.01 * k, 2) for k in range(44))  # 0.02 .. 0.45


@dataclass(frozen=True)
class FigureRecipe:
    id: str
    omega_c_ratios: tuple[float, ...] = (0.1, 0.2, 0.4)
    separations: tuple[float, ...] = (50.0e-9, 100.0e-9)
    theta: float = math.pi / 4
    separation: float = 100.0e-9
    rel_tol: float = 1.0e-8
    field_grid: tuple[float, ...] = _FIELD_GRID

    def __post_init__(self):
        if self.id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.id!r}; expected one of {FIGURE_IDS}")


def recipe_for(figure: str) -> FigureRecipe:
    """Accept '2'..'5' or a full id."""
    aliases = {fid[3]: fid for fid in FIGURE_IDS}  # '2' -> fig2_tensor, ...
    fid = aliases.get(str(figure), str(figure))
    return FigureRecipe(id=fid)


def _packaged_material(name: str) -> ParsedMaterial:
    text = resources.files("vdwtorque").joinpath(f"data/{name}.mat").read_text(encoding="utf-8")
    return parse_material_text(text, source=f"{name}.mat")


def load_case_study(materials_dir: Optional[Path] = None):
    """(calcite, insb, ethanol) from the packaged database or a directory."""
    if materials_dir is None:
        materials = {name: _packaged_material(name) for name in ("calcite", "insb", "ethanol")}
    else:
        materials = {}
        for name in ("calcite", "insb", "ethanol"):
            path = Path(materials_dir) / f"{name}.mat"
            if not path.exists():
                raise MaterialFileError(
                    f"{path}: case-study material file missing "
                    "(need calcite.mat, insb.mat, ethanol.mat)"
                )
            materials[name] = parse_material_file(path)
    insb = materials["insb"]
    if not isinstance(insb, DrudeSlab):
        raise MaterialFileError("insb.mat: expected model = magneto_drude")
    return materials["calcite"], insb, materials["ethanol"]


def _fmt(x) -> str:
    return repr(float(x))


def _write_csv(path: Path, comments: list[str], header: str, rows: list[list[float]]) -> None:
    lines = comments + [header]
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _zeta_ratios() -> np.ndarray:
    return np.logspace(-2.0, 2.0, _ZETA_GRID_POINTS)


def _fig2(recipe: FigureRecipe, insb: DrudeSlab, outdir: Path) -> list[Path]:
    ratio = 0.2
    params = insb.params(omega_c=ratio * insb.omega_p)
    ratios = _zeta_ratios()
    zeta = ratios * insb.omega_p
    exx = eval_eps_parallel(params, zeta)
    eyy = eval_eps_voigt_perp(params, zeta)
    eyz = np.abs(eval_eps_offdiag_voigt(params, zeta))
    csv_path = outdir / "fig2_tensor.csv"
    comments = [
        "# vdwtorque figure fig2_tensor",
        f"# material = {insb.source} (magneto_drude)",
        f"# omega_c_ratio = {_fmt(ratio)}",
        f"# omega_p_rad_s = {_fmt(insb.omega_p)}",
    ]
    rows = [[r, a, b, c] for r, a, b, c in zip(ratios, exx, eyy, eyz)]
    _write_csv(csv_path, comments, "zeta_over_omega_p,eps_parallel,eps_voigt_perp,abs_eps_offdiag", rows)
    svg_path = outdir / "fig2_tensor.svg"
    write_line_chart(
        svg_path,
        "Dielectric tensor components on the imaginary axis (Omega_c = 0.2)",
        "zeta / omega_p",
        "epsilon(i zeta)",
        [
            ("eps_parallel", ratios, exx),
            ("eps_voigt_perp", ratios, eyy),
            ("|eps_offdiag|", ratios, eyz),
        ],
        log_x=True,
        log_y=True,
    )
    return [csv_path, svg_path]


def _fig3(recipe: FigureRecipe, insb: DrudeSlab, outdir: Path) -> list[Path]:
    ratios = _zeta_ratios()
    zeta = ratios * insb.omega_p
    columns = []
    for omega_c_ratio in recipe.omega_c_ratios:
        plate = insb.as_plate(omega_c=omega_c_ratio * insb.omega_p)
        columns.append(anisotropy_delta(plate.par, plate.perp, zeta))
    csv_path = outdir / "fig3_delta.csv"
    comments = [
        "# vdwtorque figure fig3_delta",
        f"# material = {insb.source} (magneto_drude)",
        f"# omega_c_ratios = {','.join(_fmt(r) for r in recipe.omega_c_ratios)}",
        f"# omega_p_rad_s = {_fmt(insb.omega_p)}",
    ]
    header = "zeta_over_omega_p," + ",".join(
        f"delta_omega_c_{r:g}" for r in recipe.omega_c_ratios
    )
    rows = [[r] + [col[i] for col in columns] for i, r in enumerate(ratios)]
    _write_csv(csv_path, comments, header, rows)
    svg_path = outdir / "fig3_delta.svg"
    write_line_chart(
        svg_path,
        "Degree of anisotropy of the field-biased slab",
        "zeta / omega_p",
        "delta = |eps_par/eps_perp - 1|",
        [
            (f"Omega_c = {r:g}", ratios, col)
            for r, col in zip(recipe.omega_c_ratios, columns)
        ],
        log_x=True,
        log_y=True,
    )
    return [csv_path, svg_path]


def _theta_sweep_spec(recipe: FigureRecipe, calcite, insb, ethanol, omega_c_ratio) -> SweepSpec:
    grid = tuple(np.linspace(0.0, math.pi, _THETA_GRID_POINTS))
    return SweepSpec(
        variable="theta",
        grid=grid,
        plate1=calcite,
        plate2=insb,
        gap=ethanol,
        separation=recipe.separation,
        omega_c_ratio=omega_c_ratio,
        rel_tol=recipe.rel_tol,
    )


def _fig4(recipe: FigureRecipe, calcite, insb, ethanol, outdir: Path, jobs: int):
    sweeps = []
    for ratio in recipe.omega_c_ratios:
        spec = _theta_sweep_spec(recipe, calcite, insb, ethanol, ratio)
        sweeps.append((spec, run_sweep(spec, jobs=jobs)))
    thetas = [row.theta_rad for row in sweeps[0][1]]
    csv_path = outdir / "fig4_theta.csv"
    comments = [
        "# vdwtorque figure fig4_theta",
        f"# plate1 = {calcite.source}, plate2 = {insb.source}, gap = {ethanol.source}",
        f"# separation_m = {_fmt(recipe.separation)}",
        f"# omega_c_ratios = {','.join(_fmt(r) for r in recipe.omega_c_ratios)}",
        f"# rel_tol = {_fmt(recipe.rel_tol)}",
    ]
    header = "theta_rad," + ",".join(
        f"torque_per_area_omega_c_{r:g}_N_per_m" for r in recipe.omega_c_ratios
    )
    rows = []
    for i, theta in enumerate(thetas):
        rows.append([theta] + [sweep[1][i].evaluation.torque_per_area for sweep in sweeps])
    _write_csv(csv_path, comments, header, rows)
    svg_path = outdir / "fig4_theta.svg"
    write_line_chart(
        svg_path,
        "Torque per unit area vs. misalignment angle (L = 100 nm)",
        "theta (rad)",
        "torque / area (N/m)",
        [
            (f"Omega_c = {r:g}", thetas, [row.evaluation.torque_per_area for row in result])
            for r, (spec, result) in zip(recipe.omega_c_ratios, sweeps)
        ],
    )
    ok = all(all_converged(result) for _, result in sweeps)
    return [csv_path, svg_path], ok


def _fig5(recipe: FigureRecipe, calcite, insb, ethanol, outdir: Path, jobs: int):
    sweeps = []
    for separation in recipe.separations:
        spec = SweepSpec(
            variable="omega_c_ratio",
            grid=recipe.field_grid,
            plate1=calcite,
            plate2=insb,
            gap=ethanol,
            separation=separation,
            theta=recipe.theta,
            rel_tol=recipe.rel_tol,
        )
        sweeps.append((spec, run_sweep(spec, jobs=jobs)))
    ratios = [row.omega_c_ratio for row in sweeps[0][1]]
    csv_path = outdir / "fig5_field.csv"
    comments = [
        "# vdwtorque figure fig5_field",
        f"# plate1 = {calcite.source}, plate2 = {insb.source}, gap = {ethanol.source}",
        f"# theta_rad = {_fmt(recipe.theta)}",
        f"# separations_m = {','.join(_fmt(s) for s in recipe.separations)}",
        f"# rel_tol = {_fmt(recipe.rel_tol)}",
    ]
    header = "omega_c_ratio," + ",".join(
        f"torque_per_area_L_{round(s * 1e9):d}nm_N_per_m" for s in recipe.separations
    )
    rows = []
    for i, ratio in enumerate(ratios):
        rows.append([ratio] + [sweep[1][i].evaluation.torque_per_area for sweep in sweeps])
    _write_csv(csv_path, comments, header, rows)
    svg_path = outdir / "fig5_field.svg"
    write_line_chart(
        svg_path,
        "Torque per unit area vs. Omega_c (theta = pi/4)",
        "Omega_c",
        "torque / area (N/m)",
        [
            (f"L = {round(s * 1e9):d} nm", ratios, [row.evaluation.torque_per_area for row in result])
            for s, (spec, result) in zip(recipe.separations, sweeps)
        ],
    )
    ok = all(all_converged(result) for _, result in sweeps)
    return [csv_path, svg_path], ok


def reproduce_figure(
    recipe: FigureRecipe,
    outdir: str | Path = "figures",
    materials_dir: Optional[Path] = None,
    jobs: int = 1,
) -> tuple[list[Path], bool]:
    """Write the recipe's CSV and SVG; returns (paths, all points converged)."""
    outdir = Path(outdir)
    calcite, insb, ethanol = load_case_study(materials_dir)
    if recipe.id == "fig2_tensor":
        return _fig2(recipe, insb, outdir), True
    if recipe.id == "fig3_delta":
        return _fig3(recipe, insb, outdir), True
    if recipe.id == "fig4_theta":
        return _fig4(recipe, calcite, insb, ethanol, outdir, jobs)
    return _fig5(recipe, calcite, insb, ethanol, outdir, jobs)
