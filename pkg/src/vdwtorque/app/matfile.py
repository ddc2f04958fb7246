"""Material database files.

One material per UTF-8 text file, `key = value` lines, `#` comments.  The
`model` key selects the schema; every other key must belong to that schema
(unknown keys are a hard error so typos cannot silently change physics).

    model = magneto_drude
        eps_background, carrier_density_cm3, effective_mass_ratio,
        gamma_over_omega_p
    model = two_oscillator_uniaxial
        ord_c_ir, ord_w_ir_rad_s, ord_c_uv, ord_w_uv_rad_s,
        ext_c_ir, ext_w_ir_rad_s, ext_c_uv, ext_w_uv_rad_s
    model = constant
        value

A magneto_drude file resolves omega_p and gamma at parse time from the
carrier data; the cyclotron frequency is injected later (CLI `--bfield` or
`--omega-c`).  Two-oscillator files map the extraordinary axis to eps_par
and the ordinary axis to eps_perp.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from ..constants import ELECTRON_MASS, ELEMENTARY_CHARGE
from ..materials import (
    CarrierSpec,
    Constant,
    MagnetoDrudeParallel,
    MagnetoDrudeParams,
    MagnetoDrudeVoigtEffective,
    MagnetoDrudeVoigtPerp,
    MaterialModel,
    TwoOscillator,
    TwoOscillatorParams,
    plasma_frequency,
)
from ..torque import UniaxialPlate


class MaterialFileError(ValueError):
    """Parse or validation failure; message names the file and offending line/key."""


_SCHEMAS = {
    "magneto_drude": frozenset(
        {"eps_background", "carrier_density_cm3", "effective_mass_ratio", "gamma_over_omega_p"}
    ),
    "two_oscillator_uniaxial": frozenset(
        {
            "ord_c_ir", "ord_w_ir_rad_s", "ord_c_uv", "ord_w_uv_rad_s",
            "ext_c_ir", "ext_w_ir_rad_s", "ext_c_uv", "ext_w_uv_rad_s",
        }
    ),
    "constant": frozenset({"value"}),
}


@dataclass(frozen=True)
class DrudeSlab:
    """Carrier-backed magneto-Drude slab; field-dependent pieces resolve late."""

    source: str
    eps_background: float
    carriers: CarrierSpec      # zero-field carrier data
    gamma_over_omega_p: float

    @property
    def omega_p(self) -> float:
        return plasma_frequency(self.carriers)

    def params(self, omega_c: float = 0.0) -> MagnetoDrudeParams:
        wp = self.omega_p
        return MagnetoDrudeParams(
            eps_background=self.eps_background,
            plasma_freq=wp,
            damping=self.gamma_over_omega_p * wp,
            cyclotron_freq=omega_c,
        )

    def omega_c_from(self, omega_c_ratio: float | None = None,
                     bfield_tesla: float | None = None) -> float:
        if omega_c_ratio is not None and bfield_tesla is not None:
            raise ValueError("specify omega_c_ratio or bfield_tesla, not both")
        if omega_c_ratio is not None:
            return omega_c_ratio * self.omega_p
        if bfield_tesla is not None:
            mass = self.carriers.effective_mass_ratio * ELECTRON_MASS
            return ELEMENTARY_CHARGE * bfield_tesla / mass
        return 0.0

    def as_plate(self, omega_c: float = 0.0, voigt_effective: bool = False) -> UniaxialPlate:
        p = self.params(omega_c)
        perp: MaterialModel
        perp = MagnetoDrudeVoigtEffective(p) if voigt_effective else MagnetoDrudeVoigtPerp(p)
        return UniaxialPlate(par=MagnetoDrudeParallel(p), perp=perp)

    def as_gap(self) -> MaterialModel:
        raise MaterialFileError(
            f"{self.source}: a magneto_drude material is uniaxial under field "
            "and cannot serve as the (scalar) gap medium"
        )


@dataclass(frozen=True)
class OscillatorSlab:
    source: str
    ordinary: TwoOscillatorParams
    extraordinary: TwoOscillatorParams

    def as_plate(self, omega_c: float = 0.0, voigt_effective: bool = False) -> UniaxialPlate:
        return UniaxialPlate(
            par=TwoOscillator(self.extraordinary),
            perp=TwoOscillator(self.ordinary),
        )

    def as_gap(self) -> MaterialModel:
        if self.ordinary != self.extraordinary:
            raise MaterialFileError(
                f"{self.source}: gap medium must be isotropic but the ordinary and "
                "extraordinary oscillator sets differ"
            )
        return TwoOscillator(self.ordinary)


@dataclass(frozen=True)
class ConstantSlab:
    source: str
    value: float

    def as_plate(self, omega_c: float = 0.0, voigt_effective: bool = False) -> UniaxialPlate:
        model = Constant(self.value)
        return UniaxialPlate(par=model, perp=model)

    def as_gap(self) -> MaterialModel:
        return Constant(self.value)


ParsedMaterial = Union[DrudeSlab, OscillatorSlab, ConstantSlab]


def _parse_pairs(text: str, source: str) -> dict[str, tuple[str, int]]:
    pairs: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MaterialFileError(f"{source}:{lineno}: expected `key = value`, got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise MaterialFileError(f"{source}:{lineno}: expected `key = value`, got {raw.strip()!r}")
        if key in pairs:
            raise MaterialFileError(f"{source}:{lineno}: duplicate key {key!r}")
        pairs[key] = (value, lineno)
    return pairs


def _float(pairs: dict, key: str, source: str) -> float:
    value, lineno = pairs[key]
    try:
        return float(value)
    except ValueError:
        raise MaterialFileError(f"{source}:{lineno}: key {key!r} has non-numeric value {value!r}") from None


def _positive(x: float, key: str, source: str) -> float:
    if x <= 0.0:
        raise MaterialFileError(f"{source}: key {key!r} must be > 0, got {x!r}")
    return x


def _nonnegative(x: float, key: str, source: str) -> float:
    if x < 0.0:
        raise MaterialFileError(f"{source}: key {key!r} must be >= 0, got {x!r}")
    return x


def _oscillator(pairs: dict, prefix: str, source: str) -> TwoOscillatorParams:
    return TwoOscillatorParams(
        c_ir=_nonnegative(_float(pairs, f"{prefix}_c_ir", source), f"{prefix}_c_ir", source),
        w_ir=_positive(_float(pairs, f"{prefix}_w_ir_rad_s", source), f"{prefix}_w_ir_rad_s", source),
        c_uv=_nonnegative(_float(pairs, f"{prefix}_c_uv", source), f"{prefix}_c_uv", source),
        w_uv=_positive(_float(pairs, f"{prefix}_w_uv_rad_s", source), f"{prefix}_w_uv_rad_s", source),
    )


def parse_material_text(text: str, source: str = "<string>") -> ParsedMaterial:
    """Parse database text; `source` labels diagnostics and CSV provenance."""
    pairs = _parse_pairs(text, source)
    if "model" not in pairs:
        raise MaterialFileError(f"{source}: missing required key 'model'")
    model, model_line = pairs["model"]
    if model not in _SCHEMAS:
        raise MaterialFileError(
            f"{source}:{model_line}: unknown model {model!r}; expected one of {sorted(_SCHEMAS)}"
        )
    expected = _SCHEMAS[model]
    present = set(pairs) - {"model"}
    unknown = sorted(present - expected)
    if unknown:
        lineno = pairs[unknown[0]][1]
        raise MaterialFileError(f"{source}:{lineno}: unknown key {unknown[0]!r} for model {model!r}")
    missing = sorted(expected - present)
    if missing:
        raise MaterialFileError(f"{source}: model {model!r} is missing keys {missing}")

    if model == "magneto_drude":
        eps_l = _float(pairs, "eps_background", source)
        if eps_l < 1.0:
            raise MaterialFileError(f"{source}: key 'eps_background' must be >= 1, got {eps_l!r}")
        density_cm3 = _positive(_float(pairs, "carrier_density_cm3", source), "carrier_density_cm3", source)
        mass_ratio = _positive(_float(pairs, "effective_mass_ratio", source), "effective_mass_ratio", source)
        gamma_ratio = _nonnegative(_float(pairs, "gamma_over_omega_p", source), "gamma_over_omega_p", source)
        return DrudeSlab(
            source=source,
            eps_background=eps_l,
            carriers=CarrierSpec.from_cgs(density_cm3, mass_ratio),
            gamma_over_omega_p=gamma_ratio,
        )
    if model == "two_oscillator_uniaxial":
        return OscillatorSlab(
            source=source,
            ordinary=_oscillator(pairs, "ord", source),
            extraordinary=_oscillator(pairs, "ext", source),
        )
    value = _float(pairs, "value", source)
    if value < 1.0:
        raise MaterialFileError(f"{source}: key 'value' must be >= 1, got {value!r}")
    return ConstantSlab(source=source, value=value)


def parse_material_file(path: str | Path) -> ParsedMaterial:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MaterialFileError(f"{path}: cannot read material file ({exc})") from exc
    return parse_material_text(text, source=path.name)


def model_tag(material: ParsedMaterial) -> str:
    return {
        DrudeSlab: "magneto_drude",
        OscillatorSlab: "two_oscillator_uniaxial",
        ConstantSlab: "constant",
    }[type(material)]
