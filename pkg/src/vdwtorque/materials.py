"""Dielectric response models evaluated on the imaginary frequency axis.

All evaluators take the imaginary frequency ``zeta`` in rad/s (the response
at ``omega = i*zeta``) and return a real, dimensionless permittivity.  On
this axis every model here is real, positive and monotone decreasing, which
is what makes the dispersion-torque integral well behaved.

Scalar and numpy-array ``zeta`` are both accepted; the formulas are plain
arithmetic so vectorization is free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .constants import ELECTRON_MASS, ELEMENTARY_CHARGE, VACUUM_PERMITTIVITY


def _require_positive_zeta(zeta) -> None:
    if np.any(np.asarray(zeta) <= 0.0):
        raise ValueError("zeta must be > 0 rad/s (free-carrier response diverges at zeta=0)")


def _require_nonnegative_zeta(zeta) -> None:
    if np.any(np.asarray(zeta) < 0.0):
        raise ValueError("zeta must be >= 0 rad/s")


@dataclass(frozen=True)
class MagnetoDrudeParams:
    """Free-carrier slab in a static in-plane magnetic field (Voigt geometry).

    eps_background: lattice contribution epsilon_L (>= 1, dimensionless)
    plasma_freq:    omega_p in rad/s
    damping:        gamma in rad/s
    cyclotron_freq: omega_c in rad/s; 0 recovers the isotropic Drude slab
    """

    eps_background: float
    plasma_freq: float
    damping: float
    cyclotron_freq: float = 0.0

    def __post_init__(self):
        if self.eps_background < 1.0:
            raise ValueError("eps_background must be >= 1")
        if self.plasma_freq <= 0.0:
            raise ValueError("plasma_freq must be > 0")
        if self.damping < 0.0:
            raise ValueError("damping must be >= 0")
        if self.cyclotron_freq < 0.0:
            raise ValueError("cyclotron_freq must be >= 0")


@dataclass(frozen=True)
class TwoOscillatorParams:
    """Infrared + ultraviolet Lorentzian fit of a dielectric on the imaginary axis.

    eps(i zeta) = 1 + c_ir/(1+(zeta/w_ir)^2) + c_uv/(1+(zeta/w_uv)^2)
    """

    c_ir: float
    w_ir: float
    c_uv: float
    w_uv: float

    def __post_init__(self):
        if self.c_ir < 0.0 or self.c_uv < 0.0:
            raise ValueError("oscillator strengths must be >= 0")
        if self.w_ir <= 0.0 or self.w_uv <= 0.0:
            raise ValueError("resonance frequencies must be > 0")


@dataclass(frozen=True)
class CarrierSpec:
    """Free-carrier parameters used to derive omega_p and omega_c.

    density:              carriers per m^3
    effective_mass_ratio: m/m0 (electron-mass units)
    field:                static magnetic field in tesla
    """

    density: float
    effective_mass_ratio: float
    field: float = 0.0

    def __post_init__(self):
        if self.density <= 0.0:
            raise ValueError("carrier density must be > 0")
        if self.effective_mass_ratio <= 0.0:
            raise ValueError("effective_mass_ratio must be > 0")
        if self.field < 0.0:
            raise ValueError("field must be >= 0 (its sign carries no physics here)")

    @classmethod
    def from_cgs(cls, density_cm3: float, effective_mass_ratio: float,
                 field_gauss: float = 0.0) -> "CarrierSpec":
        """Build from lab-style CGS inputs (cm^-3 and gauss)."""
        return cls(density_cm3 * 1.0e6, effective_mass_ratio, field_gauss * 1.0e-4)


def eval_eps_parallel(p: MagnetoDrudeParams, zeta):
    """Component along the field axis: eps_L * (1 + omega_p^2 / (zeta (zeta+gamma))).

    This is the field-independent Drude branch of the Voigt tensor continued
    to omega = i*zeta.
    """
    _require_positive_zeta(zeta)
    return p.eps_background * (1.0 + p.plasma_freq**2 / (zeta * (zeta + p.damping)))


def eval_eps_voigt_perp(p: MagnetoDrudeParams, zeta):
    """In-plane component perpendicular to the field, continued to the imaginary axis.

    eps_L * (1 + omega_p^2 (zeta+gamma) / (zeta ((zeta+gamma)^2 + omega_c^2)))

    The denominator is factored as (zeta+gamma) + omega_c^2/(zeta+gamma) so
    that omega_c = 0 reduces bit-for-bit to eval_eps_parallel.
    """
    _require_positive_zeta(zeta)
    zg = zeta + p.damping
    return p.eps_background * (
        1.0 + p.plasma_freq**2 / (zeta * (zg + p.cyclotron_freq**2 / zg))
    )


def eval_eps_offdiag_voigt(p: MagnetoDrudeParams, zeta):
    """Gyrotropic off-diagonal component on the imaginary axis.

    Real, proportional to omega_c (odd in it), and negative for omega_c > 0:
    -eps_L * omega_c * omega_p^2 / (zeta ((zeta+gamma)^2 + omega_c^2)).
    Diagnostic only; the default torque path never consumes it.
    """
    _require_positive_zeta(zeta)
    zg = zeta + p.damping
    return -p.eps_background * p.cyclotron_freq * p.plasma_freq**2 / (
        zeta * (zg * zg + p.cyclotron_freq**2)
    )


def eval_two_oscillator(p: TwoOscillatorParams, zeta):
    """Two-oscillator response; defined down to zeta = 0 where it equals 1+c_ir+c_uv."""
    _require_nonnegative_zeta(zeta)
    return 1.0 + p.c_ir / (1.0 + (zeta / p.w_ir) ** 2) + p.c_uv / (1.0 + (zeta / p.w_uv) ** 2)


@dataclass(frozen=True)
class MagnetoDrudeParallel:
    params: MagnetoDrudeParams

    def eval_iw(self, zeta):
        return eval_eps_parallel(self.params, zeta)


@dataclass(frozen=True)
class MagnetoDrudeVoigtPerp:
    params: MagnetoDrudeParams

    def eval_iw(self, zeta):
        return eval_eps_voigt_perp(self.params, zeta)


@dataclass(frozen=True)
class MagnetoDrudeVoigtEffective:
    """Perpendicular response folding in the gyrotropic part: eps_yy + eps_yz^2/eps_yy.

    Optional alternative to the bare eps_yy reduction; >= eps_yy everywhere
    since eps_yz is real on the imaginary axis.
    """

    params: MagnetoDrudeParams

    def eval_iw(self, zeta):
        eyy = eval_eps_voigt_perp(self.params, zeta)
        eyz = eval_eps_offdiag_voigt(self.params, zeta)
        return eyy + eyz * eyz / eyy


@dataclass(frozen=True)
class TwoOscillator:
    params: TwoOscillatorParams

    def eval_iw(self, zeta):
        return eval_two_oscillator(self.params, zeta)


@dataclass(frozen=True)
class Constant:
    value: float

    def __post_init__(self):
        if self.value < 1.0:
            raise ValueError("constant permittivity must be >= 1")

    def eval_iw(self, zeta):
        return self.value if np.ndim(zeta) == 0 else np.full_like(np.asarray(zeta, float), self.value)


MaterialModel = Union[
    MagnetoDrudeParallel,
    MagnetoDrudeVoigtPerp,
    MagnetoDrudeVoigtEffective,
    TwoOscillator,
    Constant,
]


def plasma_frequency(spec: CarrierSpec) -> float:
    """omega_p = sqrt(n e^2 / (eps0 m)) in rad/s."""
    mass = spec.effective_mass_ratio * ELECTRON_MASS
    return math.sqrt(spec.density * ELEMENTARY_CHARGE**2 / (VACUUM_PERMITTIVITY * mass))


def cyclotron_frequency(spec: CarrierSpec) -> float:
    """omega_c = e B / m in rad/s."""
    return ELEMENTARY_CHARGE * spec.field / (spec.effective_mass_ratio * ELECTRON_MASS)


def omega_c_ratio(spec: CarrierSpec) -> float:
    """Dimensionless field strength Omega_c = omega_c / omega_p.

    Linear in the applied field; equals B*sqrt(eps0/(n m)) in SI, matching
    the Gaussian-unit form B/(c sqrt(4 pi n m)) after unit conversion.
    """
    return cyclotron_frequency(spec) / plasma_frequency(spec)


def anisotropy_delta(par: MaterialModel, perp: MaterialModel, zeta):
    """Degree of uniaxial anisotropy |eps_par/eps_perp - 1| at imaginary frequency zeta."""
    _require_positive_zeta(zeta)
    return abs(par.eval_iw(zeta) / perp.eval_iw(zeta) - 1.0)
