"""Non-retarded dispersion torque between two parallel uniaxial slabs.

For weak anisotropy the angle-dependent part of the fluctuation free energy
between slabs separated by a gap medium factorizes into a universal
geometric prefactor and a purely material spectral integral (here called
``wbar``, with units of rad/s):

    torque(L, theta) = -(hbar * S / (64 pi^2 L^2)) * wbar * sin(2 theta)

wbar integrates, over imaginary frequency, the product of the two slabs'
uniaxial contrasts weighted by the gap response.  Everything here is SI.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import BOLTZMANN, PLANCK_HBAR, SPEED_OF_LIGHT
from .materials import MaterialModel
from .quadrature import QuadratureResult, QuadratureSettings, integrate_semi_infinite

# Fraction of hbar*c/(k_B T) below which retardation and thermal corrections
# are safely negligible; separations above it get flagged, not rejected.
_NONRETARDED_MARGIN = 0.1


@dataclass(frozen=True)
class UniaxialPlate:
    """One slab's principal-axis responses: par along the distinguished axis."""

    par: MaterialModel
    perp: MaterialModel


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    separation: float   # m
    bound: float        # m; 0.1 * hbar c / (k_B T), inf at T = 0
    temperature: float  # K


@dataclass(frozen=True)
class TorqueProblem:
    plate1: UniaxialPlate
    plate2: UniaxialPlate
    gap: MaterialModel
    separation: float          # m
    angle: float               # radians between the plates' distinguished axes
    area: float                # m^2
    quadrature: QuadratureSettings
    temperature: float = 300.0  # K, used only by the validity check

    def __post_init__(self):
        if self.separation <= 0.0:
            raise ValueError("separation must be > 0")
        if self.area <= 0.0:
            raise ValueError("area must be > 0")
        if self.temperature < 0.0:
            raise ValueError("temperature must be >= 0")
        if not math.isfinite(self.angle):
            raise ValueError("angle must be finite")


@dataclass(frozen=True)
class TorqueEvaluation:
    """One fully evaluated problem: wbar metadata plus the derived quantities."""

    wbar: QuadratureResult
    torque: float           # N m
    torque_per_area: float  # N m / m^2 = N/m
    free_energy: float      # J, angle-dependent part only
    validity: ValidityReport


def _ln_one_minus_over(x):
    """ln(1-x)/x with its removable singularity at x = 0 filled in.

    The series branch keeps the integrand finite when a plate's
    perpendicular response index-matches the gap (x -> 0 through the
    (eps_perp - eps_gap) factors).
    """
    if np.ndim(x) == 0:
        if abs(x) < 1.0e-6:
            return -(1.0 + x * (0.5 + x / 3.0))
        return math.log1p(-x) / x
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1.0e-6
    out = np.empty_like(x)
    out[small] = -(1.0 + x[small] * (0.5 + x[small] / 3.0))
    xb = x[~small]
    out[~small] = np.log1p(-xb) / xb
    return out


def integrand(prob: TorqueProblem, zeta):
    """Spectral density of wbar at imaginary frequency zeta (dimensionless).

    Equals

        (e2par-e2perp)(e1par-e1perp) e3^2
        --------------------------------- * ln(1 - (e1perp-e3)(e2perp-e3)
        (e1perp^2-e3^2)(e2perp^2-e3^2)              / ((e1perp+e3)(e2perp+e3)))

    rewritten as amplitude * ln(1-x)/x so that index matching between either
    plate and the gap is a removable limit instead of a 0/0.
    """
    e1p = prob.plate1.par.eval_iw(zeta)
    e1t = prob.plate1.perp.eval_iw(zeta)
    e2p = prob.plate2.par.eval_iw(zeta)
    e2t = prob.plate2.perp.eval_iw(zeta)
    e3 = prob.gap.eval_iw(zeta)

    s1 = e1t + e3
    s2 = e2t + e3
    x = ((e1t - e3) / s1) * ((e2t - e3) / s2)
    amplitude = (e2p - e2t) * (e1p - e1t) * (e3 / (s1 * s2)) ** 2
    return amplitude * _ln_one_minus_over(x)


def wbar(prob: TorqueProblem) -> QuadratureResult:
    """Material spectral integral (rad/s) with full quadrature metadata."""
    return integrate_semi_infinite(lambda zeta: integrand(prob, zeta), prob.quadrature)


def _sin_two_theta(theta: float) -> float:
    # Exact zeros at multiples of pi/2 so aligned or crossed plates report
    # an exactly-zero torque on the standard grids.
    t = 2.0 * theta / math.pi
    if t == round(t):
        return 0.0
    return math.sin(2.0 * theta)


def _cos_two_theta(theta: float) -> float:
    t = 2.0 * theta / math.pi
    r = round(t)
    if t == r:
        return 1.0 if r % 2 == 0 else -1.0
    if t - math.floor(t) == 0.5:
        return 0.0
    return math.cos(2.0 * theta)


def torque_from_wbar(prob: TorqueProblem, wbar_value: float) -> float:
    """Torque (N m) for a known wbar; wbar itself carries no L or theta dependence."""
    prefactor = -PLANCK_HBAR * prob.area / (64.0 * math.pi**2 * prob.separation**2)
    return prefactor * wbar_value * _sin_two_theta(prob.angle)


def torque(prob: TorqueProblem) -> float:
    """Torque (N m) between the plates; warns when outside the non-retarded regime."""
    report = check_validity(prob)
    if not report.valid:
        warnings.warn(
            f"separation {prob.separation:.3e} m exceeds the non-retarded bound "
            f"{report.bound:.3e} m at T={prob.temperature:g} K; result kept",
            RuntimeWarning,
            stacklevel=2,
        )
    result = wbar(prob)
    if not result.converged:
        warnings.warn(
            f"wbar quadrature did not converge (error estimate {result.error_estimate:.3e} "
            f"after {result.evals} evaluations)",
            RuntimeWarning,
            stacklevel=2,
        )
    return torque_from_wbar(prob, result.value)


def torque_per_area(prob: TorqueProblem) -> float:
    """Torque per unit plate area (N/m); independent of the area field."""
    return torque(prob) / prob.area


def angular_free_energy(prob: TorqueProblem) -> float:
    """Angle-dependent free energy (J): -(hbar S / (128 pi^2 L^2)) wbar cos(2 theta).

    The additive constant is fixed so the energy vanishes at theta = pi/4;
    the negative theta-derivative reproduces torque().
    """
    result = wbar(prob)
    prefactor = -PLANCK_HBAR * prob.area / (128.0 * math.pi**2 * prob.separation**2)
    return prefactor * result.value * _cos_two_theta(prob.angle)


def check_validity(prob: TorqueProblem) -> ValidityReport:
    """Flag separations too large for the non-retarded, zero-temperature form."""
    if prob.temperature == 0.0:
        bound = math.inf
    else:
        bound = _NONRETARDED_MARGIN * PLANCK_HBAR * SPEED_OF_LIGHT / (BOLTZMANN * prob.temperature)
    return ValidityReport(
        valid=prob.separation <= bound,
        separation=prob.separation,
        bound=bound,
        temperature=prob.temperature,
    )


def evaluate(prob: TorqueProblem) -> TorqueEvaluation:
    """Evaluate everything once (single quadrature); used by the sweep engine."""
    result = wbar(prob)
    tau = torque_from_wbar(prob, result.value)
    prefactor = -PLANCK_HBAR * prob.area / (128.0 * math.pi**2 * prob.separation**2)
    energy = prefactor * result.value * _cos_two_theta(prob.angle)
    return TorqueEvaluation(
        wbar=result,
        torque=tau,
        torque_per_area=tau / prob.area,
        free_energy=energy,
        validity=check_validity(prob),
    )
