"""Full 3x3 permittivity tensors of the two uniaxial plates.

The torque integral itself only needs the scalar pair (eps_par, eps_perp)
per plate; these tensors exist to validate that reduction and to back the
``tensor`` CLI diagnostic.  Plate 1 has its distinguished axis along x;
plate 2 is the same slab rotated in-plane by the misalignment angle theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PlateTensor:
    entries: np.ndarray  # 3x3, symmetric, dimensionless
    angle: float = 0.0   # radians; in-plane rotation applied (plate 2 only)


def _check_components(eps_par: float, eps_perp: float) -> None:
    if eps_par < 1.0 or eps_perp < 1.0:
        raise ValueError("permittivity components must be >= 1")


def plate1_tensor(eps_par: float, eps_perp: float) -> PlateTensor:
    """diag(eps_par, eps_perp, eps_perp): distinguished axis along x."""
    _check_components(eps_par, eps_perp)
    return PlateTensor(np.diag([eps_par, eps_perp, eps_perp]).astype(float))


def plate2_tensor(eps_par: float, eps_perp: float, theta: float) -> PlateTensor:
    """Plate rotated in-plane by theta; reduces to plate1_tensor at theta = 0.

    Entries are periodic in theta with period pi; the eigenvalue multiset
    {eps_par, eps_perp, eps_perp} is theta-independent.
    """
    _check_components(eps_par, eps_perp)
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    c = math.cos(theta)
    s = math.sin(theta)
    cross = (eps_perp - eps_par) * s * c
    entries = np.array([
        [eps_par * c * c + eps_perp * s * s, cross, 0.0],
        [cross, eps_par * s * s + eps_perp * c * c, 0.0],
        [0.0, 0.0, eps_perp],
    ])
    return PlateTensor(entries, angle=theta)
