"""Field-induced van der Waals torque between parallel anisotropic slabs.

A magneto-Drude slab becomes uniaxial under an in-plane static magnetic
field; against a permanently birefringent plate across a fluid gap this
produces a dispersion torque whose strength follows the applied field.
The package evaluates the material responses on the imaginary frequency
axis, the spectral integral behind the torque, and ships a CLI that sweeps
parameters and regenerates the case-study figures.
"""

from .constants import (
    BOLTZMANN,
    ELECTRON_MASS,
    ELEMENTARY_CHARGE,
    PLANCK_HBAR,
    SPEED_OF_LIGHT,
    VACUUM_PERMITTIVITY,
)
from .geometry import PlateTensor, plate1_tensor, plate2_tensor
from .materials import (
    CarrierSpec,
    Constant,
    MagnetoDrudeParallel,
    MagnetoDrudeParams,
    MagnetoDrudeVoigtEffective,
    MagnetoDrudeVoigtPerp,
    MaterialModel,
    TwoOscillator,
    TwoOscillatorParams,
    anisotropy_delta,
    cyclotron_frequency,
    eval_eps_offdiag_voigt,
    eval_eps_parallel,
    eval_eps_voigt_perp,
    eval_two_oscillator,
    omega_c_ratio,
    plasma_frequency,
)
from .quadrature import (
    LOG_SUBSTITUTION,
    RATIONAL_SUBSTITUTION,
    QuadratureError,
    QuadratureResult,
    QuadratureSettings,
    integrate_semi_infinite,
)
from .torque import (
    TorqueEvaluation,
    TorqueProblem,
    UniaxialPlate,
    ValidityReport,
    angular_free_energy,
    check_validity,
    evaluate,
    integrand,
    torque,
    torque_from_wbar,
    torque_per_area,
    wbar,
)

__version__ = "0.1.0"
