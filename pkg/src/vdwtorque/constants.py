"""Physical constants (CODATA 2018), pinned to 12 significant digits.

All computation in this package is done in SI units; these values are the
single source used everywhere so that derived numbers are reproducible
bit-for-bit across modules and test oracles.
"""

PLANCK_HBAR = 1.05457181765e-34     # J s
SPEED_OF_LIGHT = 299792458.0        # m/s (exact)
ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
ELECTRON_MASS = 9.10938370150e-31   # kg
VACUUM_PERMITTIVITY = 8.85418781280e-12  # F/m
BOLTZMANN = 1.380649e-23            # J/K (exact)
