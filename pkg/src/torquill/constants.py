"""Physical constants (CODATA 2018 exact values)."""

HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23  # J/K
C_LIGHT = 299792458.0  # m/s
Q_E = 1.602176634e-19  # C
