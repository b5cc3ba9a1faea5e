"""Mechanical physics of a high-Q torsional mode.

Implements the structurally damped torsional oscillator: complex
susceptibility, fluctuation-dissipation (thermal + zero-point) spectra,
phonon occupancies, dissipation dilution and the effective mass of a
ribbon suspension.

Sign convention: the susceptibility is

    chi0[Omega] = 1 / ( I * (Omega0^2 - Omega^2 - i Omega Gamma0[Omega]) )

with Gamma0[Omega] = (Omega0/Q)(Omega0/Omega), chosen so that
Im chi0[Omega] >= 0 for Omega > 0 and the FDT spectrum is nonnegative.
Structural damping makes Omega*Gamma0[Omega] = Omega0^2/Q constant and
divergent as Omega -> 0, hence all spectral grids must be > 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import HBAR, K_B
from .errors import DomainError
from .spectrum import TWO_PI, Spectrum


@dataclass(frozen=True)
class OscillatorParams:
    """Fundamental torsional mode parameters.

    omega0         angular resonance frequency, rad/s
    quality_factor dimensionless Q
    inertia        moment of inertia, kg m^2
    temperature    bath temperature, K
    """

    omega0: float
    quality_factor: float
    inertia: float
    temperature: float

    def __post_init__(self):
        for name in ("omega0", "quality_factor", "inertia", "temperature"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"OscillatorParams.{name} must be positive")

    @property
    def theta_zp(self) -> float:
        """Zero-point angular motion sqrt(hbar / (2 I Omega0)), rad."""
        return float(np.sqrt(HBAR / (2.0 * self.inertia * self.omega0)))

    @property
    def gamma0_res(self) -> float:
        """On-resonance damping rate Omega0/Q, rad/s."""
        return self.omega0 / self.quality_factor

    @property
    def n_thermal(self) -> float:
        """High-temperature thermal occupancy k_B T / (hbar Omega0)."""
        return thermal_occupancy(self.temperature, self.omega0 / TWO_PI, "high_T")

    def gamma0(self, omega):
        """Structural damping rate (Omega0/Q)(Omega0/Omega), rad/s."""
        omega = np.asarray(omega, dtype=float)
        if np.any(omega <= 0.0):
            raise DomainError("structural damping is undefined for Omega <= 0")
        return self.gamma0_res * self.omega0 / omega


@dataclass(frozen=True)
class MaterialGeometry:
    """Ribbon suspension material and cross-section.

    stress / youngs_modulus in Pa, width / thickness in m, plus the
    intrinsic (undiluted) quality factor of the film.
    """

    stress: float
    youngs_modulus: float
    width: float
    thickness: float
    q_intrinsic: float

    def __post_init__(self):
        for name in ("stress", "youngs_modulus", "width", "thickness", "q_intrinsic"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"MaterialGeometry.{name} must be positive")
        if not self.width > self.thickness:
            raise DomainError("MaterialGeometry: width must exceed thickness")


def susceptibility(osc: OscillatorParams, freq):
    """Complex mechanical response chi0 at frequency ``freq`` (Hz), rad/(N m).

    On resonance |chi0| = Q/(I Omega0^2) and the response is purely
    imaginary; Im chi0 > 0 everywhere on the positive axis.
    """
    freq = np.asarray(freq, dtype=float)
    if np.any(freq <= 0.0):
        raise DomainError("susceptibility requires freq > 0")
    omega = TWO_PI * freq
    delta = (osc.omega0 - omega) * (osc.omega0 + omega)
    om_g0 = osc.omega0 ** 2 / osc.quality_factor  # Omega * Gamma0[Omega]
    chi = 1.0 / (osc.inertia * (delta - 1j * om_g0))
    return chi if chi.shape else complex(chi)


def thermal_occupancy(temperature: float, freq, mode: str = "exact"):
    """Average phonon occupancy of a mode at ``freq`` (Hz).

    ``exact`` evaluates the Bose factor 1/(exp(hbar Omega/k_B T) - 1),
    returning 0 at T = 0; ``high_T`` evaluates k_B T/(hbar Omega). The two
    agree to better than hbar*Omega/(k_B T) deep in the classical regime.
    """
    freq = np.asarray(freq, dtype=float)
    if np.any(freq <= 0.0):
        raise DomainError("thermal_occupancy requires freq > 0")
    if temperature < 0.0:
        raise DomainError("temperature must be >= 0")
    omega = TWO_PI * freq
    if mode == "high_T":
        n = K_B * temperature / (HBAR * omega)
    elif mode == "exact":
        if temperature == 0.0:
            n = np.zeros_like(omega)
        else:
            with np.errstate(over="ignore"):
                n = 1.0 / np.expm1(HBAR * omega / (K_B * temperature))
    else:
        raise DomainError(f"unknown occupancy mode {mode!r}")
    return n if n.shape else float(n)


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("frequency grid must be a nonempty 1-D array")
    if grid[0] <= 0.0 or np.any(np.diff(grid) <= 0.0):
        raise DomainError("frequency grid must be strictly positive and increasing")
    return grid


def intrinsic_spectrum(osc: OscillatorParams, grid) -> Spectrum:
    """One-sided PSD of intrinsic (thermal + zero-point) angular motion.

    Fluctuation-dissipation theorem with the exact Bose occupancy:
    S = 4 hbar (n[Omega] + 1/2) Im chi0[Omega], rad^2/Hz. At T = 0 this is
    the zero-point spectrum 2 hbar Im chi0.
    """
    grid = _check_grid(grid)
    n = thermal_occupancy(osc.temperature, grid, "exact")
    values = 4.0 * HBAR * (np.asarray(n) + 0.5) * np.imag(susceptibility(osc, grid))
    return Spectrum(grid, values, "rad^2/Hz")


def thermal_torque_psd(osc: OscillatorParams, grid) -> Spectrum:
    """One-sided PSD of the FDT thermal torque, N^2 m^2/Hz.

    S_tau = 4 hbar (n[Omega] + 1/2) I Omega Gamma0[Omega]; satisfies
    |chi0|^2 S_tau = intrinsic_spectrum exactly.
    """
    grid = _check_grid(grid)
    n = thermal_occupancy(osc.temperature, grid, "exact")
    om_g0 = osc.omega0 ** 2 / osc.quality_factor
    values = 4.0 * HBAR * (np.asarray(n) + 0.5) * osc.inertia * om_g0
    return Spectrum(grid, values, "N^2 m^2/Hz")


def zero_point_peak(osc: OscillatorParams) -> float:
    """Peak PSD of zero-point motion, 4 theta_zp^2 / Gamma0, rad^2/Hz."""
    return 4.0 * osc.theta_zp ** 2 / osc.gamma0_res


def dilution_factor(geom: MaterialGeometry) -> tuple[float, float]:
    """Dissipation dilution (sigma/2E)(w/h)^2 and the diluted Q.

    Returns ``(d_q, q_diluted)`` with q_diluted = q_intrinsic * d_q.
    """
    d_q = (geom.stress / (2.0 * geom.youngs_modulus)) * (geom.width / geom.thickness) ** 2
    return d_q, geom.q_intrinsic * d_q


def effective_mass(inertia: float, width: float) -> float:
    """Effective mass m = I (2/w)^2 of the torsional mode, kg."""
    if inertia <= 0.0 or width <= 0.0:
        raise DomainError("effective_mass requires positive inputs")
    return inertia * (2.0 / width) ** 2
