"""Split-photodetector readout of the optical lever.

Photocurrent and angle-referred spectra for the plain and the mirrored
optical lever, itemized noise budgets, quantum back-action and the
standard quantum limit.

The mirrored configuration adds a retroreflector arm whose sign-flipped
copy of the input beam jitter cancels extraneous tilt/displacement noise
at the detector, at the cost of doubled shot noise; the residual classical
leakage is modeled by a power-ratio ``suppression`` applied to the
extraneous terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import HBAR
from .errors import DomainError
from .mech import OscillatorParams, intrinsic_spectrum, susceptibility, zero_point_peak
from .beam import BeamParams
from .spectrum import Spectrum, as_values


@dataclass(frozen=True)
class ExtraneousNoise:
    """Classical noise inputs and beam mis-centering.

    tilt_psd (rad^2/Hz), displacement_psd (m^2/Hz) and force_psd (N^2/Hz)
    may each be a constant or a Spectrum. ``beam_offset`` is the distance
    of the probe spot from the rotation axis. ``suppression`` is the power
    ratio the mirrored arm leaves of extraneous first-order-mode noise
    (0 = perfect cancellation, 1 = none); a Spectrum is accepted for a
    frequency-dependent rejection.
    """

    tilt_psd: object = 0.0
    displacement_psd: object = 0.0
    force_psd: object = 0.0
    beam_offset: float = 0.0
    suppression: object = 0.0

    def __post_init__(self):
        for name in ("tilt_psd", "displacement_psd", "force_psd", "suppression"):
            value = getattr(self, name)
            if isinstance(value, Spectrum):
                continue
            if not float(value) >= 0.0:
                raise DomainError(f"ExtraneousNoise.{name} must be >= 0")
        sup = self.suppression
        if isinstance(sup, Spectrum):
            if np.any(sup.values > 1.0):
                raise DomainError("suppression power ratio must be <= 1")
        elif float(sup) > 1.0:
            raise DomainError("suppression power ratio must be <= 1")


@dataclass(frozen=True)
class NoiseBudget:
    """Itemized angle-referred budget; ``total`` is the pointwise sum."""

    intrinsic: Spectrum
    back_action: Spectrum
    imprecision_quantum: Spectrum
    imprecision_tilt: Spectrum
    imprecision_displacement: Spectrum
    total: Spectrum = field(init=False)

    def __post_init__(self):
        grid = self.intrinsic.freq_hz
        values = self.intrinsic.values.copy()
        for part in (
            self.back_action,
            self.imprecision_quantum,
            self.imprecision_tilt,
            self.imprecision_displacement,
        ):
            part.require_grid(grid)
            values += part.values
        object.__setattr__(self, "total", Spectrum(grid, values, self.intrinsic.unit))

    def components(self) -> dict[str, Spectrum]:
        return {
            "intrinsic": self.intrinsic,
            "back_action": self.back_action,
            "imprecision_quantum": self.imprecision_quantum,
            "imprecision_tilt": self.imprecision_tilt,
            "imprecision_displacement": self.imprecision_displacement,
            "total": self.total,
        }


def _sin_gouy(beam: BeamParams) -> float:
    s = math.sin(beam.gouy_shift)
    if abs(s) < 1e-12:
        raise DomainError(
            "Gouy shift is a multiple of pi: tilt does not transduce to the detector"
        )
    return s


def angular_imprecision(beam: BeamParams, mirrored: bool) -> float:
    """Quantum-limited angle-referred imprecision floor, rad^2/Hz.

    (pi/2) csc^2(zeta) / (2 eta a_bar^2 (k w0)^2) for the plain lever; the
    mirrored lever pays doubled shot noise (denominator eta instead of
    2 eta). Constant in frequency.
    """
    s = _sin_gouy(beam)
    scale = beam.flux_amplitude_sq * (beam.wavenumber * beam.waist_radius) ** 2
    plain = (math.pi / 2.0) / (2.0 * beam.efficiency * scale * s ** 2)
    return 2.0 * plain if mirrored else plain


def backaction_torque_psd(
    beam: BeamParams, noise: ExtraneousNoise, grid
) -> Spectrum:
    """Total back-action torque PSD, N^2 m^2/Hz.

    Quantum radiation torque 2 (hbar a_bar k w0)^2 [1 + (2 x0/w0)^2]
    (flat), plus the extraneous displacement noise converted by the mean
    radiation force and the extraneous force noise acting at the beam
    offset x0.
    """
    grid = np.asarray(grid, dtype=float)
    w0 = beam.waist_radius
    k = beam.wavenumber
    a_sq = beam.flux_amplitude_sq
    x0 = noise.beam_offset
    quantum = 2.0 * (HBAR ** 2) * a_sq * (k * w0) ** 2 * (1.0 + (2.0 * x0 / w0) ** 2)
    values = (
        quantum
        + (2.0 * HBAR * a_sq * k) ** 2 * as_values(noise.displacement_psd, grid)
        + x0 ** 2 * as_values(noise.force_psd, grid)
    )
    return Spectrum(grid, values, "N^2 m^2/Hz")


def _extraneous_angle_terms(
    beam: BeamParams, noise: ExtraneousNoise, mirrored: bool, grid
) -> tuple[np.ndarray, np.ndarray]:
    """Angle-referred extraneous tilt and displacement imprecision."""
    s = _sin_gouy(beam)
    cot = math.cos(beam.gouy_shift) / s
    leak = as_values(noise.suppression, grid) if mirrored else np.ones_like(grid)
    tilt = 0.25 * as_values(noise.tilt_psd, grid) * leak
    disp = (
        (cot / (beam.wavenumber * beam.waist_radius ** 2)) ** 2
        * as_values(noise.displacement_psd, grid)
        * leak
    )
    return tilt, disp


def angle_referred_imprecision(
    beam: BeamParams, noise: ExtraneousNoise, mirrored: bool, grid
) -> np.ndarray:
    """Total detection imprecision referred to oscillator angle, rad^2/Hz."""
    grid = np.asarray(grid, dtype=float)
    tilt, disp = _extraneous_angle_terms(beam, noise, mirrored, grid)
    return angular_imprecision(beam, mirrored) + tilt + disp


def photocurrent_psd(
    beam: BeamParams,
    osc_phys: Spectrum,
    noise: ExtraneousNoise,
    mirrored: bool,
    grid,
) -> Spectrum:
    """Split-photodetector photocurrent PSD, A^2/Hz.

    (2/pi) (2 eta R P k w0 sin zeta)^2 times the angle-referred bracket
    [S_phys + extraneous terms + quantum imprecision]; with suppression 0
    the mirrored output reduces to the classical-noise-immune form
    S_phys + doubled-shot-noise imprecision exactly.
    """
    grid = np.asarray(grid, dtype=float)
    osc_phys.require_grid(grid)
    s = _sin_gouy(beam)
    prefactor = (2.0 / math.pi) * (
        2.0
        * beam.efficiency
        * beam.responsivity
        * beam.power
        * beam.wavenumber
        * beam.waist_radius
        * s
    ) ** 2
    bracket = osc_phys.values + angle_referred_imprecision(beam, noise, mirrored, grid)
    return Spectrum(grid, prefactor * bracket, "A^2/Hz")


def observed_angle_psd(
    osc: OscillatorParams,
    beam: BeamParams,
    noise: ExtraneousNoise,
    mirrored: bool,
    grid,
) -> NoiseBudget:
    """Open-loop observed angle PSD, itemized.

    total = intrinsic + |chi0|^2 S_tau_ba + quantum imprecision +
    suppressed extraneous tilt/displacement imprecision.
    """
    grid = np.asarray(grid, dtype=float)
    chi_sq = np.abs(susceptibility(osc, grid)) ** 2
    tilt, disp = _extraneous_angle_terms(beam, noise, mirrored, grid)
    quantum = np.full_like(grid, angular_imprecision(beam, mirrored))
    unit = "rad^2/Hz"
    return NoiseBudget(
        intrinsic=intrinsic_spectrum(osc, grid),
        back_action=Spectrum(
            grid, chi_sq * backaction_torque_psd(beam, noise, grid).values, unit
        ),
        imprecision_quantum=Spectrum(grid, quantum, unit),
        imprecision_tilt=Spectrum(grid, tilt, unit),
        imprecision_displacement=Spectrum(grid, disp, unit),
    )


SQL_RESONANCE_RATIO = 1.0 + math.sqrt(math.pi / 2.0)


def sql_spectrum(osc: OscillatorParams, grid) -> tuple[Spectrum, float]:
    """Standard quantum limit of the plain lever, and its resonance ratio.

    Under ideal conditions (eta = 1, centered beam, no extraneous noise)
    the back-action/imprecision product is power-independent,
    S_ba * S_imp = (pi/2) hbar^2 |chi0|^2, so the power-minimized total is

        S_SQL = 2 hbar Im chi0 + sqrt(2 pi) hbar |chi0|,

    equal to (1 + sqrt(pi/2)) ~ 2.25 times the peak zero-point PSD on
    resonance.
    """
    grid = np.asarray(grid, dtype=float)
    chi = susceptibility(osc, grid)
    values = 2.0 * HBAR * np.imag(chi) + math.sqrt(2.0 * math.pi) * HBAR * np.abs(chi)
    return Spectrum(grid, values, "rad^2/Hz"), SQL_RESONANCE_RATIO


def phonon_equivalent_imprecision(osc: OscillatorParams, imprecision: float) -> float:
    """Imprecision floor in phonon units, S_imp / (2 S_zp[Omega0])."""
    return imprecision / (2.0 * zero_point_peak(osc))
