"""One-sided power spectral densities on positive frequency grids.

Convention used throughout the toolkit: spectra are one-sided and
symmetrized, tabulated against frequency in Hz, with values in X^2/Hz such
that the variance of the underlying process is ``integral(S df)`` over
(0, inf). Closed-form expressions written against angular frequency are
evaluated at Omega = 2*pi*f; with this convention the numerical value of
the density is unchanged and the 2*pi bookkeeping lives in the integrals
only (d Omega / 2 pi = df).

Structural damping diverges as f -> 0, so grids are required to be
strictly positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Spectrum:
    """A one-sided PSD sampled on a strictly increasing positive grid.

    ``n_avg`` records how many averaged periodogram segments produced the
    estimate (1 for model spectra); fit weighting uses it.
    """

    freq_hz: np.ndarray
    values: np.ndarray
    unit: str = "rad^2/Hz"
    n_avg: int = 1

    def __post_init__(self):
        freq = np.asarray(self.freq_hz, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if freq.ndim != 1 or freq.size == 0:
            raise DomainError("frequency grid must be a nonempty 1-D array")
        if freq[0] <= 0.0 or np.any(np.diff(freq) <= 0.0):
            raise DomainError("frequency grid must be strictly positive and increasing")
        if vals.shape != freq.shape:
            raise DomainError("values and grid must have matching shape")
        if not np.all(np.isfinite(vals)) or np.any(vals < 0.0):
            raise DomainError("PSD values must be finite and nonnegative")
        object.__setattr__(self, "freq_hz", freq)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.freq_hz.size

    def integral(self) -> float:
        """Trapezoidal integral over the tabulated band, units X^2."""
        return float(np.trapezoid(self.values, self.freq_hz))

    def interp(self, freq_hz: np.ndarray) -> np.ndarray:
        """Linear interpolation onto ``freq_hz`` (end values held outside)."""
        return np.interp(freq_hz, self.freq_hz, self.values)

    def require_grid(self, freq_hz: np.ndarray) -> None:
        if self.freq_hz.shape != np.shape(freq_hz) or not np.array_equal(
            self.freq_hz, freq_hz
        ):
            raise DomainError("spectrum is not defined on the requested grid")

    def scaled(self, factor: float, unit: str | None = None) -> "Spectrum":
        return Spectrum(self.freq_hz, self.values * factor, unit or self.unit, self.n_avg)


def as_values(psd, grid: np.ndarray) -> np.ndarray:
    """Resolve a ``Spectrum`` or nonnegative constant onto ``grid``."""
    if isinstance(psd, Spectrum):
        return psd.interp(grid)
    value = float(psd)
    if value < 0.0:
        raise DomainError("constant PSD must be nonnegative")
    return np.full(np.shape(grid), value)


def log_grid(f_min: float, f_max: float, points: int) -> np.ndarray:
    if not (0.0 < f_min < f_max):
        raise DomainError("need 0 < f_min < f_max")
    if points < 2:
        raise DomainError("need at least 2 grid points")
    return np.geomspace(f_min, f_max, points)


def measurement_grid(
    f_min: float,
    f_max: float,
    points: int = 4001,
    center_hz: float | None = None,
    halfwidth_hz: float | None = None,
    refine_points: int = 1501,
) -> np.ndarray:
    """Log-spaced grid with a linear refinement window around a resonance.

    A high-Q peak (fractional width ~1e-7) would need ~1e9 log points to
    resolve; instead ``refine_points`` linear samples are merged within
    ``center_hz +- halfwidth_hz``.
    """
    grid = log_grid(f_min, f_max, points)
    if center_hz is not None and halfwidth_hz is not None:
        lo = max(center_hz - halfwidth_hz, f_min)
        hi = min(center_hz + halfwidth_hz, f_max)
        if hi > lo:
            grid = np.union1d(grid, np.linspace(lo, hi, refine_points))
    return grid


def occupancy_grid(
    omega0: float,
    gamma_eff: float,
    span_linewidths: float = 50.0,
    side_points: int = 1500,
    inner_fraction: float = 1e-4,
) -> np.ndarray:
    """Resonance-centered grid for phonon-occupancy integrals.

    Log-spaced offsets on both sides of the peak from
    ``inner_fraction*gamma_eff`` out to ``span_linewidths*gamma_eff``,
    giving >= 2*side_points samples inside the integration window while
    resolving the Lorentzian core. Non-positive frequencies from very wide
    windows are discarded.
    """
    f0 = omega0 / TWO_PI
    offsets = np.geomspace(
        inner_fraction * gamma_eff / TWO_PI,
        span_linewidths * gamma_eff / TWO_PI,
        side_points,
    )
    freqs = np.concatenate((f0 - offsets, [f0], f0 + offsets))
    freqs = np.unique(freqs[freqs > 0.0])
    if freqs.size < 3:
        raise DomainError("occupancy grid collapsed; check omega0 and gamma_eff")
    return freqs
