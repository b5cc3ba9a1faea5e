"""Hermite-Gaussian beam geometry and tilt/displacement scattering.

A fundamental-mode probe beam that is transversely displaced by dx and
tilted by dtheta picks up a first-order (HG10) component

    a_bar * (dx / w(z) + i k w(z) dtheta / 2) * exp(-i zeta(z)),

so at the waist displacement enters the real (amplitude) quadrature and
tilt the imaginary (phase) quadrature; the Gouy phase zeta rotates one
into the other during propagation. This rotation is what lets a split
photodetector in the far field read out tilt, and it plays the role of a
homodyne angle for the optical lever.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT, HBAR, Q_E
from .errors import DomainError
from .kernels import hermite_poly
from .spectrum import TWO_PI

MAX_HG_ORDER = 20


class LinearizationWarning(UserWarning):
    """Emitted when a perturbation leaves the first-order scattering regime."""


@dataclass(frozen=True)
class BeamParams:
    """Probe-beam optics.

    wavelength m; waist_radius m; power W; efficiency = detection quantum
    efficiency in (0, 1]; gouy_shift = accumulated Gouy phase from the
    oscillator to the detector, rad; responsivity A/W (defaults to
    q_e/(hbar omega_laser), one electron per photon).
    """

    wavelength: float
    waist_radius: float
    power: float
    efficiency: float
    gouy_shift: float = math.pi / 2
    responsivity: float | None = None

    def __post_init__(self):
        for name in ("wavelength", "waist_radius", "power"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"BeamParams.{name} must be positive")
        if not 0.0 < self.efficiency <= 1.0:
            raise DomainError("BeamParams.efficiency must be in (0, 1]")
        if self.responsivity is None:
            object.__setattr__(self, "responsivity", Q_E / (HBAR * self.omega_laser))
        elif not self.responsivity > 0.0:
            raise DomainError("BeamParams.responsivity must be positive")

    @property
    def wavenumber(self) -> float:
        return TWO_PI / self.wavelength

    @property
    def omega_laser(self) -> float:
        return TWO_PI * C_LIGHT / self.wavelength

    @property
    def flux_amplitude_sq(self) -> float:
        """Mean photon flux a_bar^2 = P / (hbar omega_laser), photons/s."""
        return self.power / (HBAR * self.omega_laser)

    @property
    def rayleigh_length(self) -> float:
        return self.wavenumber * self.waist_radius ** 2 / 2.0


@dataclass(frozen=True)
class BeamStateAtPlane:
    """Beam geometry at a plane: z, w(z), R(z) and Gouy phase.

    The curvature radius is ``math.inf`` at the waist (flat phase front)
    rather than a division-by-zero artifact.
    """

    axial_position: float
    radius: float
    curvature_radius: float
    gouy: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise DomainError("BeamStateAtPlane.radius must be positive")
        if not -math.pi / 2 < self.gouy < math.pi / 2:
            raise DomainError("BeamStateAtPlane.gouy must lie in (-pi/2, pi/2)")


def propagate(beam: BeamParams, z: float) -> BeamStateAtPlane:
    """Free-space beam state at axial position ``z`` (waist at z = 0)."""
    z_r = beam.rayleigh_length
    radius = beam.waist_radius * math.sqrt(1.0 + (z / z_r) ** 2)
    curvature = math.inf if z == 0.0 else z * (1.0 + (z_r / z) ** 2)
    return BeamStateAtPlane(z, radius, curvature, math.atan2(z, z_r))


def hg_amplitude(m: int, n: int, x, y, plane: BeamStateAtPlane):
    """Real spatial amplitude u_mn(x, y) of the HG_mn mode at ``plane``.

    Normalized so that the modes are orthonormal over the transverse
    plane. Orders above 20 are rejected (factorial overflow guard).
    """
    if m < 0 or n < 0:
        raise DomainError("mode orders must be nonnegative")
    if m > MAX_HG_ORDER or n > MAX_HG_ORDER:
        raise DomainError(f"mode order above {MAX_HG_ORDER} not supported")
    w = plane.radius
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    norm = math.sqrt(2.0 / math.pi) / w / math.sqrt(
        2.0 ** (m + n) * math.factorial(m) * math.factorial(n)
    )
    root2 = math.sqrt(2.0)
    u = (
        norm
        * np.exp(-(x ** 2 + y ** 2) / w ** 2)
        * hermite_poly(m, root2 * x / w)
        * hermite_poly(n, root2 * y / w)
    )
    return u if u.shape else float(u)


def scatter_to_hg10(
    beam: BeamParams,
    plane: BeamStateAtPlane,
    delta_x: float,
    delta_theta: float,
) -> complex:
    """Complex HG10 flux amplitude scattered from the fundamental mode.

    Returns a_bar (dx/w + i k w dtheta/2) e^{-i zeta} in photon-flux
    amplitude units. Linear in (dx, dtheta); a warning is issued when a
    perturbation is large enough (>10% of the mode scale) that the
    first-order expansion degrades.
    """
    w = plane.radius
    k = beam.wavenumber
    if abs(delta_x) > 0.1 * w or abs(delta_theta) > 0.1 / (k * w):
        warnings.warn(
            "perturbation outside the linear scattering regime",
            LinearizationWarning,
            stacklevel=2,
        )
    a_bar = math.sqrt(beam.flux_amplitude_sq)
    coeff = a_bar * (delta_x / w + 1j * k * w * delta_theta / 2.0)
    return coeff * np.exp(-1j * plane.gouy)
