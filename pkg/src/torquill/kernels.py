"""Hot numeric kernels, JIT-compiled with numba when available.

Every kernel is written once in plain numpy; at import time it is wrapped
with ``numba.njit(cache=True)`` unless the environment variable
``TORQUILL_NUMBA`` selects the pure-numpy path:

    TORQUILL_NUMBA=0   force the numpy fallback
    TORQUILL_NUMBA=1   require numba (ImportError if missing)
    unset / auto       use numba when importable

``benchmarks/bench_kernels.py`` times the two paths against each other.
The kernels avoid catastrophic cancellation near resonance by forming
Omega0^2 - Omega^2 as (Omega0 - Omega)(Omega0 + Omega).
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "backend",
    "hermite_poly",
    "loop_transfer_factors",
    "lorentzian_model",
    "lorentzian_jacobian",
    "closed_loop_model",
    "closed_loop_jacobian",
    "PLAIN",
]


def _resolve_backend() -> bool:
    flag = os.environ.get("TORQUILL_NUMBA", "auto").strip().lower()
    if flag in ("0", "false", "off", "numpy"):
        return False
    if flag in ("1", "true", "on", "numba"):
        import numba  # noqa: F401  -- fail loudly if forced but absent

        return True
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


_USE_NUMBA = _resolve_backend()


def backend() -> str:
    """Name of the active kernel backend, ``"numba"`` or ``"numpy"``."""
    return "numba" if _USE_NUMBA else "numpy"


def _jit(fn):
    if _USE_NUMBA:
        from numba import njit

        return njit(cache=True)(fn)
    return fn


def _hermite_poly(order, t):
    """Physicists' Hermite polynomial H_n(t), three-term recurrence.

    Stable for the mode orders used here (<= 20); avoids factorials.
    """
    h_prev = np.ones_like(t)
    if order == 0:
        return h_prev
    h = 2.0 * t
    for k in range(1, order):
        h_next = 2.0 * t * h - 2.0 * k * h_prev
        h_prev = h
        h = h_next
    return h


def _loop_transfer_factors(omega, omega0, q, gamma_fb):
    """Shared spectral factors of the cold-damped oscillator.

    With structural damping, Omega*Gamma0[Omega] = Omega0^2/q is constant.
    Returns (1/D, N_obs, N_fb) where

        D     = (Omega0^2-Omega^2)^2 + (Omega0^2/q + Omega*gamma_fb)^2
        N_obs = (Omega0^2-Omega^2)^2 + (Omega0^2/q)^2
        N_fb  = (Omega*gamma_fb)^2

    so that |chi_eff|^2 = 1/(I^2 D), the imprecision feed-through of the
    observed spectrum is N_obs/D and that of the physical spectrum N_fb/D.
    """
    delta = (omega0 - omega) * (omega0 + omega)
    om_g0 = omega0 * omega0 / q
    om_geff = om_g0 + omega * gamma_fb
    dsq = delta * delta
    inv_d = 1.0 / (dsq + om_geff * om_geff)
    n_obs = dsq + om_g0 * om_g0
    n_fb = (omega * gamma_fb) ** 2
    return inv_d, n_obs, n_fb


def _lorentzian_model(f, floor, peak, f0, q):
    """floor + peak / (1 + 4 q^2 (f - f0)^2 / f0^2)."""
    x = 2.0 * q * (f - f0) / f0
    return floor + peak / (1.0 + x * x)


def _lorentzian_jacobian(f, floor, peak, f0, q):
    """Partials of the Lorentzian model wrt (floor, peak, f0)."""
    x = 2.0 * q * (f - f0) / f0
    inv_u = 1.0 / (1.0 + x * x)
    d_floor = np.ones_like(f)
    d_peak = inv_u
    d_f0 = peak * inv_u * inv_u * 4.0 * x * q * f / (f0 * f0)
    return d_floor, d_peak, d_f0


def _closed_loop_model(omega, a_tau, gamma_fb, s_imp, omega0, q):
    """In-loop (observed) angle PSD model used to fit cooled spectra.

    a_tau = S_tau_tot / I^2 with S_tau_tot taken flat near resonance.
    """
    inv_d, n_obs, _ = _loop_transfer_factors(omega, omega0, q, gamma_fb)
    return a_tau * inv_d + n_obs * inv_d * s_imp


def _closed_loop_jacobian(omega, a_tau, gamma_fb, s_imp, omega0, q):
    """Partials of the closed-loop model wrt (a_tau, gamma_fb, s_imp)."""
    inv_d, n_obs, _ = _loop_transfer_factors(omega, omega0, q, gamma_fb)
    om_geff = omega0 * omega0 / q + omega * gamma_fb
    d_a = inv_d
    d_s = n_obs * inv_d
    d_g = -(a_tau + n_obs * s_imp) * 2.0 * omega * om_geff * inv_d * inv_d
    return d_a, d_g, d_s


# Plain-numpy implementations, kept importable for the benchmark.
PLAIN = {
    "hermite_poly": _hermite_poly,
    "loop_transfer_factors": _loop_transfer_factors,
    "lorentzian_model": _lorentzian_model,
    "lorentzian_jacobian": _lorentzian_jacobian,
    "closed_loop_model": _closed_loop_model,
    "closed_loop_jacobian": _closed_loop_jacobian,
}

hermite_poly = _jit(_hermite_poly)
loop_transfer_factors = _jit(_loop_transfer_factors)
lorentzian_model = _jit(_lorentzian_model)
lorentzian_jacobian = _jit(_lorentzian_jacobian)
closed_loop_model = _jit(_closed_loop_model)
closed_loop_jacobian = _jit(_closed_loop_jacobian)
