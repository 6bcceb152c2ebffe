"""Closed-form time evolution of the instantaneous-basis amplitudes.

The initial state is the upper instantaneous eigenstate |1(0)>.  With
delta1 = delta2 = A + B*omega_prime*t the coefficient equations have the
exact solution

    C1(t) = e^{i B w' t} [lam cos(lam t/2) - i (w - w' cos b) sin(lam t/2)] / lam
    C2(t) = e^{i B w' t} i (w' sin b / lam) sin(lam t/2)

where lam is the effective Rabi rate.  The lam -> 0 limit is removable and
is evaluated by series.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UndefinedPeriodError
from .model import TWO_PI, ModelParams, Spinor, eigenstate

#: lam below EPS_LAMBDA_FACTOR * omega switches sin(lam t/2)/lam to its series.
EPS_LAMBDA_FACTOR = 1e-8


@dataclass(frozen=True)
class AmplitudePair:
    """Instantaneous-basis coefficients (C1, C2) at time t."""

    t: float
    c1: complex
    c2: complex

    def norm_sq(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2


def _half_sinc(lam, t, omega):
    """sin(lam*t/2)/lam, with a series fallback for small lam.

    Accepts scalar or array t; lam and omega are scalars.
    """
    if lam < EPS_LAMBDA_FACTOR * omega:
        # sin(x)/lam = t/2 - lam^2 t^3/48 + O(lam^4 t^5), x = lam t/2
        return 0.5 * t - (lam * lam) * t ** 3 / 48.0
    return np.sin(0.5 * lam * t) / lam


def amplitude_components(p: ModelParams, t):
    """Vectorized (c1, c2) at time(s) t.  t may be a scalar or ndarray."""
    t = np.asarray(t, dtype=float)
    lam = p.rabi_rate
    half_sinc = _half_sinc(lam, t, p.omega)
    gauge_rotation = np.exp(1j * p.gauge_b * p.omega_prime * t)
    c1 = gauge_rotation * (np.cos(0.5 * lam * t) - 1j * p.detuning * half_sinc)
    c2 = gauge_rotation * (1j * p.coupling * half_sinc)
    return c1, c2


def amplitudes(p: ModelParams, t: float) -> AmplitudePair:
    """Closed-form amplitudes at a single time; amplitudes(p, 0) == (1, 0) exactly."""
    c1, c2 = amplitude_components(p, t)
    return AmplitudePair(t=float(t), c1=complex(c1), c2=complex(c2))


def state_components(p: ModelParams, t):
    """Vectorized lab-frame components (up, down) of C1|1(t)> + C2|2(t)>."""
    t = np.asarray(t, dtype=float)
    c1, c2 = amplitude_components(p, t)
    half_azimuth = 0.5 * (p.alpha + p.omega_prime * t)
    gauge = p.gauge_a + p.gauge_b * p.omega_prime * t
    phase_up = np.exp(-1j * (half_azimuth + gauge))
    phase_down = np.exp(1j * (half_azimuth - gauge))
    c = np.cos(0.5 * p.beta)
    s = np.sin(0.5 * p.beta)
    up = (c1 * c + c2 * s) * phase_up
    down = (c1 * s - c2 * c) * phase_down
    return up, down


def state(p: ModelParams, t: float) -> Spinor:
    """Lab-frame state C1(t)|1(t)> + C2(t)|2(t)>; unit norm."""
    up, down = state_components(p, t)
    return Spinor(up=complex(up), down=complex(down))


def return_probability_at_period(p: ModelParams) -> float:
    """|C1(T')|^2 after one full field rotation T' = 2 pi / omega_prime."""
    if p.omega_prime <= 0.0:
        raise UndefinedPeriodError(
            "the field rotation period is undefined for omega_prime = 0")
    lam = p.rabi_rate
    t_prime = TWO_PI / p.omega_prime
    c1, _ = amplitude_components(p, t_prime)
    return float(abs(c1) ** 2)


def initial_state(p: ModelParams) -> Spinor:
    """The fixed initial condition |1(0)>."""
    return eigenstate(p, 0.0, 1)
