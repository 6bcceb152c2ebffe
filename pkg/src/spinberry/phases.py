"""Complex total phase, dynamical phase, and the generalized geometric phase.

Writing C1(t) = exp(i theta) with complex theta = theta_r + i theta_i gives

    theta_i = -ln|C1(t)|,
    theta_r = B w' t + arg[lam cos(lam t/2) - i (w - w' cos b) sin(lam t/2)],

where the argument is tracked continuously from theta_r(0) = 0 rather than
reduced to a principal branch.  The geometric part is

    phi_B(t) = (theta_r + i theta_i) - phi_D(t),

with the dynamical phase phi_D = -integral of the instantaneous energy
expectation.  phi_B is reported unwrapped; ``principal_branch`` reduces a
real phase into (-pi, pi].
"""

from __future__ import annotations

import math

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import AmplitudeVanishedError, ExtrapolationError
from .evolution import EPS_LAMBDA_FACTOR, state_components
from .model import TWO_PI, ModelParams

#: |C1| at or below this is treated as a vanished amplitude (log diverges).
EPS_AMPLITUDE = 1e-12


@dataclass(frozen=True)
class PhaseDecomposition:
    """All phase quantities at one time; phi_b == (theta_r + i theta_i) - phi_d."""

    t: float
    theta_r: float
    theta_i: float
    phi_d: float
    phi_b: complex


def principal_branch(phase: float) -> float:
    """Reduce a real phase into (-pi, pi]."""
    reduced = math.remainder(phase, TWO_PI)
    if reduced <= -math.pi:
        reduced += TWO_PI
    return reduced


def _unwrapped_core_argument(p: ModelParams, t):
    """Continuous arg of lam*cos(lam t/2) - i*detuning*sin(lam t/2), zero at t=0.

    The curve is an ellipse traversed at constant angular half-period, so the
    branch is resolved exactly: each half-turn of u = lam*t/2 advances the
    argument by -pi*sign(detuning).  Vectorized over t.
    """
    t = np.asarray(t, dtype=float)
    lam = p.rabi_rate
    if lam == 0.0:
        return np.zeros_like(t)
    u = 0.5 * lam * t
    k = np.floor(u / math.pi + 0.5)
    v = u - k * math.pi
    sign = np.sign(p.detuning)
    return (-k * math.pi * sign
            + np.arctan2(-p.detuning * np.sin(v), lam * np.cos(v)))


def _c1_magnitude(p: ModelParams, t):
    """|C1(t)|, vectorized, via the exactly normalized closed form."""
    t = np.asarray(t, dtype=float)
    lam = p.rabi_rate
    if lam < EPS_LAMBDA_FACTOR * p.omega:
        half_sinc = 0.5 * t - (lam * lam) * t ** 3 / 48.0
    else:
        half_sinc = np.sin(0.5 * lam * t) / lam
    return np.hypot(np.cos(0.5 * lam * t), p.detuning * half_sinc)


def total_phase_components(p: ModelParams, t):
    """Vectorized (theta_r, theta_i); raises when |C1| vanishes anywhere."""
    t = np.asarray(t, dtype=float)
    magnitude = _c1_magnitude(p, t)
    if np.any(magnitude <= EPS_AMPLITUDE):
        raise AmplitudeVanishedError(
            "|C1(t)| <= %.1e; the complex phase diverges" % EPS_AMPLITUDE)
    theta_i = -np.log(magnitude)
    theta_r = p.gauge_b * p.omega_prime * t + _unwrapped_core_argument(p, t)
    return theta_r, theta_i


def total_phase(p: ModelParams, t: float):
    """(theta_r, theta_i) at one time, theta_r continuous with theta_r(0) = 0."""
    theta_r, theta_i = total_phase_components(p, float(t))
    return float(theta_r), float(theta_i)


def dynamical_phase(p: ModelParams, t):
    """Closed-form phi_D(t) = -(w/2)[t(1 - S/lam^2) + (S/lam^3) sin(lam t)].

    S = (w' sin b)^2.  Equals minus the time integral of the energy
    expectation (E1 |C1|^2 + E2 |C2|^2).  Vectorized over t.
    """
    t = np.asarray(t, dtype=float)
    lam = p.rabi_rate
    s_sq = p.coupling ** 2
    if s_sq == 0.0:
        out = -0.5 * p.omega * t
    else:
        if lam < EPS_LAMBDA_FACTOR * p.omega:
            sinc = t - (lam * lam) * t ** 3 / 6.0
        else:
            sinc = np.sin(lam * t) / lam
        frac = s_sq / (lam * lam)
        out = -0.5 * p.omega * (t * (1.0 - frac) + frac * sinc)
    return float(out) if np.ndim(out) == 0 else out


def dynamical_phase_quadrature(p: ModelParams, t: float,
                               n_points: int = 4096) -> float:
    """phi_D(t) by composite Simpson quadrature of -<psi|H|psi>.

    The integrand is assembled from the lab-frame state and the Hamiltonian
    matrix elements, independently of the closed-form antiderivative.
    """
    if n_points < 16:
        raise ValueError("n_points must be >= 16")
    if t == 0.0:
        return 0.0
    n_intervals = n_points + (n_points % 2)
    grid = np.linspace(0.0, t, n_intervals + 1)
    up, down = state_components(p, grid)
    azimuth = p.alpha + p.omega_prime * grid
    cb = math.cos(p.beta)
    sb = math.sin(p.beta)
    off = sb * np.exp(-1j * azimuth)
    energy = 0.5 * p.omega * (
        cb * (np.abs(up) ** 2 - np.abs(down) ** 2)
        + 2.0 * np.real(np.conj(up) * off * down))
    return float(simpson(-energy, x=grid))


def berry_phase(p: ModelParams, t: float) -> complex:
    """Generalized geometric phase (theta_r + i theta_i) - phi_D, unwrapped."""
    theta_r, theta_i = total_phase(p, t)
    return complex(theta_r - dynamical_phase(p, t), theta_i)


def decompose(p: ModelParams, t: float) -> PhaseDecomposition:
    """Full phase decomposition at one time."""
    theta_r, theta_i = total_phase(p, t)
    phi_d = float(dynamical_phase(p, t))
    return PhaseDecomposition(t=float(t), theta_r=theta_r, theta_i=theta_i,
                              phi_d=phi_d,
                              phi_b=complex(theta_r - phi_d, theta_i))


def _real_phase_at_period(p: ModelParams) -> float:
    t_prime = TWO_PI / p.omega_prime
    return berry_phase(p, t_prime).real


def adiabatic_limit_check(p_base: ModelParams, ratio: float) -> float:
    """Re phi_B(T') at omega_prime = ratio*omega for small ratio.

    With gauge_b = -1/2 this tends to pi*cos(beta) - pi as ratio -> 0, with
    error O(ratio).
    """
    if not 0.0 < ratio <= 1e-2:
        raise ValueError("ratio must lie in (0, 1e-2]")
    p = ModelParams(omega=p_base.omega, omega_prime=ratio * p_base.omega,
                    beta=p_base.beta, alpha=p_base.alpha,
                    gauge_a=p_base.gauge_a, gauge_b=p_base.gauge_b)
    return _real_phase_at_period(p)


def nonadiabatic_limit_check(p_base: ModelParams, ratio: float) -> float:
    """Re phi_B(T') mod 2 pi at omega_prime = ratio*omega for large ratio.

    Tends to 0 (the state cannot follow the field) as ratio -> infinity.
    """
    if ratio < 1e2:
        raise ValueError("ratio must be >= 1e2")
    p = ModelParams(omega=p_base.omega, omega_prime=ratio * p_base.omega,
                    beta=p_base.beta, alpha=p_base.alpha,
                    gauge_a=p_base.gauge_a, gauge_b=p_base.gauge_b)
    return principal_branch(_real_phase_at_period(p))


#: ratios used for the Richardson extrapolation in gauge_b_fix; each is half
#: the previous, so successive differences cancel the O(r) then O(r^2) errors.
_FIX_RATIOS = (4e-4, 2e-4, 1e-4)
_FIX_CONVERGENCE_TOL = 1e-4


def gauge_b_fix(p_base: ModelParams) -> float:
    """Recover the gauge slope B that matches the adiabatic geometric phase.

    Evaluates Re phi_B(T') with B = 0 at a shrinking sequence of omega'/omega,
    Richardson-extrapolates to the adiabatic limit L0, and solves
    2 pi B + L0 = pi cos(beta) - pi.  Returns B, which should be -1/2 for
    every beta.
    """
    p0 = ModelParams(omega=p_base.omega, omega_prime=p_base.omega_prime,
                     beta=p_base.beta, alpha=p_base.alpha,
                     gauge_a=p_base.gauge_a, gauge_b=0.0)
    raw = [adiabatic_limit_check(p0, r) for r in _FIX_RATIOS]
    first = [2.0 * raw[i + 1] - raw[i] for i in range(len(raw) - 1)]
    if abs(first[1] - first[0]) > _FIX_CONVERGENCE_TOL:
        raise ExtrapolationError(
            "adiabatic extrapolation did not converge: "
            f"successive estimates {first[0]:.3e}, {first[1]:.3e}")
    limit = (4.0 * first[1] - first[0]) / 3.0
    target = math.pi * math.cos(p_base.beta) - math.pi
    return (target - limit) / TWO_PI
