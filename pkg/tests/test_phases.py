import cmath
import math

import numpy as np
import pytest

from spinberry import (AmplitudeVanishedError, ModelParams,
                       adiabatic_limit_check, amplitudes, berry_phase,
                       decompose, dynamical_phase, dynamical_phase_quadrature,
                       gauge_b_fix, nonadiabatic_limit_check, principal_branch,
                       total_phase)

from conftest import random_params


class TestPrincipalBranch:
    def test_interval(self):
        for x in np.linspace(-30.0, 30.0, 201):
            reduced = principal_branch(x)
            assert -math.pi < reduced <= math.pi
            assert cmath.exp(1j * reduced) == pytest.approx(cmath.exp(1j * x),
                                                            abs=1e-12)


class TestTotalPhase:
    def test_zero_at_start(self, rng):
        for _ in range(10):
            assert total_phase(random_params(rng), 0.0) == (0.0, 0.0)

    def test_half_period_branch(self, resonant):
        theta_r, theta_i = total_phase(resonant, math.pi)
        assert theta_r == pytest.approx(-math.pi, abs=1e-13)
        assert theta_i == pytest.approx(math.log(2.0), abs=1e-13)

    def test_full_period_branch(self, resonant):
        theta_r, theta_i = total_phase(resonant, 2.0 * math.pi)
        assert theta_r == pytest.approx(-2.0 * math.pi, abs=1e-13)
        assert theta_i == pytest.approx(0.0, abs=1e-13)

    def test_reconstruction(self, rng):
        checked = 0
        while checked < 1000:
            p = random_params(rng)
            t = rng.uniform(0.0, 40.0)
            amp = amplitudes(p, t)
            if abs(amp.c1) <= 1e-6:
                continue
            theta_r, theta_i = total_phase(p, t)
            rebuilt = cmath.exp(complex(-theta_i, theta_r))
            assert abs(rebuilt - amp.c1) <= 1e-10
            checked += 1

    def test_continuity(self, resonant):
        # 1000 samples per (common) period: adjacent jumps stay below pi/2
        times = np.linspace(0.0, 3.0 * 2.0 * math.pi, 3001)
        theta = np.array([total_phase(resonant, t)[0] for t in times])
        assert np.max(np.abs(np.diff(theta))) < math.pi / 2.0

    def test_amplitude_vanished(self):
        # omega = omega' cos(beta): |C1| = |cos(lam t / 2)| hits zero
        p = ModelParams.from_dimensionless(2.0, 0.5)
        t_zero = math.pi / p.rabi_rate
        with pytest.raises(AmplitudeVanishedError):
            total_phase(p, t_zero)


class TestDynamicalPhase:
    def test_zero_at_start(self, resonant):
        assert dynamical_phase(resonant, 0.0) == 0.0

    def test_half_period_value(self, resonant):
        assert dynamical_phase(resonant, math.pi) == pytest.approx(
            -math.pi / 8.0, abs=1e-14)

    def test_static_field(self):
        p = ModelParams(omega=1.0, omega_prime=0.0, beta=0.6)
        for t in (0.0, 1.0, 12.5):
            assert dynamical_phase(p, t) == pytest.approx(-0.5 * t, abs=1e-14)

    def test_quadrature_half_period(self, resonant):
        quad = dynamical_phase_quadrature(resonant, math.pi, n_points=2000)
        assert quad == pytest.approx(-math.pi / 8.0, abs=1e-9)

    def test_quadrature_static_field(self):
        p = ModelParams(omega=1.0, omega_prime=0.0, beta=0.6)
        quad = dynamical_phase_quadrature(p, 4.0, n_points=64)
        assert quad == pytest.approx(-2.0, abs=1e-12)

    def test_quadrature_rejects_few_points(self, resonant):
        with pytest.raises(ValueError):
            dynamical_phase_quadrature(resonant, 1.0, n_points=8)

    def test_quadrature_agreement_over_five_periods(self, rng):
        for _ in range(5):
            p = random_params(rng, omega_ratio=(0.4, 1.6), cos_beta=(-0.8, 0.8))
            t_prime = 2.0 * math.pi / p.omega_prime
            for fraction in (0.25, 0.6, 1.0):
                t = 5.0 * t_prime * fraction
                exact = dynamical_phase(p, t)
                quad = dynamical_phase_quadrature(p, t, n_points=4096)
                assert abs(exact - quad) <= 1e-9 * (1.0 + abs(exact))

    def test_independent_of_gauge_b(self, resonant):
        shifted = ModelParams(omega=1.0, omega_prime=1.0, beta=resonant.beta,
                              gauge_b=0.3)
        for t in (1.0, 4.0, 9.0):
            assert dynamical_phase(resonant, t) == dynamical_phase(shifted, t)


class TestBerryPhase:
    def test_zero_at_start(self, resonant):
        assert berry_phase(resonant, 0.0) == 0.0

    def test_half_period_value(self, resonant):
        value = berry_phase(resonant, math.pi)
        assert value.real == pytest.approx(-7.0 * math.pi / 8.0, abs=1e-13)
        assert value.imag == pytest.approx(math.log(2.0), abs=1e-13)

    def test_full_period_value(self, resonant):
        value = berry_phase(resonant, 2.0 * math.pi)
        assert value.real == pytest.approx(-7.0 * math.pi / 4.0, abs=1e-13)
        assert value.imag == pytest.approx(0.0, abs=1e-13)

    def test_real_at_state_periods(self, rng):
        for _ in range(10):
            p = random_params(rng)
            t_second = 2.0 * math.pi / p.rabi_rate
            for n in range(1, 6):
                assert abs(berry_phase(p, n * t_second).imag) <= 1e-10

    def test_imaginary_part_nonnegative(self, rng):
        for _ in range(200):
            p = random_params(rng)
            t = rng.uniform(0.0, 40.0)
            try:
                value = berry_phase(p, t)
            except AmplitudeVanishedError:
                continue
            assert value.imag >= -1e-15

    def test_gauge_b_shift_law(self, rng):
        for _ in range(20):
            p = random_params(rng)
            other_b = p.gauge_b + 0.77
            shifted = ModelParams(omega=p.omega, omega_prime=p.omega_prime,
                                  beta=p.beta, alpha=p.alpha,
                                  gauge_a=p.gauge_a, gauge_b=other_b)
            t = rng.uniform(0.0, 20.0)
            try:
                difference = berry_phase(shifted, t) - berry_phase(p, t)
            except AmplitudeVanishedError:
                continue
            expected = 0.77 * p.omega_prime * t
            assert abs(difference.real - expected) <= 1e-12 * (1.0 + abs(expected))
            assert abs(difference.imag) <= 1e-12

    def test_gauge_a_invariance(self, rng):
        for _ in range(20):
            p = random_params(rng)
            moved = ModelParams(omega=p.omega, omega_prime=p.omega_prime,
                                beta=p.beta, alpha=p.alpha,
                                gauge_a=p.gauge_a + 2.1, gauge_b=p.gauge_b)
            t = rng.uniform(0.0, 20.0)
            try:
                assert abs(berry_phase(moved, t) - berry_phase(p, t)) <= 1e-12
            except AmplitudeVanishedError:
                continue

    def test_decompose_consistency(self, resonant):
        dec = decompose(resonant, 2.5)
        assert dec.phi_b == complex(dec.theta_r - dec.phi_d, dec.theta_i)


class TestLimits:
    def test_adiabatic_limit_half(self, resonant):
        value = adiabatic_limit_check(resonant, 1e-4)
        assert value == pytest.approx(-math.pi / 2.0, abs=1e-3)

    def test_adiabatic_limit_negative_tilt(self):
        p = ModelParams.from_dimensionless(1.0, -0.5)
        value = adiabatic_limit_check(p, 1e-4)
        assert value == pytest.approx(-1.5 * math.pi, abs=1e-3)

    def test_adiabatic_limit_polar(self):
        p = ModelParams.from_dimensionless(1.0, 1.0)
        assert adiabatic_limit_check(p, 1e-3) == pytest.approx(0.0, abs=1e-6)

    def test_adiabatic_ratio_validation(self, resonant):
        with pytest.raises(ValueError):
            adiabatic_limit_check(resonant, 0.5)

    def test_nonadiabatic_limit(self, resonant):
        assert nonadiabatic_limit_check(resonant, 1e4) == pytest.approx(
            0.0, abs=1e-3)

    def test_nonadiabatic_monotone_approach(self, resonant):
        coarse = abs(nonadiabatic_limit_check(resonant, 1e2))
        fine = abs(nonadiabatic_limit_check(resonant, 1e3))
        assert fine < coarse

    def test_nonadiabatic_ratio_validation(self, resonant):
        with pytest.raises(ValueError):
            nonadiabatic_limit_check(resonant, 5.0)

    @pytest.mark.parametrize("cos_beta", [0.5, 0.9, -0.3])
    def test_gauge_b_fix(self, cos_beta):
        p = ModelParams.from_dimensionless(1.0, cos_beta)
        assert gauge_b_fix(p) == pytest.approx(-0.5, abs=1e-6)
