"""Tests for the two-body propagation core."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from futurecone import (
    EccentricityOutOfRange,
    MU_EARTH,
    StateVector,
    arc_from_state,
    eccentric_from_true,
    mean_motion,
    propagate_theta,
    propagate_time,
    solve_kepler,
    state_at,
    time_of_flight,
    true_from_eccentric,
)

rng = np.random.default_rng(0)


def random_rotation() -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0.0:
        q[:, 0] = -q[:, 0]
    return q


def state_from_elements(a: float, e: float, f: float,
                        rot: np.ndarray) -> StateVector:
    """Independent perifocal construction, rotated into a random frame."""
    p = a * (1.0 - e * e)
    rn = p / (1.0 + e * math.cos(f))
    r_pf = rn * np.array([math.cos(f), math.sin(f), 0.0])
    v_pf = math.sqrt(MU_EARTH / p) * np.array(
        [-math.sin(f), e + math.cos(f), 0.0])
    return StateVector(r=rot @ r_pf, v=rot @ v_pf, t=0.0)


def random_bound_state(e_max: float = 0.9) -> StateVector:
    a = rng.uniform(6800.0, 25000.0)
    e = rng.uniform(0.0, e_max)
    f = rng.uniform(-math.pi, math.pi)
    return state_from_elements(a, e, f, random_rotation())


class TestSolveKepler:
    def test_frozen_value(self):
        # independently verified against scipy.optimize.brentq
        assert_allclose(solve_kepler(1.0, 0.1), 1.0885977523978934, rtol=1e-13)

    def test_circular_is_identity(self):
        for M in np.linspace(-7.0, 7.0, 11):
            assert solve_kepler(float(M), 0.0) == pytest.approx(M, abs=1e-15)

    @pytest.mark.parametrize("e", [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99])
    def test_residual_grid(self, e):
        for M in np.linspace(0.0, 2.0 * math.pi, 37, endpoint=False):
            E = solve_kepler(float(M), e)
            assert abs(E - e * math.sin(E) - M) < 1e-12

    def test_branch_preserved(self):
        """M shifted by 2*pi*k returns E shifted by exactly 2*pi*k."""
        E0 = solve_kepler(1.3, 0.6)
        for k in (-3, -1, 1, 2, 10):
            Ek = solve_kepler(1.3 + 2.0 * math.pi * k, 0.6)
            assert_allclose(Ek, E0 + 2.0 * math.pi * k, rtol=0, atol=1e-9)

    def test_large_mean_anomaly(self):
        M = 12345.678
        e = 0.8
        E = solve_kepler(M, e)
        assert abs(E - e * math.sin(E) - M) < 1e-9

    def test_rejects_bad_eccentricity(self):
        with pytest.raises(ValueError):
            solve_kepler(1.0, 1.0)
        with pytest.raises(ValueError):
            solve_kepler(1.0, -0.1)


class TestAnomalyConversions:
    def test_frozen_value(self):
        # E = pi/2, e = 0.5 gives f = 2*pi/3 exactly
        assert_allclose(true_from_eccentric(math.pi / 2.0, 0.5),
                        2.0943951023931953, rtol=1e-14)

    @pytest.mark.parametrize("e", [0.0, 0.2, 0.5, 0.9, 0.999])
    def test_round_trip(self, e):
        for f in np.linspace(-20.0, 20.0, 81):
            E = eccentric_from_true(float(f), e)
            assert_allclose(true_from_eccentric(E, e), f, rtol=0, atol=1e-12)

    def test_branch_preserved(self):
        """Unwrapped anomalies carry their revolution count through."""
        e = 0.7
        f = 0.9
        E = eccentric_from_true(f, e)
        for k in (-2, 1, 5):
            shifted = eccentric_from_true(f + 2.0 * math.pi * k, e)
            assert_allclose(shifted, E + 2.0 * math.pi * k, rtol=0, atol=1e-12)

    def test_apsides_fixed_points(self):
        for e in (0.1, 0.5, 0.9):
            assert true_from_eccentric(0.0, e) == 0.0
            assert_allclose(true_from_eccentric(math.pi, e), math.pi,
                            rtol=1e-14)


class TestTimeOfFlight:
    def test_frozen_mean_motion(self):
        assert_allclose(mean_motion(7238.137), 0.0010252474302388003,
                        rtol=1e-14)

    def test_frozen_quarter_arc(self):
        s = state_from_elements(7238.0, 0.1, 0.0, np.eye(3))
        arc = arc_from_state(s)
        assert_allclose(time_of_flight(arc, 0.0, math.pi / 2.0),
                        1434.536216154526, rtol=1e-12)

    def test_full_revolution_is_period(self):
        s = random_bound_state()
        arc = arc_from_state(s)
        period = 2.0 * math.pi / mean_motion(arc.a, arc.mu)
        assert_allclose(time_of_flight(arc, arc.E0, arc.E0 + 2.0 * math.pi),
                        period, rtol=1e-13)

    def test_additive_over_subdivision(self):
        s = random_bound_state()
        arc = arc_from_state(s)
        E1, E2, E3 = 0.4, 2.9, 7.7
        total = time_of_flight(arc, E1, E3)
        split = time_of_flight(arc, E1, E2) + time_of_flight(arc, E2, E3)
        assert_allclose(split, total, rtol=1e-13)

    def test_rejects_nonpositive_axis(self):
        with pytest.raises(ValueError):
            mean_motion(-7000.0)
        with pytest.raises(ValueError):
            mean_motion(0.0)


class TestArcFromState:
    def test_recovers_elements(self):
        for _ in range(50):
            a = rng.uniform(6800.0, 25000.0)
            e = rng.uniform(0.0, 0.9)
            f = rng.uniform(-math.pi, math.pi)
            arc = arc_from_state(state_from_elements(a, e, f, random_rotation()))
            assert_allclose(arc.a, a, rtol=1e-10)
            assert_allclose(arc.e, e, rtol=0, atol=1e-10)
            assert_allclose(arc.f0, f, rtol=0, atol=1e-8)

    def test_conic_invariant(self):
        for _ in range(50):
            arc = arc_from_state(random_bound_state())
            assert_allclose(arc.p, arc.a * (1.0 - arc.e**2), rtol=1e-12)

    def test_circular_state(self):
        """Exact perpendicular circular state: e = 0, sigma0 = 0, a = r."""
        rn = 7238.137
        vc = math.sqrt(MU_EARTH / rn)
        arc = arc_from_state(StateVector([rn, 0.0, 0.0], [0.0, vc, 0.0], 0.0))
        assert arc.e == 0.0
        assert abs(arc.sigma0) < 1e-12
        assert_allclose(arc.a, rn, rtol=1e-12)
        assert arc.f0 == 0.0

    def test_near_circular_convention(self):
        """Sub-threshold eccentricity takes the f0 := 0 convention."""
        s = state_from_elements(7000.0, 0.0, 1.2, np.eye(3))
        arc = arc_from_state(s)
        assert arc.e < 1e-7  # float-constructed circle lands near sqrt(eps)
        if arc.e < 1e-10:
            assert arc.f0 == 0.0

    def test_sigma_sign_matches_anomaly_sign(self):
        outbound = state_from_elements(8000.0, 0.3, 0.8, np.eye(3))
        inbound = state_from_elements(8000.0, 0.3, -0.8, np.eye(3))
        assert arc_from_state(outbound).sigma0 > 0.0
        assert arc_from_state(inbound).sigma0 < 0.0

    def test_rejects_unbound(self):
        r = np.array([7000.0, 0.0, 0.0])
        v_esc = math.sqrt(2.0 * MU_EARTH / 7000.0)
        with pytest.raises(EccentricityOutOfRange):
            arc_from_state(StateVector(r, [0.0, v_esc * 1.01, 0.0], 0.0))

    def test_rejects_rectilinear(self):
        r = np.array([7000.0, 0.0, 0.0])
        with pytest.raises(EccentricityOutOfRange):
            arc_from_state(StateVector(r, [3.0, 0.0, 0.0], 0.0))


class TestPropagation:
    def test_round_trip(self):
        """Forward theta then backward theta restores the state."""
        for _ in range(50):
            s0 = random_bound_state()
            theta = rng.uniform(-4.0 * math.pi, 4.0 * math.pi)
            s1 = propagate_theta(s0, float(theta))
            s2 = propagate_theta(s1, -float(theta))
            scale = float(np.linalg.norm(s0.r))
            assert float(np.linalg.norm(s2.r - s0.r)) / scale < 1e-9
            assert float(np.linalg.norm(s2.v - s0.v)) < 1e-9
            assert abs(s2.t - s0.t) < 1e-6

    def test_wronskian(self):
        """F*Gt - Ft*G = 1: extract coefficients from basis propagation."""
        for _ in range(20):
            s0 = random_bound_state()
            theta = float(rng.uniform(0.1, 2.0 * math.pi))
            s1 = propagate_theta(s0, theta)
            # solve [r1 v1] = [F G; Ft Gt] [r0 v0] in the orbital plane
            basis = np.column_stack([s0.r, s0.v])
            coeffs, *_ = np.linalg.lstsq(basis, np.column_stack([s1.r, s1.v]),
                                         rcond=None)
            F, G = coeffs[0, 0], coeffs[0, 1]
            Ft, Gt = coeffs[1, 0], coeffs[1, 1]
            assert abs(F * Gt - Ft * G - 1.0) < 1e-10

    def test_conserves_energy_and_momentum(self):
        for _ in range(20):
            s0 = random_bound_state()
            s1 = propagate_theta(s0, float(rng.uniform(0.0, 10.0)))

            def energy(s):
                return (float(s.v @ s.v) / 2.0
                        - MU_EARTH / float(np.linalg.norm(s.r)))

            assert_allclose(energy(s1), energy(s0), rtol=1e-10)
            assert_allclose(np.cross(s1.r, s1.v), np.cross(s0.r, s0.v),
                            rtol=1e-10)

    def test_time_epoch_advances(self):
        s0 = random_bound_state()
        arc = arc_from_state(s0)
        E1 = eccentric_from_true(arc.f0 + 1.0, arc.e)
        dt = time_of_flight(arc, arc.E0, E1)
        s1 = propagate_theta(s0, 1.0)
        assert_allclose(s1.t, s0.t + dt, rtol=1e-12)

    def test_propagate_time_matches_theta(self):
        s0 = random_bound_state()
        theta = 2.3
        s_theta = propagate_theta(s0, theta)
        s_time = propagate_time(s0, s_theta.t - s0.t)
        assert_allclose(s_time.r, s_theta.r, rtol=1e-9)
        assert_allclose(s_time.v, s_theta.v, rtol=1e-9)

    def test_full_period_returns(self):
        s0 = random_bound_state()
        arc = arc_from_state(s0)
        period = 2.0 * math.pi / mean_motion(arc.a)
        s1 = propagate_time(s0, period)
        assert_allclose(s1.r, s0.r, rtol=1e-8)
        assert_allclose(s1.v, s0.v, rtol=1e-8)

    def test_state_at_epoch_is_identity(self):
        s0 = random_bound_state()
        arc = arc_from_state(s0)
        s = state_at(arc, s0.t)
        assert_allclose(s.r, s0.r, rtol=1e-12)
        assert_allclose(s.v, s0.v, rtol=1e-12)

    def test_radius_matches_conic(self):
        s0 = random_bound_state()
        arc = arc_from_state(s0)
        for theta in np.linspace(0.0, 2.0 * math.pi, 17):
            s = propagate_theta(s0, float(theta))
            f = arc.f0 + theta
            expected = arc.p / (1.0 + arc.e * math.cos(f))
            assert_allclose(float(np.linalg.norm(s.r)), expected, rtol=1e-10)

    def test_against_numerical_integration(self):
        """Cross-check one arc against a dense RK integration."""
        from scipy.integrate import solve_ivp

        s0 = state_from_elements(8200.0, 0.25, 0.4, random_rotation())
        dt = 2500.0

        def rhs(t, y):
            r = y[:3]
            rn = np.linalg.norm(r)
            return np.concatenate([y[3:], -MU_EARTH * r / rn**3])

        sol = solve_ivp(rhs, (0.0, dt), np.concatenate([s0.r, s0.v]),
                        method="DOP853", rtol=1e-12, atol=1e-12)
        s1 = propagate_time(s0, dt)
        assert_allclose(s1.r, sol.y[:3, -1], rtol=1e-8)
        assert_allclose(s1.v, sol.y[3:, -1], rtol=1e-8)


class TestStateVector:
    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            StateVector([1.0, 2.0], [0.0, 0.0, 0.0], 0.0)

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            StateVector([math.nan, 0.0, 7000.0], [1.0, 0.0, 0.0], 0.0)

    def test_rejects_zero_radius(self):
        with pytest.raises(ValueError):
            StateVector([0.0, 0.0, 0.0], [1.0, 0.0, 0.0], 0.0)

    def test_arrays_read_only(self):
        s = StateVector([7000.0, 0.0, 0.0], [0.0, 7.5, 0.0], 0.0)
        with pytest.raises(ValueError):
            s.r[0] = 1.0

    def test_equality_is_exact(self):
        a = StateVector([7000.0, 0.0, 0.0], [0.0, 7.5, 0.0], 0.0)
        b = StateVector([7000.0, 0.0, 0.0], [0.0, 7.5, 0.0], 0.0)
        c = StateVector([7000.0, 0.0, 1e-12], [0.0, 7.5, 0.0], 0.0)
        assert a == b
        assert a != c
