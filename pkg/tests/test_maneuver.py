"""Tests for impulsive schedules, the rocket equation, and finite thrust."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from futurecone import (
    MU_EARTH,
    ImpulsiveSchedule,
    ShockEvent,
    StateVector,
    SurfaceViolation,
    ThrustProfile,
    UnboundResult,
    apply_shock,
    arc_from_state,
    integrate_thrust,
    mean_motion,
    profile_impulse,
    propagate_schedule,
    propagate_time,
    rocket_delta_v,
    shock_approximation,
    solve_lambert,
    state_at,
)

rng = np.random.default_rng(7)

RN = 7238.137
VC = math.sqrt(MU_EARTH / RN)


def circular_state(t: float = 0.0) -> StateVector:
    return StateVector([RN, 0.0, 0.0], [0.0, VC, 0.0], t)


class TestRocketDeltaV:
    def test_no_propellant_is_zero(self):
        assert rocket_delta_v(300.0, 1000.0, 1000.0) == 0.0

    def test_frozen_values(self):
        assert_allclose(rocket_delta_v(76.0, 958.0, 880.0),
                        0.06329570988231352, rtol=1e-14)
        assert_allclose(rocket_delta_v(76.0, 892.0, 880.0),
                        0.010094584111627062, rtol=1e-14)

    def test_additive_over_staging(self):
        """Burning 1000->900->810 equals burning 1000->810."""
        joint = rocket_delta_v(250.0, 1000.0, 810.0)
        staged = (rocket_delta_v(250.0, 1000.0, 900.0)
                  + rocket_delta_v(250.0, 900.0, 810.0))
        assert_allclose(staged, joint, rtol=1e-13)

    def test_rejects_bad_masses(self):
        with pytest.raises(ValueError):
            rocket_delta_v(300.0, 900.0, 1000.0)
        with pytest.raises(ValueError):
            rocket_delta_v(300.0, 1000.0, 0.0)
        with pytest.raises(ValueError):
            rocket_delta_v(0.0, 1000.0, 900.0)


class TestApplyShock:
    def test_zero_dv_identity(self):
        s = circular_state()
        post = apply_shock(s, np.zeros(3))
        assert post == s

    def test_position_and_epoch_unchanged(self):
        s = circular_state(t=17.0)
        post = apply_shock(s, [0.01, -0.02, 0.005])
        assert np.array_equal(post.r, s.r)
        assert post.t == s.t
        assert np.array_equal(post.v, s.v + np.array([0.01, -0.02, 0.005]))

    def test_retrograde_burn_hits_target_apsis(self):
        """dv sized for a target apsis radius gives the predicted axis."""
        target = 6800.0
        dv_mag = VC * (1.0 - math.sqrt(2.0 * target / (RN + target)))
        s = circular_state()
        post = apply_shock(s, [0.0, -dv_mag, 0.0])
        arc = arc_from_state(post)
        assert_allclose(arc.a, (RN + target) / 2.0, rtol=1e-12)
        assert_allclose(arc.a * (1.0 - arc.e), target, rtol=1e-9)

    def test_radial_burn_sets_sigma(self):
        dv_mag = 0.05
        post = apply_shock(circular_state(), [dv_mag, 0.0, 0.0])
        arc = arc_from_state(post)
        assert_allclose(arc.sigma0, RN * dv_mag / math.sqrt(MU_EARTH),
                        rtol=1e-12)

    def test_unbound_rejected(self):
        s = circular_state()
        esc = math.sqrt(2.0 * MU_EARTH / RN)
        with pytest.raises(UnboundResult):
            apply_shock(s, [0.0, esc - VC + 0.01, 0.0])

    def test_below_floor_rejected(self):
        low = StateVector([6400.0, 0.0, 0.0],
                          [0.0, math.sqrt(MU_EARTH / 6400.0), 0.0], 0.0)
        with pytest.raises(SurfaceViolation):
            apply_shock(low, np.zeros(3))


class TestScheduleValidation:
    def test_rejects_unordered_times(self):
        events = (ShockEvent(10.0, [0.01, 0, 0]), ShockEvent(5.0, [0.01, 0, 0]))
        with pytest.raises(ValueError):
            ImpulsiveSchedule(events, budget=1.0)

    def test_rejects_overspend(self):
        events = (ShockEvent(10.0, [0.2, 0.0, 0.0]),)
        with pytest.raises(ValueError):
            ImpulsiveSchedule(events, budget=0.1)

    def test_total_dv(self):
        events = (ShockEvent(10.0, [0.03, 0.0, 0.0]),
                  ShockEvent(20.0, [0.0, 0.04, 0.0]))
        sched = ImpulsiveSchedule(events, budget=0.08)
        assert_allclose(sched.total_dv, 0.07, rtol=1e-15)


class TestPropagateSchedule:
    def test_empty_schedule_is_ballistic(self):
        s = circular_state()
        sched = ImpulsiveSchedule((), budget=0.0)
        traj = propagate_schedule(s, sched, 3000.0)
        assert len(traj.arcs) == 1
        expected = propagate_time(s, 3000.0)
        got = traj.state_at(3000.0)
        assert_allclose(got.r, expected.r, rtol=1e-12)
        assert_allclose(got.v, expected.v, rtol=1e-12)

    def test_shock_at_origin_epoch(self):
        """One shock at t0 composes apply_shock with plain propagation."""
        s = circular_state()
        dv = np.array([0.01, 0.02, 0.0])
        sched = ImpulsiveSchedule((ShockEvent(0.0, dv),), budget=0.05)
        traj = propagate_schedule(s, sched, 2000.0)
        expected = propagate_time(apply_shock(s, dv), 2000.0)
        got = traj.state_at(2000.0)
        assert_allclose(got.r, expected.r, rtol=1e-12)
        assert_allclose(got.v, expected.v, rtol=1e-12)

    def test_continuity_and_velocity_jumps(self):
        s = circular_state()
        events = tuple(ShockEvent(t, rng.normal(0.0, 0.01, 3))
                       for t in (500.0, 1500.0, 2600.0))
        sched = ImpulsiveSchedule(events, budget=0.2)
        traj = propagate_schedule(s, sched, 3000.0)
        assert len(traj.arcs) == 4
        for i, shock in enumerate(sched.shocks):
            pre = state_at(traj.arcs[i], shock.t)
            post = traj.arcs[i + 1].r0
            assert np.array_equal(post.r, pre.r)
            assert np.array_equal(post.v, pre.v + shock.dv)

    def test_frozen_thin_pulse_oracle(self):
        """Endpoint against full numerical integration with 1e-3 s pulses."""
        gen = np.random.default_rng(42)
        times = np.sort(gen.uniform(200.0, 5000.0, 5))
        dvs = gen.normal(0.0, 0.02, (5, 3))
        events = tuple(ShockEvent(float(t), dv) for t, dv in zip(times, dvs))
        sched = ImpulsiveSchedule(events, budget=0.2)
        traj = propagate_schedule(circular_state(), sched, 5500.0)
        end = traj.state_at(5500.0)
        oracle_r = np.array([5635.395575033997, -4707.729768629039,
                             31.96951679368622])
        oracle_v = np.array([4.691210799510753, 5.652856945215718,
                             -0.0276438821324464])
        assert float(np.linalg.norm(end.r - oracle_r)) / RN < 1e-5
        assert float(np.linalg.norm(end.v - oracle_v)) / VC < 1e-5

    def test_single_burn_equivalence(self):
        """A burn at the origin reaches any schedule endpoint for no more
        total delta-v, on engagement-scale (sub-half-revolution) windows."""
        satisfied = 0
        unsolved = 0
        trials = 25
        period = 2.0 * math.pi / mean_motion(RN)
        t_end = 0.3 * period
        for _ in range(trials):
            s = circular_state()
            times = np.sort(rng.uniform(10.0, 0.8 * t_end, 3))
            dvs = rng.normal(0.0, 0.008, (3, 3))
            events = tuple(ShockEvent(float(t), dv)
                           for t, dv in zip(times, dvs))
            sched = ImpulsiveSchedule(events, budget=0.2)
            traj = propagate_schedule(s, sched, t_end)
            end = traj.state_at(t_end)
            sols = solve_lambert(s.r, end.r, t_end - s.t, max_revs=1)
            if not sols:
                unsolved += 1
                continue
            best = min(float(np.linalg.norm(sol.v_depart - s.v))
                       for sol in sols)
            assert best <= sched.total_dv + 1e-6
            satisfied += 1
        assert satisfied >= trials * 0.9
        assert unsolved <= trials * 0.1

    def test_floor_violation_reports_segment(self):
        s = circular_state()
        # retrograde burn deep enough to drop perigee below the floor
        events = (ShockEvent(100.0, [0.0, -0.9, 0.0]),)
        sched = ImpulsiveSchedule(events, budget=1.0)
        with pytest.raises(SurfaceViolation):
            propagate_schedule(s, sched, 6000.0)

    def test_rejects_t_end_before_last_shock(self):
        events = (ShockEvent(100.0, [0.01, 0.0, 0.0]),)
        sched = ImpulsiveSchedule(events, budget=0.05)
        with pytest.raises(ValueError):
            propagate_schedule(circular_state(), sched, 50.0)

    def test_state_at_outside_window(self):
        sched = ImpulsiveSchedule((), budget=0.0)
        traj = propagate_schedule(circular_state(), sched, 100.0)
        with pytest.raises(ValueError):
            traj.state_at(101.0)


class TestIntegrateThrust:
    def test_zero_thrust_matches_ballistic(self):
        s = circular_state()
        profile = ThrustProfile(lambda t: np.zeros(3), (0.0, 1200.0))
        traj = integrate_thrust(s, profile)
        expected = propagate_time(s, 1200.0)
        end = traj.endpoint
        assert float(np.linalg.norm(end.r - expected.r)) / RN < 1e-8
        assert float(np.linalg.norm(end.v - expected.v)) / VC < 1e-8

    def test_small_radial_thrust_first_order(self):
        """Short window: thrust displaces by a*t^2/2 along the push."""
        s = circular_state()
        a_mag = 1e-6
        window = 60.0
        profile = ThrustProfile(
            lambda t: np.array([a_mag, 0.0, 0.0]), (0.0, window))
        pushed = integrate_thrust(s, profile).endpoint
        coasted = propagate_time(s, window)
        diff = pushed.r - coasted.r
        expected = 0.5 * a_mag * window**2
        assert_allclose(diff[0], expected, rtol=0.02)

    def test_floor_violation_reports_time(self):
        s = circular_state()

        def retro(t):
            v_hat = np.array([0.0, 1.0, 0.0])  # crude, enough to deorbit
            return -4e-3 * v_hat

        profile = ThrustProfile(retro, (0.0, 2000.0))
        with pytest.raises(SurfaceViolation, match="at t="):
            integrate_thrust(s, profile)

    def test_escape_reports_unbound(self):
        s = circular_state()
        profile = ThrustProfile(
            lambda t: np.array([0.0, 5e-3, 0.0]), (0.0, 2000.0))
        with pytest.raises(UnboundResult, match="at t="):
            integrate_thrust(s, profile)

    def test_epoch_mismatch_rejected(self):
        profile = ThrustProfile(lambda t: np.zeros(3), (10.0, 20.0))
        with pytest.raises(ValueError):
            integrate_thrust(circular_state(t=0.0), profile)


class TestShockApproximation:
    def test_constant_profile_single_shock(self):
        a_vec = np.array([1e-5, 0.0, 0.0])
        profile = ThrustProfile(lambda t: a_vec, (0.0, 100.0))
        sched = shock_approximation(profile, 1)
        assert len(sched.shocks) == 1
        assert sched.shocks[0].t == 50.0
        assert_allclose(sched.shocks[0].dv, a_vec * 100.0, rtol=1e-13)

    def test_zero_profile_empty_schedule(self):
        profile = ThrustProfile(lambda t: np.zeros(3), (0.0, 100.0))
        assert shock_approximation(profile, 8).shocks == ()

    def test_budget_is_spent_dv(self):
        profile = ThrustProfile(
            lambda t: np.array([1e-5 * math.sin(t / 30.0), 1e-5, 0.0]),
            (0.0, 300.0))
        sched = shock_approximation(profile, 16)
        assert_allclose(sched.budget, sched.total_dv, rtol=0, atol=0)
        assert sched.total_dv <= profile_impulse(profile) + 1e-12

    def test_gap_shrinks_with_refinement(self):
        """The shock chain converges onto the integrated trajectory."""
        s = circular_state()
        profile = ThrustProfile(
            lambda t: 2e-6 * np.array([math.cos(t / 200.0),
                                       math.sin(t / 200.0), 0.3]),
            (0.0, 900.0))
        end_true = integrate_thrust(s, profile).endpoint
        gaps = []
        for n in (4, 16, 64):
            sched = shock_approximation(profile, n)
            traj = propagate_schedule(s, sched, 900.0)
            end = traj.state_at(900.0)
            gaps.append(float(np.linalg.norm(end.r - end_true.r)))
        assert gaps[1] < gaps[0]
        assert gaps[2] < gaps[1]
