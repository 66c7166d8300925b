"""Future cones: attainable-set construction and the containment verdict.

A future cone is the set of spacetime points a maneuvering body can reach
within a time window given a total delta-v allowance. A single burn at
the cone vertex spans the whole cone, so the cone is realized two ways
that meet in the middle: Monte Carlo sampling (one random burn per
trajectory, propagated ballistically) renders it, and Lambert targeting
(minimum delta-v over connecting arcs) decides membership of any point.
Guaranteed intercept is cone containment: if every point the target can
reach lies inside the interceptor's cone, the interceptor can stand on a
commitment to meet the target wherever it goes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import DEFAULT_FLOOR_KM, EARTH_RADIUS_KM, MU_EARTH
from .errors import (
    AmbiguousPlane,
    EccentricityOutOfRange,
    EmptyCone,
    EmptyOverlap,
    NoBoundArc,
)
from .kepler import BallisticArc, StateVector, arc_from_state, min_radius, state_at
from .lambert import solve_lambert
from .maneuver import ImpulsiveTrajectory

# Absolute slack on delta-v comparisons, km/s. Lambert velocity recovery
# carries round-off near 1e-14; without slack a coasting point can fail
# membership in its own zero-budget cone.
_DV_SLACK = 1e-12


@dataclass(frozen=True, eq=False)
class ConeSpec:
    """Vertex, allowance, window, and floor defining one future cone.

    Attributes:
        vertex: State at the cone vertex (epoch t0).
        budget: Total delta-v allowance, km/s.
        window: (t1, t2) reachability window, s, with t0 <= t1 < t2.
        floor: Altitude floor, km above the spherical surface.
        mu: Gravitational parameter, km^3/s^2.
    """

    vertex: StateVector
    budget: float
    window: tuple[float, float]
    floor: float = DEFAULT_FLOOR_KM
    mu: float = MU_EARTH

    def __post_init__(self):
        object.__setattr__(self, "budget", float(self.budget))
        a, b = self.window
        object.__setattr__(self, "window", (float(a), float(b)))
        object.__setattr__(self, "floor", float(self.floor))
        object.__setattr__(self, "mu", float(self.mu))
        if self.budget < 0.0:
            raise ValueError(f"budget must be nonnegative, got {self.budget}")
        t1, t2 = self.window
        if not (self.vertex.t <= t1 < t2):
            raise ValueError(
                f"window must satisfy vertex epoch {self.vertex.t} <= t1 < t2, "
                f"got ({t1}, {t2})")
        floor_radius = EARTH_RADIUS_KM + self.floor
        if float(np.linalg.norm(self.vertex.r)) < floor_radius:
            raise ValueError(
                f"vertex radius {float(np.linalg.norm(self.vertex.r))!r} km "
                f"is below the floor radius {floor_radius!r} km")


@dataclass(frozen=True, eq=False)
class ConeSampleSet:
    """Monte Carlo rendering of a cone: one single-burn trajectory per draw.

    Attributes:
        spec: The generating cone.
        trajectories: Post-burn ballistic arcs, one per retained draw.
        seed: RNG seed used for the draws.
        leaf_times: Default time grid for leaf extraction, s.
    """

    spec: ConeSpec
    trajectories: tuple[BallisticArc, ...]
    seed: int
    leaf_times: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "trajectories", tuple(self.trajectories))
        times = np.asarray(self.leaf_times, dtype=float)
        times.setflags(write=False)
        object.__setattr__(self, "leaf_times", times)


@dataclass(frozen=True)
class MembershipResult:
    """Verdict for one spacetime point against a cone.

    Attributes:
        member: Whether the point is reachable within budget and floor.
        required_dv: Minimum delta-v over admissible connecting arcs,
            km/s; +inf when none exists.
        margin: budget - required_dv, km/s.
        solutions_checked: Connecting arcs examined.
    """

    member: bool
    required_dv: float
    margin: float
    solutions_checked: int


@dataclass(frozen=True, eq=False)
class ContainmentReport:
    """Sampled verdict on target-cone containment in an interceptor cone.

    Attributes:
        contained: True when every tested target point was a member.
        fraction_contained: Member fraction over tested points.
        worst_margin: Smallest membership margin seen, km/s.
        worst_point: (position, time) achieving worst_margin.
        samples: Spacetime points tested.
        window_tested: Overlap window the grid spanned, s.
    """

    contained: bool
    fraction_contained: float
    worst_margin: float
    worst_point: tuple[np.ndarray, float]
    samples: int
    window_tested: tuple[float, float]

    def __post_init__(self):
        r, t = self.worst_point
        r = np.asarray(r, dtype=float)
        r.setflags(write=False)
        object.__setattr__(self, "worst_point", (r, float(t)))
        a, b = self.window_tested
        object.__setattr__(self, "window_tested", (float(a), float(b)))


def _ball_points(rng: np.random.Generator, n: int, radius: float) -> np.ndarray:
    """n points uniform in the closed ball of the given radius."""
    raw = rng.normal(size=(n, 3))
    norms = np.linalg.norm(raw, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    directions = raw / norms
    radii = radius * rng.uniform(0.0, 1.0, size=(n, 1)) ** (1.0 / 3.0)
    return directions * radii


def sample_cone(spec: ConeSpec, n: int, seed: int,
                time_grid: int = 51) -> ConeSampleSet:
    """Monte Carlo cone rendering: n single burns at the vertex.

    Burn vectors are drawn uniformly in the closed ball of radius budget
    and applied at the vertex epoch; each retained trajectory is the
    resulting ballistic arc. Draws producing unbound orbits are dropped.

    Args:
        spec: Cone to sample.
        n: Number of draws, >= 1.
        seed: RNG seed; fixed seed gives identical sets.
        time_grid: Size of the default leaf-time grid over the window.

    Raises:
        ValueError: n < 1.
        EmptyCone: no draw produced a bound trajectory.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    dvs = _ball_points(rng, n, spec.budget)
    arcs: list[BallisticArc] = []
    for dv in dvs:
        post = StateVector(spec.vertex.r, spec.vertex.v + dv, spec.vertex.t)
        try:
            arcs.append(arc_from_state(post, spec.mu))
        except EccentricityOutOfRange:
            continue
    if not arcs:
        raise EmptyCone(
            f"no bound trajectory among {n} draws at budget "
            f"{spec.budget!r} km/s")
    leaf_times = np.linspace(spec.window[0], spec.window[1], time_grid)
    return ConeSampleSet(spec=spec, trajectories=tuple(arcs), seed=int(seed),
                         leaf_times=leaf_times)


def leaf(sample_set: ConeSampleSet, t: float) -> np.ndarray:
    """Cross-section of a sampled cone at time t.

    Positions of every retained trajectory at t via exact propagation,
    with below-floor points excluded (the rendered cone is truncated at
    the altitude floor).

    Args:
        sample_set: Sampled cone.
        t: Query time, s; vertex epoch through window end.

    Returns:
        Array of shape (m, 3), m <= number of trajectories.

    Raises:
        ValueError: t outside [vertex epoch, window end].
    """
    spec = sample_set.spec
    if not spec.vertex.t <= t <= spec.window[1]:
        raise ValueError(
            f"t={t} outside [{spec.vertex.t}, {spec.window[1]}]")
    floor_radius = EARTH_RADIUS_KM + spec.floor
    points = np.empty((len(sample_set.trajectories), 3))
    for i, arc in enumerate(sample_set.trajectories):
        points[i] = state_at(arc, t).r
    keep = np.linalg.norm(points, axis=1) >= floor_radius
    return points[keep]


def membership(spec: ConeSpec, point, t: float,
               max_revs: int = 1) -> MembershipResult:
    """Decide whether a spacetime point lies in a cone.

    Solves the two-point boundary problem from the vertex to the point
    over t - t0 and takes the cheapest connecting arc that stays above
    the altitude floor the whole way. Membership is that cost against
    the budget.

    Args:
        spec: Cone to test against.
        point: Position, km (3 components).
        t: Arrival time, s; inside the window and after the vertex epoch.
        max_revs: Revolution cap for the connecting-arc search.

    Returns:
        MembershipResult; required_dv = +inf when no admissible arc
        exists (member False).

    Raises:
        ValueError: t outside the window or not after the vertex epoch.
        AmbiguousPlane: degenerate transfer geometry, with context.
    """
    point = np.asarray(point, dtype=float)
    t1, t2 = spec.window
    if not (t1 <= t <= t2) or not t > spec.vertex.t:
        raise ValueError(
            f"t={t} must lie in the window [{t1}, {t2}] and after the "
            f"vertex epoch {spec.vertex.t}")
    dt = t - spec.vertex.t
    try:
        sols = solve_lambert(spec.vertex.r, point, dt, spec.mu, max_revs)
    except AmbiguousPlane as exc:
        raise AmbiguousPlane(
            f"membership query at t={t}: {exc}") from exc
    floor_radius = EARTH_RADIUS_KM + spec.floor
    required = math.inf
    for sol in sols:
        depart = StateVector(spec.vertex.r, sol.v_depart, spec.vertex.t)
        arc = arc_from_state(depart, spec.mu)
        if min_radius(arc, spec.vertex.t, t) < floor_radius:
            continue
        cost = float(np.linalg.norm(sol.v_depart - spec.vertex.v))
        if cost < required:
            required = cost
    member = required <= spec.budget + _DV_SLACK
    return MembershipResult(member=member, required_dv=required,
                            margin=spec.budget - required,
                            solutions_checked=len(sols))


def containment(interceptor: ConeSpec, target: ConeSpec,
                n_target_samples: int = 2000, time_grid: int = 51,
                seed: int = 0, max_revs: int = 1) -> ContainmentReport:
    """Sampled test of target-cone containment in an interceptor cone.

    Renders the target cone by Monte Carlo, then runs membership of every
    sampled target position at every grid time over the window overlap
    against the interceptor spec. Contained means every tested point was
    a member: the interceptor can guarantee interception no matter how
    the target spends its allowance.

    Args:
        interceptor: Cone that must contain the other.
        target: Cone to be contained.
        n_target_samples: Target trajectory draws.
        time_grid: Grid points over the window overlap.
        seed: Target sampling seed.
        max_revs: Revolution cap passed to membership.

    Returns:
        ContainmentReport with the worst margin and its location.

    Raises:
        EmptyOverlap: the windows do not intersect.
        EmptyCone: target sampling or floor truncation left nothing to
            test.
    """
    lo = max(interceptor.window[0], target.window[0])
    hi = min(interceptor.window[1], target.window[1])
    if not lo < hi:
        raise EmptyOverlap(
            f"interceptor window {interceptor.window} and target window "
            f"{target.window} do not overlap")
    sample_set = sample_cone(target, n_target_samples, seed,
                             time_grid=time_grid)
    grid = np.linspace(lo, hi, time_grid)
    floor_radius = EARTH_RADIUS_KM + target.floor
    tested = 0
    members = 0
    worst_margin = math.inf
    worst_point = (interceptor.vertex.r, grid[0])
    for t in grid:
        t = float(t)
        if t <= interceptor.vertex.t:
            continue  # membership undefined at or before the vertex epoch
        for arc in sample_set.trajectories:
            point = state_at(arc, t).r
            if float(np.linalg.norm(point)) < floor_radius:
                continue
            result = membership(interceptor, point, t, max_revs)
            tested += 1
            if result.member:
                members += 1
            if result.margin < worst_margin:
                worst_margin = result.margin
                worst_point = (point, t)
    if tested == 0:
        raise EmptyCone(
            "no testable target points: every grid sample fell below the "
            "floor or before the interceptor vertex epoch")
    fraction = members / tested
    return ContainmentReport(contained=(members == tested),
                             fraction_contained=fraction,
                             worst_margin=worst_margin,
                             worst_point=worst_point,
                             samples=tested,
                             window_tested=(lo, hi))


def reduce_to_single_burn(traj: ImpulsiveTrajectory,
                          max_revs: int = 1) -> np.ndarray:
    """Equivalent single burn at the origin for a multi-shock trajectory.

    Finds the connecting arc from the trajectory origin to its endpoint
    over the elapsed time whose departure burn is cheapest, and requires
    it to cost no more than the schedule spent (the multi-shock chain
    adds no reach).

    Args:
        traj: Propagated shock trajectory.
        max_revs: Revolution cap for the connecting-arc search.

    Returns:
        dv0 vector, km/s, with |dv0| <= schedule total + 1e-6.

    Raises:
        NoBoundArc: the rev-capped search found no arc within the
            schedule total (reported, never silently dropped).
    """
    origin = traj.origin
    mu = traj.arcs[0].mu
    end = traj.state_at(traj.t_end)
    dt = traj.t_end - origin.t
    sols = solve_lambert(origin.r, end.r, dt, mu, max_revs)
    total = traj.schedule.total_dv
    best: np.ndarray | None = None
    best_mag = math.inf
    for sol in sols:
        dv0 = sol.v_depart - origin.v
        mag = float(np.linalg.norm(dv0))
        if mag < best_mag:
            best = dv0
            best_mag = mag
    if best is None:
        raise NoBoundArc(
            f"no bound arc from origin to endpoint over {dt!r} s at "
            f"max_revs={max_revs}")
    if best_mag > total + 1e-6:
        raise NoBoundArc(
            f"cheapest single burn {best_mag!r} km/s exceeds the schedule "
            f"total {total!r} km/s at max_revs={max_revs}")
    return best
