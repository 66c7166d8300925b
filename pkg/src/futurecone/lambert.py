"""Two-point boundary-value targeting (Lambert's problem).

Given two positions and a transfer time, find the terminal velocities of
every connecting bound ballistic arc, both transfer senses, zero through
max_revs complete revolutions. Universal-variable formulation: the free
parameter psi maps to a time of flight that is monotone on the zero-rev
band and U-shaped on each multi-revolution band, so every solution is
found by bracketed root-finding. Bound solutions correspond to psi > 0.

Coincident endpoints (periodic self-transfer) are a separate closed-form
branch: the universal-variable bands pinch off numerically there, but the
solution family is elementary (any arc whose period divides the transfer
time returns to its start).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .constants import MU_EARTH
from .errors import AmbiguousPlane, EccentricityOutOfRange
from .kepler import arc_from_state, StateVector

_FOUR_PI2 = 4.0 * math.pi**2
_EDGE_INSET = 1e-9       # relative inset from band edges where tof blows up
_PLANE_TOL = 1e-8        # rad, transfer angles this close to pi are ambiguous
_COINCIDENT_REL = 1e-6   # |r1 - r0| below this fraction of |r0| is a self-transfer


@dataclass(frozen=True, eq=False)
class LambertSolution:
    """One bound arc connecting the boundary conditions.

    Attributes:
        v_depart: Velocity at r0, km/s.
        v_arrive: Velocity at r1, km/s.
        revs: Complete revolutions on the transfer.
        branch: "short" or "long" transfer sense.
    """

    v_depart: np.ndarray
    v_arrive: np.ndarray
    revs: int
    branch: str

    def __post_init__(self):
        vd = np.asarray(self.v_depart, dtype=float).copy()
        va = np.asarray(self.v_arrive, dtype=float).copy()
        vd.setflags(write=False)
        va.setflags(write=False)
        object.__setattr__(self, "v_depart", vd)
        object.__setattr__(self, "v_arrive", va)
        object.__setattr__(self, "revs", int(self.revs))


def _stumpff(psi: float) -> tuple[float, float]:
    """Stumpff functions C2, C3; half-angle form avoids cancellation."""
    if psi > 1e-6:
        sq = math.sqrt(psi)
        c2 = 2.0 * math.sin(sq / 2.0) ** 2 / psi
        c3 = (sq - math.sin(sq)) / (psi * sq)
    elif psi < -1e-6:
        sq = math.sqrt(-psi)
        c2 = (1.0 - math.cosh(sq)) / psi
        c3 = (math.sinh(sq) - sq) / (-psi * sq)
    else:
        c2 = 1.0 / 2.0 - psi / 24.0 + psi**2 / 720.0
        c3 = 1.0 / 6.0 - psi / 120.0 + psi**2 / 5040.0
    return c2, c3


def _tof(psi: float, r_sum: float, A: float, mu: float) -> float:
    """Time of flight at universal parameter psi; inf where y < 0."""
    c2, c3 = _stumpff(psi)
    y = r_sum + A * (psi * c3 - 1.0) / math.sqrt(c2)
    if y < 0.0 or c2 <= 0.0:
        return math.inf
    chi = math.sqrt(y / c2)
    return (chi**3 * c3 + A * math.sqrt(y)) / math.sqrt(mu)


def _recover(psi: float, r0: np.ndarray, r1: np.ndarray, r0n: float,
             r1n: float, A: float, mu: float) -> tuple[np.ndarray, np.ndarray] | None:
    c2, c3 = _stumpff(psi)
    y = r0n + r1n + A * (psi * c3 - 1.0) / math.sqrt(c2)
    if y <= 0.0:
        return None
    f = 1.0 - y / r0n
    g = A * math.sqrt(y / mu)
    if g == 0.0:
        return None
    gdot = 1.0 - y / r1n
    v0 = (r1 - f * r0) / g
    v1 = (gdot * r1 - r0) / g
    return v0, v1


def _is_bound(r: np.ndarray, v: np.ndarray, mu: float) -> bool:
    try:
        arc_from_state(StateVector(r, v, 0.0), mu)
    except EccentricityOutOfRange:
        return False
    return True


def _self_transfer(r0: np.ndarray, r1: np.ndarray, dt: float, mu: float,
                   max_revs: int) -> list[LambertSolution]:
    """Coincident endpoints: arcs whose period divides dt return to r0.

    The connecting family is degenerate (any orbit plane through r0
    works), so the transfer plane is taken from the residual offset
    r1 - r0, which for propagated inputs points along the original
    velocity. Both signs are returned; exact coincidence has no usable
    offset and raises.
    """
    delta = r1 - r0
    dn = float(np.linalg.norm(delta))
    if dn == 0.0:
        raise AmbiguousPlane(
            "endpoints coincide exactly; transfer plane is undefined")
    direction = delta / dn
    r0n = float(np.linalg.norm(r0))
    out: list[LambertSolution] = []
    for revs in range(1, max_revs + 1):
        a = (mu * (dt / (2.0 * math.pi * revs)) ** 2) ** (1.0 / 3.0)
        vis = mu * (2.0 / r0n - 1.0 / a)
        if vis <= 0.0:
            continue  # r0 outside any orbit of this period
        speed = math.sqrt(vis)
        for sign, branch in ((1.0, "short"), (-1.0, "long")):
            v = sign * speed * direction
            if not _is_bound(r0, v, mu):
                continue
            out.append(LambertSolution(v_depart=v, v_arrive=v.copy(),
                                       revs=revs, branch=branch))
    return out


def _band_solutions(r0: np.ndarray, r1: np.ndarray, r0n: float, r1n: float,
                    A: float, dt: float, mu: float, revs: int) -> list[float]:
    """psi values solving tof(psi) = dt on the revs-th band for one sense."""
    r_sum = r0n + r1n
    lo = _FOUR_PI2 * revs**2
    hi = _FOUR_PI2 * (revs + 1) ** 2
    width = hi - lo
    lo = lo + width * _EDGE_INSET if revs > 0 else 1e-10
    hi = hi - width * _EDGE_INSET

    def err(psi: float) -> float:
        return _tof(psi, r_sum, A, mu) - dt

    if revs == 0:
        # monotone increasing from the parabolic limit
        e_lo, e_hi = err(lo), err(hi)
        if not (e_lo < 0.0 < e_hi):
            return []
        return [float(brentq(err, lo, hi, xtol=1e-12, rtol=1e-15))]
    # U-shaped: locate the minimum, then root-find each side
    res = minimize_scalar(lambda p: _tof(p, r_sum, A, mu),
                          bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-10})
    psi_min = float(res.x)
    if err(psi_min) > 0.0:
        return []
    roots = []
    for a_, b_ in ((lo, psi_min), (psi_min, hi)):
        ea, eb = err(a_), err(b_)
        if ea == math.inf and eb == math.inf:
            continue
        if ea * eb <= 0.0:
            roots.append(float(brentq(err, a_, b_, xtol=1e-12, rtol=1e-15)))
    if len(roots) == 2 and abs(roots[0] - roots[1]) < 1e-9:
        roots = roots[:1]  # tangent case, one double root
    return roots


def solve_lambert(r0, r1, dt: float, mu: float = MU_EARTH,
                  max_revs: int = 1) -> list[LambertSolution]:
    """All bound arcs from r0 to r1 in exactly dt seconds.

    Args:
        r0: Departure position, km (3 components).
        r1: Arrival position, km (3 components).
        dt: Transfer time, s, positive.
        mu: Gravitational parameter, km^3/s^2.
        max_revs: Largest complete-revolution count to search.

    Returns:
        Bound solutions for 0..max_revs revolutions, both transfer senses
        where they exist, ordered by (revs, branch). Empty list when the
        geometry and time admit no bound arc (dt below the parabolic
        limit of both senses).

    Raises:
        ValueError: zero-length position, nonpositive dt, negative max_revs.
        AmbiguousPlane: transfer angle within 1e-8 rad of pi, or exactly
            coincident endpoints; the transfer plane is undefined and any
            choice would be arbitrary.
    """
    r0 = np.asarray(r0, dtype=float)
    r1 = np.asarray(r1, dtype=float)
    r0n = float(np.linalg.norm(r0))
    r1n = float(np.linalg.norm(r1))
    if r0n == 0.0 or r1n == 0.0:
        raise ValueError("positions must have nonzero magnitude")
    if not dt > 0.0:
        raise ValueError(f"transfer time must be positive, got {dt}")
    if max_revs < 0:
        raise ValueError(f"max_revs must be nonnegative, got {max_revs}")

    if float(np.linalg.norm(r1 - r0)) <= _COINCIDENT_REL * r0n:
        return _self_transfer(r0, r1, dt, mu, max_revs)

    cos_dnu = float(r0 @ r1) / (r0n * r1n)
    cos_dnu = max(-1.0, min(1.0, cos_dnu))
    dnu = math.acos(cos_dnu)
    if abs(dnu - math.pi) < _PLANE_TOL:
        raise AmbiguousPlane(
            f"transfer angle {dnu!r} rad is within {_PLANE_TOL} of pi; "
            "the transfer plane is undefined")

    A_short = math.sqrt(r0n * r1n * (1.0 + cos_dnu))
    chord = float(np.linalg.norm(r1 - r0))
    a_min = (r0n + r1n + chord) / 4.0  # minimum-energy semimajor axis
    t_rev = 2.0 * math.pi * math.sqrt(a_min**3 / mu)

    out: list[LambertSolution] = []
    for revs in range(max_revs + 1):
        if revs > 0 and dt < revs * t_rev:
            break  # dt cannot fit this many revolutions on any bound arc
        for A, branch in ((A_short, "short"), (-A_short, "long")):
            for psi in _band_solutions(r0, r1, r0n, r1n, A, dt, mu, revs):
                pair = _recover(psi, r0, r1, r0n, r1n, A, mu)
                if pair is None:
                    continue
                v0, v1 = pair
                if not _is_bound(r0, v0, mu):
                    continue
                out.append(LambertSolution(v_depart=v0, v_arrive=v1,
                                           revs=revs, branch=branch))
    return out
