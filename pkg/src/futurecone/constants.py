"""Physical constants and unit conventions.

All lengths are km, times are s, speeds are km/s, unless a name says otherwise.
"""
from __future__ import annotations

# Earth gravitational parameter, km^3/s^2 (default; every operation takes mu).
MU_EARTH = 398600.4418

# Spherical Earth radius used for altitude bookkeeping, km.
EARTH_RADIUS_KM = 6378.137

# Standard gravity, km/s^2 (9.80665 m/s^2 exactly).
G0_KM_S2 = 9.80665e-3

# Minimum valid altitude for trajectory points, km above the spherical Earth.
DEFAULT_FLOOR_KM = 90.0
