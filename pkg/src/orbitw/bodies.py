"""Physical state types and frame/coordinate conversions.

Planar (2D) states only: positions and velocities are length-2 vectors.
All types are immutable after construction and all functions are pure, so
everything here is safe to share across threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    FewerThanTwoBodies,
    NonPositiveMass,
    OriginSingularity,
    ValidationError,
)

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _as_vec2(value, label: str) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.shape != (2,):
        raise ValidationError(f"{label}: planar only (exactly 2 components, got shape {arr.shape})")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{label}: components must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Body:
    """A point mass with planar position and velocity."""

    name: str
    mass: float
    position: np.ndarray
    velocity: np.ndarray

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValidationError(f"body name {self.name!r} is not an identifier")
        mass = float(self.mass)
        if not math.isfinite(mass) or mass <= 0.0:
            raise NonPositiveMass(f"body {self.name!r}: mass > 0 required, got {self.mass!r}")
        object.__setattr__(self, "mass", mass)
        object.__setattr__(self, "position", _as_vec2(self.position, f"body {self.name!r} position"))
        object.__setattr__(self, "velocity", _as_vec2(self.velocity, f"body {self.name!r} velocity"))


@dataclass(frozen=True, eq=False)
class SystemState:
    """An N-body configuration at a single epoch.

    The state is not required to be in the center-of-mass frame; use
    :func:`to_com_frame` to normalize. Stacked mass/position/velocity
    arrays are precomputed and read-only.
    """

    gravitational_constant: float
    bodies: tuple[Body, ...]
    epoch: float = 0.0

    def __post_init__(self):
        g = float(self.gravitational_constant)
        if not math.isfinite(g) or g <= 0.0:
            raise ValidationError(f"gravitational_constant > 0 required, got {g!r}")
        epoch = float(self.epoch)
        if not math.isfinite(epoch):
            raise ValidationError("epoch must be finite")
        bodies = tuple(self.bodies)
        if len(bodies) < 2:
            raise FewerThanTwoBodies(f"N >= 2 required, got {len(bodies)}")
        object.__setattr__(self, "gravitational_constant", g)
        object.__setattr__(self, "epoch", epoch)
        object.__setattr__(self, "bodies", bodies)
        masses = np.array([b.mass for b in bodies])
        positions = np.array([b.position for b in bodies])
        velocities = np.array([b.velocity for b in bodies])
        for arr in (masses, positions, velocities):
            arr.setflags(write=False)
        object.__setattr__(self, "_masses", masses)
        object.__setattr__(self, "_positions", positions)
        object.__setattr__(self, "_velocities", velocities)

    @property
    def n_bodies(self) -> int:
        return len(self.bodies)

    @property
    def masses(self) -> np.ndarray:
        return self._masses

    @property
    def positions(self) -> np.ndarray:
        return self._positions

    @property
    def velocities(self) -> np.ndarray:
        return self._velocities

    @property
    def total_mass(self) -> float:
        return math.fsum(b.mass for b in self.bodies)

    def with_phase(self, positions: np.ndarray, velocities: np.ndarray, epoch: float | None = None) -> "SystemState":
        """Copy of this state with replaced positions/velocities."""
        bodies = tuple(
            Body(b.name, b.mass, positions[i], velocities[i])
            for i, b in enumerate(self.bodies)
        )
        return SystemState(
            gravitational_constant=self.gravitational_constant,
            bodies=bodies,
            epoch=self.epoch if epoch is None else epoch,
        )


@dataclass(frozen=True, eq=False)
class PolarState:
    """Planar polar coordinates (r, theta) and their time derivatives."""

    r: float
    theta: float
    r_dot: float
    theta_dot: float

    def __post_init__(self):
        r = float(self.r)
        if not math.isfinite(r) or r <= 0.0:
            raise OriginSingularity(f"r > 0 required, got {self.r!r}")
        for field in ("theta", "r_dot", "theta_dot"):
            v = float(getattr(self, field))
            if not math.isfinite(v):
                raise ValidationError(f"{field} must be finite")
            object.__setattr__(self, field, v)
        object.__setattr__(self, "r", r)


def wrap_angle(theta: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    wrapped = math.remainder(theta, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def center_of_mass(state: SystemState) -> tuple[np.ndarray, np.ndarray]:
    """Mass-weighted mean position and velocity of a system."""
    total = state.total_mass
    com_pos = state.masses @ state.positions / total
    com_vel = state.masses @ state.velocities / total
    return com_pos, com_vel


def to_com_frame(state: SystemState) -> SystemState:
    """Translate/boost a state so the center of mass sits at rest at the origin.

    Pure translation and boost: pairwise distances and relative velocities
    are preserved exactly. Idempotent up to rounding.
    """
    com_pos, com_vel = center_of_mass(state)
    return state.with_phase(state.positions - com_pos, state.velocities - com_vel)


def cartesian_to_polar(position, velocity) -> PolarState:
    """Convert a planar position/velocity pair to polar coordinates.

    r_dot is the radial speed (p.v)/r and theta_dot the angular rate
    (p x v)/r^2 with the scalar planar cross product. theta is reported
    in (-pi, pi].
    """
    p = np.asarray(position, dtype=float)
    v = np.asarray(velocity, dtype=float)
    if p.shape != (2,) or v.shape != (2,):
        raise ValidationError("planar only (position and velocity must have 2 components)")
    r = math.hypot(p[0], p[1])
    if r == 0.0:
        raise OriginSingularity("cannot convert the origin to polar coordinates")
    theta = wrap_angle(math.atan2(p[1], p[0]))
    r_dot = (p[0] * v[0] + p[1] * v[1]) / r
    theta_dot = (p[0] * v[1] - p[1] * v[0]) / (r * r)
    return PolarState(r=r, theta=theta, r_dot=r_dot, theta_dot=theta_dot)


def polar_to_cartesian(p: PolarState) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`cartesian_to_polar` (exact up to rounding)."""
    c, s = math.cos(p.theta), math.sin(p.theta)
    position = np.array([p.r * c, p.r * s])
    velocity = np.array(
        [p.r_dot * c - p.r * p.theta_dot * s, p.r_dot * s + p.r * p.theta_dot * c]
    )
    return position, velocity
