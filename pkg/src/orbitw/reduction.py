"""Per-body two-body reduction.

Each body k is paired with a fictitious companion: the aggregate mass and
center of mass of the other N-1 bodies. The reduction is frozen at the
state's epoch; downstream closed forms consume only the scalar initial
values collected in :class:`ReducedPair`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .bodies import SystemState, cartesian_to_polar
from .errors import IndexOutOfRange, OriginSingularity

Xk0Mode = Literal["consistent", "paper"]


@dataclass(frozen=True, eq=False)
class ReducedPair:
    """Companion quantities and initial scalars for one body.

    x0/x_dot0 depend on the chosen mode: "consistent" uses the separation
    scalar x = r + r_companion (and its rate); "paper" initializes the
    separation scalar from the body's own radius alone (x0 = r0,
    x_dot0 = r_dot0).
    """

    body_index: int
    companion_mass: float
    companion_com_position: np.ndarray
    companion_com_velocity: np.ndarray
    x0: float
    x_dot0: float
    r0: float
    r_dot0: float
    theta0: float
    theta_dot0: float

    def __post_init__(self):
        for field in ("companion_com_position", "companion_com_velocity"):
            arr = np.asarray(getattr(self, field), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, field, arr)


def _check_index(k: int, state: SystemState) -> None:
    if not 0 <= k < state.n_bodies:
        raise IndexOutOfRange(f"body index {k} outside [0, {state.n_bodies})")


def companion_mass(k: int, state: SystemState) -> float:
    """Sum of all masses except body k, accumulated in ascending index order."""
    _check_index(k, state)
    total = 0.0
    for n, body in enumerate(state.bodies):
        if n != k:
            total += body.mass
    return total


def companion_com(k: int, state: SystemState) -> tuple[np.ndarray, np.ndarray]:
    """Mass-weighted mean position and velocity of all bodies except k."""
    _check_index(k, state)
    m = companion_mass(k, state)
    pos = np.zeros(2)
    vel = np.zeros(2)
    for n, body in enumerate(state.bodies):
        if n != k:
            pos += body.mass * body.position
            vel += body.mass * body.velocity
    return pos / m, vel / m


def build_reduced_pair(k: int, state: SystemState, xk0_mode: Xk0Mode = "consistent") -> ReducedPair:
    """Freeze the two-body reduction of body k at the state's epoch.

    The state must already be in the center-of-mass frame (see
    :func:`orbitw.bodies.to_com_frame`); in that frame body k and its
    companion center of mass are exactly anti-parallel.
    """
    _check_index(k, state)
    if xk0_mode not in ("consistent", "paper"):
        raise ValueError(f"unknown xk0_mode {xk0_mode!r}")
    body = state.bodies[k]
    polar = cartesian_to_polar(body.position, body.velocity)

    m_comp = companion_mass(k, state)
    comp_pos, comp_vel = companion_com(k, state)
    comp_r = math.hypot(comp_pos[0], comp_pos[1])
    if comp_r == 0.0:
        raise OriginSingularity(f"companion center of mass of body {k} at the origin")
    comp_r_dot = (comp_pos[0] * comp_vel[0] + comp_pos[1] * comp_vel[1]) / comp_r

    if xk0_mode == "consistent":
        x0 = polar.r + comp_r
        x_dot0 = polar.r_dot + comp_r_dot
    else:
        x0 = polar.r
        x_dot0 = polar.r_dot

    return ReducedPair(
        body_index=k,
        companion_mass=m_comp,
        companion_com_position=comp_pos,
        companion_com_velocity=comp_vel,
        x0=x0,
        x_dot0=x_dot0,
        r0=polar.r,
        r_dot0=polar.r_dot,
        theta0=polar.theta,
        theta_dot0=polar.theta_dot,
    )
