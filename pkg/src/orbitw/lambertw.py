"""Real-valued Lambert W function on both real branches.

W(z) is the inverse of w -> w*exp(w). The principal branch covers
z >= -1/e with W >= -1; the minus_one branch covers -1/e <= z < 0 with
W <= -1. Initial guesses come from branch-specific series/asymptotics and
are polished with Halley iteration; near the branch point the square-root
series is used directly because Halley stagnates there.

Accuracy target: |W*exp(W) - z| <= 1e-12 * max(|z|, 1e-15) everywhere on
the real branches, comfortably beyond what the propagation formulas need.
"""

from __future__ import annotations

import math
from typing import Literal

from .errors import BranchPointSingularity, ConvergenceError, DomainError

Branch = Literal["principal", "minus_one"]

BRANCHES = ("principal", "minus_one")

#: Branch point of the real W function.
BRANCH_POINT = -math.exp(-1.0)

#: Absolute slack accepted below the branch point before rejecting.
_ENDPOINT_TOL = 1e-15

_MAX_ITER = 50


def _check_branch(branch: str) -> None:
    if branch not in BRANCHES:
        raise ValueError(f"unknown branch {branch!r}; expected one of {BRANCHES}")


def _branch_point_series(p: float) -> float:
    # Expansion of W around z = -1/e in p = +/-sqrt(2*(e*z + 1)).
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))))


def _initial_guess(branch: Branch, z: float) -> float:
    if branch == "principal":
        if z < -0.25:
            q = 2.0 * (math.e * z + 1.0)
            return _branch_point_series(math.sqrt(q if q > 0.0 else 0.0))
        if z < 1.5:
            # Crude rational guess; Halley's cubic convergence does the rest.
            return z / (1.0 + z) if z > -0.5 else z
        log_z = math.log(z)
        log_log = math.log(log_z)
        return log_z - log_log + log_log / log_z
    # minus_one branch, z in [-1/e, 0)
    if z < -0.25:
        q = 2.0 * (math.e * z + 1.0)
        return _branch_point_series(-math.sqrt(q if q > 0.0 else 0.0))
    log_mz = math.log(-z)
    log_mlog = math.log(-log_mz)
    return log_mz - log_mlog + log_mlog / log_mz


def lambert_w(branch: Branch, z: float) -> float:
    """Evaluate W(z) on the requested real branch.

    Raises DomainError outside the branch domain (a 1e-15 slack is
    accepted at the -1/e endpoint and clamped onto it) and
    ConvergenceError if Halley iteration fails, which no real-branch
    argument is known to trigger.
    """
    _check_branch(branch)
    z = float(z)
    if math.isnan(z):
        raise DomainError(z, branch)
    if z < BRANCH_POINT:
        if z < BRANCH_POINT - _ENDPOINT_TOL:
            raise DomainError(z, branch)
        z = BRANCH_POINT
    if branch == "minus_one" and z >= 0.0:
        raise DomainError(z, branch)

    if z == 0.0:
        return 0.0

    # Direct series near the branch point; Halley's denominator vanishes there.
    q = 2.0 * (math.e * z + 1.0)
    if q <= 0.0:
        return -1.0
    p = math.sqrt(q)
    if p <= 1e-4:
        w = _branch_point_series(p if branch == "principal" else -p)
        return max(w, -1.0) if branch == "principal" else min(w, -1.0)

    w = _initial_guess(branch, z)
    for _ in range(_MAX_ITER):
        e_w = math.exp(w)
        f = w * e_w - z
        if f == 0.0:
            break
        wp1 = w + 1.0
        denom = e_w * wp1 - (w + 2.0) * f / (2.0 * wp1)
        dw = f / denom
        w -= dw
        if abs(dw) <= 1e-15 * (1.0 + abs(w)):
            break
    else:
        raise ConvergenceError(f"Lambert W failed to converge for z={z!r} on branch {branch!r}")

    if branch == "principal":
        return max(w, -1.0)
    return min(w, -1.0)


def lambert_w_derivative(branch: Branch, z: float) -> float:
    """dW/dz on the requested branch, W/(z*(1+W)).

    Evaluated through the equivalent 1/((1+W)*exp(W)) form, which is
    regular at z = 0 on the principal branch (limit 1). The branch point
    itself is a singularity and is rejected.
    """
    _check_branch(branch)
    z = float(z)
    if math.isnan(z) or z < BRANCH_POINT - _ENDPOINT_TOL or (branch == "minus_one" and z >= 0.0):
        raise DomainError(z, branch)
    if z <= BRANCH_POINT + _ENDPOINT_TOL:
        raise BranchPointSingularity(f"derivative unbounded at the branch point (z={z!r})")
    w = lambert_w(branch, z)
    return 1.0 / ((1.0 + w) * math.exp(w))
