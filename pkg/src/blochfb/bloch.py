"""Bloch-sphere model of a driven, damped two-level atom.

The atom decays at unit rate (which fixes the time unit), is driven on
resonance with Rabi frequency ``2*alpha``, and suffers extra dephasing of
the dipole at rate ``gamma_deph``.  Written in Bloch coordinates
``rho = (I + x*sx + y*sy + z*sz)/2`` the unconditioned evolution is linear:

    dx/dt = -(1/2 + gamma_deph) x + 2 alpha z
    dy/dt = -(1/2 + gamma_deph) y
    dz/dt = -(1 + z) - 2 alpha x

Driving rotates the state about the y axis, so everything of interest
lives in the y = 0 plane, reparametrized by x = r sin(theta),
z = r cos(theta).  theta = 0 is the excited state, theta = +/-pi the
ground state, and r is the in-plane purity radius (r = 1 pure).

The transverse dephasing rate here is ``gamma_deph`` itself (not
``2*gamma_deph``); that is the convention consistent with the closed-form
stationary solutions used throughout this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "BlochVector",
    "PolarState",
    "AtomParams",
    "OutOfPlaneError",
    "wrap_angle",
    "purity",
    "to_polar",
    "from_polar",
    "bloch_drift",
    "stationary_state",
    "driving_locus",
]

#: |y| above which a state is rejected as outside the x-z plane.
PLANE_TOL = 1e-9

#: Radii below this are treated as the maximally mixed state (theta := 0).
RADIUS_EPS = 1e-15

#: Slack allowed on x^2 + y^2 + z^2 <= 1 for analytically computed vectors.
NORM_TOL = 1e-9


class OutOfPlaneError(ValueError):
    """Raised when an operation confined to the y = 0 plane gets |y| too large."""


@dataclass(frozen=True)
class BlochVector:
    """A point (x, y, z) inside the Bloch ball."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        n2 = self.x * self.x + self.y * self.y + self.z * self.z
        if not n2 <= 1.0 + NORM_TOL:
            raise ValueError(f"Bloch vector norm^2 = {n2} exceeds 1")
        if not all(map(math.isfinite, (self.x, self.y, self.z))):
            raise ValueError("Bloch vector components must be finite")


@dataclass(frozen=True)
class PolarState:
    """In-plane state (r, theta) with x = r sin(theta), z = r cos(theta)."""

    r: float
    theta: float

    def __post_init__(self):
        if not (self.r >= 0.0 and math.isfinite(self.r)):
            raise ValueError(f"radius must be finite and >= 0, got {self.r}")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")
        object.__setattr__(self, "theta", wrap_angle(self.theta))


@dataclass(frozen=True)
class AtomParams:
    """Physical configuration: driving, dephasing, detection efficiency.

    The spontaneous decay rate is fixed at 1 and is the time unit.
    """

    alpha: float = 0.0
    gamma_deph: float = 0.0
    eta: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")
        if not (self.gamma_deph >= 0.0 and math.isfinite(self.gamma_deph)):
            raise ValueError(f"gamma_deph must be >= 0, got {self.gamma_deph}")
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta must lie in [0, 1], got {self.eta}")


def wrap_angle(theta):
    """Wrap an angle (scalar or array) into [-pi, pi)."""
    return (theta + np.pi) % (2.0 * np.pi) - np.pi


def purity(b: BlochVector) -> float:
    """Purity p = 2 Tr[rho^2] - 1 = x^2 + y^2 + z^2."""
    return b.x * b.x + b.y * b.y + b.z * b.z


def to_polar(b: BlochVector, plane_tol: float = PLANE_TOL) -> PolarState:
    """Convert an in-plane Bloch vector to (r, theta).

    theta = atan2(x, z), so the excited state maps to theta = 0 and the
    ground state to theta = -pi (i.e. pi wrapped into [-pi, pi)).  States
    with r below ``RADIUS_EPS`` get theta = 0 by convention.
    """
    if abs(b.y) >= plane_tol:
        raise OutOfPlaneError(
            f"|y| = {abs(b.y)} >= {plane_tol}: state is outside the y=0 plane"
        )
    r = math.hypot(b.x, b.z)
    if r < RADIUS_EPS:
        return PolarState(0.0, 0.0)
    return PolarState(r, math.atan2(b.x, b.z))


def from_polar(s: PolarState) -> BlochVector:
    """Convert (r, theta) back to a Bloch vector in the y = 0 plane."""
    return BlochVector(s.r * math.sin(s.theta), 0.0, s.r * math.cos(s.theta))


def bloch_drift(b: BlochVector, p: AtomParams) -> tuple[float, float, float]:
    """Right-hand side (dx/dt, dy/dt, dz/dt) of the unconditioned evolution."""
    gx = 0.5 + p.gamma_deph
    return (
        -gx * b.x + 2.0 * p.alpha * b.z,
        -gx * b.y,
        -(1.0 + b.z) - 2.0 * p.alpha * b.x,
    )


def stationary_state(alpha: float, gamma_deph: float = 0.0) -> BlochVector:
    """Stationary Bloch vector of the driven, damped atom without feedback.

        x = -4 alpha / [(1 + 2 gamma_deph) + 8 alpha^2]
        z = -(1 + 2 gamma_deph) / [(1 + 2 gamma_deph) + 8 alpha^2]

    Lies in the lower half plane (z <= 0) for every driving strength; pure
    only for alpha = 0 (the ground state).
    """
    g2 = 1.0 + 2.0 * gamma_deph
    denom = g2 + 8.0 * alpha * alpha
    return BlochVector(-4.0 * alpha / denom, 0.0, -g2 / denom)


def driving_locus(gamma_deph, alpha_grid) -> list[tuple[float, float]]:
    """(theta, r) of the no-feedback stationary state along a driving grid.

    This is the family of states reachable by driving alone; sweeping
    alpha over (-inf, inf) traces a closed lobe in the lower half of the
    Bloch disk through the ground state.
    """
    out = []
    for alpha in np.asarray(alpha_grid, dtype=float):
        s = to_polar(stationary_state(float(alpha), gamma_deph))
        out.append((s.theta, s.r))
    return out
