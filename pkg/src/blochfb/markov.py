"""Closed-form results for direct current feedback on the monitored atom.

The homodyne photocurrent is fed straight back as a modulation of the
driving, with gain ``lam`` (Hamiltonian proportional to sigma_y, so the
feedback rotates the state about the y axis).  Averaging over the current
gives a linear deterministic master equation whose stationary Bloch vector
is known in closed form, and for each target angle theta0 the gain
maximizing the stationary radius solves a quadratic.

Angle convention: theta0 = 0 targets the excited state, theta0 = +/-pi the
ground state, theta0 = +/-pi/2 the equator (where this feedback cannot
stabilize anything: z_ss = 0 forces x_ss = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bloch import BlochVector

__all__ = [
    "MarkovStationary",
    "MarkovOptimum",
    "UnstableParametersError",
    "EquatorialTargetError",
    "stationary_with_feedback",
    "driving_for_target",
    "stationary_radius_for_gain",
    "optimal_gain",
    "perfect_conditions",
    "excited_state_purity",
]

#: |theta0| within this of pi/2 counts as an equatorial target.
EQUATOR_TOL = 1e-12


class UnstableParametersError(ValueError):
    """Gain/driving combination where the closed-form stationary state breaks down."""


class EquatorialTargetError(ValueError):
    """Equatorial target angle: tan(theta0) diverges, the driving is undefined."""


def _is_equatorial(theta0: float) -> bool:
    return abs(abs(theta0) - math.pi / 2) < EQUATOR_TOL


@dataclass(frozen=True)
class MarkovStationary:
    """Stationary state under current feedback, plus the solution denominator."""

    bloch: BlochVector
    r_ss: float
    denominator_D: float


@dataclass(frozen=True)
class MarkovOptimum:
    """Best achievable radius r0 at a target angle and the gain achieving it.

    ``equatorial`` flags targets on the equator, where every gain gives
    r_ss = 0 and the reported gain is only a convention (-eta/2).
    """

    lam: float
    r0: float
    equatorial: bool = False


def stationary_with_feedback(
    alpha: float, lam: float, eta: float, gamma_deph: float = 0.0
) -> MarkovStationary:
    """Stationary Bloch vector of the current-feedback master equation.

        x = -4 alpha (1+2 lam) / D
        z = -(1+2 lam)(1 + 4 lam + 2 gamma + 4 lam^2/eta) / D
        D = 8 alpha^2 + (1 + 4 lam + 2 gamma + 4 lam^2/eta)
                      * (1 + 2 lam + 2 lam^2/eta)

    Reduces to the no-feedback solution at lam = 0.
    """
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"eta must lie in (0, 1], got {eta}")
    q = 1.0 + 4.0 * lam + 2.0 * gamma_deph + 4.0 * lam * lam / eta
    s = 1.0 + 2.0 * lam + 2.0 * lam * lam / eta
    d = 8.0 * alpha * alpha + q * s
    if d <= 0.0:
        raise UnstableParametersError(
            f"stationary denominator D = {d} <= 0 at lam={lam}, alpha={alpha}: "
            "the linear Bloch system is not stable here"
        )
    x = -4.0 * alpha * (1.0 + 2.0 * lam) / d
    z = -(1.0 + 2.0 * lam) * q / d
    return MarkovStationary(BlochVector(x, 0.0, z), math.hypot(x, z), d)


def driving_for_target(
    lam: float, theta0: float, eta: float, gamma_deph: float = 0.0
) -> float:
    """Driving strength that parks the feedback stationary state at theta0.

        alpha = (1/4 + lam + gamma/2 + lam^2/eta) * tan(theta0)
    """
    if _is_equatorial(theta0):
        raise EquatorialTargetError(
            f"theta0 = {theta0}: equatorial target, alpha is undefined"
        )
    coeff = 0.25 + lam + 0.5 * gamma_deph + lam * lam / eta
    return coeff * math.tan(theta0)


def stationary_radius_for_gain(
    lam: float, theta0: float, eta: float, gamma_deph: float = 0.0
) -> float:
    """Signed stationary radius at gain lam, with the driving matched to theta0.

        r = (1+2 lam) cos(theta0)
            / [1 + 2 lam + 2 lam^2/eta + (gamma - 1/2) sin^2(theta0)]

    The sign tracks (1+2 lam) cos(theta0); the physical radius is |r|.
    """
    c = math.cos(theta0)
    s2 = math.sin(theta0) ** 2
    denom = 1.0 + 2.0 * lam + 2.0 * lam * lam / eta + (gamma_deph - 0.5) * s2
    if denom <= 0.0:
        raise UnstableParametersError(
            f"radius denominator {denom} <= 0 at lam={lam}, theta0={theta0}"
        )
    return (1.0 + 2.0 * lam) * c / denom


def optimal_gain(theta0: float, eta: float, gamma_deph: float = 0.0) -> MarkovOptimum:
    """Maximal stationary radius r0 over the gain, and the gain achieving it.

    r0 is the nonnegative root of

        r0^2 [ (1 - eta + cos^2 theta0)/2 + gamma sin^2 theta0 ]
        + r0 (1 - eta) cos(theta0) - eta cos^2(theta0)/2 = 0

    and the optimum is lam = -(eta/2)(1 + cos(theta0)/r0).  On the equator
    the quadratic collapses to r0 = 0 (no gain helps) and the returned gain
    is the -eta/2 convention, flagged via ``equatorial``.
    """
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"eta must lie in (0, 1], got {eta}")
    c = math.cos(theta0)
    s2 = math.sin(theta0) ** 2
    if _is_equatorial(theta0):
        c = 0.0
        s2 = 1.0
    a = 0.5 * (1.0 - eta + c * c) + gamma_deph * s2
    b = (1.0 - eta) * c
    q = -0.5 * eta * c * c

    if c == 0.0:
        # numerator of the radius vanishes identically: nothing to optimize
        return MarkovOptimum(lam=-0.5 * eta, r0=0.0, equatorial=True)
    # a > 0 whenever c != 0; c-coefficient q < 0, so the "+" branch root is the
    # nonnegative one
    r0 = (-b + math.sqrt(b * b - 4.0 * a * q)) / (2.0 * a)
    lam = -0.5 * eta * (1.0 + c / r0)
    return MarkovOptimum(lam=lam, r0=r0)


def perfect_conditions(theta0: float) -> tuple[float, float]:
    """(alpha, lam) stabilizing |theta0> exactly when eta = 1 and gamma = 0.

        alpha = cos(theta0) sin(theta0) / 4
        lam   = -(1 + cos(theta0)) / 2

    Works for every target except the equator, where the two mirror targets
    +/-pi/2 share the same parameters and so cannot both be stationary.
    """
    c = math.cos(theta0)
    return 0.25 * c * math.sin(theta0), -0.5 * (1.0 + c)


def excited_state_purity(eta: float) -> float:
    """Best radius when targeting the excited state: eta / (2 - eta)."""
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"eta must lie in (0, 1], got {eta}")
    return eta / (2.0 - eta)
