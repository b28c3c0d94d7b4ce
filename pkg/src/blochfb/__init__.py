"""Feedback stabilization of a continuously monitored two-level atom.

Analytic stationary states for direct-current (Markovian) and
state-estimate (Bayesian) feedback, a stochastic trajectory simulator that
cross-checks them, and a CLI for parameter sweeps.
"""

from .bloch import (
    AtomParams,
    BlochVector,
    PolarState,
    bloch_drift,
    driving_locus,
    from_polar,
    purity,
    stationary_state,
    to_polar,
    wrap_angle,
)

__version__ = "0.1.0"
