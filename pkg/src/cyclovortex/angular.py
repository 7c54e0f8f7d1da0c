"""Angular momenta about the coordinate origin and the orbit trichotomy.

Three related quantities appear throughout: the canonical angular momentum
(conserved in the symmetric gauge), the gauge-invariant kinetic angular
momentum m (x vy - y vx), and the diamagnetic term (m w/2) rho^2 that
connects them.  The sign of the canonical value splits cyclotron orbits
into three categories depending on whether the orbit radius exceeds,
equals, or falls short of the center's distance from the origin.

Alternate pivot points are not supported directly: translate the orbit
before evaluating if a different origin is wanted.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import CyclotronOrbit, ParticleState, PhysicalParams
from .errors import ValidationError


class OrbitCategory(enum.Enum):
    """Sign of the canonical angular momentum of a cyclotron orbit."""

    POSITIVE = "positive"
    ZERO = "zero"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class AngularMomentumBreakdown:
    """Canonical, diamagnetic, and kinetic angular momenta of one state."""

    canonical: float
    diamagnetic: float
    kinetic: float


def canonical_Lz(state: ParticleState, params: PhysicalParams) -> float:
    """Canonical angular momentum m (x vy - y vx) + (e B / 2)(x^2 + y^2).

    Constant along any exact trajectory in the symmetric gauge.
    """
    rho2 = state.x * state.x + state.y * state.y
    return (
        params.mass * (state.x * state.vy - state.y * state.vx)
        + 0.5 * params.charge * params.field * rho2
    )


def kinetic_Lz(state: ParticleState, params: PhysicalParams) -> float:
    """Gauge-invariant kinetic angular momentum m (x vy - y vx)."""
    return params.mass * (state.x * state.vy - state.y * state.vx)


def diamagnetic_Lz(state: ParticleState, params: PhysicalParams) -> float:
    """Diamagnetic contribution (m omega_c / 2)(x^2 + y^2)."""
    rho2 = state.x * state.x + state.y * state.y
    return 0.5 * params.mass * params.omega_c * rho2


def breakdown(state: ParticleState, params: PhysicalParams) -> AngularMomentumBreakdown:
    """All three angular momenta of a state (kinetic = canonical + diamagnetic)."""
    return AngularMomentumBreakdown(
        canonical=canonical_Lz(state, params),
        diamagnetic=diamagnetic_Lz(state, params),
        kinetic=kinetic_Lz(state, params),
    )


def orbit_canonical_Lz(orbit: CyclotronOrbit, params: PhysicalParams) -> float:
    """Canonical angular momentum of an orbit: (m/2) omega_c (R^2 - R_cen^2).

    Time-independent; agrees with canonical_Lz evaluated on any state of the
    orbit.
    """
    rc = orbit.center_distance
    return 0.5 * params.mass * params.omega_c * (orbit.R * orbit.R - rc * rc)


def classify_orbit(orbit: CyclotronOrbit, tol: float = 1e-9) -> OrbitCategory:
    """Sort an orbit into the positive / zero / negative canonical-Lz trichotomy.

    The zero band is relative: |R - R_cen| <= tol * max(R, R_cen, 1), so exact
    R = R_cen classifies as ZERO despite rounding in either radius.
    """
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValidationError("tol must be a positive finite number")
    rc = orbit.center_distance
    if abs(orbit.R - rc) <= tol * max(orbit.R, rc, 1.0):
        return OrbitCategory.ZERO
    return OrbitCategory.POSITIVE if orbit.R > rc else OrbitCategory.NEGATIVE


def predicted_kinetic_Lz(orbit: CyclotronOrbit, params: PhysicalParams, t: float) -> float:
    """Closed-form kinetic angular momentum of an orbit at time t.

    m w R^2 + m w R R_cen cos(w t + theta - alpha), where alpha is the
    azimuth of the orbit center.  The constant term is the exact time
    average; the oscillation is a pure cosine at the cyclotron frequency.
    """
    m, w = params.mass, params.omega_c
    rc = orbit.center_distance
    return m * w * orbit.R * orbit.R + m * w * orbit.R * rc * math.cos(
        w * t + orbit.theta - orbit.center_azimuth
    )


def time_averaged_kinetic_Lz(orbit: CyclotronOrbit, params: PhysicalParams) -> float:
    """One-period time average of the kinetic angular momentum: m omega_c R^2."""
    return params.mass * params.omega_c * orbit.R * orbit.R
