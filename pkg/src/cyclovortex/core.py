"""Planar cyclotron dynamics of a charged particle in a uniform axial magnetic field.

Everything here is 2D: the field points along +z, the motion lives in the
xy-plane.  The exact solution is a circle traversed at the cyclotron
frequency; numerical integrators (RK4 and a Boris-style rotation pusher)
are provided so the analytic propagator can be cross-checked rather than
trusted.

Default simulation units are m = 1, e = -1, B = 1, so the cyclotron
frequency is +1 and the period is 2*pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidStepError, ValidationError, ZeroFieldError

TAU = 2.0 * math.pi


@dataclass(frozen=True)
class PhysicalParams:
    """Particle and field constants.

    Parameters
    ----------
    mass:   particle mass, > 0.
    charge: signed charge (default -1, electron convention).
    field:  magnetic field strength along +z (signed).
    hbar:   reduced Planck constant, > 0; only the quantum energy oracle uses it.
    """

    mass: float = 1.0
    charge: float = -1.0
    field: float = 1.0
    hbar: float = 1.0

    def __post_init__(self) -> None:
        for name in ("mass", "charge", "field", "hbar"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")
        if self.mass <= 0:
            raise ValidationError("mass must be positive")
        if self.hbar <= 0:
            raise ValidationError("hbar must be positive")

    @property
    def omega_c(self) -> float:
        """Cyclotron frequency -charge*field/mass (recomputed, never cached)."""
        return -self.charge * self.field / self.mass

    @property
    def period(self) -> float:
        """Cyclotron period 2*pi/|omega_c|."""
        w = self.omega_c
        if w == 0.0:
            raise ZeroFieldError("cyclotron frequency is zero; no finite period")
        return TAU / abs(w)


def cyclotron_frequency(params: PhysicalParams) -> float:
    """Signed cyclotron frequency -charge*field/mass in rad per unit time."""
    return params.omega_c


@dataclass(frozen=True)
class ParticleState:
    """Planar position and velocity at one instant."""

    x: float
    y: float
    vx: float
    vy: float
    t: float = 0.0

    def __post_init__(self) -> None:
        for name in ("x", "y", "vx", "vy", "t"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")

    @property
    def speed(self) -> float:
        return math.hypot(self.vx, self.vy)

    @property
    def rho(self) -> float:
        """Distance from the coordinate origin."""
        return math.hypot(self.x, self.y)


@dataclass(frozen=True)
class CyclotronOrbit:
    """Circular orbit parameters: center (x0, y0), radius R, initial phase theta."""

    x0: float
    y0: float
    R: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("x0", "y0", "R", "theta"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"{name} must be finite")
        if self.R < 0:
            raise ValidationError("R must be nonnegative")

    @property
    def center_distance(self) -> float:
        """Distance from the coordinate origin to the orbit center."""
        return math.hypot(self.x0, self.y0)

    @property
    def center_azimuth(self) -> float:
        """Polar angle of the orbit center (0 when the center sits at the origin)."""
        if self.x0 == 0.0 and self.y0 == 0.0:
            return 0.0
        return math.atan2(self.y0, self.x0)


@dataclass(frozen=True)
class Trajectory:
    """Time-ordered sequence of states plus the method that produced it."""

    states: tuple[ParticleState, ...]
    method: str = "analytic"

    def __post_init__(self) -> None:
        if not self.states:
            raise ValidationError("trajectory must contain at least one state")
        ts = [s.t for s in self.states]
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise ValidationError("trajectory times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __getitem__(self, i: int) -> ParticleState:
        return self.states[i]

    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.states])

    def positions(self) -> np.ndarray:
        """Array of shape (n, 2) with (x, y) rows."""
        return np.array([(s.x, s.y) for s in self.states])

    def velocities(self) -> np.ndarray:
        return np.array([(s.vx, s.vy) for s in self.states])

    def speeds(self) -> np.ndarray:
        return np.hypot(*self.velocities().T)


def orbit_state(orbit: CyclotronOrbit, params: PhysicalParams, t: float) -> ParticleState:
    """Exact state on a cyclotron orbit at time t.

    x = x0 + R cos(w t + theta), y = y0 + R sin(w t + theta), with the velocity
    the exact time derivative, so the state sits at distance R from the center
    to machine precision.
    """
    w = params.omega_c
    ph = w * t + orbit.theta
    c, s = math.cos(ph), math.sin(ph)
    return ParticleState(
        x=orbit.x0 + orbit.R * c,
        y=orbit.y0 + orbit.R * s,
        vx=-orbit.R * w * s,
        vy=orbit.R * w * c,
        t=t,
    )


def sample_orbit(
    orbit: CyclotronOrbit, params: PhysicalParams, ts: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized orbit_state: arrays (x, y, vx, vy) for an array of times."""
    w = params.omega_c
    ph = w * np.asarray(ts, dtype=float) + orbit.theta
    c, s = np.cos(ph), np.sin(ph)
    return (
        orbit.x0 + orbit.R * c,
        orbit.y0 + orbit.R * s,
        -orbit.R * w * s,
        orbit.R * w * c,
    )


def orbit_from_state(state: ParticleState, params: PhysicalParams) -> CyclotronOrbit:
    """Invert the propagator: recover the orbit through a given state.

    The center is displaced from the position by the velocity rotated a
    quarter turn and scaled by 1/omega_c.  Raises ZeroFieldError when the
    cyclotron frequency vanishes (straight-line motion has no finite orbit).
    """
    w = params.omega_c
    if w == 0.0:
        raise ZeroFieldError("cannot construct a cyclotron orbit in zero field")
    x0 = state.x - state.vy / w
    y0 = state.y + state.vx / w
    r = state.speed / abs(w)
    if r == 0.0:
        return CyclotronOrbit(x0=x0, y0=y0, R=0.0, theta=0.0)
    theta = math.atan2(state.y - y0, state.x - x0) - w * state.t
    return CyclotronOrbit(x0=x0, y0=y0, R=r, theta=math.remainder(theta, TAU))


def _acceleration(params: PhysicalParams, vx: float, vy: float) -> tuple[float, float]:
    # m dv/dt = e v x B  with B along +z:  a = (e B / m) (vy, -vx)
    g = params.charge * params.field / params.mass
    return g * vy, -g * vx


def _rk4_step(params: PhysicalParams, x, y, vx, vy, dt):
    def deriv(x_, y_, vx_, vy_):
        ax, ay = _acceleration(params, vx_, vy_)
        return vx_, vy_, ax, ay

    k1 = deriv(x, y, vx, vy)
    k2 = deriv(x + 0.5 * dt * k1[0], y + 0.5 * dt * k1[1], vx + 0.5 * dt * k1[2], vy + 0.5 * dt * k1[3])
    k3 = deriv(x + 0.5 * dt * k2[0], y + 0.5 * dt * k2[1], vx + 0.5 * dt * k2[2], vy + 0.5 * dt * k2[3])
    k4 = deriv(x + dt * k3[0], y + dt * k3[1], vx + dt * k3[2], vy + dt * k3[3])
    return tuple(
        u + (dt / 6.0) * (a + 2.0 * b + 2.0 * c + d)
        for u, a, b, c, d in zip((x, y, vx, vy), k1, k2, k3, k4)
    )


def _boris_step(params: PhysicalParams, x, y, vx, vy, dt):
    # Drift-kick-drift: half position pushes around a half-angle velocity
    # rotation.  The rotation conserves speed exactly; the symmetric
    # splitting keeps positions and velocities synchronized at second order.
    x += vx * (dt / 2.0)
    y += vy * (dt / 2.0)
    h = params.charge * params.field / params.mass * (dt / 2.0)
    s = 2.0 * h / (1.0 + h * h)
    wx = vx + vy * h
    wy = vy - vx * h
    vx_new = vx + wy * s
    vy_new = vy - wx * s
    return x + vx_new * (dt / 2.0), y + vy_new * (dt / 2.0), vx_new, vy_new


_STEPPERS = {"rk4": _rk4_step, "boris": _boris_step}


def integrate_lorentz(
    initial: ParticleState,
    params: PhysicalParams,
    dt: float,
    n_steps: int,
    method: str = "rk4",
) -> Trajectory:
    """Integrate m r'' = e v x B from an initial state.

    Parameters
    ----------
    dt:      positive time step.
    n_steps: number of steps (the trajectory has n_steps + 1 states).
    method:  "rk4" (4th order, for convergence studies) or "boris"
             (speed-conserving magnetic rotation pusher).
    """
    if not (dt > 0.0 and math.isfinite(dt)):
        raise InvalidStepError("dt must be a positive finite number")
    if n_steps < 1:
        raise ValidationError("n_steps must be at least 1")
    try:
        step = _STEPPERS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(_STEPPERS)}") from None

    x, y, vx, vy = initial.x, initial.y, initial.vx, initial.vy
    states = [initial]
    for k in range(1, n_steps + 1):
        x, y, vx, vy = step(params, x, y, vx, vy, dt)
        states.append(ParticleState(x=x, y=y, vx=vx, vy=vy, t=initial.t + k * dt))
    return Trajectory(states=tuple(states), method=method)


def rho_squared(orbit: CyclotronOrbit, params: PhysicalParams, t: float) -> float:
    """Squared distance from the origin, in closed form.

    rho^2 = x0^2 + y0^2 + R^2 + 2 x0 R cos(w t + theta) + 2 y0 R sin(w t + theta).
    For a centered orbit this is exactly R^2 with no time dependence.
    """
    ph = params.omega_c * t + orbit.theta
    return (
        orbit.x0 * orbit.x0
        + orbit.y0 * orbit.y0
        + orbit.R * orbit.R
        + 2.0 * orbit.x0 * orbit.R * math.cos(ph)
        + 2.0 * orbit.y0 * orbit.R * math.sin(ph)
    )


def energy_2d(state: ParticleState, params: PhysicalParams) -> float:
    """Planar kinetic energy (m/2)(vx^2 + vy^2)."""
    return 0.5 * params.mass * (state.vx * state.vx + state.vy * state.vy)


def hamiltonian_cartesian(state: ParticleState, params: PhysicalParams) -> float:
    """Hamiltonian in the symmetric gauge, assembled from canonical momenta.

    H = |p|^2/(2m) + (w/2) Lz + (m/8) w^2 (x^2 + y^2) with p = m v + e A,
    A = (B/2)(-y, x), and Lz the canonical angular momentum.  Algebraically
    this collapses to the kinetic energy for every state, which makes it a
    gauge-consistency check rather than an independent observable.
    """
    m, e, b = params.mass, params.charge, params.field
    w = params.omega_c
    ax, ay = -0.5 * b * state.y, 0.5 * b * state.x
    px = m * state.vx + e * ax
    py = m * state.vy + e * ay
    rho2 = state.x * state.x + state.y * state.y
    lz = m * (state.x * state.vy - state.y * state.vx) + 0.5 * e * b * rho2
    return (px * px + py * py) / (2.0 * m) + 0.5 * w * lz + (m / 8.0) * w * w * rho2


def rho_squared_ode_residual(
    orbit: CyclotronOrbit,
    params: PhysicalParams,
    t: float,
    fd_step: float = 1e-4,
) -> float:
    """Residual of the squared-radius equation of motion at time t.

    Compares a central finite-difference estimate of d^2(rho^2)/dt^2 against
    -w^2 rho^2 - 2 (w/m) Lz + (4/m) E, with Lz and E taken from the orbit in
    closed form.  The residual is O(fd_step^2) plus a rounding floor of order
    eps/fd_step^2.
    """
    if not (fd_step > 0.0 and math.isfinite(fd_step)):
        raise ValidationError("fd_step must be a positive finite number")
    m = params.mass
    w = params.omega_c
    lz = 0.5 * m * w * (orbit.R**2 - orbit.center_distance**2)
    energy = 0.5 * m * (orbit.R * w) ** 2
    d2 = (
        rho_squared(orbit, params, t + fd_step)
        - 2.0 * rho_squared(orbit, params, t)
        + rho_squared(orbit, params, t - fd_step)
    ) / (fd_step * fd_step)
    rhs = -w * w * rho_squared(orbit, params, t) - 2.0 * (w / m) * lz + (4.0 / m) * energy
    return abs(d2 - rhs)
