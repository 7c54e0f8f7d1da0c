"""Rotationally arranged ensembles of cyclotron orbits and their averaged observables.

An ensemble places n_orbits identical circles (shared radius R, centers
equally spaced on a ring of radius R_cen) and populates each with electrons
according to a phase mode:

* Uniform(n):  n >= 2 electrons per orbit at equally spaced phases.  The
  discrete cosine sums cancel identically, so the ensemble-averaged squared
  radius and kinetic angular momentum are time-independent.
* Aligned:     one electron per orbit, initially at the outmost point of its
  orbit (phase = orbit-center azimuth, plus an optional global phase).  The
  averages then oscillate as a pure cosine at the cyclotron frequency.
* Explicit:    one electron per orbit at caller-supplied phases; the way to
  break the symmetry and move the center of mass off the origin.
* Random:      seeded uniform random phases, for statistical robustness tests
  (averages converge at the 1/sqrt(N) rate, not machine precision).

All electrons share one canonical angular momentum, (m/2) w (R^2 - R_cen^2);
this is asserted at construction.  Averages are per electron and summed in
electron index order so repeated runs are bit-for-bit reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .angular import orbit_canonical_Lz
from .core import TAU, CyclotronOrbit, ParticleState, PhysicalParams, orbit_state
from .errors import BadDistributionError, ValidationError, ZeroFieldError


@dataclass(frozen=True)
class Uniform:
    """Equally spaced phases, n_per_orbit >= 2 electrons on every orbit."""

    n_per_orbit: int = 16


@dataclass(frozen=True)
class Aligned:
    """One electron per orbit at its outmost point (plus the global phase)."""


@dataclass(frozen=True)
class Explicit:
    """One electron per orbit at the given absolute phases (one entry per orbit)."""

    phases: tuple[float, ...]


@dataclass(frozen=True)
class Random:
    """Seeded uniform-random phases, n_per_orbit electrons per orbit."""

    n_per_orbit: int = 16
    seed: int = 42


PhaseMode = Union[Uniform, Aligned, Explicit, Random]


@dataclass(frozen=True)
class VortexEnsemble:
    """Immutable collection of electron orbits forming a classical vortex."""

    params: PhysicalParams
    R: float
    R_cen: float
    n_orbits: int
    phase_mode: PhaseMode
    global_phase: float
    electrons: tuple[CyclotronOrbit, ...]

    @property
    def n_electrons(self) -> int:
        return len(self.electrons)

    @property
    def canonical_Lz(self) -> float:
        """Shared canonical angular momentum (m/2) omega_c (R^2 - R_cen^2)."""
        return 0.5 * self.params.mass * self.params.omega_c * (self.R**2 - self.R_cen**2)

    @property
    def time_averaged_kinetic_Lz(self) -> float:
        """Constant part of the averaged kinetic angular momentum, m omega_c R^2."""
        return self.params.mass * self.params.omega_c * self.R**2


class InertiaSplit(NamedTuple):
    """Moment of inertia per electron split about the center of mass."""

    own: float
    transfer: float
    total: float


def _electron_phases(mode: PhaseMode, n_orbits: int, azimuths: np.ndarray, global_phase: float):
    """Initial phase list per orbit index, validating the mode's constraints."""
    if isinstance(mode, Uniform):
        if mode.n_per_orbit < 2:
            raise BadDistributionError("Uniform mode requires n_per_orbit >= 2")
        offsets = TAU * np.arange(mode.n_per_orbit) / mode.n_per_orbit
        return [azimuths[k] + global_phase + offsets for k in range(n_orbits)]
    if isinstance(mode, Aligned):
        return [np.array([azimuths[k] + global_phase]) for k in range(n_orbits)]
    if isinstance(mode, Explicit):
        if len(mode.phases) != n_orbits:
            raise BadDistributionError(
                f"Explicit mode needs one phase per orbit: got {len(mode.phases)} for {n_orbits} orbits"
            )
        return [np.array([mode.phases[k] + global_phase]) for k in range(n_orbits)]
    if isinstance(mode, Random):
        if mode.n_per_orbit < 1:
            raise BadDistributionError("Random mode requires n_per_orbit >= 1")
        rng = np.random.default_rng(mode.seed)
        return [global_phase + rng.uniform(0.0, TAU, mode.n_per_orbit) for _ in range(n_orbits)]
    raise TypeError(f"unknown phase mode {mode!r}")


def build_vortex(
    params: PhysicalParams,
    R: float,
    R_cen: float,
    n_orbits: int,
    phase_mode: PhaseMode,
    global_phase: float = 0.0,
) -> VortexEnsemble:
    """Construct a classical electron vortex.

    Orbit centers sit at azimuths 2 pi k / n_orbits on the ring of radius
    R_cen; electrons are placed on each orbit according to phase_mode.  All
    orbits share the same R and R_cen, hence the same canonical angular
    momentum, which is checked before the ensemble is returned.
    """
    if not (R > 0.0 and math.isfinite(R)):
        raise ValidationError("R must be positive")
    if not (R_cen >= 0.0 and math.isfinite(R_cen)):
        raise ValidationError("R_cen must be nonnegative")
    if n_orbits < 1:
        raise ValidationError("n_orbits must be at least 1")
    if params.omega_c == 0.0:
        raise ZeroFieldError("cannot build a vortex of cyclotron orbits in zero field")

    azimuths = TAU * np.arange(n_orbits) / n_orbits
    phases = _electron_phases(phase_mode, n_orbits, azimuths, global_phase)
    electrons = []
    for k in range(n_orbits):
        x0 = R_cen * math.cos(azimuths[k])
        y0 = R_cen * math.sin(azimuths[k])
        for th in phases[k]:
            electrons.append(CyclotronOrbit(x0=x0, y0=y0, R=R, theta=float(th)))

    lz = [orbit_canonical_Lz(orb, params) for orb in electrons]
    if max(lz) - min(lz) > 1e-12 * max(1.0, abs(lz[0])):
        raise ValidationError("orbits do not share a common canonical angular momentum")

    return VortexEnsemble(
        params=params,
        R=float(R),
        R_cen=float(R_cen),
        n_orbits=n_orbits,
        phase_mode=phase_mode,
        global_phase=float(global_phase),
        electrons=tuple(electrons),
    )


def _electron_arrays(ensemble: VortexEnsemble) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x0 = np.array([o.x0 for o in ensemble.electrons])
    y0 = np.array([o.y0 for o in ensemble.electrons])
    th = np.array([o.theta for o in ensemble.electrons])
    return x0, y0, th


def _states_arrays(ensemble: VortexEnsemble, t: float):
    """Positions and velocities of every electron at time t (index order preserved)."""
    w = ensemble.params.omega_c
    x0, y0, th = _electron_arrays(ensemble)
    ph = w * t + th
    c, s = np.cos(ph), np.sin(ph)
    r = ensemble.R
    return x0 + r * c, y0 + r * s, -r * w * s, r * w * c


def ensemble_states(ensemble: VortexEnsemble, t: float) -> list[ParticleState]:
    """One exact state per electron at time t."""
    return [orbit_state(orb, ensemble.params, t) for orb in ensemble.electrons]


@dataclass(frozen=True)
class EnsembleObservables:
    """Per-electron ensemble averages at one instant."""

    t: float
    mean_rho_sq: float
    mean_kinetic_Lz: float
    mean_canonical_Lz: float
    mean_diamagnetic_Lz: float
    com_x: float
    com_y: float
    inertia_per_electron: float


def observe(ensemble: VortexEnsemble, t: float) -> EnsembleObservables:
    """Ensemble averages of rho^2 and the three angular momenta at time t.

    Uniform mode yields mean_rho_sq = R^2 + R_cen^2 and mean kinetic angular
    momentum m omega_c R^2, both time-independent, because the equally spaced
    phase sums cancel exactly.
    """
    p = ensemble.params
    x, y, vx, vy = _states_arrays(ensemble, t)
    rho2 = x * x + y * y
    lkin = p.mass * (x * vy - y * vx)
    ldia = 0.5 * p.mass * p.omega_c * rho2
    lcan = lkin + 0.5 * p.charge * p.field * rho2
    mean_rho2 = float(np.mean(rho2))
    return EnsembleObservables(
        t=t,
        mean_rho_sq=mean_rho2,
        mean_kinetic_Lz=float(np.mean(lkin)),
        mean_canonical_Lz=float(np.mean(lcan)),
        mean_diamagnetic_Lz=float(np.mean(ldia)),
        com_x=float(np.mean(x)),
        com_y=float(np.mean(y)),
        inertia_per_electron=p.mass * mean_rho2,
    )


@dataclass(frozen=True)
class TimeSeries:
    """Observable sampled on a strictly increasing time grid."""

    times: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        if len(self.times) == 0:
            raise ValidationError("time grid must be nonempty")
        if len(self.times) != len(self.values):
            raise ValidationError("times and values must have equal length")
        if np.any(np.diff(self.times) <= 0):
            raise ValidationError("time grid must be strictly increasing")


def kinetic_Lz_series(ensemble: VortexEnsemble, t_grid) -> TimeSeries:
    """Mean kinetic angular momentum on a time grid.

    The result is always of the form L_avg + A cos(w t + delta): constant for
    Uniform ensembles, amplitude m w R R_cen for Aligned ones.
    """
    ts = np.asarray(t_grid, dtype=float)
    values = np.array([observe(ensemble, float(t)).mean_kinetic_Lz for t in ts])
    return TimeSeries(times=ts, values=values)


def period_averaged_kinetic_Lz(ensemble: VortexEnsemble, n_samples: int = 32) -> float:
    """Discrete one-period time average of the mean kinetic angular momentum.

    Sampling n_samples equally spaced times over one period (endpoint
    excluded) cancels the cosine exactly, so this reproduces the constant
    term m omega_c R^2 to rounding for every phase mode except Random.
    """
    if n_samples < 2:
        raise ValidationError("n_samples must be at least 2")
    period = ensemble.params.period
    ts = period * np.arange(n_samples) / n_samples
    vals = [observe(ensemble, float(t)).mean_kinetic_Lz for t in ts]
    return float(np.mean(vals))


def energy_per_electron(ensemble: VortexEnsemble) -> float:
    """Mean kinetic energy per electron, (m/2) <v^2> = (m/2) R^2 omega_c^2.

    All electrons move at the same speed R |omega_c|, so the mean is exact
    and equals half the cyclotron frequency times the period-averaged mean
    kinetic angular momentum.
    """
    _, _, vx, vy = _states_arrays(ensemble, 0.0)
    return float(np.mean(0.5 * ensemble.params.mass * (vx * vx + vy * vy)))


def parallel_axis(ensemble: VortexEnsemble, t: float) -> InertiaSplit:
    """Split the per-electron moment of inertia about the origin at time t.

    transfer = m |r_COM|^2, own = m <|r - r_COM|^2>, and own + transfer equals
    m <rho^2> identically (the decomposition about the center of mass).
    """
    m = ensemble.params.mass
    x, y, _, _ = _states_arrays(ensemble, t)
    cx, cy = float(np.mean(x)), float(np.mean(y))
    own = m * float(np.mean((x - cx) ** 2 + (y - cy) ** 2))
    transfer = m * (cx * cx + cy * cy)
    return InertiaSplit(own=own, transfer=transfer, total=own + transfer)
