"""Classical cyclotron-orbit ensembles in a uniform magnetic field.

Builds vortex-like collective motion out of exact cyclotron orbits and
verifies the closed-form relations between canonical / kinetic / diamagnetic
angular momenta, circulating-current frequencies, energy, and moments of
inertia against direct numerical simulation.
"""

from .angular import (
    AngularMomentumBreakdown,
    OrbitCategory,
    breakdown,
    canonical_Lz,
    classify_orbit,
    diamagnetic_Lz,
    kinetic_Lz,
    orbit_canonical_Lz,
    predicted_kinetic_Lz,
    time_averaged_kinetic_Lz,
)
from .config import GeometryCase, RunConfig, case_ensemble, case_orbit, parse_config
from .core import (
    CyclotronOrbit,
    ParticleState,
    PhysicalParams,
    Trajectory,
    cyclotron_frequency,
    energy_2d,
    hamiltonian_cartesian,
    integrate_lorentz,
    orbit_from_state,
    orbit_state,
    rho_squared,
    rho_squared_ode_residual,
    sample_orbit,
)
from .currents import RadialProfile, WindingResult, current_profile, edge_azimuthal_speed, winding_angle
from .ensemble import (
    Aligned,
    EnsembleObservables,
    Explicit,
    InertiaSplit,
    PhaseMode,
    Random,
    TimeSeries,
    Uniform,
    VortexEnsemble,
    build_vortex,
    energy_per_electron,
    ensemble_states,
    kinetic_Lz_series,
    observe,
    parallel_axis,
    period_averaged_kinetic_Lz,
)
from .errors import (
    BadDistributionError,
    CyclovortexError,
    DegenerateError,
    EmptyBinWarning,
    InvalidStepError,
    ParseError,
    ValidationError,
    ZeroFieldError,
)
from .oracles import (
    CheckResult,
    LandauIndex,
    VerifyReport,
    energy_from_kinetic_Lz,
    landau_energy,
    verify_all,
)

__version__ = "0.1.0"
