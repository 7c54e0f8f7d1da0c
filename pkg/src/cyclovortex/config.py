"""Run configuration: key-value config files, defaults, and scenario presets.

The config grammar is deliberately small::

    # comment
    [params]            # sections: params, geometry, time, analysis, run
    mass = 1.0
    field = 1.0

    [geometry]
    R = 2.0
    R_cen = 1.0

Keys may also appear without a section header (every key name is unique
across sections, so `scenario = fig3` or `R = 2` at top level resolves
unambiguously).  The same `key=value` form is accepted from the CLI via
repeated `--set` flags, which are applied after the file.

Scenario presets pin the geometry of the three reference setups:

* fig1 - three single orbits, one per canonical-angular-momentum category;
* fig2 - the same three geometries as uniformly populated ensembles (8x16);
* fig3 - the aligned-phase oscillating vortex (R=1, R_cen=2, 12 orbits).

A single category member is addressable as e.g. `fig2-negative`.  Preset
geometry may still be overridden field-by-field; overrides apply to every
case of a multi-case scenario.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable

from .core import TAU, CyclotronOrbit, PhysicalParams
from .ensemble import Aligned, Explicit, PhaseMode, Random, Uniform, VortexEnsemble, build_vortex
from .errors import ParseError, ValidationError

_PHASE_MODES = ("uniform", "aligned", "explicit", "random")

_SCHEMA: dict[str, dict[str, object]] = {
    "params": {"mass": float, "charge": float, "field": float, "hbar": float},
    "geometry": {
        "R": float,
        "R_cen": float,
        "n_orbits": int,
        "phase_mode": str,
        "n_per_orbit": int,
        "global_phase": float,
        "phases": "float_list",
    },
    "time": {"t_max": float, "n_steps": int},
    "analysis": {
        "n_bins": int,
        "fd_step": float,
        "seed": int,
        "t_samples": int,
        "n_samples": int,
        "class_tol": float,
        "landau_n_max": int,
        "landau_l_max": int,
    },
    "run": {"scenario": str},
}

_KEY_OWNER = {key: section for section, keys in _SCHEMA.items() for key in keys}

_DEFAULTS: dict[tuple[str, str], object] = {
    ("params", "mass"): 1.0,
    ("params", "charge"): -1.0,
    ("params", "field"): 1.0,
    ("params", "hbar"): 1.0,
    ("geometry", "R"): 1.0,
    ("geometry", "R_cen"): 0.0,
    ("geometry", "n_orbits"): 8,
    ("geometry", "phase_mode"): "uniform",
    ("geometry", "n_per_orbit"): 16,
    ("geometry", "global_phase"): 0.0,
    ("geometry", "phases"): None,
    ("time", "t_max"): TAU,
    ("time", "n_steps"): 256,
    ("analysis", "n_bins"): 20,
    ("analysis", "fd_step"): 1e-4,
    ("analysis", "seed"): 42,
    ("analysis", "t_samples"): 32,
    ("analysis", "n_samples"): 4096,
    ("analysis", "class_tol"): 1e-9,
    ("analysis", "landau_n_max"): 1,
    ("analysis", "landau_l_max"): 1,
    ("run", "scenario"): None,
}

# (R, R_cen) per canonical-angular-momentum category.
_CATEGORY_GEOMETRY = {"positive": (2.0, 1.0), "zero": (1.0, 1.0), "negative": (1.0, 2.0)}
_SCENARIOS = (
    "fig1",
    "fig2",
    "fig3",
    *(f"fig1-{c}" for c in _CATEGORY_GEOMETRY),
    *(f"fig2-{c}" for c in _CATEGORY_GEOMETRY),
)


@dataclass(frozen=True)
class GeometryCase:
    """One vortex geometry; multi-case scenarios carry one per category."""

    label: str
    R: float
    R_cen: float
    n_orbits: int
    phase_mode: str
    n_per_orbit: int
    global_phase: float
    phases: tuple[float, ...] | None = None


@dataclass(frozen=True)
class RunConfig:
    """Fully validated configuration for the CLI and the verification suite."""

    params: PhysicalParams
    cases: tuple[GeometryCase, ...]
    scenario: str | None
    t_max: float
    n_steps: int
    n_bins: int
    fd_step: float
    seed: int
    t_samples: int
    n_samples: int
    class_tol: float
    landau_n_max: int
    landau_l_max: int


def _scenario_cases(scenario: str) -> tuple[GeometryCase, ...]:
    family, _, member = scenario.partition("-")
    if family == "fig3":
        return (
            GeometryCase(
                label="fig3", R=1.0, R_cen=2.0, n_orbits=12,
                phase_mode="aligned", n_per_orbit=1, global_phase=0.0,
            ),
        )
    members = [member] if member else list(_CATEGORY_GEOMETRY)
    cases = []
    for name in members:
        r, rc = _CATEGORY_GEOMETRY[name]
        if family == "fig1":
            cases.append(
                GeometryCase(
                    label=name, R=r, R_cen=rc, n_orbits=1,
                    phase_mode="aligned", n_per_orbit=1, global_phase=0.0,
                )
            )
        else:
            cases.append(
                GeometryCase(
                    label=name, R=r, R_cen=rc, n_orbits=8,
                    phase_mode="uniform", n_per_orbit=16, global_phase=0.0,
                )
            )
    return tuple(cases)


def _parse_value(section: str, key: str, text: str, where: str):
    kind = _SCHEMA[section][key]
    try:
        if kind is float:
            return float(text)
        if kind is int:
            if "." in text or "e" in text.lower():
                raise ValueError
            return int(text)
        if kind == "float_list":
            return tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ParseError(f"invalid value {text!r} for key '{key}' ({where})") from None
    return text.strip()


def _resolve_key(raw_key: str, section: str | None, where: str) -> tuple[str, str]:
    if "." in raw_key:
        sec, _, key = raw_key.partition(".")
        if sec not in _SCHEMA or key not in _SCHEMA[sec]:
            raise ParseError(f"unknown key '{raw_key}' ({where})")
        return sec, key
    if section is not None:
        if raw_key not in _SCHEMA[section]:
            raise ParseError(f"unknown key '{raw_key}' in section [{section}] ({where})")
        return section, raw_key
    if raw_key not in _KEY_OWNER:
        raise ParseError(f"unknown key '{raw_key}' ({where})")
    return _KEY_OWNER[raw_key], raw_key


def _scan_document(text: str) -> dict[tuple[str, str], object]:
    values: dict[tuple[str, str], object] = {}
    section: str | None = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"line {lineno}"
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"malformed section header {line!r} ({where})")
            name = line[1:-1].strip()
            if name not in _SCHEMA:
                raise ParseError(f"unknown section [{name}] ({where})")
            section = name
            continue
        if "=" not in line:
            raise ParseError(f"expected 'key = value', got {line!r} ({where})")
        raw_key, _, raw_val = line.partition("=")
        sec, key = _resolve_key(raw_key.strip(), section, where)
        values[(sec, key)] = _parse_value(sec, key, raw_val.strip(), where)
    return values


def _apply_overrides(values: dict, overrides: Iterable[str]) -> None:
    for i, item in enumerate(overrides, start=1):
        if "=" not in item:
            raise ParseError(f"expected 'key=value', got {item!r} (--set #{i})")
        raw_key, _, raw_val = item.partition("=")
        where = f"--set #{i}"
        sec, key = _resolve_key(raw_key.strip(), None, where)
        values[(sec, key)] = _parse_value(sec, key, raw_val.strip(), where)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


def _validate_case(case: GeometryCase) -> None:
    _require(case.R > 0 and math.isfinite(case.R), "R must be positive")
    _require(case.R_cen >= 0 and math.isfinite(case.R_cen), "R_cen must be nonnegative")
    _require(case.n_orbits >= 1, "n_orbits must be at least 1")
    _require(
        case.phase_mode in _PHASE_MODES,
        f"phase_mode must be one of {', '.join(_PHASE_MODES)}",
    )
    if case.phase_mode in ("uniform",):
        _require(case.n_per_orbit >= 2, "n_per_orbit must be at least 2 for uniform mode")
    if case.phase_mode == "random":
        _require(case.n_per_orbit >= 1, "n_per_orbit must be at least 1 for random mode")
    if case.phase_mode == "explicit":
        _require(case.phases is not None, "explicit mode requires a phases list")
        _require(
            len(case.phases) == case.n_orbits,
            f"phases must list one phase per orbit ({case.n_orbits} expected)",
        )


def parse_config(text: str, overrides: Iterable[str] = ()) -> RunConfig:
    """Parse a config document, apply `key=value` overrides, validate, return a RunConfig.

    Raises ParseError for malformed documents or unknown keys (with line/key
    diagnostics) and ValidationError naming the first violated constraint.
    """
    values = _scan_document(text)
    _apply_overrides(values, overrides)

    def get(section: str, key: str):
        return values.get((section, key), _DEFAULTS[(section, key)])

    params = PhysicalParams(
        mass=get("params", "mass"),
        charge=get("params", "charge"),
        field=get("params", "field"),
        hbar=get("params", "hbar"),
    )

    scenario = get("run", "scenario")
    if scenario is not None and scenario not in _SCENARIOS:
        raise ValidationError(
            f"unknown scenario {scenario!r}; expected one of {', '.join(_SCENARIOS)}"
        )

    if scenario is not None:
        base_cases = _scenario_cases(scenario)
    else:
        base_cases = (
            GeometryCase(
                label="",
                R=get("geometry", "R"),
                R_cen=get("geometry", "R_cen"),
                n_orbits=get("geometry", "n_orbits"),
                phase_mode=get("geometry", "phase_mode"),
                n_per_orbit=get("geometry", "n_per_orbit"),
                global_phase=get("geometry", "global_phase"),
                phases=get("geometry", "phases"),
            ),
        )

    # Explicit geometry keys override every case of a preset field-by-field.
    if scenario is not None:
        geo_overrides = {
            key: values[("geometry", key)]
            for key in _SCHEMA["geometry"]
            if ("geometry", key) in values
        }
        if geo_overrides:
            base_cases = tuple(replace(case, **geo_overrides) for case in base_cases)

    for case in base_cases:
        _validate_case(case)

    cfg = RunConfig(
        params=params,
        cases=base_cases,
        scenario=scenario,
        t_max=get("time", "t_max"),
        n_steps=get("time", "n_steps"),
        n_bins=get("analysis", "n_bins"),
        fd_step=get("analysis", "fd_step"),
        seed=get("analysis", "seed"),
        t_samples=get("analysis", "t_samples"),
        n_samples=get("analysis", "n_samples"),
        class_tol=get("analysis", "class_tol"),
        landau_n_max=get("analysis", "landau_n_max"),
        landau_l_max=get("analysis", "landau_l_max"),
    )
    _require(cfg.t_max > 0, "t_max must be positive")
    _require(cfg.n_steps >= 1, "n_steps must be at least 1")
    _require(cfg.n_bins >= 4, "n_bins must be at least 4")
    _require(cfg.fd_step > 0, "fd_step must be positive")
    _require(cfg.t_samples >= 1, "t_samples must be at least 1")
    _require(cfg.n_samples >= 8, "n_samples must be at least 8")
    _require(cfg.class_tol > 0, "class_tol must be positive")
    _require(cfg.landau_n_max >= 0, "landau_n_max must be nonnegative")
    _require(cfg.landau_l_max >= 0, "landau_l_max must be nonnegative")
    return cfg


def phase_mode_of(case: GeometryCase, seed: int) -> PhaseMode:
    """Instantiate the phase-mode object a geometry case describes."""
    if case.phase_mode == "uniform":
        return Uniform(n_per_orbit=case.n_per_orbit)
    if case.phase_mode == "aligned":
        return Aligned()
    if case.phase_mode == "explicit":
        return Explicit(phases=case.phases or ())
    return Random(n_per_orbit=case.n_per_orbit, seed=seed)


def case_ensemble(case: GeometryCase, params: PhysicalParams, seed: int) -> VortexEnsemble:
    """Build the vortex ensemble for one geometry case."""
    return build_vortex(
        params,
        R=case.R,
        R_cen=case.R_cen,
        n_orbits=case.n_orbits,
        phase_mode=phase_mode_of(case, seed),
        global_phase=case.global_phase,
    )


def case_orbit(case: GeometryCase, params: PhysicalParams, seed: int = 42) -> CyclotronOrbit:
    """Representative single orbit of a case (its first electron)."""
    return case_ensemble(case, params, seed).electrons[0]
