"""Acceptance suite: one test per criterion, each printing its pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Tolerances are fixed here and nowhere else; nothing is calibrated at runtime.
"""

import math
import warnings

import numpy as np

from cyclovortex import (
    Aligned,
    CyclotronOrbit,
    OrbitCategory,
    PhysicalParams,
    build_vortex,
    canonical_Lz,
    case_ensemble,
    classify_orbit,
    current_profile,
    edge_azimuthal_speed,
    energy_2d,
    energy_per_electron,
    integrate_lorentz,
    kinetic_Lz_series,
    landau_energy,
    LandauIndex,
    observe,
    orbit_canonical_Lz,
    orbit_state,
    parallel_axis,
    parse_config,
    period_averaged_kinetic_Lz,
    rho_squared,
    rho_squared_ode_residual,
    sample_orbit,
    Uniform,
    winding_angle,
)
from cyclovortex.cli import main

DEFAULTS = PhysicalParams()
TAU = 2.0 * math.pi

CATEGORY_ORBITS = {
    "positive": CyclotronOrbit(1.0, 0.0, 2.0, 0.0),
    "zero": CyclotronOrbit(1.0, 0.0, 1.0, 0.0),
    "negative": CyclotronOrbit(2.0, 0.0, 1.0, 0.0),
}


def report(number, name, ok, detail):
    print(f"ACCEPTANCE {number:02d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {number} {name}: {detail}"


def rk4_period_error(n_per_period):
    orbit = CyclotronOrbit(0.0, 0.0, 1.0, 0.0)
    traj = integrate_lorentz(
        orbit_state(orbit, DEFAULTS, 0.0), DEFAULTS, TAU / n_per_period, n_per_period, "rk4"
    )
    xe, ye, _, _ = sample_orbit(orbit, DEFAULTS, traj.times())
    pos = traj.positions()
    return float(np.max(np.hypot(pos[:, 0] - xe, pos[:, 1] - ye)))


def test_criterion_1_integrator_fidelity():
    err = rk4_period_error(1024)
    err_half = rk4_period_error(2048)
    ratio = err / err_half
    ok = err < 1e-8 and 12.0 <= ratio <= 20.0
    report(1, "integrator-fidelity", ok, f"err={err:.3e} < 1e-8, halving ratio={ratio:.2f} in [12, 20]")


def test_criterion_2_conservation():
    ts = np.linspace(0.0, 10 * TAU, 1000)
    drift_analytic = 0.0
    for orbit in CATEGORY_ORBITS.values():
        lz = [canonical_Lz(orbit_state(orbit, DEFAULTS, float(t)), DEFAULTS) for t in ts]
        drift_analytic = max(drift_analytic, max(lz) - min(lz))

    orbit = CyclotronOrbit(2.0, 0.0, 1.0, 0.0)
    initial = orbit_state(orbit, DEFAULTS, 0.0)
    traj_rk4 = integrate_lorentz(initial, DEFAULTS, TAU / 1024, 10 * 1024, "rk4")
    lz_rk4 = np.array([canonical_Lz(s, DEFAULTS) for s in traj_rk4])
    drift_rk4 = float(np.max(np.abs(lz_rk4 - lz_rk4[0])))

    traj_boris = integrate_lorentz(initial, DEFAULTS, TAU / 1024, 10 * 1024, "boris")
    speeds = traj_boris.speeds()
    drift_speed = float(np.max(np.abs(speeds - speeds[0])))

    ok = drift_analytic < 1e-12 and drift_rk4 < 1e-8 and drift_speed < 1e-10
    report(
        2, "conservation", ok,
        f"analytic Lz drift={drift_analytic:.2e} < 1e-12, rk4 drift={drift_rk4:.2e} < 1e-8, "
        f"boris speed drift={drift_speed:.2e} < 1e-10",
    )


def test_criterion_3_radial_ode_residual():
    orbit = CyclotronOrbit(2.0, 0.0, 1.0, 0.0)  # R = 1, R_cen = 2
    ts = np.linspace(0.0, TAU, 100)
    worst = max(rho_squared_ode_residual(orbit, DEFAULTS, float(t), 1e-4) for t in ts)
    # both sides analytically equal -4 cos t; check the finite-difference side against it
    h = 1e-4
    fd_vs_analytic = max(
        abs(
            (rho_squared(orbit, DEFAULTS, float(t) + h)
             - 2 * rho_squared(orbit, DEFAULTS, float(t))
             + rho_squared(orbit, DEFAULTS, float(t) - h)) / h**2
            + 4.0 * math.cos(t)
        )
        for t in ts
    )
    ok = worst < 1e-6 and fd_vs_analytic < 1e-6
    report(3, "squared-radius-ode", ok,
           f"max residual={worst:.3e} < 1e-6, fd vs -4cos(t)={fd_vs_analytic:.3e}")


def test_criterion_4_orbit_momentum_and_classification():
    rng = np.random.default_rng(42)
    worst = 0.0
    for _ in range(1000):
        orbit = CyclotronOrbit(
            x0=rng.uniform(-3.0, 3.0), y0=rng.uniform(-3.0, 3.0),
            R=rng.uniform(0.05, 3.0), theta=rng.uniform(-math.pi, math.pi),
        )
        t = rng.uniform(-10.0, 10.0)
        direct = canonical_Lz(orbit_state(orbit, DEFAULTS, t), DEFAULTS)
        worst = max(worst, abs(orbit_canonical_Lz(orbit, DEFAULTS) - direct))
    categories = {
        name: classify_orbit(orbit) for name, orbit in CATEGORY_ORBITS.items()
    }
    ok = worst < 1e-10 and categories == {
        "positive": OrbitCategory.POSITIVE,
        "zero": OrbitCategory.ZERO,
        "negative": OrbitCategory.NEGATIVE,
    }
    report(4, "orbit-momentum-classification", ok,
           f"max |closed form - direct|={worst:.3e} < 1e-10 over 1000 orbits, categories ok")


def test_criterion_5_winding_frequencies():
    expected = {"positive": 1.0, "zero": 0.5, "negative": 0.0}
    worst = 0.0
    for name, orbit in CATEGORY_ORBITS.items():
        result = winding_angle(orbit, DEFAULTS, n_samples=4096)
        worst = max(worst, abs(result.mean_omega - expected[name]))
    ok = worst < 1e-9
    report(5, "winding-frequencies", ok,
           f"max |mean omega - target|={worst:.3e} < 1e-9 at n_samples=4096")


def test_criterion_6_kinetic_momentum_series():
    ts = np.linspace(0.0, TAU, 257)

    cfg3 = parse_config("scenario = fig3\n")
    ens3 = case_ensemble(cfg3.cases[0], cfg3.params, cfg3.seed)
    series = kinetic_Lz_series(ens3, ts)
    dev_fig3 = float(np.max(np.abs(series.values - (1.0 + 2.0 * np.cos(ts)))))

    cfg2 = parse_config("scenario = fig2\n")
    dev_fig2 = 0.0
    for case in cfg2.cases:
        ens = case_ensemble(case, cfg2.params, cfg2.seed)
        expected = DEFAULTS.mass * DEFAULTS.omega_c * case.R**2
        vals = kinetic_Lz_series(ens, ts).values
        dev_fig2 = max(dev_fig2, float(np.max(np.abs(vals - expected))))

    ok = dev_fig3 < 1e-12 and dev_fig2 < 1e-12
    report(6, "kinetic-momentum-series", ok,
           f"fig3 max dev={dev_fig3:.2e} from 1+2cos(t), fig2 max dev={dev_fig2:.2e}, both < 1e-12")


def test_criterion_7_ensemble_radius_and_parallel_axis():
    ens = build_vortex(DEFAULTS, R=1.0, R_cen=2.0, n_orbits=8, phase_mode=Uniform(16))
    ts = TAU * np.arange(32) / 32
    dev_rho = max(abs(observe(ens, float(t)).mean_rho_sq - 5.0) for t in ts)
    dev_split = 0.0
    for t in ts:
        split = parallel_axis(ens, float(t))
        total = DEFAULTS.mass * observe(ens, float(t)).mean_rho_sq
        dev_split = max(dev_split, abs(split.own + split.transfer - total))

    # degenerate one-electron case: the center of mass is the electron itself
    one_ens = build_vortex(DEFAULTS, R=1.0, R_cen=2.0, n_orbits=1, phase_mode=Aligned())
    dev_single = 0.0
    for t in (0.0, 1.3, math.pi):
        split = parallel_axis(one_ens, t)
        expected = DEFAULTS.mass * rho_squared(one_ens.electrons[0], DEFAULTS, t)
        dev_single = max(dev_single, abs(split.transfer - expected), split.own)

    ok = dev_rho < 1e-12 and dev_split < 1e-12 and dev_single < 1e-12
    report(7, "ensemble-radius-parallel-axis", ok,
           f"mean rho^2 dev={dev_rho:.2e}, own+transfer dev={dev_split:.2e}, "
           f"single-electron dev={dev_single:.2e}, all < 1e-12")


def test_criterion_8_energy_relation():
    worst = 0.0
    for scenario in ("fig1", "fig2", "fig3"):
        cfg = parse_config(f"scenario = {scenario}\n")
        for case in cfg.cases:
            ens = case_ensemble(case, cfg.params, cfg.seed)
            e = energy_per_electron(ens)
            avg = period_averaged_kinetic_Lz(ens, n_samples=32)
            worst = max(worst, abs(e - 0.5 * cfg.params.omega_c * avg))
    ok = worst < 1e-12
    report(8, "energy-momentum-relation", ok,
           f"max |E - (w/2) <Lkin>_T|={worst:.2e} < 1e-12 across all presets")


def test_criterion_9_landau_levels():
    table = {
        (0, 0): 0.5,
        (0, 1): 1.5,
        (0, -1): 0.5,
        (1, 0): 1.5,
    }
    table_ok = all(
        landau_energy(LandauIndex(n=n, l=l), DEFAULTS) == expected
        for (n, l), expected in table.items()
    )
    worst = 0.0
    for n in range(2):
        for l in range(2):
            radius = math.sqrt((2 * n + 2 * l + 1) * DEFAULTS.hbar / (DEFAULTS.mass * DEFAULTS.omega_c))
            s = orbit_state(CyclotronOrbit(0.0, 0.0, radius, 0.0), DEFAULTS, 0.0)
            worst = max(worst, abs(energy_2d(s, DEFAULTS) - landau_energy(LandauIndex(n, l), DEFAULTS)))
    ok = table_ok and worst < 1e-12
    report(9, "landau-levels", ok,
           f"table exact={table_ok}, classical-quantum correspondence dev={worst:.2e} < 1e-12")


def test_criterion_10_current_profile_structure():
    w = DEFAULTS.omega_c

    pos = build_vortex(DEFAULTS, R=2.0, R_cen=1.0, n_orbits=8, phase_mode=Uniform(16))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        profile_pos = current_profile(pos, n_bins=20, t_samples=32)
    co_rotating = all(
        j * w > 0 for j, c in zip(profile_pos.j_phi, profile_pos.counts) if c > 0
    )

    zero = build_vortex(DEFAULTS, R=1.0, R_cen=1.0, n_orbits=8, phase_mode=Uniform(64))
    profile_zero = current_profile(zero, n_bins=20, t_samples=32)
    ratio = abs(profile_zero.j_phi[0]) / abs(profile_zero.j_phi[-1])

    neg = build_vortex(DEFAULTS, R=1.0, R_cen=2.0, n_orbits=8, phase_mode=Uniform(16))
    profile_neg = current_profile(neg, n_bins=20, t_samples=32)
    signs = [math.copysign(1.0, j) for j, c in zip(profile_neg.j_phi, profile_neg.counts) if c > 0]
    one_change = (
        sum(a != b for a, b in zip(signs, signs[1:])) == 1
        and signs[0] * w < 0
        and signs[-1] * w > 0
    )

    edges_ok = (
        edge_azimuthal_speed(pos) == (2.0, 2.0)
        and edge_azimuthal_speed(neg) == (-1.0, 1.0)
        and abs(edge_azimuthal_speed(zero)[1]) == 1.0
    )

    ok = co_rotating and ratio < 0.15 and one_change and edges_ok
    report(10, "current-profile-structure", ok,
           f"co-rotating={co_rotating}, inner/outer ratio={ratio:.4f} < 0.15, "
           f"single sign change={one_change}, edge speeds ok={edges_ok}")


def test_criterion_11_cli_determinism(tmp_path):
    results = []
    for run, (argv, filename) in enumerate(
        ((["vortex", "--set", "scenario=fig3"], "vortex.csv"), (["verify"], "verify.json"))
    ):
        out_a, out_b = tmp_path / f"a{run}", tmp_path / f"b{run}"
        code_a = main(argv + ["--out", str(out_a)])
        code_b = main(argv + ["--out", str(out_b)])
        identical = (out_a / filename).read_bytes() == (out_b / filename).read_bytes()
        results.append((filename, code_a, code_b, identical))
    verify_exit = results[1][1]
    ok = all(identical for _, _, _, identical in results) and verify_exit == 0
    report(11, "cli-determinism", ok,
           f"byte-identical outputs={all(r[3] for r in results)}, verify exit={verify_exit}")
