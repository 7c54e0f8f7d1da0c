"""Command-line interface: deterministic CSV/JSON emission for each scenario.

Subcommands
-----------
orbit    single-orbit time series (state + angular-momentum breakdown) -> orbit.csv
vortex   ensemble-averaged observables over time                       -> vortex.csv
field    radial azimuthal-current profile                              -> profile.csv
landau   quantum energy-level table                                    -> landau.json
verify   full self-verification report                                 -> verify.json

All numbers are written in shortest round-trip decimal form, so identical
configurations produce byte-identical files.  Multi-case scenarios (bare
fig1 / fig2) prepend a `case` column; single-case runs use the plain
headers.  Exit codes: 0 success, 1 configuration or I/O error, 2 verify
suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .angular import breakdown
from .config import RunConfig, case_ensemble, case_orbit, parse_config
from .core import orbit_state
from .currents import current_profile
from .ensemble import observe, parallel_axis
from .errors import CyclovortexError
from .oracles import LandauIndex, landau_energy, verify_all

VORTEX_HEADER = "t,mean_rho_sq,Lkin_mean,Lz_mean,Ldia_mean,com_x,com_y,inertia_own,inertia_transfer"
ORBIT_HEADER = "t,x,y,vx,vy,rho_sq,Lz,Lkin,Ldia"
PROFILE_HEADER = "rho_lo,rho_hi,j_phi,count"


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _csv(header: str, rows, multi_case: bool) -> str:
    lines = [("case," + header) if multi_case else header]
    for row in rows:
        lines.append(",".join(str(c) if isinstance(c, str) else _fmt(c) for c in row))
    return "\n".join(lines) + "\n"


def _time_grid(cfg: RunConfig) -> np.ndarray:
    return cfg.t_max * np.arange(cfg.n_steps + 1) / cfg.n_steps


def _cmd_orbit(cfg: RunConfig, out: Path) -> int:
    multi = len(cfg.cases) > 1
    rows = []
    ts = _time_grid(cfg)
    for case in cfg.cases:
        orbit = case_orbit(case, cfg.params, cfg.seed)
        for t in ts:
            s = orbit_state(orbit, cfg.params, float(t))
            b = breakdown(s, cfg.params)
            row = [s.t, s.x, s.y, s.vx, s.vy, s.x * s.x + s.y * s.y,
                   b.canonical, b.kinetic, b.diamagnetic]
            rows.append(([case.label] + row) if multi else row)
    _write_text(out / "orbit.csv", _csv(ORBIT_HEADER, rows, multi))
    return 0


def _cmd_vortex(cfg: RunConfig, out: Path) -> int:
    multi = len(cfg.cases) > 1
    rows = []
    ts = _time_grid(cfg)
    for case in cfg.cases:
        ens = case_ensemble(case, cfg.params, cfg.seed)
        for t in ts:
            obs = observe(ens, float(t))
            split = parallel_axis(ens, float(t))
            row = [obs.t, obs.mean_rho_sq, obs.mean_kinetic_Lz, obs.mean_canonical_Lz,
                   obs.mean_diamagnetic_Lz, obs.com_x, obs.com_y, split.own, split.transfer]
            rows.append(([case.label] + row) if multi else row)
    _write_text(out / "vortex.csv", _csv(VORTEX_HEADER, rows, multi))
    return 0


def _cmd_field(cfg: RunConfig, out: Path) -> int:
    multi = len(cfg.cases) > 1
    rows = []
    for case in cfg.cases:
        ens = case_ensemble(case, cfg.params, cfg.seed)
        profile = current_profile(ens, n_bins=cfg.n_bins, t_samples=cfg.t_samples)
        for i in range(len(profile.j_phi)):
            row = [profile.bin_edges[i], profile.bin_edges[i + 1],
                   profile.j_phi[i], int(profile.counts[i])]
            rows.append(([case.label] + row) if multi else row)
    _write_text(out / "profile.csv", _csv(PROFILE_HEADER, rows, multi))
    return 0


def _cmd_landau(cfg: RunConfig, out: Path) -> int:
    entries = []
    for n in range(cfg.landau_n_max + 1):
        for l in range(-cfg.landau_l_max, cfg.landau_l_max + 1):
            entries.append(
                {"n": n, "l": l, "energy": landau_energy(LandauIndex(n=n, l=l), cfg.params)}
            )
    doc = {
        "hbar": cfg.params.hbar,
        "omega_c": cfg.params.omega_c,
        "entries": entries,
    }
    _write_text(out / "landau.json", json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_verify(cfg: RunConfig, out: Path) -> int:
    report = verify_all(cfg)
    _write_text(out / "verify.json", json.dumps(report.to_dict(), indent=2) + "\n")
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        if check.error is not None:
            print(f"{status} {check.name}: {check.error}: {check.detail}")
        else:
            print(f"{status} {check.name}: residual={check.residual:.3e} tol={check.tolerance:.3e}")
    n_failed = sum(not c.passed for c in report.checks)
    print(f"{'all checks passed' if report.passed else f'{n_failed} check(s) failed'}")
    return 0 if report.passed else 2


_COMMANDS = {
    "orbit": _cmd_orbit,
    "vortex": _cmd_vortex,
    "field": _cmd_field,
    "landau": _cmd_landau,
    "verify": _cmd_verify,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclovortex",
        description="Cyclotron-orbit ensembles in a uniform magnetic field: "
                    "simulation, current profiles, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("orbit", "emit a single-orbit time series (orbit.csv)"),
        ("vortex", "emit ensemble-averaged observables (vortex.csv)"),
        ("field", "emit a radial current profile (profile.csv)"),
        ("landau", "emit the quantum energy-level table (landau.json)"),
        ("verify", "run the verification suite (verify.json)"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", type=Path, default=None, help="config file path")
        p.add_argument(
            "--set", dest="sets", action="append", default=[], metavar="KEY=VALUE",
            help="override a config key (repeatable); KEY may be section-qualified",
        )
        p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        text = args.config.read_text(encoding="utf-8") if args.config else ""
        cfg = parse_config(text, overrides=args.sets)
        return _COMMANDS[args.command](cfg, args.out)
    except (CyclovortexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run_main() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run_main()
