"""Config parsing: grammar, defaults, presets, overrides, diagnostics."""

import math

import pytest

from cyclovortex import (
    ParseError,
    ValidationError,
    case_ensemble,
    case_orbit,
    parse_config,
    winding_angle,
)

TAU = 2.0 * math.pi


class TestDefaults:
    def test_empty_document(self):
        cfg = parse_config("")
        assert cfg.params.mass == 1.0
        assert cfg.params.charge == -1.0
        assert cfg.params.field == 1.0
        assert cfg.params.hbar == 1.0
        assert cfg.scenario is None
        assert len(cfg.cases) == 1
        case = cfg.cases[0]
        assert (case.R, case.R_cen, case.n_orbits) == (1.0, 0.0, 8)
        assert case.phase_mode == "uniform"
        assert case.n_per_orbit == 16
        assert cfg.t_max == TAU
        assert cfg.n_steps == 256
        assert cfg.n_bins == 20
        assert cfg.fd_step == 1e-4
        assert cfg.seed == 42

    def test_comments_and_blank_lines(self):
        cfg = parse_config("# only a comment\n\n   \n# another\n")
        assert cfg.params.mass == 1.0


class TestGrammar:
    def test_sections(self):
        text = """
        [params]
        mass = 2.0
        field = 0.5   # trailing comment

        [geometry]
        R = 1.5
        R_cen = 0.5

        [time]
        n_steps = 128
        """
        cfg = parse_config(text)
        assert cfg.params.mass == 2.0
        assert cfg.params.field == 0.5
        assert cfg.cases[0].R == 1.5
        assert cfg.n_steps == 128

    def test_bare_keys_resolve_by_unique_name(self):
        cfg = parse_config("R = 2.5\nseed = 7\nmass = 3.0\n")
        assert cfg.cases[0].R == 2.5
        assert cfg.seed == 7
        assert cfg.params.mass == 3.0

    def test_last_value_wins(self):
        cfg = parse_config("R = 1.0\nR = 2.0\n")
        assert cfg.cases[0].R == 2.0

    def test_phases_list(self):
        cfg = parse_config("phase_mode = explicit\nn_orbits = 3\nphases = 0.1, 0.2, 0.3\n")
        assert cfg.cases[0].phases == (0.1, 0.2, 0.3)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("mass 2.0\n", "line 1"),
            ("[nosuch]\nx = 1\n", "unknown section"),
            ("typo_key = 1\n", "unknown key"),
            ("[params]\nR = 1\n", "unknown key 'R' in section [params]"),
            ("mass = abc\n", "invalid value"),
            ("n_steps = 1.5\n", "invalid value"),
            ("[params\nmass = 1\n", "malformed section header"),
        ],
    )
    def test_parse_errors_carry_diagnostics(self, text, fragment):
        with pytest.raises(ParseError) as excinfo:
            parse_config(text)
        assert fragment in str(excinfo.value)


class TestValidation:
    def test_negative_radius(self):
        with pytest.raises(ValidationError, match="R must be positive"):
            parse_config("R = -1\n")

    @pytest.mark.parametrize(
        "text",
        [
            "mass = -1\n",
            "hbar = 0\n",
            "R_cen = -0.5\n",
            "n_orbits = 0\n",
            "n_per_orbit = 1\n",
            "t_max = 0\n",
            "n_steps = 0\n",
            "n_bins = 3\n",
            "fd_step = 0\n",
            "n_samples = 4\n",
            "phase_mode = spiral\n",
            "scenario = fig9\n",
            "phase_mode = explicit\nn_orbits = 3\nphases = 0.1, 0.2\n",
        ],
    )
    def test_constraint_violations(self, text):
        with pytest.raises(ValidationError):
            parse_config(text)


class TestScenarios:
    def test_fig3(self):
        cfg = parse_config("scenario = fig3\n")
        assert len(cfg.cases) == 1
        case = cfg.cases[0]
        assert (case.R, case.R_cen, case.n_orbits) == (1.0, 2.0, 12)
        assert case.phase_mode == "aligned"

    def test_fig1_three_single_orbits(self):
        cfg = parse_config("scenario = fig1\n")
        assert [c.label for c in cfg.cases] == ["positive", "zero", "negative"]
        assert [(c.R, c.R_cen) for c in cfg.cases] == [(2.0, 1.0), (1.0, 1.0), (1.0, 2.0)]
        assert all(c.n_orbits == 1 for c in cfg.cases)

    def test_fig2_three_uniform_ensembles(self):
        cfg = parse_config("scenario = fig2\n")
        assert all(c.phase_mode == "uniform" and c.n_orbits == 8 and c.n_per_orbit == 16
                   for c in cfg.cases)

    def test_family_member_selection(self):
        cfg = parse_config("scenario = fig2-negative\n")
        assert len(cfg.cases) == 1
        assert (cfg.cases[0].R, cfg.cases[0].R_cen) == (1.0, 2.0)

    def test_preset_overridden_field_by_field(self):
        cfg = parse_config("scenario = fig2\nn_per_orbit = 8\n")
        assert all(c.n_per_orbit == 8 for c in cfg.cases)
        assert [(c.R, c.R_cen) for c in cfg.cases] == [(2.0, 1.0), (1.0, 1.0), (1.0, 2.0)]

    def test_fig2_winding_frequencies(self):
        """The three fig2 ensembles circulate at omega_c, omega_c/2, and zero."""
        cfg = parse_config("scenario = fig2\n")
        expected = {"positive": 1.0, "zero": 0.5, "negative": 0.0}
        for case in cfg.cases:
            orbit = case_orbit(case, cfg.params, cfg.seed)
            result = winding_angle(orbit, cfg.params, n_samples=4096)
            assert result.mean_omega == pytest.approx(expected[case.label], abs=1e-9)


class TestOverrides:
    def test_set_overrides_file(self):
        cfg = parse_config("R = 1.0\n", overrides=["R=2.0", "geometry.R_cen=0.5"])
        assert cfg.cases[0].R == 2.0
        assert cfg.cases[0].R_cen == 0.5

    def test_qualified_keys(self):
        cfg = parse_config("", overrides=["params.mass=4.0", "analysis.seed=9"])
        assert cfg.params.mass == 4.0
        assert cfg.seed == 9

    def test_scenario_via_override(self):
        cfg = parse_config("", overrides=["scenario=fig3"])
        assert cfg.cases[0].R_cen == 2.0

    @pytest.mark.parametrize("bad", ["notanassignment", "nosuchkey=1", "params.R=1"])
    def test_bad_overrides(self, bad):
        with pytest.raises(ParseError):
            parse_config("", overrides=[bad])


class TestCaseHelpers:
    def test_case_ensemble(self):
        cfg = parse_config("scenario = fig3\n")
        ens = case_ensemble(cfg.cases[0], cfg.params, cfg.seed)
        assert ens.n_electrons == 12
        assert ens.R_cen == 2.0

    def test_case_orbit_representative(self):
        cfg = parse_config("scenario = fig1-positive\n")
        orbit = case_orbit(cfg.cases[0], cfg.params, cfg.seed)
        assert (orbit.x0, orbit.y0, orbit.R) == (1.0, 0.0, 2.0)
        assert orbit.theta == 0.0

    def test_random_mode_uses_config_seed(self):
        cfg_a = parse_config("phase_mode = random\nseed = 3\n")
        cfg_b = parse_config("phase_mode = random\nseed = 3\n")
        ens_a = case_ensemble(cfg_a.cases[0], cfg_a.params, cfg_a.seed)
        ens_b = case_ensemble(cfg_b.cases[0], cfg_b.params, cfg_b.seed)
        assert [o.theta for o in ens_a.electrons] == [o.theta for o in ens_b.electrons]
