import math

import pytest
from hypothesis import given, settings, strategies as st

from hsfkit.supercell import (TABLE2_ROWS, PhaseProfile, ReflectionOutcome,
                              SupercellSpec, design_supercell, phase_profile,
                              reflection_angle, table2)

# nominal targets (deg) for the reference rows; the fourth 15-degree row
# falls just past the propagation limit and is expected evanescent
TABLE2_TARGETS = (30.0, 45.0, 60.0, 75.0, 45.0, 60.0, 70.0, 80.0)


class TestReflectionAngle:
    def test_grating_equation_oracle(self):
        spec = SupercellSpec(theta_i_deg=0.0, n_cells=2, pitch=60e-6,
                             wavelength=60e-6)
        outcome = reflection_angle(spec)
        assert outcome.propagating
        assert outcome.sin_theta_r == pytest.approx(0.5, abs=1e-14)
        assert outcome.theta_r_deg == pytest.approx(30.0, abs=1e-12)

    def test_oblique_hand_value(self):
        spec = SupercellSpec(theta_i_deg=15.0, n_cells=58, pitch=8.5e-6,
                             wavelength=120e-6)
        expected = math.sin(math.radians(15.0)) + 120e-6 / (58 * 8.5e-6)
        outcome = reflection_angle(spec)
        assert outcome.sin_theta_r == pytest.approx(expected, abs=1e-15)

    def test_evanescent_case(self):
        spec = SupercellSpec(theta_i_deg=15.0, n_cells=19, pitch=8.5e-6,
                             wavelength=120e-6)
        outcome = reflection_angle(spec)
        assert not outcome.propagating
        assert outcome.theta_r_deg is None
        assert outcome.sin_theta_r > 1.0

    def test_large_supercell_approaches_specular(self):
        spec = SupercellSpec(theta_i_deg=20.0, n_cells=100000, pitch=8.5e-6,
                             wavelength=120e-6)
        outcome = reflection_angle(spec)
        assert outcome.theta_r_deg == pytest.approx(20.0, abs=0.02)

    def test_denser_medium_reduces_deflection(self):
        base = dict(theta_i_deg=10.0, n_cells=30, pitch=8.5e-6,
                    wavelength=120e-6)
        vacuum = reflection_angle(SupercellSpec(**base))
        dense = reflection_angle(SupercellSpec(**base, n_incidence=3.4))
        assert dense.sin_theta_r < vacuum.sin_theta_r

    @given(theta_i=st.floats(0.0, 60.0), n_cells=st.integers(2, 500),
           ratio=st.floats(1.0, 30.0))
    @settings(max_examples=200, deadline=None)
    def test_anomalous_angle_exceeds_specular(self, theta_i, n_cells, ratio):
        # ratio = wavelength / pitch
        spec = SupercellSpec(theta_i_deg=theta_i, n_cells=n_cells,
                             pitch=8.5e-6, wavelength=ratio * 8.5e-6)
        outcome = reflection_angle(spec)
        expected = math.sin(math.radians(theta_i)) + ratio / n_cells
        assert outcome.sin_theta_r == pytest.approx(expected, rel=1e-12)
        if outcome.propagating:
            assert outcome.theta_r_deg > theta_i


class TestDesign:
    def test_known_design(self):
        n_cells, outcome = design_supercell(30.0, 60.0, 120e-6, 8.5e-6)
        assert n_cells == 38
        assert outcome.propagating
        assert outcome.theta_r_deg == pytest.approx(60.0, abs=1.0)

    def test_floor_property(self):
        # the chosen supercell slightly overshoots the target angle and
        # one more cell would undershoot it
        for theta_i, target in ((0.0, 25.0), (15.0, 45.0), (30.0, 55.0)):
            n_cells, outcome = design_supercell(theta_i, target, 120e-6,
                                                8.5e-6)
            target_sin = math.sin(math.radians(target))
            assert outcome.sin_theta_r >= target_sin - 1e-12
            larger = SupercellSpec(theta_i_deg=theta_i, n_cells=n_cells + 1,
                                   pitch=8.5e-6, wavelength=120e-6)
            assert reflection_angle(larger).sin_theta_r < target_sin

    def test_evanescence_guard(self):
        # the floor choice of 19 cells is evanescent; the design backs off
        # to the next propagating size
        n_cells, outcome = design_supercell(15.0, 75.0, 120e-6, 8.5e-6)
        assert n_cells == 20
        assert outcome.propagating
        assert outcome.theta_r_deg == pytest.approx(74.7, abs=0.1)

    def test_target_below_specular_rejected(self):
        with pytest.raises(ValueError, match="below specular"):
            design_supercell(30.0, 20.0, 120e-6, 8.5e-6)
        with pytest.raises(ValueError, match="below specular"):
            design_supercell(30.0, 30.0, 120e-6, 8.5e-6)

    def test_invalid_angles_rejected(self):
        with pytest.raises(ValueError):
            design_supercell(-5.0, 30.0, 120e-6, 8.5e-6)
        with pytest.raises(ValueError):
            design_supercell(15.0, 90.0, 120e-6, 8.5e-6)

    @given(theta_i=st.floats(0.0, 50.0), delta=st.floats(5.0, 35.0))
    @settings(max_examples=100, deadline=None)
    def test_design_always_propagating(self, theta_i, delta):
        target = theta_i + delta
        if target >= 89.0:
            return
        n_cells, outcome = design_supercell(theta_i, target, 120e-6, 8.5e-6)
        assert n_cells >= 2
        assert outcome.propagating


class TestPhaseProfile:
    def test_linear_ramp(self):
        spec = SupercellSpec(theta_i_deg=0.0, n_cells=8, pitch=8.5e-6,
                             wavelength=120e-6)
        profile = phase_profile(spec)
        assert len(profile.phases) == 8
        assert profile.phases[0] == 0.0
        step = 2.0 * math.pi / 8
        for k, phase in enumerate(profile.phases):
            assert phase == pytest.approx((k * step) % (2 * math.pi),
                                          abs=1e-12)
        assert all(0.0 <= p < 2.0 * math.pi for p in profile.phases)

    def test_gradient(self):
        spec = SupercellSpec(theta_i_deg=0.0, n_cells=40, pitch=8.5e-6,
                             wavelength=120e-6)
        profile = phase_profile(spec)
        assert profile.gradient == pytest.approx(
            2.0 * math.pi / (40 * 8.5e-6), rel=1e-14)


class TestTable2:
    def test_row_structure(self):
        rows = table2()
        assert len(rows) == 8
        assert [(t, n) for t, n, _ in rows] == list(TABLE2_ROWS)

    def test_against_nominal_targets(self):
        rows = table2()
        for (theta_i, n_cells, outcome), target in zip(rows, TABLE2_TARGETS):
            if (theta_i, n_cells) == (15, 19):
                assert not outcome.propagating
                assert outcome.sin_theta_r == pytest.approx(1.0019, abs=1e-3)
            else:
                assert outcome.propagating
                assert abs(outcome.theta_r_deg - target) <= 1.0


class TestValidation:
    def test_spec_bounds(self):
        with pytest.raises(ValueError):
            SupercellSpec(theta_i_deg=0.0, n_cells=1, pitch=8.5e-6,
                          wavelength=120e-6)
        with pytest.raises(ValueError):
            SupercellSpec(theta_i_deg=95.0, n_cells=10, pitch=8.5e-6,
                          wavelength=120e-6)
        with pytest.raises(ValueError):
            SupercellSpec(theta_i_deg=0.0, n_cells=10, pitch=-1e-6,
                          wavelength=120e-6)
