import numpy as np
import pytest

from hsfkit.errors import NoResonanceError
from hsfkit.graphene import GrapheneState, bias_field
from hsfkit.homogenization import (DEFAULT_GEOMETRY, HomogenizationModel)
from hsfkit.reconfig import ReconfigPoint, sweep_mu

MODEL = HomogenizationModel(kappa=0.8314082025449174)
TEMPLATE = GrapheneState.from_ev(0.5, 1e-12)
BAND = (1.5e12, 4.5e12)


class TestSweep:
    def test_blue_shift_with_doping(self):
        points = sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE,
                          0.5, 0.65, 4, BAND)
        assert len(points) == 4
        assert [p.mu_c_ev for p in points] == pytest.approx(
            list(np.linspace(0.5, 0.65, 4)))
        f_res = [p.f_res for p in points]
        assert all(b > a for a, b in zip(f_res, f_res[1:]))
        # higher carrier density strengthens the resonance here
        assert all(0.0 < p.a_peak <= 1.0 for p in points)

    def test_bias_field_column_matches_direct_evaluation(self):
        points = sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE,
                          0.4, 0.6, 3, BAND)
        e0 = [p.e0 for p in points]
        assert all(b > a for a, b in zip(e0, e0[1:]))
        for p in points:
            direct = bias_field(p.mu_c_ev * 1.602176634e-19,
                                TEMPLATE.temperature, TEMPLATE.v_f)
            assert p.e0 == pytest.approx(direct, rel=1e-12)

    def test_template_scattering_time_is_respected(self):
        fast = GrapheneState.from_ev(0.5, 1e-12)
        slow = GrapheneState.from_ev(0.5, 0.1e-12)
        p_fast = sweep_mu(DEFAULT_GEOMETRY, MODEL, fast, 0.5, 0.55, 2, BAND)
        p_slow = sweep_mu(DEFAULT_GEOMETRY, MODEL, slow, 0.5, 0.55, 2, BAND)
        # a shorter scattering time broadens and weakens the resonance
        assert p_slow[0].a_peak != pytest.approx(p_fast[0].a_peak, rel=1e-3)

    def test_deterministic(self):
        a = sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE, 0.5, 0.6, 3, BAND)
        b = sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE, 0.5, 0.6, 3, BAND)
        assert a == b


class TestErrors:
    def test_band_miss_names_offending_mu(self):
        # at the top of this sweep the resonance has shifted past the band
        with pytest.raises(NoResonanceError, match="mu_c = 0.55"):
            sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE,
                     0.5, 0.65, 4, (1.5e12, 3.0e12))

    def test_bad_sweep_bounds(self):
        with pytest.raises(ValueError):
            sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE, 0.6, 0.5, 3, BAND)
        with pytest.raises(ValueError):
            sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE, 0.0, 0.5, 3, BAND)

    def test_too_few_steps(self):
        with pytest.raises(ValueError):
            sweep_mu(DEFAULT_GEOMETRY, MODEL, TEMPLATE, 0.5, 0.6, 1, BAND)
