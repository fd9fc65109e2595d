"""Chemical-potential sweep: resonance tracking, peak absorptance, bias field."""

from dataclasses import dataclass, replace

import numpy as np

from .constants import ev_to_joule, joule_to_ev
from .errors import NoResonanceError
from .graphene import GrapheneState, bias_field
from .homogenization import DEFAULT_MATERIALS, find_resonance


@dataclass(frozen=True)
class ReconfigPoint:
    mu_c_ev: float
    f_res: float
    a_peak: float
    e0: float       # gate bias field (V/m)


def sweep_mu(geometry, model, state_template: GrapheneState,
             mu_lo_ev, mu_hi_ev, n_steps, band,
             materials=DEFAULT_MATERIALS) -> list:
    """Resonance and bias field for each chemical potential in the sweep.

    ``state_template`` supplies tau, temperature, t_g and v_f; mu_c is
    replaced per point. Results are ordered by ascending mu_c.
    """
    if not 0 < mu_lo_ev < mu_hi_ev:
        raise ValueError("sweep requires 0 < mu_lo < mu_hi")
    if n_steps < 2:
        raise ValueError("n_steps must be >= 2")
    f_lo, f_hi = band
    points = []
    for mu_ev in np.linspace(mu_lo_ev, mu_hi_ev, n_steps):
        state = replace(state_template, mu_c=ev_to_joule(float(mu_ev)))
        try:
            f_res, a_peak = find_resonance(state, geometry, model,
                                           f_lo, f_hi, materials)
        except NoResonanceError as err:
            raise NoResonanceError(
                f"at mu_c = {mu_ev:.6g} eV: {err}") from err
        e0 = bias_field(state.mu_c, state.temperature, state.v_f)
        points.append(ReconfigPoint(mu_c_ev=float(mu_ev), f_res=f_res,
                                    a_peak=a_peak, e0=e0))
    return points
