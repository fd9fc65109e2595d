"""Graphene sheet conductivity, gate bias field, and bulk-equivalent permittivity.

All results use the e^{+j omega t} time convention: a passive sheet has
Re(sigma) >= 0 and an inductive sheet has Im(sigma) < 0.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import integrate
from scipy.special import expit

from .constants import CONST, ev_to_joule
from .errors import QuadratureError

TIME_CONVENTION = "exp(+j*omega*t)"


@dataclass(frozen=True)
class GrapheneState:
    """Electronic parameters of the graphene sheet.

    ``mu_c`` is stored in joules; use :meth:`from_ev` for the usual
    electron-volt interface.
    """

    mu_c: float                  # chemical potential (J)
    tau: float                   # relaxation time (s)
    temperature: float = 300.0   # K
    t_g: float = 0.335e-9        # sheet thickness (m), monolayer default
    v_f: float = 1.0e6           # Fermi velocity (m/s)

    def __post_init__(self):
        if not all(np.isfinite([self.mu_c, self.tau, self.temperature,
                                self.t_g, self.v_f])):
            raise ValueError("graphene state fields must be finite")
        if self.mu_c < 0:
            raise ValueError("mu_c must be >= 0")
        if self.tau <= 0 or self.temperature <= 0 or self.t_g <= 0 or self.v_f <= 0:
            raise ValueError("tau, temperature, t_g and v_f must be > 0")

    @classmethod
    def from_ev(cls, mu_c_ev, tau, temperature=300.0, t_g=0.335e-9, v_f=1.0e6):
        return cls(mu_c=ev_to_joule(mu_c_ev), tau=tau, temperature=temperature,
                   t_g=t_g, v_f=v_f)


@dataclass(frozen=True)
class SheetConductivity:
    """Complex sheet conductivity (S per square) at a single frequency."""

    value: complex
    frequency: float
    convention: str = TIME_CONVENTION


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-9
    max_subdivisions: int = 200

    def __post_init__(self):
        if self.rel_tol <= 0:
            raise ValueError("quadrature rel_tol must be > 0")
        if self.max_subdivisions < 10:
            raise ValueError("max_subdivisions must be >= 10")


DEFAULT_QUADRATURE = QuadratureSpec()


def fermi_dirac(energy, mu_c, temperature):
    """Occupancy 1/(exp((E - mu)/kT) + 1), overflow-safe for large |E - mu|."""
    if not (np.isfinite(energy) and np.isfinite(mu_c) and np.isfinite(temperature)):
        raise ValueError("fermi_dirac inputs must be finite")
    if temperature <= 0:
        raise ValueError("temperature must be > 0")
    x = (energy - mu_c) / (CONST.k_B * temperature)
    return float(expit(-x))


def _sech2(x):
    """sech^2(x) without overflow for large |x|."""
    a = np.exp(-np.abs(x))
    s = 2.0 * a / (1.0 + a * a)
    return s * s


def _quad(func, a, b, quadrature, scale=0.0, points=None):
    """Adaptive quadrature with a relative tolerance contract.

    ``scale`` sets an absolute-error floor for integrals whose value is
    small compared to the magnitude of the integrand (cancellation), and
    ``points`` marks known sharp features for the subdivision.
    """
    out = integrate.quad(func, a, b, epsabs=quadrature.rel_tol * scale,
                         epsrel=quadrature.rel_tol,
                         limit=quadrature.max_subdivisions, points=points,
                         full_output=1)
    if len(out) > 3:
        raise QuadratureError(
            f"quadrature did not converge on [{a:g}, {b:g}]: {out[3]}",
            partial=out[0], error_estimate=out[1])
    return out[0], out[1]


def sigma_intraband(frequency, state):
    """Closed-form intraband (Drude-like) sheet conductivity."""
    if frequency <= 0:
        raise ValueError("frequency must be > 0")
    omega = 2.0 * np.pi * frequency
    kt = CONST.k_B * state.temperature
    x = state.mu_c / kt
    bracket = x + 2.0 * np.log1p(np.exp(-x))
    w = omega - 1j / state.tau
    value = -1j * CONST.e**2 * kt * bracket / (np.pi * CONST.hbar**2 * w)
    return SheetConductivity(value=complex(value), frequency=frequency)


def _intraband_integrand(energy, state):
    """Integrand of the intraband integral: eps * d/de [f(eps) - f(-eps)]."""
    kt = CONST.k_B * state.temperature
    return -energy / (4.0 * kt) * (_sech2((energy - state.mu_c) / (2.0 * kt))
                                   + _sech2((energy + state.mu_c) / (2.0 * kt)))


def _interband_occupancy(energy, state):
    """f(-eps) - f(eps) for the interband integral."""
    return (fermi_dirac(-energy, state.mu_c, state.temperature)
            - fermi_dirac(energy, state.mu_c, state.temperature))


def _energy_cutoff(state, omega):
    kt = CONST.k_B * state.temperature
    return state.mu_c + max(40.0 * kt, 10.0 * CONST.hbar * omega)


def sigma_full_kubo(frequency, state, quadrature=DEFAULT_QUADRATURE):
    """Full Kubo sheet conductivity: intraband plus interband, by quadrature.

    The interband integrand has no real-axis pole because the complexified
    angular frequency (omega - j/tau) keeps the denominator away from zero.
    """
    if frequency <= 0:
        raise ValueError("frequency must be > 0")
    omega = 2.0 * np.pi * frequency
    w = omega - 1j / state.tau
    e_max = _energy_cutoff(state, omega)

    intra, _ = _quad(lambda e: _intraband_integrand(e, state), 0.0, e_max,
                     quadrature)

    def inter_kernel(energy):
        return _interband_occupancy(energy, state) / (w * w - 4.0 * (energy / CONST.hbar)**2)

    # the kernel peaks sharply where 2 eps crosses hbar*omega; a magnitude
    # pilot integral sets the cancellation floor for the re/im components
    peak = [0.5 * CONST.hbar * omega] if 0.5 * CONST.hbar * omega < e_max else None
    mag, _ = _quad(lambda e: abs(inter_kernel(e)), 0.0, e_max, quadrature,
                   points=peak)
    inter_re, _ = _quad(lambda e: inter_kernel(e).real, 0.0, e_max, quadrature,
                        scale=mag, points=peak)
    inter_im, _ = _quad(lambda e: inter_kernel(e).imag, 0.0, e_max, quadrature,
                        scale=mag, points=peak)
    inter = inter_re + 1j * inter_im

    prefactor = 1j * CONST.e**2 * w / (np.pi * CONST.hbar**2)
    value = prefactor * (intra / (w * w) - inter)
    return SheetConductivity(value=complex(value), frequency=frequency)


def bias_field(mu_c, temperature, v_f, quadrature=DEFAULT_QUADRATURE):
    """Gate bias field (V/m) sustaining the given chemical potential (J)."""
    if mu_c < 0:
        raise ValueError("mu_c must be >= 0")
    if temperature <= 0 or v_f <= 0:
        raise ValueError("temperature and v_f must be > 0")
    if mu_c == 0.0:
        return 0.0
    kt = CONST.k_B * temperature

    def integrand(energy):
        return energy * (float(expit(-(energy - mu_c) / kt))
                         - float(expit(-(energy + mu_c) / kt)))

    e_max = mu_c + 40.0 * kt
    total, _ = _quad(integrand, 0.0, e_max, quadrature)
    return CONST.e * total / (np.pi * CONST.eps0 * CONST.hbar**2 * v_f**2)


def graphene_permittivity(sigma, t_g):
    """Bulk-equivalent relative permittivity of a sheet spread over t_g."""
    if t_g <= 0:
        raise ValueError("t_g must be > 0")
    if sigma.frequency <= 0:
        raise ValueError("sheet conductivity must carry a positive frequency")
    omega = 2.0 * np.pi * sigma.frequency
    return 1.0 + sigma.value / (1j * omega * CONST.eps0 * t_g)


def permittivity_to_sigma(eps_g, frequency, t_g):
    """Inverse of :func:`graphene_permittivity`."""
    omega = 2.0 * np.pi * frequency
    return SheetConductivity(value=(eps_g - 1.0) * 1j * omega * CONST.eps0 * t_g,
                             frequency=frequency)
