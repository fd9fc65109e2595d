"""Transfer-matrix solver for layered media with embedded conductive sheets.

Plane-wave reflection/transmission/absorption and input impedance at oblique
incidence, TE or TM, for stacks terminated either by a PEC ground plane or by
a semi-infinite exit medium. e^{+j omega t} convention throughout; the
transverse wavenumber branch is chosen with Im(kz) <= 0.
"""

from dataclasses import dataclass, field, replace
from typing import Callable, Sequence, Union

import numpy as np

from .constants import CONST

PEC = "pec"
OPEN = "open"


@dataclass(frozen=True)
class Layer:
    thickness: float
    permittivity: complex
    permeability: complex = 1.0 + 0.0j

    def __post_init__(self):
        if self.thickness < 0:
            raise ValueError("layer thickness must be >= 0")


@dataclass(frozen=True)
class SheetBoundary:
    """Zero-thickness conductive sheet, modeled as a shunt admittance (S)."""

    admittance: complex


Element = Union[Layer, SheetBoundary]


@dataclass(frozen=True)
class LayerStack:
    """Elements ordered from the incidence side downward."""

    elements: tuple
    termination: str = PEC
    exit_permittivity: complex = 1.0 + 0.0j
    exit_permeability: complex = 1.0 + 0.0j

    def __post_init__(self):
        if self.termination not in (PEC, OPEN):
            raise ValueError(f"unknown termination {self.termination!r}")
        for el in self.elements:
            if not isinstance(el, (Layer, SheetBoundary)):
                raise ValueError(f"stack element {el!r} is neither a Layer "
                                 "nor a SheetBoundary")
        object.__setattr__(self, "elements", tuple(self.elements))


@dataclass(frozen=True)
class Excitation:
    frequency: float
    theta_deg: float = 0.0
    polarization: str = "TE"
    incidence_permittivity: float = 1.0
    incidence_permeability: float = 1.0

    def __post_init__(self):
        if self.frequency <= 0:
            raise ValueError("frequency must be > 0")
        if not 0.0 <= self.theta_deg < 90.0:
            raise ValueError("incidence angle must satisfy 0 <= theta < 90 deg")
        if self.polarization not in ("TE", "TM"):
            raise ValueError("polarization must be 'TE' or 'TM'")


@dataclass(frozen=True)
class SpectralPoint:
    frequency: float
    r: complex
    t: complex
    absorptance: float
    zin_norm: complex


def _kz(k0, eps, mu, kx):
    kz = np.sqrt(complex(k0 * k0 * eps * mu - kx * kx))
    if kz.imag > 0 or (kz.imag == 0 and kz.real < 0):
        kz = -kz
    return kz


def _wave_admittance(polarization, omega, kz, eps, mu):
    if polarization == "TE":
        return kz / (omega * CONST.mu0 * mu)
    return omega * CONST.eps0 * eps / kz


def solve(stack: LayerStack, excitation: Excitation) -> SpectralPoint:
    """Reflection, transmission, absorptance and normalized input impedance."""
    omega = 2.0 * np.pi * excitation.frequency
    k0 = omega / CONST.c0
    n_i = np.sqrt(excitation.incidence_permittivity
                  * excitation.incidence_permeability)
    kx = k0 * n_i * np.sin(np.radians(excitation.theta_deg))
    if excitation.theta_deg == 0.0 and excitation.polarization != "TE":
        # the polarizations are degenerate at normal incidence; use one
        # code path so TE and TM results are bitwise identical
        excitation = replace(excitation, polarization="TE")

    kz_i = _kz(k0, excitation.incidence_permittivity,
               excitation.incidence_permeability, kx)
    y_i = _wave_admittance(excitation.polarization, omega, kz_i,
                           excitation.incidence_permittivity,
                           excitation.incidence_permeability)

    # Cascaded ABCD matrix with V = tangential E, I = tangential H.
    a, b, c, d = 1.0 + 0j, 0.0 + 0j, 0.0 + 0j, 1.0 + 0j
    for el in stack.elements:
        if isinstance(el, SheetBoundary):
            # shunt admittance: [1 0; Ys 1]
            c += el.admittance * a
            d += el.admittance * b
        else:
            kz = _kz(k0, el.permittivity, el.permeability, kx)
            y = _wave_admittance(excitation.polarization, omega, kz,
                                 el.permittivity, el.permeability)
            phi = kz * el.thickness
            cs, sn = np.cos(phi), np.sin(phi)
            la, lb = cs, 1j * sn / y
            lc, ld = 1j * y * sn, cs
            a, b, c, d = (a * la + b * lc, a * lb + b * ld,
                          c * la + d * lc, c * lb + d * ld)

    if stack.termination == PEC:
        # short-circuit load: Zin = B/D
        zin = b / d
        r = (zin * y_i - 1.0) / (zin * y_i + 1.0)
        t = 0.0 + 0.0j
        t_power = 0.0
    else:
        kz_t = _kz(k0, stack.exit_permittivity, stack.exit_permeability, kx)
        y_t = _wave_admittance(excitation.polarization, omega, kz_t,
                               stack.exit_permittivity,
                               stack.exit_permeability)
        t = 2.0 / (a + b * y_t + (c + d * y_t) / y_i)
        r = t * (a + b * y_t) - 1.0
        t_power = abs(t) ** 2 * y_t.real / y_i.real

    absorptance = 1.0 - abs(r) ** 2 - t_power
    zin_norm = np.inf if r == 1.0 else (1.0 + r) / (1.0 - r)
    return SpectralPoint(frequency=excitation.frequency, r=complex(r),
                         t=complex(t), absorptance=float(absorptance),
                         zin_norm=complex(zin_norm))


StackSource = Union[LayerStack, Callable[[float], LayerStack]]


def _stack_at(source: StackSource, frequency: float) -> LayerStack:
    return source(frequency) if callable(source) else source


def spectrum(stack_source: StackSource, f_start, f_stop, n_points,
             excitation: Excitation) -> list:
    """Frequency sweep; dispersive stacks are rebuilt at every point."""
    if f_start >= f_stop:
        raise ValueError("f_start must be < f_stop")
    if n_points < 2:
        raise ValueError("n_points must be >= 2")
    points = []
    for f in np.linspace(f_start, f_stop, n_points):
        exc = Excitation(frequency=float(f), theta_deg=excitation.theta_deg,
                         polarization=excitation.polarization,
                         incidence_permittivity=excitation.incidence_permittivity,
                         incidence_permeability=excitation.incidence_permeability)
        try:
            points.append(solve(_stack_at(stack_source, float(f)), exc))
        except Exception as exc_err:
            raise type(exc_err)(f"at frequency {f:.6e} Hz: {exc_err}") from exc_err
    return points


def input_impedance(stack: LayerStack, excitation: Excitation) -> complex:
    return solve(stack, excitation).zin_norm
