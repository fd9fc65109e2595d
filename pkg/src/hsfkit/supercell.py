"""Anomalous reflection from a phase-gradient supercell.

Generalized law of reflection with a positive linear phase gradient
2*pi/D across a supercell of N_c unit cells: forward angle computation,
inverse sizing in integer cells, and per-cell phase profiles.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class SupercellSpec:
    theta_i_deg: float
    n_cells: int
    pitch: float          # unit-cell pitch d (m)
    wavelength: float     # m
    n_incidence: float = 1.0

    def __post_init__(self):
        if self.n_cells < 2:
            raise ValueError("supercell needs at least 2 cells")
        if not 0.0 <= self.theta_i_deg < 90.0:
            raise ValueError("incidence angle must satisfy 0 <= theta < 90 deg")
        if self.pitch <= 0 or self.wavelength <= 0 or self.n_incidence <= 0:
            raise ValueError("pitch, wavelength and n_incidence must be > 0")

    @property
    def length(self) -> float:
        return self.n_cells * self.pitch


@dataclass(frozen=True)
class ReflectionOutcome:
    sin_theta_r: float
    propagating: bool
    theta_r_deg: float | None  # None when evanescent


@dataclass(frozen=True)
class PhaseProfile:
    phases: tuple      # radians in [0, 2*pi), one per cell
    gradient: float    # d(phi)/dx = 2*pi/D (rad/m)


def reflection_angle(spec: SupercellSpec) -> ReflectionOutcome:
    """sin(theta_r) = sin(theta_i) + lambda / (n_i * N_c * d)."""
    sin_r = (math.sin(math.radians(spec.theta_i_deg))
             + spec.wavelength / (spec.n_incidence * spec.length))
    if abs(sin_r) <= 1.0:
        return ReflectionOutcome(sin_theta_r=sin_r, propagating=True,
                                 theta_r_deg=math.degrees(math.asin(sin_r)))
    return ReflectionOutcome(sin_theta_r=sin_r, propagating=False,
                             theta_r_deg=None)


def design_supercell(theta_i_deg, theta_r_target_deg, wavelength, pitch,
                     n_incidence=1.0):
    """Integer cell count realizing the target anomalous angle.

    The ideal supercell length is D* = lambda / (n_i * (sin t_r - sin t_i));
    N_c = floor(D*/d), clamped to >= 2 and incremented while the outcome is
    evanescent. Returns (n_cells, achieved ReflectionOutcome).
    """
    if not 0.0 <= theta_i_deg < 90.0:
        raise ValueError("incidence angle must satisfy 0 <= theta < 90 deg")
    if theta_r_target_deg <= theta_i_deg:
        raise ValueError("target below specular: a positive phase gradient "
                         "can only steer to angles above the incidence angle")
    if theta_r_target_deg >= 90.0:
        raise ValueError("target angle must be < 90 deg")
    if pitch <= 0 or wavelength <= 0:
        raise ValueError("pitch and wavelength must be > 0")
    delta = (math.sin(math.radians(theta_r_target_deg))
             - math.sin(math.radians(theta_i_deg)))
    ideal_length = wavelength / (n_incidence * delta)
    n_cells = max(2, math.floor(ideal_length / pitch))
    while True:
        spec = SupercellSpec(theta_i_deg=theta_i_deg, n_cells=n_cells,
                             pitch=pitch, wavelength=wavelength,
                             n_incidence=n_incidence)
        outcome = reflection_angle(spec)
        if outcome.propagating:
            return n_cells, outcome
        n_cells += 1


def phase_profile(spec: SupercellSpec) -> PhaseProfile:
    """Linear 2*pi ramp discretized per cell: phase_k = 2*pi*k*d/D mod 2*pi."""
    d_over_length = spec.pitch / spec.length
    phases = tuple((2.0 * math.pi * k * d_over_length) % (2.0 * math.pi)
                   for k in range(spec.n_cells))
    return PhaseProfile(phases=phases,
                        gradient=2.0 * math.pi / spec.length)


# Incident-angle / cell-count pairs of the reference anomalous-reflection
# table (theta_i in degrees).
TABLE2_ROWS = ((15, 58), (15, 31), (15, 23), (15, 19),
               (30, 68), (30, 38), (30, 32), (30, 29))


def table2(wavelength=120e-6, pitch=8.5e-6, n_incidence=1.0):
    """Reflection outcome for each reference row: (theta_i, N_c, outcome)."""
    rows = []
    for theta_i, n_cells in TABLE2_ROWS:
        spec = SupercellSpec(theta_i_deg=theta_i, n_cells=n_cells,
                             pitch=pitch, wavelength=wavelength,
                             n_incidence=n_incidence)
        rows.append((theta_i, n_cells, reflection_angle(spec)))
    return rows
