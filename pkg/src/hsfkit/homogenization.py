"""Patch-grid homogenization of the graphene unit cell and HSF stack assembly.

The patch array is collapsed to an equivalent sheet impedance: the graphene
resistive-inductive term scaled by (P/d)^2 in series with a capacitive grid
term (log-csc gap formula). A single dimensionless constant kappa multiplying
the grid capacitance is calibrated so the 0.5 eV resonance lands on target;
everything else is predictive.
"""

from dataclasses import dataclass, replace

import numpy as np

from .constants import CONST
from .errors import CalibrationError, NoResonanceError
from .graphene import GrapheneState, SheetConductivity, sigma_intraband
from .tmm import OPEN, PEC, Excitation, Layer, LayerStack, SheetBoundary, solve

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class UnitCellGeometry:
    period: float = 14e-6      # P
    patch: float = 8.5e-6      # d
    substrate: float = 9e-6    # Si height h
    spacer: float = 50e-9      # SiO2
    gate: float = 50e-9        # poly-Si

    def __post_init__(self):
        if not 0 < self.patch < self.period:
            raise ValueError("patch length must satisfy 0 < d < P")
        if min(self.substrate, self.spacer, self.gate) <= 0:
            raise ValueError("all thicknesses must be > 0")


@dataclass(frozen=True)
class StackMaterials:
    """THz relative permittivities of the dielectric stack (configurable)."""

    eps_si: float = 11.7
    eps_sio2: float = 3.9
    eps_poly: float = 11.7


@dataclass(frozen=True)
class HomogenizationModel:
    kappa: float = 1.0
    calibrated: bool = False

    def __post_init__(self):
        if not 0.1 <= self.kappa <= 10.0:
            raise ValueError("kappa outside the sanity bound [0.1, 10]")


DEFAULT_GEOMETRY = UnitCellGeometry()
DEFAULT_MATERIALS = StackMaterials()

KAPPA_MIN, KAPPA_MAX = 0.1, 10.0


def grid_capacitance(geometry, model, materials=DEFAULT_MATERIALS):
    """Quasi-static capacitance of the patch grid (F), kappa included.

    The effective permittivity is the mean of the media bounding the sheet
    (vacuum above, spacer below).
    """
    eps_eff = 0.5 * (1.0 + materials.eps_sio2)
    gap_term = np.log(1.0 / np.sin(np.pi * (geometry.period - geometry.patch)
                                   / (2.0 * geometry.period)))
    return model.kappa * (2.0 * geometry.period * CONST.eps0 * eps_eff / np.pi) * gap_term


def patch_sheet_impedance(geometry, sigma: SheetConductivity, model,
                          frequency, materials=DEFAULT_MATERIALS):
    """Equivalent sheet impedance (Ohm/square) of the graphene patch array."""
    if sigma.value.real < 0:
        raise ValueError("sheet conductivity must be passive (Re >= 0)")
    omega = 2.0 * np.pi * frequency
    ratio = geometry.period / geometry.patch
    c_grid = grid_capacitance(geometry, model, materials)
    return ratio * ratio / sigma.value - 1j / (omega * c_grid)


def build_hsf_stack(geometry, state: GrapheneState, model, frequency,
                    materials=DEFAULT_MATERIALS) -> LayerStack:
    """PEC-backed absorber stack: sheet / SiO2 / poly-Si / Si / ground."""
    sigma = sigma_intraband(frequency, state)
    z_s = patch_sheet_impedance(geometry, sigma, model, frequency, materials)
    return LayerStack(
        elements=(SheetBoundary(admittance=1.0 / z_s),
                  Layer(geometry.spacer, materials.eps_sio2),
                  Layer(geometry.gate, materials.eps_poly),
                  Layer(geometry.substrate, materials.eps_si)),
        termination=PEC)


def build_hsf_slab(geometry, state: GrapheneState, model, frequency,
                   materials=DEFAULT_MATERIALS) -> LayerStack:
    """Ground-free variant (open into vacuum) used for parameter retrieval."""
    sigma = sigma_intraband(frequency, state)
    z_s = patch_sheet_impedance(geometry, sigma, model, frequency, materials)
    return LayerStack(
        elements=(SheetBoundary(admittance=1.0 / z_s),
                  Layer(geometry.spacer, materials.eps_sio2),
                  Layer(geometry.gate, materials.eps_poly),
                  Layer(geometry.substrate, materials.eps_si)),
        termination=OPEN)


def slab_thickness(geometry) -> float:
    return geometry.spacer + geometry.gate + geometry.substrate


def hsf_absorptance(geometry, state, model, frequency,
                    materials=DEFAULT_MATERIALS) -> float:
    stack = build_hsf_stack(geometry, state, model, frequency, materials)
    return solve(stack, Excitation(frequency=frequency)).absorptance


def kappa_for_sheet_resonance(geometry, state, frequency,
                              materials=DEFAULT_MATERIALS) -> float:
    """Closed-form kappa placing the sheet series resonance (Im Z_s = 0)
    at the given frequency. Useful as a deterministic reference model when
    full stack calibration is not possible."""
    omega = 2.0 * np.pi * frequency
    sigma = sigma_intraband(frequency, state)
    ratio = geometry.period / geometry.patch
    x_graphene = (ratio * ratio / sigma.value).imag
    if x_graphene <= 0:
        raise ValueError("graphene term is not inductive at this frequency")
    c0 = grid_capacitance(geometry, HomogenizationModel(kappa=1.0), materials)
    kappa = 1.0 / (omega * c0 * x_graphene)
    if not KAPPA_MIN <= kappa <= KAPPA_MAX:
        raise ValueError(f"required kappa {kappa:g} outside [0.1, 10]")
    return kappa


def find_peak(objective, f_lo, f_hi, n_grid=201, rel_tol=1e-4):
    """Grid scan plus golden-section refinement of an interior maximum.

    Returns (f_peak, peak_value). Raises NoResonanceError when the grid
    maximum sits on a band edge.
    """
    if f_lo >= f_hi:
        raise ValueError("f_lo must be < f_hi")
    grid = np.linspace(f_lo, f_hi, max(int(n_grid), 201))
    values = np.array([objective(float(f)) for f in grid])
    i = int(np.argmax(values))
    if i == 0 or i == len(grid) - 1:
        raise NoResonanceError(
            f"no resonance in band [{f_lo:.6e}, {f_hi:.6e}] Hz: "
            "maximum lies on the band edge")

    lo, hi = float(grid[i - 1]), float(grid[i + 1])
    x1 = hi - GOLDEN * (hi - lo)
    x2 = lo + GOLDEN * (hi - lo)
    v1, v2 = objective(x1), objective(x2)
    while (hi - lo) > rel_tol * 0.5 * (hi + lo):
        if v1 >= v2:
            hi, x2, v2 = x2, x1, v1
            x1 = hi - GOLDEN * (hi - lo)
            v1 = objective(x1)
        else:
            lo, x1, v1 = x1, x2, v2
            x2 = lo + GOLDEN * (hi - lo)
            v2 = objective(x2)
    f_peak = 0.5 * (lo + hi)
    return f_peak, float(objective(f_peak))


def find_resonance(state, geometry, model, f_lo, f_hi,
                   materials=DEFAULT_MATERIALS, n_grid=201):
    """Absorption resonance of the HSF stack in [f_lo, f_hi]."""
    return find_peak(
        lambda f: hsf_absorptance(geometry, state, model, f, materials),
        f_lo, f_hi, n_grid=n_grid)


def calibrate(geometry, state, target_f=2.5e12, materials=DEFAULT_MATERIALS,
              band_halfwidth=0.6, rel_tol=1e-3) -> HomogenizationModel:
    """Bisection over kappa so the resonance lands on target_f.

    The resonance frequency decreases monotonically with kappa (larger grid
    capacitance shifts the series resonance down), so a sign change of
    f_res - target_f over [0.1, 10] brackets the solution.
    """
    f_lo = target_f * (1.0 - band_halfwidth)
    f_hi = target_f * (1.0 + band_halfwidth)

    def resonance_at(kappa):
        model = HomogenizationModel(kappa=kappa)
        try:
            f_res, _ = find_resonance(state, geometry, model, f_lo, f_hi,
                                      materials)
        except NoResonanceError:
            return None
        return f_res

    # log-spaced scan; only adjacent valid grid points may bracket, so a
    # branch jump between neighbors is caught by the final verification
    kappas = np.geomspace(KAPPA_MIN, KAPPA_MAX, 61)
    results = [(float(k), resonance_at(float(k))) for k in kappas]
    valid = [(k, f) for k, f in results if f is not None]
    if not valid:
        raise CalibrationError(
            "no resonance found in band for any kappa in [0.1, 10]")
    achievable = (min(f for _, f in valid), max(f for _, f in valid))

    brackets = []
    for (k1, f1), (k2, f2) in zip(results, results[1:]):
        if f1 is None or f2 is None:
            continue
        if (f1 - target_f) * (f2 - target_f) <= 0:
            brackets.append((abs(f1 - f2), k1, f1, k2))
    if not brackets:
        raise CalibrationError(
            f"cannot reach {target_f:.6e} Hz; achievable resonance range is "
            f"[{achievable[0]:.6e}, {achievable[1]:.6e}] Hz",
            achievable=achievable)
    # try the tightest bracket first: wide gaps are branch discontinuities
    brackets.sort()

    best_achieved = None
    for _, k_start, f_start, k_end in brackets:
        k_lo, f_k_lo, k_hi = k_start, f_start, k_end
        kappa, achieved = k_lo, f_k_lo
        failed = False
        for _ in range(200):
            if abs(achieved - target_f) <= 0.1 * rel_tol * target_f:
                break
            if (k_hi - k_lo) <= 1e-12 * max(abs(k_hi), abs(k_lo)):
                break
            k_mid = 0.5 * (k_lo + k_hi)
            f_mid = resonance_at(k_mid)
            if f_mid is None:
                failed = True
                break
            kappa, achieved = k_mid, f_mid
            if (f_k_lo - target_f) * (f_mid - target_f) <= 0:
                k_hi = k_mid
            else:
                k_lo, f_k_lo = k_mid, f_mid
        if not failed and abs(achieved - target_f) <= rel_tol * target_f:
            return HomogenizationModel(kappa=kappa, calibrated=True)
        if not failed and (best_achieved is None
                           or abs(achieved - target_f)
                           < abs(best_achieved - target_f)):
            best_achieved = achieved
    raise CalibrationError(
        f"resonance branch is discontinuous at the target: best achieved "
        f"{best_achieved if best_achieved is not None else float('nan'):.6e} "
        f"Hz for target {target_f:.6e} Hz; achievable range is "
        f"[{achievable[0]:.6e}, {achievable[1]:.6e}] Hz",
        achievable=achievable)
