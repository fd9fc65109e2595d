"""Effective-parameter retrieval from two-port S-parameters of a slab.

Nicolson-Ross-Weir-style extraction of refractive index n, normalized wave
impedance z, and the derived eps_eff = n/z, mu_eff = n*z, with explicit
branch-index bookkeeping for thick slabs. Passivity conventions follow the
rest of the toolkit: Re z >= 0 and Im n <= 0 under e^{+j omega t}.
"""

import csv
from dataclasses import dataclass

import numpy as np

from .constants import CONST
from .errors import RetrievalError

_OPAQUE_TOL = 1e-12
_DEGENERATE_TOL = 1e-14


@dataclass(frozen=True)
class TwoPortSample:
    frequency: float
    s11: complex
    s21: complex
    thickness: float

    def __post_init__(self):
        if self.frequency <= 0 or self.thickness <= 0:
            raise ValueError("frequency and thickness must be > 0")


@dataclass(frozen=True)
class RetrievedParams:
    n: complex
    z: complex
    eps_eff: complex
    mu_eff: complex
    branch_index: int
    flagged: bool = False


def _impedance(sample):
    num = (1.0 + sample.s11) ** 2 - sample.s21 ** 2
    den = (1.0 - sample.s11) ** 2 - sample.s21 ** 2
    if abs(den) < _DEGENERATE_TOL:
        raise RetrievalError("degenerate sample: impedance denominator vanishes")
    z = np.sqrt(num / den)
    if z.real < 0:
        z = -z
    return z


def _propagation_term(sample, z):
    gamma = (z - 1.0) / (z + 1.0)
    return sample.s21 / (1.0 - sample.s11 * gamma)


def _index(sample, z, branch_index):
    # X = exp(-j n k0 L); unwrap with the requested 2*pi branch
    x = _propagation_term(sample, z)
    k0l = 2.0 * np.pi * sample.frequency / CONST.c0 * sample.thickness
    log_x = np.log(x)  # principal: log|X| + j arg X
    return (-log_x.imag + 2.0 * np.pi * branch_index + 1j * log_x.real) / k0l


def retrieve(sample: TwoPortSample, branch_index: int = 0) -> RetrievedParams:
    """Single-point retrieval at a fixed phase branch."""
    if abs(sample.s21) < _OPAQUE_TOL:
        raise RetrievalError("opaque slab: |S21| below 1e-12, two-port "
                             "retrieval undefined")
    z = _impedance(sample)
    n = _index(sample, z, branch_index)
    return RetrievedParams(n=complex(n), z=complex(z),
                           eps_eff=complex(n / z), mu_eff=complex(n * z),
                           branch_index=int(branch_index))


def _initial_branch(sample, z, max_branch=60):
    """Lowest-|n| branch consistent with Im n <= 0 (small tolerance)."""
    best = None
    for m in range(-max_branch, max_branch + 1):
        n = _index(sample, z, m)
        if n.imag > 1e-6:
            continue
        if best is None or abs(n) < abs(best[1]):
            best = (m, n)
    if best is None:
        # fall back to the plain lowest-|n| branch
        candidates = [(m, _index(sample, z, m))
                      for m in range(-max_branch, max_branch + 1)]
        best = min(candidates, key=lambda item: abs(item[1]))
    return best


def retrieve_dispersion(samples) -> list:
    """Branch-tracked retrieval over a frequency-ordered sweep.

    The branch is fixed at the lowest frequency, then propagated by
    continuity (minimal |delta n| between neighbors). Points where every
    branch jumps by more than pi/2 in n*k0*L phase are flagged and the
    sweep continues.
    """
    samples = list(samples)
    if any(b.frequency <= a.frequency for a, b in zip(samples, samples[1:])):
        raise ValueError("samples must be strictly ordered by frequency")
    results = []
    prev_n = None
    prev_m = 0
    for i, sample in enumerate(samples):
        if abs(sample.s21) < _OPAQUE_TOL:
            raise RetrievalError(
                f"opaque slab at {sample.frequency:.6e} Hz")
        z = _impedance(sample)
        if i == 0:
            m, n = _initial_branch(sample, z)
            flagged = False
        else:
            candidates = [(mm, _index(sample, z, mm))
                          for mm in range(prev_m - 3, prev_m + 4)]
            m, n = min(candidates, key=lambda item: abs(item[1] - prev_n))
            k0l = 2.0 * np.pi * sample.frequency / CONST.c0 * sample.thickness
            phase_jump = min(abs((nn - prev_n).real) * k0l
                             for _, nn in candidates)
            flagged = phase_jump > np.pi / 2.0
        results.append(RetrievedParams(n=complex(n), z=complex(z),
                                       eps_eff=complex(n / z),
                                       mu_eff=complex(n * z),
                                       branch_index=int(m), flagged=flagged))
        prev_n, prev_m = n, m
    return results


SAMPLE_COLUMNS = ["f_Hz", "reS11", "imS11", "reS21", "imS21", "L_m"]
PARAM_COLUMNS = ["f_Hz", "re_n", "im_n", "re_z", "im_z",
                 "re_eps", "im_eps", "re_mu", "im_mu", "branch"]


def read_samples_csv(path) -> list:
    samples = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        missing = [c for c in SAMPLE_COLUMNS if c not in (reader.fieldnames or [])]
        if missing:
            raise RetrievalError(f"S-parameter CSV is missing columns: {missing}")
        for row in reader:
            samples.append(TwoPortSample(
                frequency=float(row["f_Hz"]),
                s11=float(row["reS11"]) + 1j * float(row["imS11"]),
                s21=float(row["reS21"]) + 1j * float(row["imS21"]),
                thickness=float(row["L_m"])))
    return samples


def write_params_csv(path, frequencies, params) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(PARAM_COLUMNS)
        for f, p in zip(frequencies, params):
            writer.writerow([f"{f:.16e}",
                             f"{p.n.real:.16e}", f"{p.n.imag:.16e}",
                             f"{p.z.real:.16e}", f"{p.z.imag:.16e}",
                             f"{p.eps_eff.real:.16e}", f"{p.eps_eff.imag:.16e}",
                             f"{p.mu_eff.real:.16e}", f"{p.mu_eff.imag:.16e}",
                             str(p.branch_index)])
