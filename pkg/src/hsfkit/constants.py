"""CODATA physical constants used throughout the toolkit."""

from dataclasses import dataclass

import numpy as np
import scipy.constants as sc


@dataclass(frozen=True)
class PhysicalConstants:
    e: float = sc.e              # elementary charge (C)
    k_B: float = sc.k            # Boltzmann constant (J/K)
    hbar: float = sc.hbar        # reduced Planck constant (J s)
    eps0: float = sc.epsilon_0   # vacuum permittivity (F/m)
    mu0: float = sc.mu_0         # vacuum permeability (H/m)
    c0: float = sc.c             # vacuum light speed (m/s)
    Z0: float = np.sqrt(sc.mu_0 / sc.epsilon_0)  # free-space impedance (Ohm)


CONST = PhysicalConstants()

# 1 eV in joules; chemical potentials are accepted in eV at all interfaces
# and stored in SI internally.
EV = sc.e


def ev_to_joule(value_ev: float) -> float:
    return value_ev * EV


def joule_to_ev(value_j: float) -> float:
    return value_j / EV
