"""Figure rendering for the CLI report path (PNG files next to the CSVs)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

THZ = 1e12


def save_conductivity(path, frequencies, sigma_intra, sigma_kubo=None):
    f_thz = np.asarray(frequencies) / THZ
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(f_thz, np.real(sigma_intra) * 1e3, label="Re, intraband")
    ax.plot(f_thz, np.imag(sigma_intra) * 1e3, label="Im, intraband")
    if sigma_kubo is not None:
        ax.plot(f_thz, np.real(sigma_kubo) * 1e3, "--", label="Re, full Kubo")
        ax.plot(f_thz, np.imag(sigma_kubo) * 1e3, "--", label="Im, full Kubo")
    ax.set_xlabel("frequency (THz)")
    ax.set_ylabel("sheet conductivity (mS)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_spectrum(path, points):
    f_thz = np.array([p.frequency for p in points]) / THZ
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    ax1.plot(f_thz, [abs(p.r) ** 2 for p in points], label="reflectance")
    ax1.plot(f_thz, [p.absorptance for p in points], label="absorptance")
    ax1.set_ylabel("power fraction")
    ax1.set_ylim(-0.02, 1.02)
    ax1.legend()
    ax2.plot(f_thz, [p.zin_norm.real for p in points], label="Re Zin/Z0")
    ax2.plot(f_thz, [p.zin_norm.imag for p in points], label="Im Zin/Z0")
    ax2.set_xlabel("frequency (THz)")
    ax2.set_ylabel("normalized input impedance")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_reconfiguration(path, points):
    mu = [p.mu_c_ev for p in points]
    fig, ax1 = plt.subplots(figsize=(6, 4))
    ax1.plot(mu, [p.f_res / THZ for p in points], "o-", color="tab:blue")
    ax1.set_xlabel("chemical potential (eV)")
    ax1.set_ylabel("resonance frequency (THz)", color="tab:blue")
    ax2 = ax1.twinx()
    ax2.plot(mu, [p.a_peak for p in points], "s--", color="tab:red")
    ax2.set_ylabel("peak absorptance", color="tab:red")
    ax2.set_ylim(0, 1.05)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_retrieval(path, frequencies, params):
    f_thz = np.asarray(frequencies) / THZ
    fig, axes = plt.subplots(2, 1, figsize=(6, 6), sharex=True)
    axes[0].plot(f_thz, [p.eps_eff.real for p in params], label="Re eps_eff")
    axes[0].plot(f_thz, [p.eps_eff.imag for p in params], label="Im eps_eff")
    axes[0].set_ylabel("effective permittivity")
    axes[0].legend()
    axes[1].plot(f_thz, [p.mu_eff.real for p in params], label="Re mu_eff")
    axes[1].plot(f_thz, [p.mu_eff.imag for p in params], label="Im mu_eff")
    axes[1].set_xlabel("frequency (THz)")
    axes[1].set_ylabel("effective permeability")
    axes[1].legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
