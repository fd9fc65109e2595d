"""Run configuration: JSON loading, validation, and persistence.

Physical quantities are SI except mu_c_eV and tau_ps, which follow the
units the device parameters are usually quoted in and are converted on
load. Unknown keys are rejected by name.
"""

import json
from dataclasses import dataclass, field

from .errors import ConfigError
from .graphene import GrapheneState
from .homogenization import HomogenizationModel, StackMaterials, UnitCellGeometry

_SCHEMA = {
    "graphene": {
        "mu_c_eV": (float, 0.5),
        "tau_ps": (float, 1.0),
        "T_K": (float, 300.0),
        "t_g_m": (float, 0.335e-9),
        "v_f": (float, 1.0e6),
    },
    "geometry": {
        "P": (float, 14e-6),
        "d": (float, 8.5e-6),
        "h": (float, 9e-6),
        "t_ox": (float, 50e-9),
        "t_poly": (float, 50e-9),
    },
    "materials": {
        "eps_Si": (float, 11.7),
        "eps_SiO2": (float, 3.9),
        "eps_poly": (float, 11.7),
    },
    "model": {
        "kappa": (float, 1.0),
        "calibrated": (bool, False),
        "comment": (str, ""),
    },
    "sweep": {
        "f_lo_Hz": (float, 1.0e12),
        "f_hi_Hz": (float, 4.0e12),
        "n_points": (int, 401),
        "mu_lo_eV": (float, 0.5),
        "mu_hi_eV": (float, 0.65),
        "n_mu": (int, 7),
        "band_lo_Hz": (float, 1.5e12),
        "band_hi_Hz": (float, 4.5e12),
    },
}


@dataclass
class RunConfig:
    values: dict
    path: str | None = None

    def section(self, name):
        return self.values[name]

    def graphene_state(self) -> GrapheneState:
        g = self.values["graphene"]
        return GrapheneState.from_ev(g["mu_c_eV"], g["tau_ps"] * 1e-12,
                                     temperature=g["T_K"], t_g=g["t_g_m"],
                                     v_f=g["v_f"])

    def geometry(self) -> UnitCellGeometry:
        g = self.values["geometry"]
        return UnitCellGeometry(period=g["P"], patch=g["d"], substrate=g["h"],
                                spacer=g["t_ox"], gate=g["t_poly"])

    def materials(self) -> StackMaterials:
        m = self.values["materials"]
        return StackMaterials(eps_si=m["eps_Si"], eps_sio2=m["eps_SiO2"],
                              eps_poly=m["eps_poly"])

    def model(self) -> HomogenizationModel:
        m = self.values["model"]
        return HomogenizationModel(kappa=m["kappa"],
                                   calibrated=m["calibrated"])


def _defaults() -> dict:
    return {section: {key: default for key, (_, default) in keys.items()}
            for section, keys in _SCHEMA.items()}


def _merge(document) -> dict:
    if not isinstance(document, dict):
        raise ConfigError("config root must be a JSON object")
    values = _defaults()
    for section, content in document.items():
        if section not in _SCHEMA:
            raise ConfigError(f"unknown config key: {section!r}")
        if not isinstance(content, dict):
            raise ConfigError(f"config section {section!r} must be an object")
        for key, value in content.items():
            if key not in _SCHEMA[section]:
                raise ConfigError(f"unknown config key: {section!r}.{key!r}")
            expected, _ = _SCHEMA[section][key]
            if expected is float:
                if isinstance(value, bool) or not isinstance(value, (int, float)):
                    raise ConfigError(
                        f"config key {section!r}.{key!r} must be a number")
                value = float(value)
            elif not isinstance(value, expected):
                raise ConfigError(
                    f"config key {section!r}.{key!r} must be "
                    f"{expected.__name__}")
            values[section][key] = value
    return values


def _validate(config: RunConfig) -> None:
    try:
        config.graphene_state()
        config.geometry()
        config.materials()
        config.model()
    except ValueError as err:
        raise ConfigError(str(err)) from err
    sweep = config.values["sweep"]
    if sweep["f_lo_Hz"] >= sweep["f_hi_Hz"]:
        raise ConfigError("sweep.f_lo_Hz must be < sweep.f_hi_Hz")
    if sweep["band_lo_Hz"] >= sweep["band_hi_Hz"]:
        raise ConfigError("sweep.band_lo_Hz must be < sweep.band_hi_Hz")
    if sweep["n_points"] < 2 or sweep["n_mu"] < 2:
        raise ConfigError("sweep.n_points and sweep.n_mu must be >= 2")
    if not 0 < sweep["mu_lo_eV"] < sweep["mu_hi_eV"]:
        raise ConfigError("sweep requires 0 < mu_lo_eV < mu_hi_eV")


def default_config() -> RunConfig:
    config = RunConfig(values=_defaults())
    _validate(config)
    return config


def load_config(path) -> RunConfig:
    try:
        with open(path) as fh:
            document = json.load(fh)
    except OSError as err:
        raise ConfigError(f"cannot read config {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise ConfigError(f"config {path} is not valid JSON: {err}") from err
    config = RunConfig(values=_merge(document), path=str(path))
    _validate(config)
    return config


def save_config(config: RunConfig, path) -> None:
    with open(path, "w") as fh:
        json.dump(config.values, fh, indent=2, sort_keys=True)
        fh.write("\n")
