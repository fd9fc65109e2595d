"""Command-line front end: sweep orchestration and CSV/figure emission."""

import argparse
import contextlib
import datetime
import sys

import numpy as np

from . import plotting
from .config import default_config, load_config, save_config
from .errors import (CalibrationError, ConfigError, NoResonanceError,
                     QuadratureError, RetrievalError)
from .graphene import bias_field, sigma_full_kubo, sigma_intraband
from .homogenization import build_hsf_stack, calibrate
from .reconfig import sweep_mu
from .retrieval import (PARAM_COLUMNS, read_samples_csv, retrieve_dispersion,
                        write_params_csv)
from .supercell import design_supercell, table2
from .tmm import Excitation, solve

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3
EXIT_CALIBRATION = 4


def _fmt(x) -> str:
    return f"{x:.16e}"


@contextlib.contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _write_csv(path, header, rows):
    with _open_out(path) as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _get_config(args):
    if getattr(args, "config", None):
        return load_config(args.config)
    return default_config()


def cmd_conductivity(args) -> int:
    config = _get_config(args)
    state = config.graphene_state()
    sweep = config.section("sweep")
    f_lo = args.f_lo if args.f_lo is not None else sweep["f_lo_Hz"]
    f_hi = args.f_hi if args.f_hi is not None else sweep["f_hi_Hz"]
    n = args.n if args.n is not None else sweep["n_points"]
    if f_lo <= 0 or f_lo >= f_hi or n < 2:
        raise ConfigError("need 0 < f_lo < f_hi and n >= 2")
    frequencies = np.linspace(f_lo, f_hi, n)
    intra = [sigma_intraband(float(f), state).value for f in frequencies]
    header = ["f_Hz", "re_sigma_S", "im_sigma_S"]
    columns = [frequencies, np.real(intra), np.imag(intra)]
    kubo = None
    if args.full_kubo:
        kubo = [sigma_full_kubo(float(f), state).value for f in frequencies]
        header += ["re_sigma_kubo_S", "im_sigma_kubo_S"]
        columns += [np.real(kubo), np.imag(kubo)]
    rows = ([_fmt(c[i]) for c in columns] for i in range(len(frequencies)))
    _write_csv(args.out, header, rows)
    if args.fig:
        plotting.save_conductivity(args.fig, frequencies, intra, kubo)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    config = _get_config(args)
    state = config.graphene_state()
    geometry = config.geometry()
    materials = config.materials()
    model = config.model()
    if not model.calibrated:
        print("warning: uncalibrated model (kappa={:g}); run the calibrate "
              "command first for a pinned resonance".format(model.kappa),
              file=sys.stderr)
    sweep = config.section("sweep")
    f_lo = args.f_lo if args.f_lo is not None else sweep["f_lo_Hz"]
    f_hi = args.f_hi if args.f_hi is not None else sweep["f_hi_Hz"]
    n = args.n if args.n is not None else sweep["n_points"]
    if f_lo <= 0 or f_lo >= f_hi or n < 2:
        raise ConfigError("need 0 < f_lo < f_hi and n >= 2")
    points = []
    for f in np.linspace(f_lo, f_hi, n):
        stack = build_hsf_stack(geometry, state, model, float(f), materials)
        points.append(solve(stack, Excitation(frequency=float(f),
                                              theta_deg=args.theta,
                                              polarization=args.pol)))
    rows = ([_fmt(p.frequency), _fmt(p.r.real), _fmt(p.r.imag),
             _fmt(p.absorptance), _fmt(p.zin_norm.real),
             _fmt(p.zin_norm.imag)] for p in points)
    _write_csv(args.out, ["f_Hz", "reR", "imR", "A", "reZin", "imZin"], rows)
    if args.fig:
        plotting.save_spectrum(args.fig, points)
    return EXIT_OK


def cmd_calibrate(args) -> int:
    if not args.config:
        raise ConfigError("calibrate needs --config: the resulting kappa is "
                          "persisted into the config file")
    config = load_config(args.config)
    model = calibrate(config.geometry(), config.graphene_state(),
                      target_f=args.target_f, materials=config.materials())
    config.values["model"]["kappa"] = model.kappa
    config.values["model"]["calibrated"] = True
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    config.values["model"]["comment"] = (
        f"kappa calibrated to {args.target_f:.6e} Hz at {stamp}")
    save_config(config, args.config)
    print(f"kappa = {model.kappa:.12g} written to {args.config}",
          file=sys.stderr)
    return EXIT_OK


_ANGLE_HEADER = ["theta_i_deg", "N_c", "theta_r_deg_or_EVANESCENT",
                 "sin_theta_r"]


def _angle_row(theta_i, n_cells, outcome):
    angle = (_fmt(outcome.theta_r_deg) if outcome.propagating
             else "EVANESCENT")
    return [_fmt(theta_i), str(n_cells), angle, _fmt(outcome.sin_theta_r)]


def cmd_design(args) -> int:
    config = _get_config(args)
    pitch = config.section("geometry")["d"]
    try:
        n_cells, outcome = design_supercell(args.theta_i, args.theta_r,
                                            args.wavelength, pitch)
    except ValueError as err:
        raise ConfigError(str(err)) from err
    _write_csv(args.out, _ANGLE_HEADER,
               [_angle_row(args.theta_i, n_cells, outcome)])
    return EXIT_OK


def cmd_table2(args) -> int:
    config = _get_config(args)
    pitch = config.section("geometry")["d"]
    rows = table2(wavelength=args.wavelength, pitch=pitch)
    _write_csv(args.out, _ANGLE_HEADER,
               [_angle_row(t, n, o) for t, n, o in rows])
    return EXIT_OK


def cmd_reconfigure(args) -> int:
    config = _get_config(args)
    sweep = config.section("sweep")
    mu_lo = args.mu_lo if args.mu_lo is not None else sweep["mu_lo_eV"]
    mu_hi = args.mu_hi if args.mu_hi is not None else sweep["mu_hi_eV"]
    n = args.n if args.n is not None else sweep["n_mu"]
    band = (sweep["band_lo_Hz"], sweep["band_hi_Hz"])
    try:
        points = sweep_mu(config.geometry(), config.model(),
                          config.graphene_state(), mu_lo, mu_hi, n, band,
                          materials=config.materials())
    except ValueError as err:
        raise ConfigError(str(err)) from err
    rows = ([_fmt(p.mu_c_ev), _fmt(p.f_res), _fmt(p.a_peak), _fmt(p.e0)]
            for p in points)
    _write_csv(args.out, ["mu_c_eV", "f_res_Hz", "A_peak", "E0_V_per_m"], rows)
    if args.fig:
        plotting.save_reconfiguration(args.fig, points)
    return EXIT_OK


def cmd_retrieve(args) -> int:
    samples = read_samples_csv(args.input)
    if not samples:
        raise RetrievalError(f"no samples in {args.input}")
    params = retrieve_dispersion(samples)
    frequencies = [s.frequency for s in samples]
    if args.out is None or args.out == "-":
        sys.stdout.write(",".join(PARAM_COLUMNS) + "\n")
        for f, p in zip(frequencies, params):
            sys.stdout.write(",".join([
                _fmt(f), _fmt(p.n.real), _fmt(p.n.imag), _fmt(p.z.real),
                _fmt(p.z.imag), _fmt(p.eps_eff.real), _fmt(p.eps_eff.imag),
                _fmt(p.mu_eff.real), _fmt(p.mu_eff.imag),
                str(p.branch_index)]) + "\n")
    else:
        write_params_csv(args.out, frequencies, params)
    flagged = sum(1 for p in params if p.flagged)
    if flagged:
        print(f"warning: {flagged} flagged point(s) with ambiguous branch "
              "continuity", file=sys.stderr)
    if args.fig:
        plotting.save_retrieval(args.fig, frequencies, params)
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hsfkit",
        description="Gate-tunable graphene THz hypersurface absorber toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fig=True):
        p.add_argument("--config", help="JSON config file")
        p.add_argument("--out", help="output CSV path (default: stdout)")
        if fig:
            p.add_argument("--fig", help="also render a PNG figure here")

    p = sub.add_parser("conductivity", help="graphene sheet conductivity sweep")
    common(p)
    p.add_argument("--f-lo", type=float, help="sweep start (Hz)")
    p.add_argument("--f-hi", type=float, help="sweep stop (Hz)")
    p.add_argument("--n", type=int, help="number of points")
    p.add_argument("--full-kubo", action="store_true",
                   help="add full-Kubo columns (quadrature)")
    p.set_defaults(func=cmd_conductivity)

    p = sub.add_parser("spectrum", help="absorber reflection/absorption sweep")
    common(p)
    p.add_argument("--f-lo", type=float)
    p.add_argument("--f-hi", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--theta", type=float, default=0.0,
                   help="incidence angle (deg)")
    p.add_argument("--pol", choices=["TE", "TM"], default="TE")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("calibrate",
                       help="fit kappa so the resonance lands on target")
    common(p, fig=False)
    p.add_argument("--target-f", type=float, default=2.5e12,
                   help="target resonance (Hz)")
    p.set_defaults(func=cmd_calibrate)

    p = sub.add_parser("design", help="size a supercell for a target angle")
    common(p, fig=False)
    p.add_argument("--theta-i", type=float, required=True)
    p.add_argument("--theta-r", type=float, required=True)
    p.add_argument("--wavelength", type=float, default=120e-6)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("table2", help="reference anomalous-reflection table")
    common(p, fig=False)
    p.add_argument("--wavelength", type=float, default=120e-6)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("reconfigure", help="chemical-potential sweep")
    common(p)
    p.add_argument("--mu-lo", type=float, help="eV")
    p.add_argument("--mu-hi", type=float, help="eV")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_reconfigure)

    p = sub.add_parser("retrieve",
                       help="effective parameters from S-parameter CSV")
    common(p)
    p.add_argument("--input", required=True, help="S-parameter CSV")
    p.set_defaults(func=cmd_retrieve)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except CalibrationError as err:
        print(f"calibration error: {err}", file=sys.stderr)
        return EXIT_CALIBRATION
    except (QuadratureError, NoResonanceError, RetrievalError) as err:
        print(f"numerical error: {err}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
