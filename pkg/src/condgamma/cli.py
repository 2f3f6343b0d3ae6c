"""Batch front end: INI-style configs in, flat reports and CSV out.

Commands: tf | eta | minimize | decompose | gamma | recovery | symmetry.
Each command reads its own section of the config file, runs the
corresponding experiment, and writes key=value report files, field
dumps, and CSV tables into the output directory.  Runs are
deterministic for a fixed config and seed; reruns produce byte-identical
CSV bodies.  Exit code is 0 iff every requested run converged.
"""

from __future__ import annotations

import argparse
import configparser
import math
import os
import sys
import traceback
from pathlib import Path

import numpy as np

from .grid import GridSpec, dump_field, integrate, integrate_values, load_field
from .ground_state import Params, check_eta_properties, rayleigh_lambda, solve_eta
from .sharp_interface import (
    Annuli,
    Circle,
    Diameter,
    DiskSector,
    build_recovery,
    cell_oracle,
    clip_to_disk,
    extract_interface,
    gamma_trend,
    limit_energy,
    spec_weighted_length,
)
from .spin import decompose, from_spin, interface_min_v
from .thomas_fermi import TF_RADIUS, mass_radius, tf_field, tf_lambda
from .two_component import (
    DiskAnnulus,
    FromFiles,
    HalfDisk,
    Random,
    minimize_two,
    overlap,
)


def _fmt(x) -> str:
    if isinstance(x, (float, np.floating)):
        return "%.17g" % x
    return str(x)


def write_report(path: Path, items: dict) -> None:
    lines = [f"{k} = {_fmt(v)}" for k, v in items.items()]
    path.write_text("\n".join(lines) + "\n")


def write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    lines += [",".join(_fmt(x) for x in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")


def _params(sec: configparser.SectionProxy, seed_override: int | None) -> Params:
    eps = sec.getfloat("eps")
    if sec.get("g") is not None:
        g = sec.getfloat("g")
    else:
        g = sec.getfloat("g_eps2") / eps**2
    grid = GridSpec(sec.getint("n"), sec.getfloat("half_width", 1.4))
    seed = seed_override if seed_override is not None else sec.getint("seed", 0)
    return Params(
        eps=eps,
        g=g,
        alpha1=sec.getfloat("alpha1", 0.5),
        grid=grid,
        tol=sec.getfloat("tol", 1e-8),
        max_iters=sec.getint("max_iters", 200_000),
        seed=seed,
    )


def _init_from(name: str, sec, p: Params):
    name = name.strip().lower()
    if name == "halfdisk":
        return HalfDisk()
    if name == "diskannulus":
        r = sec.getfloat("radius") if sec.get("radius") else mass_radius(p.alpha1)
        return DiskAnnulus(r)
    if name == "random":
        return Random(p.seed)
    if name == "files":
        return FromFiles((sec.get("u1"), sec.get("u2")))
    raise ValueError(f"unknown init '{name}'")


def _spec_from(sec, p: Params):
    kind = sec.get("spec", "diameter").strip().lower()
    if kind == "diameter":
        return Diameter(sec.getfloat("angle", 0.5 * math.pi))
    if kind == "circle":
        r = sec.getfloat("radius") if sec.get("radius") else mass_radius(p.alpha1)
        return Circle(r)
    if kind == "annuli":
        return Annuli(tuple(float(x) for x in sec.get("radii").split(",")))
    if kind == "sectors":
        fr = sec.get("fractions", f"{p.alpha1},{p.alpha2}")
        return DiskSector(tuple(float(x) for x in fr.split(",")))
    raise ValueError(f"unknown interface spec '{kind}'")


def cmd_tf(cfg, out: Path, seed: int | None) -> None:
    n = cfg["tf"].getint("n", 512) if cfg.has_section("tf") else 512
    grid = GridSpec(n, 1.4)
    lam = tf_lambda()
    rho = tf_field(grid)
    write_report(
        out / "tf.txt",
        {
            "lambda": lam,
            "rho_center": lam * lam,
            "mass": integrate(rho),
            "int_rho_sq": integrate_values(grid, rho.values**2),
            "int_rho_sq_analytic": 2.0 * lam * lam / 3.0,
            "diameter_weighted_length": spec_weighted_length(Diameter()),
        },
    )


def cmd_eta(cfg, out: Path, seed: int | None) -> None:
    p = _params(cfg["eta"], seed)
    gs = solve_eta(p)
    rep = check_eta_properties(gs)
    dump_field(gs.eta, out / "eta.txt")
    write_report(
        out / "eta_report.txt",
        {
            "eps": p.eps,
            "g": p.g,
            "energy": gs.energy,
            "lambda_eps": gs.lambda_eps,
            "lambda_rayleigh": rayleigh_lambda(gs),
            "residual": gs.residual,
            "iterations": gs.iterations,
            "mass": rep.mass,
            "monotonicity_violations": rep.monotonicity_violations,
            "dev_sqrt_rho_window": rep.dev_sqrt_rho_window,
            "dev_tf_core": rep.dev_tf_core,
            "tail_max": rep.tail_max,
            "dist_lambda": rep.dist_lambda,
            "dist_lambda_sq": rep.dist_lambda_sq,
        },
    )


def cmd_minimize(cfg, out: Path, seed: int | None) -> None:
    sec = cfg["minimize"]
    p = _params(sec, seed)
    gs = solve_eta(p)
    names = [s.strip() for s in sec.get("inits", "halfdisk,diskannulus").split(",")]
    for name in names:
        pair = minimize_two(p, _init_from(name, sec, p))
        bd = decompose(pair.u1, pair.u2, gs, p)
        dump_field(pair.u1, out / f"u1_{name}.txt")
        dump_field(pair.u2, out / f"u2_{name}.txt")
        write_report(
            out / f"minimize_{name}.txt",
            {
                "init": name,
                "energy": pair.energy,
                "residual": pair.residual,
                "iterations": pair.iterations,
                "mass1": pair.masses[0],
                "mass2": pair.masses[1],
                "overlap": overlap(pair),
                "scaled_excess": bd.scaled_excess,
                "f_eps": bd.f_eps,
                "g_eps": bd.g_eps,
                "split_residual": bd.split_residual,
            },
        )


def cmd_decompose(cfg, out: Path, seed: int | None) -> None:
    sec = cfg["decompose"]
    p = _params(sec, seed)
    u1 = load_field(sec.get("u1"))
    u2 = load_field(sec.get("u2"))
    gs = solve_eta(p)
    bd = decompose(u1, u2, gs, p)
    write_report(
        out / "decompose.txt",
        {
            "total": bd.total,
            "base": bd.base,
            "f_eps": bd.f_eps,
            "g_eps": bd.g_eps,
            "scaled_excess": bd.scaled_excess,
            "split_residual": bd.split_residual,
        },
    )


def cmd_gamma(cfg, out: Path, seed: int | None) -> None:
    sec = cfg["gamma"]
    eps_list = [float(x) for x in sec.get("eps_list").split(",")]
    n_cap = sec.getint("n_cap", 256)
    p0 = Params(
        eps=eps_list[-1],
        g=sec.getfloat("g_eps2", 40.0) / eps_list[-1] ** 2,
        alpha1=sec.getfloat("alpha1", 0.5),
        grid=GridSpec(n_cap, sec.getfloat("half_width", 1.4)),
        tol=sec.getfloat("tol", 1e-8),
        max_iters=sec.getint("max_iters", 200_000),
        seed=seed if seed is not None else sec.getint("seed", 0),
    )
    mode = sec.get("mode", "minimize").strip().lower()
    init = _init_from(sec.get("init", "halfdisk"), sec, p0)
    spec = _spec_from(sec, p0) if mode == "recovery" else None
    rep = gamma_trend(init, eps_list, p0, mode=mode, recovery_spec=spec)
    write_csv(
        out / f"gamma_{mode}.csv",
        ["eps", "g", "excess", "prediction", "ratio", "interface_length", "min_v"],
        [
            [r.eps, r.g, r.excess, r.prediction, r.ratio, r.interface_length, r.min_v]
            for r in rep.rows
        ],
    )
    write_report(out / f"gamma_{mode}_report.txt", {"sigma_eff": rep.sigma_eff, "mode": rep.mode})


def cmd_recovery(cfg, out: Path, seed: int | None) -> None:
    sec = cfg["recovery"]
    p = _params(sec, seed)
    spec = _spec_from(sec, p)
    gs = solve_eta(p)
    T = sec.getfloat("T") if sec.get("T") else None
    sp = build_recovery(spec, p, T=T, gs=gs)
    u1, u2 = from_spin(sp, gs)
    bd = decompose(u1, u2, gs, p)
    sigma = cell_oracle(4000, 20.0).sigma_eff
    curve = clip_to_disk(extract_interface(sp.phi), 0.9 * TF_RADIUS)
    mass1 = integrate_values(p.grid, u1.values**2)
    mass2 = integrate_values(p.grid, u2.values**2)
    dump_field(sp.v, out / "recovery_v.txt")
    dump_field(sp.phi, out / "recovery_phi.txt")
    dump_field(u1, out / "recovery_u1.txt")
    dump_field(u2, out / "recovery_u2.txt")
    write_report(
        out / "recovery.txt",
        {
            "eps": p.eps,
            "g_eps2": p.g * p.eps**2,
            "m_eps": (p.g * p.eps**2) ** -0.25,
            "mass1": mass1,
            "mass2": mass2,
            "eps_f": p.eps * bd.f_eps,
            "eps_g": p.eps * bd.g_eps,
            "scaled_excess": bd.scaled_excess,
            "min_v_grid": float(np.min(sp.v.values)),
            "min_v_interface": interface_min_v(sp, curve, 2.0 * p.grid.h),
            "sigma_eff": sigma,
            "limit_prediction": limit_energy(spec, sigma),
        },
    )


def cmd_symmetry(cfg, out: Path, seed: int | None) -> None:
    from .symmetry import best_radial, delta0, f_alpha, sector_energy

    if not cfg.has_section("symmetry"):
        cfg.add_section("symmetry")
    sec = cfg["symmetry"]
    a_min = sec.getfloat("alpha_min", 0.16)
    a_max = sec.getfloat("alpha_max", 0.84)
    count = sec.getint("alpha_count", 69)
    n_max = sec.getint("n_max", 3)
    steps = sec.getint("grid_steps", 200)
    rows = []
    for a in np.linspace(a_min, a_max, count):
        v = best_radial(round(float(a), 12), n_max, steps)
        rows.append(
            [
                v.alpha1,
                v.sector,
                v.radial_best,
                ";".join(_fmt(b) for b in v.radial_config.betas),
                "non-radial" if v.non_radial else "radial",
            ]
        )
    write_csv(
        out / "symmetry.csv",
        ["alpha1", "sector_energy", "best_radial", "best_config", "verdict"],
        rows,
    )
    d0 = delta0()
    write_report(
        out / "symmetry_report.txt",
        {
            "delta0": d0,
            "f_at_delta0": f_alpha(d0),
            "f_at_one_minus_delta0": f_alpha(1.0 - d0),
            "sector_energy": sector_energy(0.5),
        },
    )


_COMMANDS = {
    "tf": cmd_tf,
    "eta": cmd_eta,
    "minimize": cmd_minimize,
    "decompose": cmd_decompose,
    "gamma": cmd_gamma,
    "recovery": cmd_recovery,
    "symmetry": cmd_symmetry,
}


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="condgamma", description=__doc__)
    ap.add_argument("command", choices=sorted(_COMMANDS))
    ap.add_argument("--config", default=None, help="INI config with per-command sections")
    ap.add_argument("--out", default="condgamma_out", help="output directory")
    ap.add_argument("--threads", type=int, default=None, help="FFT worker threads")
    ap.add_argument("--seed", type=int, default=None, help="override config seed")
    args = ap.parse_args(argv)

    if args.threads is not None:
        os.environ["CONDGAMMA_THREADS"] = str(args.threads)

    cfg = configparser.ConfigParser()
    if args.config:
        if not cfg.read(args.config):
            print(f"cannot read config {args.config}", file=sys.stderr)
            return 2
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    failures = []
    try:
        _COMMANDS[args.command](cfg, out, args.seed)
    except Exception as exc:  # noqa: BLE001 - report and signal via exit code
        failures.append((args.command, exc))
        traceback.print_exc()

    if failures:
        print("failed runs:", file=sys.stderr)
        for name, exc in failures:
            print(f"  {name}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
