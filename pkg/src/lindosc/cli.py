"""Command-line front end.

One self-describing JSON config drives each run; ``--set key=value`` applies
dotted-path overrides.  Exit codes: 0 success, 1 usage/parse error, 2
physics-constraint error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, decomposition, dynamics, entropy, model, serialize, sieve, wigner
from .errors import (BoxTooSmall, BracketError, ConfigError, NotSPD, NotStable,
                     PositivityLost, SingularDiffusion, SingularSigma,
                     SingularSystem, UnphysicalState)

_USAGE_ERRORS = (ConfigError, BracketError, BoxTooSmall, KeyError, TypeError,
                 ValueError, IndexError, OSError)
_PHYSICS_ERRORS = (UnphysicalState, SingularDiffusion, NotSPD, SingularSigma)
_NUMERICAL_ERRORS = (PositivityLost, SingularSystem, NotStable)


def _load_config(path, overrides):
    try:
        with open(path) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for item in overrides or []:
        if "=" not in item:
            raise ConfigError(f"--set expects key=value, got {item!r}")
        key, _, raw = item.partition("=")
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        node = config
        parts = key.split(".")
        for part in parts[:-1]:
            node = node.setdefault(part, {})
        node[parts[-1]] = value
    return config


def _model_from_config(config):
    if "model" not in config:
        raise ConfigError("config is missing the 'model' section")
    return model.model_from_dict(config["model"])


def _state_from_config(config, hbar):
    spec = config.get("state", {})
    mean = np.asarray(spec.get("mean", [0.0, 0.0]), dtype=float)
    has_sigma = "sigma" in spec
    has_dec = all(k in spec for k in ("A", "aleph", "theta"))
    if has_sigma == has_dec:
        raise ConfigError(
            "state must carry exactly one of 'sigma' or ('A', 'aleph', 'theta')")
    if has_sigma:
        s = spec["sigma"]
        sigma = np.array([[float(s["S11"]), float(s["S12"])],
                          [float(s["S12"]), float(s["S22"])]])
    else:
        dec = decomposition.CovDecomposition(A=float(spec["A"]),
                                             aleph=float(spec["aleph"]),
                                             theta=float(spec["theta"]))
        sigma = decomposition.compose(dec, hbar)
    return dynamics.GaussianState(mean=mean, sigma=sigma)


def _emit(obj, path=None):
    obj = dict(obj)
    obj["version"] = __version__
    text = serialize.dumps(obj)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_validate(config):
    params = _model_from_config(config)
    report = model.validate(params)
    _emit(report.as_dict(), config.get("validate", {}).get("report_json"))
    return 0 if report.passed else 2


def _require_valid(params):
    report = model.validate(params)
    if not report.passed:
        raise UnphysicalState(
            f"model violates the diffusion positivity constraint (slack {report.slack})")
    return report


def cmd_evolve(config):
    params = _model_from_config(config)
    report = _require_valid(params)
    state = _state_from_config(config, params.hbar)
    spec = config.get("evolve", {})
    t_final = float(spec.get("t_final", 1.0))
    dt = float(spec.get("dt", 1e-3))
    sample_every = int(spec.get("sample_every", 1))
    if dt <= 0 or t_final < 0 or sample_every < 1:
        raise ConfigError("evolve requires dt > 0, t_final >= 0, sample_every >= 1")

    traj = dynamics.evolve(state, params, t_final, dt, sample_every)
    csv_path = spec.get("trajectory_csv")
    if csv_path:
        traj.to_csv(csv_path)

    summary = {
        "t_final": traj.t[-1],
        "final_area": traj.area[-1],
        "final_lin_entropy": traj.lin_entropy[-1],
        "final_entropy_rate": traj.entropy_rate[-1],
        "final_sigma": [[traj.sigma[-1, 0, 0], traj.sigma[-1, 0, 1]],
                        [traj.sigma[-1, 1, 0], traj.sigma[-1, 1, 1]]],
        "heisenberg_slack": dynamics.heisenberg_slack(traj.sigma[-1], params.hbar),
    }
    if report.hurwitz:
        stat = dynamics.stationary_covariance(traj.drift, traj.diffusion)
        summary["stationary_sigma"] = [[stat[0, 0], stat[0, 1]],
                                       [stat[1, 0], stat[1, 1]]]
        summary["stationary_distance"] = float(
            np.linalg.norm(traj.sigma[-1] - stat))
    _emit(summary, spec.get("summary_json"))
    return 0


def _diffusion_decomposition(params):
    scaled = model.build_scaled_diffusion(params)
    return decomposition.decompose_diffusion(scaled, params.hbar)


def cmd_sieve(config):
    params = _model_from_config(config)
    _require_valid(params)
    diff = _diffusion_decomposition(params)
    area = (entropy.area(_state_from_config(config, params.hbar).sigma, params.hbar)
            if "state" in config else 1.0)
    spec = config.get("sieve", {})
    n_aleph = int(spec.get("n_aleph", 401))
    n_theta = int(spec.get("n_theta", 361))
    lo = float(spec.get("aleph_min", diff.d / 4.0))
    hi = float(spec.get("aleph_max", diff.d * 4.0))
    result = sieve.run_sieve(area, params.lam, diff,
                             n_aleph=n_aleph, n_theta=n_theta,
                             aleph_range=(lo, hi))
    _emit({
        "aleph_star": result.aleph_star,
        "theta_star": result.theta_star,
        "min_rate": result.min_rate,
        "degenerate_angle": result.degenerate_angle,
        "area": area,
        "grid": {
            "aleph": result.grid_aleph,
            "theta": result.grid_theta,
            "rate": result.grid_rate,
            **result.grid_spec,
        },
        "delta_aleph": abs(result.grid_aleph - result.aleph_star),
        "delta_theta": abs(result.grid_theta - result.theta_star),
        "delta_rate": abs(result.grid_rate - result.min_rate),
    }, spec.get("summary_json"))
    return 0


def cmd_sweep(config):
    params = _model_from_config(config)
    _require_valid(params)
    diff = _diffusion_decomposition(params)
    spec = config.get("sweep")
    if not spec:
        raise ConfigError("config is missing the 'sweep' section")
    area = (entropy.area(_state_from_config(config, params.hbar).sigma, params.hbar)
            if "state" in config else 1.0)
    table = sieve.rate_landscape(
        area, params.lam, diff,
        n_aleph=int(spec["n_aleph"]), n_theta=int(spec["n_theta"]),
        aleph_range=(float(spec["aleph_min"]), float(spec["aleph_max"])))
    serialize.write_csv(spec["landscape_csv"], "aleph,theta,rate", table)
    return 0


def cmd_wigner(config):
    params = _model_from_config(config)
    _require_valid(params)
    state = _state_from_config(config, params.hbar)
    spec = config.get("wigner", {})
    t_index = int(spec.get("t_index", 0))

    if t_index == 0:
        t_value = 0.0
    else:
        evo = config.get("evolve", {})
        traj = dynamics.evolve(state, params,
                               float(evo.get("t_final", 1.0)),
                               float(evo.get("dt", 1e-3)),
                               int(evo.get("sample_every", 1)))
        if not 0 <= t_index < len(traj):
            raise ConfigError(
                f"t_index {t_index} out of range for {len(traj)} samples")
        state = traj.state(t_index)
        t_value = float(traj.t[t_index])

    quad = wigner.QuadratureSpec(n_sigma=float(spec.get("n_sigma", 8.0)),
                                 n_points=int(spec.get("n_points", 201)))
    x1, x2, f = wigner.wigner_grid(state, quad)
    rows = ((x1[i], x2[j], f[i, j])
            for i in range(len(x1)) for j in range(len(x2)))
    serialize.write_csv(spec["grid_csv"], "x1,x2,f", rows)
    sidecar = spec.get("sidecar_json")
    if sidecar:
        _emit({
            "t": t_value,
            "n_sigma": quad.n_sigma,
            "n_points": quad.n_points,
            "x1_min": x1[0], "x1_max": x1[-1],
            "x2_min": x2[0], "x2_max": x2[-1],
        }, sidecar)
    return 0


_COMMANDS = {
    "validate": cmd_validate,
    "evolve": cmd_evolve,
    "sieve": cmd_sieve,
    "sweep": cmd_sweep,
    "wigner": cmd_wigner,
}


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="lindosc",
        description="Gaussian damped-oscillator dynamics and entropy-rate sieve")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True)
        p.add_argument("--set", action="append", default=[], dest="overrides",
                       metavar="KEY=VALUE")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; our contract says 1.
        return 0 if not exc.code else 1

    try:
        config = _load_config(args.config, args.overrides)
        return _COMMANDS[args.command](config)
    except _PHYSICS_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _NUMERICAL_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint():
    raise SystemExit(main())
