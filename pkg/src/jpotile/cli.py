"""Command line front end: one binary, subcommand style.

Exit codes: 0 success, 1 usage error, 2 input validation error,
3 numerical error. Data goes to --out (or stdout) and carries a metadata
block with the resolved configuration and seed; human-readable diagnostics
go to stderr and are silenced by --quiet. File writes are atomic (temp
file plus rename). The JPOTILE_OUT_DIR environment variable relocates
relative --out paths.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import secrets
import sys
import tempfile
import time
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .anneal import (
    AnnealSchedule,
    CouplingProgram,
    DEFAULT_BETA,
    DEFAULT_ETA,
    StateHistogram,
    run_trials,
    wall_clock_seconds,
)
from .circuit import (
    JunctionParams,
    ResonatorParams,
    SquidParams,
    calibrate_resonator,
    flux_sweep,
    rsj_iv_curve,
)
from .errors import ParseError
from .lhz import build_layout, layout_to_dict, map_couplings
from .quantum import (
    DIM,
    NoiseSpec,
    StateDistribution,
    SUPPORT_TOL,
    logical_distribution,
    sweep_distribution,
)
from .spins import load_ising_problem
from .tile import TileConfig, TileParams, ground_set, tile_energy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

OUT_DIR_ENV = "JPOTILE_OUT_DIR"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures routed to exit code 1."""

    def error(self, message):
        raise _UsageError(f"{self.format_usage().rstrip()}\njpotile: usage error: {message}")


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _fmt_prob(p: float) -> str:
    return format(float(p), ".6g")


def _log(args, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(message, file=sys.stderr)


def _resolve_seed(args) -> int:
    seed = getattr(args, "seed", None)
    if seed is None:
        seed = secrets.randbits(64)
        _log(args, f"seed drawn from system entropy: {seed}")
    if seed < 0:
        raise ValueError("seed must be a nonnegative integer")
    return seed


def _metadata_header(command: str, resolved: dict) -> str:
    config = json.dumps(resolved, sort_keys=True, separators=(",", ":"))
    return f"# jpotile {command}\n# config={config}\n"


def _json_document(command: str, resolved: dict, body: dict) -> str:
    doc = {"metadata": {"command": command, "config": resolved}}
    doc.update(body)
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _write_output(args, text: str) -> None:
    out = getattr(args, "out", None)
    if out is None:
        sys.stdout.write(text)
        return
    out_dir = os.environ.get(OUT_DIR_ENV)
    if out_dir and not os.path.isabs(out):
        out = os.path.join(out_dir, out)
    directory = os.path.dirname(os.path.abspath(out))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".jpotile-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    _log(args, f"wrote {out}")


def _load_json_file(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")
    return data


def _field_number(data: dict, key: str, path: str, default=None) -> Optional[float]:
    if key not in data or data[key] is None:
        return default
    value = data[key]
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ParseError(f"{path}: field '{key}': expected a number, got {value!r}")
    return float(value)


def _require_number(data: dict, key: str, path: str) -> float:
    if key not in data:
        raise ParseError(f"{path}: missing required field '{key}'")
    return _field_number(data, key, path)


def _field_numbers(data: dict, key: str, path: str, count: int) -> tuple[float, ...]:
    if key not in data:
        raise ParseError(f"{path}: missing required field '{key}'")
    value = data[key]
    if (
        not isinstance(value, list)
        or len(value) != count
        or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in value
        )
    ):
        raise ParseError(f"{path}: field '{key}': expected a list of {count} numbers")
    return tuple(float(v) for v in value)


# ---------------------------------------------------------------------------
# histogram and distribution emitters


def emit_histogram(
    hist: StateHistogram, fmt: str, dense: bool, command: str, resolved: dict
) -> str:
    """Render a state histogram. Zero-count states are omitted unless dense.

    Rows are sorted by state label; probabilities carry 6 significant
    digits. The JSON form round-trips the same counts.
    """
    labels = sorted(hist.counts)
    if dense:
        labels = [format(i, f"0{hist.n_bits}b") for i in range(2**hist.n_bits)]
    if fmt == "json":
        rows = [
            {
                "state": label,
                "count": hist.counts.get(label, 0),
                "probability": float(_fmt_prob(hist.probability(label))),
            }
            for label in labels
        ]
        return _json_document(command, resolved, {"rows": rows})
    lines = [_metadata_header(command, resolved).rstrip("\n")]
    lines.append("state,count,probability")
    for label in labels:
        count = hist.counts.get(label, 0)
        lines.append(f"{label},{count},{_fmt_prob(count / hist.trials)}")
    return "\n".join(lines) + "\n"


def emit_distribution(
    dist: StateDistribution, fmt: str, dense: bool, command: str, resolved: dict
) -> str:
    """Render a probability distribution over the 16 logical states."""
    entries = [
        (dist.label(i), float(dist.probabilities[i]))
        for i in range(16)
        if dense or dist.probabilities[i] > SUPPORT_TOL
    ]
    if fmt == "json":
        rows = [
            {"state": label, "probability": float(_fmt_prob(p))}
            for label, p in entries
        ]
        return _json_document(command, resolved, {"rows": rows})
    lines = [_metadata_header(command, resolved).rstrip("\n")]
    lines.append("state,probability")
    for label, p in entries:
        lines.append(f"{label},{_fmt_prob(p)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# subcommand loaders


def _load_tile_params(path: str) -> tuple[TileParams, Optional[tuple[int, int]]]:
    data = _load_json_file(path)
    params = TileParams(
        j=_field_numbers(data, "j", path, 4),
        j_a1=_require_number(data, "j_a1", path),
        j_a2=_require_number(data, "j_a2", path),
        c_cnst=_require_number(data, "c_cnst", path),
    )
    clamp = None
    if data.get("clamp_ancilla") is not None:
        raw = _field_numbers(data, "clamp_ancilla", path, 2)
        if any(v not in (-1.0, 1.0) for v in raw):
            raise ParseError(
                f"{path}: field 'clamp_ancilla': entries must be -1 or +1"
            )
        clamp = (int(raw[0]), int(raw[1]))
    return params, clamp


def _load_quantum_params(path: str) -> dict:
    data = _load_json_file(path)
    out = {
        "j_a": _require_number(data, "j_a", path),
        "j_c": _require_number(data, "j_c", path),
        "j": None,
        "sweep": bool(data.get("sweep", False)),
        "thermal_coefficient": 0.0,
        "distribution": "uniform",
    }
    if "j" in data and data["j"] is not None:
        out["j"] = _field_numbers(data, "j", path, 4)
    noise = data.get("noise")
    if noise is not None:
        if not isinstance(noise, dict):
            raise ParseError(f"{path}: field 'noise': expected an object")
        out["thermal_coefficient"] = (
            _field_number(noise, "thermal_coefficient", path, 0.0) or 0.0
        )
        dist = noise.get("distribution", "uniform")
        if dist not in ("uniform", "normal"):
            raise ParseError(
                f"{path}: field 'noise.distribution': must be 'uniform' or 'normal'"
            )
        out["distribution"] = dist
    if out["j"] is None and not out["sweep"]:
        out["sweep"] = True
    return out


def _load_circuit_config(path: str) -> dict:
    data = _load_json_file(path)
    if "squid" not in data or not isinstance(data["squid"], dict):
        raise ParseError(f"{path}: missing required object 'squid'")
    sq = data["squid"]
    squid = SquidParams(
        l1=_require_number(sq, "l1", path),
        l2=_require_number(sq, "l2", path),
        i_c1=_require_number(sq, "i_c1", path),
        i_c2=_require_number(sq, "i_c2", path),
    )
    if "resonator" not in data or not isinstance(data["resonator"], dict):
        raise ParseError(f"{path}: missing required object 'resonator'")
    rs = data["resonator"]
    omega_r = _require_number(rs, "omega_r", path)
    c_s = _require_number(rs, "c_s", path)
    l_r = _field_number(rs, "l_r", path)
    target = _field_number(data, "target_omega0", path)
    if l_r is None:
        if target is None:
            raise ParseError(
                f"{path}: provide either 'resonator.l_r' or 'target_omega0'"
            )
        l_r = calibrate_resonator(target, omega_r, squid)
    resonator = ResonatorParams(omega_r=omega_r, l_r=l_r, c_s=c_s)
    config = {"squid": squid, "resonator": resonator, "target_omega0": target}
    sweep = data.get("sweep")
    if sweep is not None:
        if not isinstance(sweep, dict):
            raise ParseError(f"{path}: field 'sweep': expected an object")
        config["current_to_flux"] = _require_number(sweep, "current_to_flux", path)
        config["sweep_i"] = _sample_grid(sweep, path, "sweep")
    iv = data.get("iv")
    if iv is not None:
        if not isinstance(iv, dict):
            raise ParseError(f"{path}: field 'iv': expected an object")
        if "junction" not in iv or not isinstance(iv["junction"], dict):
            raise ParseError(f"{path}: missing required object 'iv.junction'")
        config["junction"] = JunctionParams(
            i_c=_require_number(iv["junction"], "i_c", path),
            r_shunt=_require_number(iv["junction"], "r_shunt", path),
        )
        config["iv_i"] = _sample_grid(iv, path, "iv")
        config["dt_eff"] = _field_number(iv, "dt_eff", path, 1e-12)
    return config


def _sample_grid(section: dict, path: str, name: str) -> np.ndarray:
    start = _require_number(section, "i_start", path)
    stop = _require_number(section, "i_stop", path)
    points = section.get("points")
    if not isinstance(points, int) or isinstance(points, bool) or points < 2:
        raise ParseError(
            f"{path}: field '{name}.points': expected an integer >= 2"
        )
    return np.linspace(start, stop, points)


def _load_program(path: str) -> dict:
    data = _load_json_file(path)
    program = CouplingProgram(
        pump_phase=_field_numbers(data, "pump_phase", path, 6),
        coupler_offset_phase=_field_number(data, "coupler_offset_phase", path, 0.0),
        j_max=_field_number(data, "j_max", path, 1.0),
        j_max_ancilla=_field_number(data, "j_max_ancilla", path),
        c_cnst=_field_number(data, "c_cnst", path, 0.0),
    )
    sched = data.get("schedule") or {}
    if not isinstance(sched, dict):
        raise ParseError(f"{path}: field 'schedule': expected an object")
    schedule = AnnealSchedule(
        duration=_field_number(sched, "duration", path, 50.0),
        dt=_field_number(sched, "dt", path, 1e-2),
        p_start=_field_number(sched, "p_start", path, 0.5),
        p_end=_field_number(sched, "p_end", path, 2.0),
    )
    return {
        "program": program,
        "schedule": schedule,
        "eta": _field_number(data, "eta", path, DEFAULT_ETA),
        "beta": _field_number(data, "beta", path, DEFAULT_BETA),
        "kappa": _field_number(data, "kappa", path),
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_lhz_map(args) -> int:
    problem = load_ising_problem(args.problem)
    if problem.n != args.n:
        raise ValueError(
            f"--n {args.n} does not match the problem file (n={problem.n})"
        )
    layout = build_layout(args.n)
    j_fields = map_couplings(problem)
    doc = layout_to_dict(layout, j_fields)
    resolved = {
        "n": args.n,
        "problem": os.path.basename(args.problem),
        "format": args.format,
    }
    if args.format == "json":
        text = _json_document("lhz map", resolved, doc)
    else:
        layout_line = json.dumps(
            {k: doc[k] for k in ("rows", "row_members", "fixed_row", "tiles")},
            sort_keys=True,
            separators=(",", ":"),
        )
        lines = [_metadata_header("lhz map", resolved).rstrip("\n")]
        lines.append(f"# layout={layout_line}")
        lines.append("k,i,j,j_k")
        for k, (i, j) in enumerate(layout.pairs):
            lines.append(f"{k},{i},{j},{_fmt(j_fields[k])}")
        text = "\n".join(lines) + "\n"
    _write_output(args, text)
    return EXIT_OK


def _cmd_tile_enumerate(args) -> int:
    params, clamp = _load_tile_params(args.params)
    e_min, ground = ground_set(params, clamp_ancilla=clamp)
    ground_labels = sorted(g.label for g in ground)
    resolved = {
        "j": list(params.j),
        "j_a1": params.j_a1,
        "j_a2": params.j_a2,
        "c_cnst": params.c_cnst,
        "clamp_ancilla": list(clamp) if clamp else None,
        "format": args.format,
        "ground_energy": e_min,
        "ground_states": ground_labels,
    }
    rows = []
    for idx in range(DIM):
        spins = [2 * ((idx >> (5 - k)) & 1) - 1 for k in range(6)]
        config = TileConfig(logical=tuple(spins[:4]), ancilla=tuple(spins[4:6]))
        if clamp is not None and config.ancilla != clamp:
            continue
        rows.append(
            {
                "s1": spins[0],
                "s2": spins[1],
                "s3": spins[2],
                "s4": spins[3],
                "a1": spins[4],
                "a2": spins[5],
                "energy": tile_energy(params, config),
                "parity": config.logical_parity,
            }
        )
    if args.format == "json":
        text = _json_document("tile enumerate", resolved, {"rows": rows})
    else:
        lines = [_metadata_header("tile enumerate", resolved).rstrip("\n")]
        lines.append("s1,s2,s3,s4,a1,a2,energy,parity")
        for r in rows:
            lines.append(
                f"{r['s1']},{r['s2']},{r['s3']},{r['s4']},{r['a1']},{r['a2']},"
                f"{_fmt(r['energy'])},{r['parity']}"
            )
        text = "\n".join(lines) + "\n"
    _write_output(args, text)
    _log(args, f"ground energy {_fmt(e_min)} with {len(ground_labels)} states")
    return EXIT_OK


def _cmd_tile_quantum(args) -> int:
    loaded = _load_quantum_params(args.params)
    seed = _resolve_seed(args)
    if args.trials < 1:
        raise ValueError("--trials must be >= 1")
    noise = NoiseSpec(
        thermal_coefficient=loaded["thermal_coefficient"],
        distribution=loaded["distribution"],
        seed=seed,
    )
    if loaded["sweep"]:
        dist = sweep_distribution(
            loaded["j_a"], loaded["j_c"], noise=noise, trials=args.trials
        )
    else:
        dist = logical_distribution(
            loaded["j"], loaded["j_a"], loaded["j_c"], noise=noise, trials=args.trials
        )
    resolved = {
        "j": list(loaded["j"]) if loaded["j"] is not None else None,
        "j_a": loaded["j_a"],
        "j_c": loaded["j_c"],
        "sweep": loaded["sweep"],
        "thermal_coefficient": loaded["thermal_coefficient"],
        "distribution": loaded["distribution"],
        "trials": args.trials,
        "seed": seed,
        "format": args.format,
        "dense": args.dense,
    }
    text = emit_distribution(dist, args.format, args.dense, "tile quantum", resolved)
    _write_output(args, text)
    return EXIT_OK


def _cmd_circuit_sweep(args) -> int:
    config = _load_circuit_config(args.config)
    if "sweep_i" not in config:
        raise ValueError(f"{args.config}: no 'sweep' section configured")
    points = flux_sweep(
        config["resonator"], config["squid"], config["current_to_flux"],
        config["sweep_i"],
    )
    clipped = [p.i_dc for p in points if p.clipped]
    resolved = {
        "squid": {
            "l1": config["squid"].l1,
            "l2": config["squid"].l2,
            "i_c1": config["squid"].i_c1,
            "i_c2": config["squid"].i_c2,
        },
        "resonator": {
            "omega_r": config["resonator"].omega_r,
            "l_r": config["resonator"].l_r,
            "c_s": config["resonator"].c_s,
        },
        "current_to_flux": config["current_to_flux"],
        "i_start": float(config["sweep_i"][0]),
        "i_stop": float(config["sweep_i"][-1]),
        "points": int(config["sweep_i"].size),
        "format": args.format,
        "clipped_i_dc": clipped,
    }
    kept = [p for p in points if not p.clipped]
    if args.format == "json":
        rows = [
            {
                "i_dc_A": p.i_dc,
                "flux_wb": p.flux,
                "l_squid_H": p.l_squid,
                "f0_Hz": p.omega0 / (2 * math.pi),
            }
            for p in kept
        ]
        text = _json_document("circuit sweep", resolved, {"rows": rows})
    else:
        lines = [_metadata_header("circuit sweep", resolved).rstrip("\n")]
        lines.append("i_dc_A,flux_wb,l_squid_H,f0_Hz")
        for p in kept:
            lines.append(
                f"{_fmt(p.i_dc)},{_fmt(p.flux)},{_fmt(p.l_squid)},"
                f"{_fmt(p.omega0 / (2 * math.pi))}"
            )
        text = "\n".join(lines) + "\n"
    _write_output(args, text)
    if clipped:
        _log(args, f"{len(clipped)} samples clipped near half-quantum flux")
    return EXIT_OK


def _cmd_circuit_iv(args) -> int:
    config = _load_circuit_config(args.config)
    if "junction" not in config:
        raise ValueError(f"{args.config}: no 'iv' section configured")
    if args.temp < 0:
        raise ValueError("--temp must be >= 0")
    seed = _resolve_seed(args)
    i, v = rsj_iv_curve(
        config["junction"],
        args.temp,
        config["iv_i"],
        seed=seed,
        dt_eff=config["dt_eff"],
    )
    resolved = {
        "junction": {
            "i_c": config["junction"].i_c,
            "r_shunt": config["junction"].r_shunt,
        },
        "temperature": args.temp,
        "dt_eff": config["dt_eff"],
        "i_start": float(i[0]),
        "i_stop": float(i[-1]),
        "points": int(i.size),
        "seed": seed,
        "format": args.format,
    }
    if args.format == "json":
        rows = [{"i_A": float(a), "v_V": float(b)} for a, b in zip(i, v)]
        text = _json_document("circuit iv", resolved, {"rows": rows})
    else:
        lines = [_metadata_header("circuit iv", resolved).rstrip("\n")]
        lines.append("i_A,v_V")
        for a, b in zip(i, v):
            lines.append(f"{_fmt(a)},{_fmt(b)}")
        text = "\n".join(lines) + "\n"
    _write_output(args, text)
    return EXIT_OK


def _cmd_anneal(args) -> int:
    loaded = _load_program(args.program)
    if args.trials < 1:
        raise ValueError("--trials must be >= 1")
    seed = _resolve_seed(args)
    hist = run_trials(
        loaded["program"],
        trials=args.trials,
        seed=seed,
        schedule=loaded["schedule"],
        eta=loaded["eta"],
        beta=loaded["beta"],
        canonical=args.canonical,
    )
    program = loaded["program"]
    schedule = loaded["schedule"]
    resolved = {
        "pump_phase": list(program.pump_phase),
        "coupler_offset_phase": program.coupler_offset_phase,
        "j_max": program.j_max,
        "j_max_ancilla": program.ancilla_scale,
        "c_cnst": program.c_cnst,
        "schedule": {
            "duration": schedule.duration,
            "dt": schedule.dt,
            "p_start": schedule.p_start,
            "p_end": schedule.p_end,
        },
        "eta": loaded["eta"],
        "beta": loaded["beta"],
        "trials": args.trials,
        "seed": seed,
        "canonical": args.canonical,
        "format": args.format,
        "dense": args.dense,
        "settled": hist.trials - hist.unsettled,
        "unsettled": hist.unsettled,
    }
    if loaded["kappa"] is not None:
        resolved["kappa"] = loaded["kappa"]
        resolved["wall_clock_s"] = wall_clock_seconds(schedule, loaded["kappa"])
    text = emit_histogram(hist, args.format, args.dense, "anneal", resolved)
    _write_output(args, text)
    _log(
        args,
        f"{hist.trials - hist.unsettled}/{hist.trials} trials settled, "
        f"{len(hist.support())} distinct states",
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly


def _add_output_flags(parser, dense: bool = False, canonical: bool = False):
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    parser.add_argument(
        "--quiet", action="store_true", help="suppress diagnostics on stderr"
    )
    if dense:
        parser.add_argument(
            "--dense",
            action="store_true",
            help="emit zero-probability states as well",
        )
    if canonical:
        parser.add_argument(
            "--canonical",
            action="store_true",
            help="fold global sign flips into canonical readout",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jpotile", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="command", required=True)

    lhz_parser = top.add_parser("lhz", help="logical-to-physical mapping")
    lhz_sub = lhz_parser.add_subparsers(dest="subcommand", required=True)
    p = lhz_sub.add_parser("map", help="emit layout and physical fields")
    p.add_argument("--n", type=int, required=True, help="logical spin count")
    p.add_argument("--problem", required=True, help="problem file (JSON)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_lhz_map)

    tile_parser = top.add_parser("tile", help="six-oscillator tile models")
    tile_sub = tile_parser.add_subparsers(dest="subcommand", required=True)
    p = tile_sub.add_parser("enumerate", help="all tile assignments and energies")
    p.add_argument("--params", required=True, help="tile parameter file (JSON)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_tile_enumerate)
    p = tile_sub.add_parser("quantum", help="ground-state distribution")
    p.add_argument("--params", required=True, help="parameter file (JSON)")
    p.add_argument("--trials", type=int, default=1, help="disorder trials")
    p.add_argument("--seed", type=int, help="master seed (drawn if absent)")
    _add_output_flags(p, dense=True)
    p.set_defaults(func=_cmd_tile_quantum)

    circuit_parser = top.add_parser("circuit", help="circuit tuning relations")
    circuit_sub = circuit_parser.add_subparsers(dest="subcommand", required=True)
    p = circuit_sub.add_parser("sweep", help="frequency versus bias current")
    p.add_argument("--config", required=True, help="circuit config file (JSON)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_circuit_sweep)
    p = circuit_sub.add_parser("iv", help="noisy junction I-V curve")
    p.add_argument("--config", required=True, help="circuit config file (JSON)")
    p.add_argument("--temp", type=float, required=True, help="temperature (K)")
    p.add_argument("--seed", type=int, help="master seed (drawn if absent)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_circuit_iv)

    p = top.add_parser("anneal", help="annealing trial ensemble")
    p.add_argument("--program", required=True, help="coupling program file (JSON)")
    p.add_argument("--trials", type=int, default=1000, help="ensemble size")
    p.add_argument("--seed", type=int, help="master seed (drawn if absent)")
    _add_output_flags(p, dense=True, canonical=True)
    p.set_defaults(func=_cmd_anneal)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    started = time.strftime("%Y-%m-%dT%H:%M:%S")
    _log(args, f"jpotile {args.command} started {started}")
    try:
        return args.func(args)
    except ValueError as exc:
        # ParseError and the other validation types subclass ValueError
        print(f"jpotile: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"jpotile: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except RuntimeError as exc:
        print(f"jpotile: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
