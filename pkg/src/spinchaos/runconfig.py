"""Run configuration: CLI flags, flat config files, and serialization.

Config files are flat ``key = value`` lines with ``#`` comments.
Explicit CLI flags override file values, which override the built-in
defaults.  Unknown keys are rejected.
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass, fields as dataclass_fields
from pathlib import Path

from .basis import MAX_DENSE_LENGTH
from .errors import ParameterError

EXPERIMENTS = ("two-qubit", "spectrum", "fig1", "sweep")

DEFAULT_D_GRID = (0.0, 0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0)

#: Anisotropy values of the six same-splitting panels.
FIG1_JZ_VALUES = (0.0, 1.0, 10.0, 100.0, 159.0, 327.0)


@dataclass(frozen=True)
class RunConfig:
    experiment: str
    length: int = 12
    n_up: int = 6
    j_z: float = 1.0
    j_xy: float = 1.0
    edge_defects: bool = True
    d_grid: tuple[float, ...] = DEFAULT_D_GRID
    n_realizations: int = 20
    master_seed: int = 0
    edge_trim: float = 0.1
    bin_width: float = 0.05
    workers: int = 1
    defect_strength: float = 100.0  # same-splitting field d (fig1)
    jz_panels: tuple[float, ...] = FIG1_JZ_VALUES  # anisotropies scanned by fig1
    coupling: float = 1.0  # two-qubit J
    h1: float = 0.0
    h2: float = 0.0
    fields: tuple[float, ...] | None = None  # explicit fields for `spectrum`
    json_output: bool = False
    out_dir: str = "results"


def _parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("true", "1", "yes", "on"):
        return True
    if value in ("false", "0", "no", "off"):
        return False
    raise ParameterError(f"expected a boolean, got {text!r}")


def _parse_float_list(text: str) -> tuple[float, ...]:
    items = [piece.strip() for piece in text.split(",") if piece.strip() != ""]
    if not items:
        raise ParameterError(f"expected a comma-separated list of numbers, got {text!r}")
    try:
        return tuple(float(piece) for piece in items)
    except ValueError as exc:
        raise ParameterError(f"malformed number in list {text!r}") from exc


# config-file key -> (RunConfig field, converter)
_CONFIG_KEYS = {
    "experiment": ("experiment", str),
    "L": ("length", int),
    "n_up": ("n_up", int),
    "Jz": ("j_z", float),
    "Jxy": ("j_xy", float),
    "edge_defects": ("edge_defects", _parse_bool),
    "d_grid": ("d_grid", _parse_float_list),
    "n_realizations": ("n_realizations", int),
    "seed": ("master_seed", int),
    "edge_trim": ("edge_trim", float),
    "bin_width": ("bin_width", float),
    "workers": ("workers", int),
    "d": ("defect_strength", float),
    "jz_panels": ("jz_panels", _parse_float_list),
    "J": ("coupling", float),
    "h1": ("h1", float),
    "h2": ("h2", float),
    "fields": ("fields", _parse_float_list),
    "json": ("json_output", _parse_bool),
    "out_dir": ("out_dir", str),
}

_FIELD_TO_KEY = {field: key for key, (field, _) in _CONFIG_KEYS.items()}


def read_config_file(path: str | Path) -> dict:
    """Parse a flat key = value file into RunConfig field values."""
    values = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ParameterError(f"{path}:{lineno}: unknown config key {key!r}")
        field, convert = _CONFIG_KEYS[key]
        try:
            values[field] = convert(value.strip())
        except (ValueError, ParameterError) as exc:
            raise ParameterError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
    return values


def serialize_config(config: RunConfig) -> str:
    """Render a config as a flat key = value file that parses back equal."""
    lines = ["# spinchaos run configuration"]
    for field in dataclass_fields(RunConfig):
        value = getattr(config, field.name)
        if value is None:
            continue
        key = _FIELD_TO_KEY[field.name]
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = f"{value:.17g}"
        elif isinstance(value, tuple):
            text = ",".join(f"{v:.17g}" for v in value)
        else:
            text = str(value)
        lines.append(f"{key} = {text}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinchaos",
        description="Disordered spin-1/2 chain: entanglement and chaos diagnostics.",
    )
    sub = parser.add_subparsers(dest="experiment", required=True)

    def add_common(sp):
        sp.add_argument("--config", default=None, help="flat key = value config file")
        sp.add_argument("--out-dir", dest="out_dir", default=None, help="output directory")

    def add_chain(sp):
        sp.add_argument("--L", dest="length", type=int, default=None, help="number of sites")
        sp.add_argument("--n-up", dest="n_up", type=int, default=None, help="up spins in the sector")
        sp.add_argument("--Jz", dest="j_z", type=float, default=None, help="Ising coupling")
        sp.add_argument("--Jxy", dest="j_xy", type=float, default=None, help="hopping coupling")

    two = sub.add_parser("two-qubit", help="closed-form two-site solution")
    add_common(two)
    two.add_argument("--J", dest="coupling", type=float, default=None, help="isotropic coupling")
    two.add_argument("--h1", type=float, default=None, help="field on site 1")
    two.add_argument("--h2", type=float, default=None, help="field on site 2")
    two.add_argument("--json", dest="json_output", action="store_true", default=None,
                     help="print a machine-readable record")

    spectrum = sub.add_parser("spectrum", help="one diagonalization; dump eigenvalues and npc")
    add_common(spectrum)
    add_chain(spectrum)
    spectrum.add_argument("--fields", type=str, default=None,
                          help="comma-separated per-site fields (default: one disorder draw)")
    spectrum.add_argument("--d-grid", dest="d_grid", type=str, default=None,
                          help="disorder strength(s); first entry is used")
    spectrum.add_argument("--seed", dest="master_seed", type=int, default=None)
    spectrum.add_argument("--no-edge-defects", dest="edge_defects", action="store_false",
                          default=None, help="drop the edge correction terms")

    fig1 = sub.add_parser("fig1", help="same-splitting pair scan (one panel or all six)")
    add_common(fig1)
    fig1.add_argument("--L", dest="length", type=int, default=None)
    fig1.add_argument("--Jz", dest="jz_single", type=float, default=None,
                      help="anisotropy J_Z/J_XY; omit to run all six standard panels")
    fig1.add_argument("--d", dest="defect_strength", type=float, default=None,
                      help="field on the chosen pair")

    sweep = sub.add_parser("sweep", help="disorder-grid ensemble sweep")
    add_common(sweep)
    add_chain(sweep)
    sweep.add_argument("--d-grid", dest="d_grid", type=str, default=None,
                       help="comma-separated d/J gridpoints")
    sweep.add_argument("--n-realizations", dest="n_realizations", type=int, default=None)
    sweep.add_argument("--seed", dest="master_seed", type=int, default=None)
    sweep.add_argument("--edge-trim", dest="edge_trim", type=float, default=None,
                       help="fraction of levels trimmed at each spectral edge")
    sweep.add_argument("--bin-width", dest="bin_width", type=float, default=None,
                       help="spacing histogram bin width")
    sweep.add_argument("--workers", type=int, default=None, help="parallel worker processes")

    return parser


def _validate(config: RunConfig) -> RunConfig:
    if config.experiment not in EXPERIMENTS:
        raise ParameterError(f"unknown experiment {config.experiment!r}")
    if not 1 <= config.length <= MAX_DENSE_LENGTH:
        raise ParameterError(f"L must lie in [1, {MAX_DENSE_LENGTH}], got {config.length}")
    if not 0 <= config.n_up <= config.length:
        raise ParameterError(f"n_up must lie in [0, {config.length}], got {config.n_up}")
    for name in ("j_z", "j_xy", "edge_trim", "bin_width", "defect_strength", "coupling", "h1", "h2"):
        if not math.isfinite(getattr(config, name)):
            raise ParameterError(f"{name} must be finite")
    if not 0.0 <= config.edge_trim < 0.5:
        raise ParameterError(f"edge_trim must lie in [0, 0.5), got {config.edge_trim}")
    if config.bin_width <= 0.0:
        raise ParameterError(f"bin_width must be positive, got {config.bin_width}")
    if config.workers < 1:
        raise ParameterError(f"workers must be >= 1, got {config.workers}")
    if config.n_realizations < 1:
        raise ParameterError(f"n_realizations must be >= 1, got {config.n_realizations}")
    if not config.d_grid:
        raise ParameterError("d_grid must be nonempty")
    if any(not math.isfinite(d) or d < 0.0 for d in config.d_grid):
        raise ParameterError(f"d_grid values must be finite and >= 0, got {config.d_grid}")
    if not config.jz_panels or any(not math.isfinite(v) for v in config.jz_panels):
        raise ParameterError(f"jz_panels must be nonempty finite values, got {config.jz_panels}")
    if config.fields is not None and len(config.fields) != config.length:
        raise ParameterError(
            f"fields has {len(config.fields)} entries for a {config.length}-site chain"
        )

    if config.experiment in ("sweep", "fig1"):
        if config.length % 2 != 0:
            raise ParameterError(f"{config.experiment} requires an even L, got {config.length}")
        if config.n_up != config.length // 2:
            raise ParameterError(
                f"{config.experiment} runs in the half-filled sector: n_up must be "
                f"{config.length // 2}, got {config.n_up}"
            )
    if config.experiment == "sweep":
        if config.j_z != config.j_xy:
            raise ParameterError(
                f"sweep requires an isotropic chain (Jz = Jxy), got {config.j_z} and {config.j_xy}"
            )
        if not config.edge_defects:
            raise ParameterError("sweep requires edge_defects = true")
    return config


def parse_config(argv=None) -> RunConfig:
    """Resolve experiment, config file, and flags into a validated RunConfig.

    Raises SystemExit(2) on malformed flags (via argparse) and
    ParameterError on semantic violations.
    """
    parser = _build_parser()
    namespace = parser.parse_args(argv)

    values = {"experiment": namespace.experiment}
    if getattr(namespace, "config", None):
        file_values = read_config_file(namespace.config)
        file_experiment = file_values.pop("experiment", None)
        if file_experiment is not None and file_experiment != namespace.experiment:
            raise ParameterError(
                f"config file selects experiment {file_experiment!r} but the command "
                f"line ran {namespace.experiment!r}"
            )
        values.update(file_values)

    for field in dataclass_fields(RunConfig):
        flag_value = getattr(namespace, field.name, None)
        if flag_value is None:
            continue
        if field.name in ("d_grid", "fields") and isinstance(flag_value, str):
            flag_value = _parse_float_list(flag_value)
        values[field.name] = flag_value

    jz_single = getattr(namespace, "jz_single", None)
    if jz_single is not None:
        values["jz_panels"] = (jz_single,)

    # n_up follows L/2 unless set explicitly
    if "n_up" not in values and "length" in values:
        values["n_up"] = values["length"] // 2

    return _validate(RunConfig(**values))
