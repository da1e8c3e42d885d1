"""Result serialization: CSVs plus config/metadata sidecars.

Every file is written to a temporary name and renamed into place, so a
failed run never leaves a partial result.  Floats carry 17 significant
digits; CSVs are comma-separated, '\\n'-terminated, UTF-8.
"""

from __future__ import annotations

import datetime
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .ensemble import EnsembleResult
from .runconfig import RunConfig, serialize_config


@dataclass(frozen=True)
class Fig1Result:
    """Same-splitting scan rows: (j_z, kind, p, q, c_max)."""

    defect_strength: float
    rows: tuple[tuple[float, str, int, int, float], ...]


@dataclass(frozen=True)
class SpectrumResult:
    """One diagonalization: levels, per-state npc, and the fields used."""

    eigenvalues: np.ndarray
    npcs: np.ndarray
    fields: tuple[float, ...]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    os.replace(tmp, path)


def _csv_text(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def prepare_out_dir(config: RunConfig) -> Path:
    """Create the output directory and verify it is writable up front."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    probe = out / ".write_probe.tmp"
    with open(probe, "w", encoding="utf-8") as handle:
        handle.write("ok")
    probe.unlink()
    return out


def _write_sidecars(config: RunConfig, extra: dict, out: Path) -> list[Path]:
    name = config.experiment.replace("-", "_")
    config_path = out / f"{name}_config.txt"
    _write_atomic(config_path, serialize_config(config))

    lines = [
        f"timestamp = {datetime.datetime.now(datetime.timezone.utc).isoformat()}",
        f"version = {__version__}",
        f"config_file = {config_path.name}",
    ]
    lines.extend(f"{key} = {_fmt(value)}" for key, value in extra.items())
    meta_path = out / f"{name}_metadata.txt"
    _write_atomic(meta_path, "\n".join(lines) + "\n")
    return [config_path, meta_path]


def write_results(result, config: RunConfig) -> list[Path]:
    """Write the experiment's CSV(s) plus config and metadata sidecars."""
    out = Path(config.out_dir)
    written: list[Path] = []
    extra = {"master_seed": config.master_seed}

    if config.experiment == "sweep":
        assert isinstance(result, EnsembleResult)
        agg_rows: list[list] = []
        for grid in result.gridpoints:
            agg_rows.append(
                [grid.d, "", "", "", "", "", grid.mean_npc, grid.mean_eta, result.n_realizations]
            )
            for pm in grid.pair_means:
                agg_rows.append(
                    [grid.d, pm.kind, pm.p, pm.q, pm.mean_c_max, pm.mean_c_bar, "", "",
                     result.n_realizations]
                )
        agg_path = out / "sweep.csv"
        _write_atomic(
            agg_path,
            _csv_text(
                ["d_over_J", "pair_kind", "pair_p", "pair_q", "mean_c_max", "mean_c_bar",
                 "mean_npc", "mean_eta", "n_realizations"],
                agg_rows,
            ),
        )
        written.append(agg_path)

        raw_rows: list[list] = []
        for rec in result.records:
            raw_rows.append(
                [rec.d, rec.realization, rec.child_seed, "", "", "", "", "", "", rec.npc_bar, rec.eta]
            )
            for ps in rec.pair_stats:
                raw_rows.append(
                    [rec.d, rec.realization, rec.child_seed, ps.kind, ps.p, ps.q, ps.c_max,
                     ps.c_max_state, ps.c_bar, "", ""]
                )
        raw_path = out / "sweep_raw.csv"
        _write_atomic(
            raw_path,
            _csv_text(
                ["d_over_J", "realization", "child_seed", "pair_kind", "pair_p", "pair_q",
                 "c_max", "c_max_state", "c_bar", "npc_bar", "eta"],
                raw_rows,
            ),
        )
        written.append(raw_path)
        for index, rec in enumerate(result.records):
            d_index = index // result.n_realizations
            extra[f"child_seed_d{d_index}_r{rec.realization}"] = rec.child_seed

    elif config.experiment == "fig1":
        assert isinstance(result, Fig1Result)
        rows = [[jz, config.defect_strength, kind, p, q, c_max]
                for (jz, kind, p, q, c_max) in result.rows]
        path = out / "fig1.csv"
        _write_atomic(
            path,
            _csv_text(["j_z_over_j_xy", "d", "pair_kind", "pair_p", "pair_q", "c_max"], rows),
        )
        written.append(path)

    elif config.experiment == "spectrum":
        assert isinstance(result, SpectrumResult)
        rows = [[index, energy, value]
                for index, (energy, value) in enumerate(zip(result.eigenvalues, result.npcs))]
        path = out / "spectrum.csv"
        _write_atomic(path, _csv_text(["index", "energy", "npc"], rows))
        written.append(path)
        extra["fields"] = ",".join(_fmt(h) for h in result.fields)

    else:
        raise ValueError(f"write_results does not handle experiment {config.experiment!r}")

    written.extend(_write_sidecars(config, extra, out))
    return written
