"""Command-line entry point.

Exit codes: 0 on success, 2 on usage errors, 1 on numerical or I/O
failures.  Heavy experiments write CSVs plus config/metadata sidecars
into --out-dir; ``two-qubit`` prints to stdout only.
"""

from __future__ import annotations

import json
import sys

import numpy as np

from .basis import build_sector
from .ensemble import (
    DisorderSpec,
    PairSelection,
    run_same_splitting_scan,
    run_sweep,
    sample_fields,
)
from .errors import NumericalError, ParameterError
from .hamiltonian import ChainSpec, build_hamiltonian
from .output import Fig1Result, SpectrumResult, prepare_out_dir, write_results
from .runconfig import RunConfig, parse_config
from .spectral import diagonalize, npc
from .twoqubit import solve_two_qubit


def _run_two_qubit(config: RunConfig) -> int:
    solution = solve_two_qubit(config.coupling, config.h1, config.h2)
    if config.json_output:
        record = {
            "J": solution.coupling,
            "h1": config.h1,
            "h2": config.h2,
            "sigma": solution.sigma,
            "delta": solution.delta,
            "energy_plus": solution.energy_plus,
            "energy_minus": solution.energy_minus,
            "vector_plus": list(solution.vector_plus),
            "vector_minus": list(solution.vector_minus),
            "concurrence": solution.concurrence,
            "npc": solution.npc,
        }
        print(json.dumps(record, indent=2))
        return 0
    print(f"coupling J          = {solution.coupling:.17g}")
    print(f"sigma (h1 + h2)     = {solution.sigma:.17g}")
    print(f"delta (h1 - h2)     = {solution.delta:.17g}")
    print(f"energy E+           = {solution.energy_plus:.17g}")
    print(f"energy E-           = {solution.energy_minus:.17g}")
    print(f"|E+> over {{|10>,|01>}} = ({solution.vector_plus[0]:.17g}, {solution.vector_plus[1]:.17g})")
    print(f"|E-> over {{|10>,|01>}} = ({solution.vector_minus[0]:.17g}, {solution.vector_minus[1]:.17g})")
    print(f"concurrence C       = {solution.concurrence:.17g}")
    print(f"npc                 = {solution.npc:.17g}")
    return 0


def _run_spectrum(config: RunConfig) -> int:
    prepare_out_dir(config)
    if config.fields is not None:
        fields = tuple(config.fields)
    else:
        disorder = DisorderSpec(
            d_grid=(config.d_grid[0],), n_realizations=1, master_seed=config.master_seed
        )
        fields = tuple(sample_fields(disorder, 0, 0, config.length))
    chain = ChainSpec(
        length=config.length,
        j_z=config.j_z,
        j_xy=config.j_xy,
        fields=fields,
        edge_defects=config.edge_defects,
    )
    basis = build_sector(config.length, config.n_up)
    decomposition = diagonalize(build_hamiltonian(chain, basis))
    npcs = np.array([npc(decomposition.eigenvectors[:, j]) for j in range(decomposition.dimension)])
    result = SpectrumResult(eigenvalues=decomposition.eigenvalues, npcs=npcs, fields=fields)
    for path in write_results(result, config):
        print(f"wrote {path}")
    return 0


def _run_fig1(config: RunConfig) -> int:
    prepare_out_dir(config)
    rows = []
    for jz in config.jz_panels:
        print(f"scanning panel J_Z = {jz:g} ...", file=sys.stderr)
        for kind, p, q, c_max in run_same_splitting_scan(
            config.length, jz, d=config.defect_strength
        ):
            rows.append((jz, kind, p, q, c_max))
    result = Fig1Result(defect_strength=config.defect_strength, rows=tuple(rows))
    for path in write_results(result, config):
        print(f"wrote {path}")
    return 0


def _run_sweep(config: RunConfig) -> int:
    prepare_out_dir(config)
    template = ChainSpec(
        length=config.length,
        j_z=config.j_z,
        j_xy=config.j_xy,
        fields=(0.0,) * config.length,
        edge_defects=True,
    )
    disorder = DisorderSpec(
        d_grid=config.d_grid,
        n_realizations=config.n_realizations,
        master_seed=config.master_seed,
    )
    pairs = tuple(PairSelection.all_pairs(kind, config.length) for kind in ("N", "NN", "NNN"))

    total = len(config.d_grid) * config.n_realizations
    done = [0]

    def progress(d_index: int, realization: int) -> None:
        done[0] += 1
        print(
            f"[{done[0]}/{total}] d={config.d_grid[d_index]:g} realization {realization}",
            file=sys.stderr,
        )

    result = run_sweep(
        template,
        disorder,
        pairs,
        edge_trim=config.edge_trim,
        bin_width=config.bin_width,
        n_workers=config.workers,
        progress=progress,
    )
    for path in write_results(result, config):
        print(f"wrote {path}")
    return 0


_RUNNERS = {
    "two-qubit": _run_two_qubit,
    "spectrum": _run_spectrum,
    "fig1": _run_fig1,
    "sweep": _run_sweep,
}


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except ParameterError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return _RUNNERS[config.experiment](config)
    except ParameterError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
