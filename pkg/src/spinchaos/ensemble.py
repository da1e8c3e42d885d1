"""Disorder-ensemble experiments over the chain.

Two experiment families:

* ``run_sweep`` draws Gaussian random fields at each point of a
  disorder-strength grid, repeats over seeded realizations, and
  averages the participation number, the chaos indicator eta, and the
  per-pair maximum/mean concurrences.
* ``run_same_splitting`` gives one chosen pair a common large field and
  reports the pair's maximum concurrence over all eigenstates.

Realizations are seeded through a counter-based child-seed derivation,
so results are bit-identical regardless of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .basis import build_sector
from .entanglement import concurrence_mixed, reduce_to_pair
from .errors import NumericalError, ParameterError
from .hamiltonian import ChainSpec, build_hamiltonian
from .spectral import diagonalize, eta, npc, unfolded_spacings

PAIR_OFFSETS = {"N": 1, "NN": 2, "NNN": 3}


@dataclass(frozen=True)
class DisorderSpec:
    """Grid of field standard deviations plus deterministic seeding."""

    d_grid: tuple[float, ...]
    n_realizations: int = 20
    master_seed: int = 0

    def __post_init__(self):
        if len(self.d_grid) == 0:
            raise ParameterError("d_grid must be nonempty")
        if any(not math.isfinite(d) or d < 0.0 for d in self.d_grid):
            raise ParameterError(f"d_grid values must be finite and >= 0, got {self.d_grid}")
        if self.n_realizations < 1:
            raise ParameterError(f"n_realizations must be >= 1, got {self.n_realizations}")


@dataclass(frozen=True)
class PairSelection:
    """Site pairs at a fixed offset: N, NN, or NNN neighbors."""

    kind: str
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.kind not in PAIR_OFFSETS:
            raise ParameterError(f"pair kind must be one of {sorted(PAIR_OFFSETS)}, got {self.kind!r}")
        offset = PAIR_OFFSETS[self.kind]
        for p, q in self.pairs:
            if q - p != offset:
                raise ParameterError(f"pair ({p}, {q}) does not have offset {offset}")
            if p < 1:
                raise ParameterError(f"pair ({p}, {q}) starts below site 1")

    @classmethod
    def all_pairs(cls, kind: str, length: int) -> "PairSelection":
        """Every (p, p + offset) pair that fits on the chain."""
        if kind not in PAIR_OFFSETS:
            raise ParameterError(f"pair kind must be one of {sorted(PAIR_OFFSETS)}, got {kind!r}")
        offset = PAIR_OFFSETS[kind]
        return cls(kind=kind, pairs=tuple((p, p + offset) for p in range(1, length - offset + 1)))


@dataclass(frozen=True)
class PairStats:
    """Concurrence statistics of one pair within one realization."""

    kind: str
    p: int
    q: int
    c_max: float
    c_max_state: int  # eigenstate index attaining c_max (first on ties)
    c_bar: float


@dataclass(frozen=True)
class RealizationRecord:
    """Raw per-realization output at one gridpoint."""

    d: float
    realization: int
    child_seed: int
    npc_bar: float
    eta: float
    pair_stats: tuple[PairStats, ...]


@dataclass(frozen=True)
class PairMeans:
    kind: str
    p: int
    q: int
    mean_c_max: float
    mean_c_bar: float


@dataclass(frozen=True)
class GridpointSummary:
    """Realization averages at one disorder strength."""

    d: float
    mean_npc: float
    mean_eta: float
    pair_means: tuple[PairMeans, ...]


@dataclass(frozen=True)
class EnsembleResult:
    """Sweep output: per-gridpoint averages plus the raw realization records."""

    length: int
    n_up: int
    j_z: float
    j_xy: float
    dimension: int
    master_seed: int
    n_realizations: int
    gridpoints: tuple[GridpointSummary, ...]
    records: tuple[RealizationRecord, ...]

    def __post_init__(self):
        for g in self.gridpoints:
            if not 1.0 <= g.mean_npc <= self.dimension:
                raise NumericalError(f"mean npc {g.mean_npc} outside [1, {self.dimension}] at d={g.d}")
            for pm in g.pair_means:
                for value in (pm.mean_c_max, pm.mean_c_bar):
                    if not 0.0 <= value <= 1.0:
                        raise NumericalError(f"concurrence statistic {value} outside [0, 1] at d={g.d}")
        per_grid = len(self.records) / max(len(self.gridpoints), 1)
        if per_grid != self.n_realizations:
            raise NumericalError(
                f"expected {self.n_realizations} realizations per gridpoint, found {per_grid}"
            )


def child_seed_sequence(spec: DisorderSpec, d_index: int, realization: int) -> np.random.SeedSequence:
    """Injective child stream for one (gridpoint, realization) task."""
    if not 0 <= d_index < len(spec.d_grid):
        raise ParameterError(f"d_index {d_index} out of range for grid of {len(spec.d_grid)}")
    if not 0 <= realization < spec.n_realizations:
        raise ParameterError(f"realization {realization} out of range [0, {spec.n_realizations})")
    return np.random.SeedSequence(spec.master_seed, spawn_key=(d_index, realization))


def sample_fields(spec: DisorderSpec, d_index: int, realization: int, length: int) -> np.ndarray:
    """Draw the per-site random fields for one realization.

    Returns ``length`` i.i.d. Normal(0, d^2) values with
    d = spec.d_grid[d_index], deterministic for a fixed spec.
    """
    rng = np.random.default_rng(child_seed_sequence(spec, d_index, realization))
    return rng.normal(0.0, spec.d_grid[d_index], size=length)


def _pair_list(pairs: tuple[PairSelection, ...]) -> list[tuple[str, int, int]]:
    return [(sel.kind, p, q) for sel in pairs for (p, q) in sel.pairs]


def _run_realization(args) -> RealizationRecord:
    """One (gridpoint, realization) task: assemble, diagonalize, analyze.

    Composes the library operations state by state so that a straight-line
    script using the same modules reproduces every statistic exactly.
    """
    length, j_z, j_xy, disorder, d_index, realization, flat_pairs, edge_trim, bin_width = args
    d = disorder.d_grid[d_index]
    try:
        fields = sample_fields(disorder, d_index, realization, length)
        chain = ChainSpec(
            length=length, j_z=j_z, j_xy=j_xy, fields=tuple(fields), edge_defects=True
        )
        basis = build_sector(length, length // 2)
        decomposition = diagonalize(build_hamiltonian(chain, basis))
        dim = decomposition.dimension

        npc_bar = float(np.mean([npc(decomposition.eigenvectors[:, j]) for j in range(dim)]))
        eta_value = eta(unfolded_spacings(decomposition.eigenvalues, edge_trim), bin_width)

        stats = []
        for kind, p, q in flat_pairs:
            values = np.empty(dim)
            for j in range(dim):
                values[j] = concurrence_mixed(
                    reduce_to_pair(decomposition.eigenvectors[:, j], basis, p, q)
                )
            best = int(np.argmax(values))
            stats.append(
                PairStats(
                    kind=kind,
                    p=p,
                    q=q,
                    c_max=float(values[best]),
                    c_max_state=best,
                    c_bar=float(np.mean(values)),
                )
            )
        seed_id = int(child_seed_sequence(disorder, d_index, realization).generate_state(1, np.uint64)[0])
        return RealizationRecord(
            d=d,
            realization=realization,
            child_seed=seed_id,
            npc_bar=npc_bar,
            eta=eta_value,
            pair_stats=tuple(stats),
        )
    except NumericalError as exc:
        raise NumericalError(f"realization {realization} at d={d} failed: {exc}") from exc


def run_sweep(
    chain_template: ChainSpec,
    disorder: DisorderSpec,
    pairs: tuple[PairSelection, ...],
    edge_trim: float = 0.1,
    bin_width: float = 0.05,
    n_workers: int = 1,
    progress=None,
) -> EnsembleResult:
    """Sweep the disorder grid, averaging over seeded realizations.

    The chain template fixes L and the couplings (isotropic, edge
    defects on); its fields are ignored and replaced per realization.
    The sector is the half-filled one, n_up = L/2.  Tasks over
    (gridpoint, realization) are independent; aggregation runs in fixed
    index order, so the result does not depend on ``n_workers``.

    ``progress``, if given, is called with (d_index, realization) as
    each task completes.
    """
    if chain_template.j_z != chain_template.j_xy:
        raise ParameterError(
            f"sweep requires an isotropic chain, got j_z={chain_template.j_z}, "
            f"j_xy={chain_template.j_xy}"
        )
    if not chain_template.edge_defects:
        raise ParameterError("sweep requires edge_defects=True on the chain template")
    if chain_template.length % 2 != 0:
        raise ParameterError(f"sweep requires an even chain length, got {chain_template.length}")
    if n_workers < 1:
        raise ParameterError(f"n_workers must be >= 1, got {n_workers}")

    length = chain_template.length
    flat_pairs = _pair_list(pairs)
    for _, p, q in flat_pairs:
        if q > length:
            raise ParameterError(f"pair ({p}, {q}) does not fit on a {length}-site chain")

    tasks = [
        (length, chain_template.j_z, chain_template.j_xy, disorder, di, r, flat_pairs, edge_trim, bin_width)
        for di in range(len(disorder.d_grid))
        for r in range(disorder.n_realizations)
    ]
    if n_workers == 1:
        records = []
        for task in tasks:
            records.append(_run_realization(task))
            if progress is not None:
                progress(task[4], task[5])
    else:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            records = []
            for task, record in zip(tasks, pool.map(_run_realization, tasks, chunksize=1)):
                records.append(record)
                if progress is not None:
                    progress(task[4], task[5])

    n_r = disorder.n_realizations
    gridpoints = []
    for di, d in enumerate(disorder.d_grid):
        chunk = records[di * n_r : (di + 1) * n_r]
        pair_means = tuple(
            PairMeans(
                kind=kind,
                p=p,
                q=q,
                mean_c_max=float(np.mean([rec.pair_stats[k].c_max for rec in chunk])),
                mean_c_bar=float(np.mean([rec.pair_stats[k].c_bar for rec in chunk])),
            )
            for k, (kind, p, q) in enumerate(flat_pairs)
        )
        gridpoints.append(
            GridpointSummary(
                d=d,
                mean_npc=float(np.mean([rec.npc_bar for rec in chunk])),
                mean_eta=float(np.mean([rec.eta for rec in chunk])),
                pair_means=pair_means,
            )
        )

    dimension = math.comb(length, length // 2)
    return EnsembleResult(
        length=length,
        n_up=length // 2,
        j_z=chain_template.j_z,
        j_xy=chain_template.j_xy,
        dimension=dimension,
        master_seed=disorder.master_seed,
        n_realizations=n_r,
        gridpoints=tuple(gridpoints),
        records=tuple(records),
    )


def run_same_splitting(
    chain_template: ChainSpec, pair: tuple[int, int], d: float, j_z_over_j_xy: float
) -> float:
    """Maximum concurrence of one equally-split pair over all eigenstates.

    The two chosen sites get field d, all others 0; J_XY is fixed to 1
    and J_Z = j_z_over_j_xy.  Edge defects are applied, and the sector
    is half filled.
    """
    length = chain_template.length
    if chain_template.j_xy != 1.0:
        raise ParameterError(f"same-splitting runs fix j_xy = 1, got {chain_template.j_xy}")
    if length % 2 != 0:
        raise ParameterError(f"same-splitting runs require an even length, got {length}")
    p, q = pair
    if not (1 <= p < q <= length):
        raise ParameterError(f"pair ({p}, {q}) invalid for a {length}-site chain")
    if not math.isfinite(d):
        raise ParameterError(f"defect strength must be finite, got {d!r}")

    fields = tuple(d if site in (p, q) else 0.0 for site in range(1, length + 1))
    chain = ChainSpec(
        length=length, j_z=j_z_over_j_xy, j_xy=1.0, fields=fields, edge_defects=True
    )
    basis = build_sector(length, length // 2)
    decomposition = diagonalize(build_hamiltonian(chain, basis))
    best = 0.0
    for j in range(decomposition.dimension):
        value = concurrence_mixed(reduce_to_pair(decomposition.eigenvectors[:, j], basis, p, q))
        if value > best:
            best = value
    return best


def run_same_splitting_scan(
    length: int, j_z_over_j_xy: float, d: float = 100.0, kinds: tuple[str, ...] = ("N", "NN", "NNN")
) -> list[tuple[str, int, int, float]]:
    """run_same_splitting over every pair position of each offset kind."""
    template = ChainSpec(
        length=length, j_z=j_z_over_j_xy, j_xy=1.0, fields=(0.0,) * length, edge_defects=True
    )
    rows = []
    for kind in kinds:
        for p, q in PairSelection.all_pairs(kind, length).pairs:
            rows.append((kind, p, q, run_same_splitting(template, (p, q), d, j_z_over_j_xy)))
    return rows
