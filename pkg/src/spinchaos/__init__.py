"""Disordered spin-1/2 chain: exact diagonalization, pairwise
entanglement, and level-spacing chaos diagnostics."""

__version__ = "0.1.0"

from .basis import MAX_DENSE_LENGTH, SectorBasis, build_sector, site_bit
from .ensemble import (
    DisorderSpec,
    EnsembleResult,
    GridpointSummary,
    PairMeans,
    PairSelection,
    PairStats,
    RealizationRecord,
    run_same_splitting,
    run_same_splitting_scan,
    run_sweep,
    sample_fields,
)
from .entanglement import (
    PAIR_BASIS_LABELS,
    TwoQubitState,
    concurrence_mixed,
    concurrence_pure,
    reduce_to_pair,
)
from .errors import NumericalError, ParameterError
from .hamiltonian import ChainSpec, SectorHamiltonian, build_hamiltonian
from .runconfig import DEFAULT_D_GRID, FIG1_JZ_VALUES, RunConfig, parse_config, serialize_config
from .spectral import (
    S0,
    SpacingSample,
    SpectralDecomposition,
    diagonalize,
    eta,
    npc,
    poisson_pdf,
    unfolded_spacings,
    wigner_dyson_pdf,
)
from .twoqubit import TwoQubitAnalytic, solve_two_qubit

__all__ = [
    "MAX_DENSE_LENGTH",
    "SectorBasis",
    "build_sector",
    "site_bit",
    "ChainSpec",
    "SectorHamiltonian",
    "build_hamiltonian",
    "S0",
    "SpacingSample",
    "SpectralDecomposition",
    "diagonalize",
    "eta",
    "npc",
    "poisson_pdf",
    "unfolded_spacings",
    "wigner_dyson_pdf",
    "PAIR_BASIS_LABELS",
    "TwoQubitState",
    "concurrence_mixed",
    "concurrence_pure",
    "reduce_to_pair",
    "TwoQubitAnalytic",
    "solve_two_qubit",
    "DisorderSpec",
    "EnsembleResult",
    "GridpointSummary",
    "PairMeans",
    "PairSelection",
    "PairStats",
    "RealizationRecord",
    "run_same_splitting",
    "run_same_splitting_scan",
    "run_sweep",
    "sample_fields",
    "DEFAULT_D_GRID",
    "FIG1_JZ_VALUES",
    "RunConfig",
    "parse_config",
    "serialize_config",
    "NumericalError",
    "ParameterError",
    "__version__",
]
