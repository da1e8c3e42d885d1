"""Dense sector Hamiltonian of the open disordered chain.

The chain couples nearest neighbors only: an Ising term of strength J_Z,
an XY (hopping) term of strength J_XY, and per-site longitudinal fields.
The optional edge correction lowers the energy of an up spin on either
end of the chain by J_Z/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import SectorBasis
from .errors import ParameterError


@dataclass(frozen=True)
class ChainSpec:
    """Parameters that fully determine the chain Hamiltonian.

    fields[n-1] is the longitudinal field h_n on site n (energy units).
    """

    length: int
    j_z: float
    j_xy: float
    fields: tuple[float, ...]
    edge_defects: bool = False

    def __post_init__(self):
        if self.length < 1:
            raise ParameterError(f"length must be positive, got {self.length}")
        if len(self.fields) != self.length:
            raise ParameterError(
                f"fields has {len(self.fields)} entries for a {self.length}-site chain"
            )
        for name, value in (("j_z", self.j_z), ("j_xy", self.j_xy)):
            if not math.isfinite(value):
                raise ParameterError(f"{name} must be finite, got {value!r}")
        if not all(math.isfinite(h) for h in self.fields):
            raise ParameterError("fields must all be finite")


@dataclass(frozen=True, eq=False)
class SectorHamiltonian:
    """Dense symmetric matrix of the chain restricted to one sector."""

    basis: SectorBasis
    matrix: np.ndarray  # (D, D) float64, exactly symmetric


def build_hamiltonian(spec: ChainSpec, basis: SectorBasis) -> SectorHamiltonian:
    """Assemble the dense Hamiltonian block for one magnetization sector.

    Diagonal entries carry the field and Ising sums over z_n = +/-1 plus
    the optional edge correction; off-diagonal entries equal J_XY/2
    between words related by one adjacent 10 <-> 01 swap.
    """
    if spec.length != basis.length:
        raise ParameterError(
            f"chain has {spec.length} sites but basis was built for {basis.length}"
        )
    states = basis.states
    dim = basis.dimension
    length = spec.length

    bits = ((states[:, None] >> np.arange(length)) & 1).astype(np.float64)
    z = 2.0 * bits - 1.0

    h = np.asarray(spec.fields, dtype=np.float64)
    diag = z @ (h / 2.0)
    if length > 1:
        diag += (spec.j_z / 4.0) * (z[:, :-1] * z[:, 1:]).sum(axis=1)
    if spec.edge_defects:
        # (1 + z_n)/2 projects onto an up spin at site n
        diag -= (spec.j_z / 2.0) * (bits[:, 0] + bits[:, -1])

    matrix = np.zeros((dim, dim))
    matrix[np.diag_indices(dim)] = diag

    half_hop = spec.j_xy / 2.0
    for b in range(length - 1):
        # words with bit pattern (0, 1) on the bond (b+1, b); the swap
        # partner flips both bits and stays inside the sector
        sel = np.where(((states >> b) & 3) == 1)[0]
        if sel.size == 0:
            continue
        partners = states[sel] ^ (3 << b)
        col = np.searchsorted(states, partners)
        matrix[sel, col] = half_hop
        matrix[col, sel] = half_hop

    matrix.flags.writeable = False
    return SectorHamiltonian(basis=basis, matrix=matrix)
