"""Two-site reduction of sector eigenstates and Wootters concurrence.

All eigenvectors of the real symmetric chain Hamiltonian are real, so
the reduced density matrix is stored real and the conjugation in the
spin-flip transform is a no-op.  Complex amplitudes are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import SectorBasis
from .errors import NumericalError, ParameterError

#: Basis order of the reduced two-site matrix: |11>, |10>, |01>, |00>,
#: first label = lower site p, 1 = spin up.
PAIR_BASIS_LABELS = ("11", "10", "01", "00")

# Spin-flip matrix F = sigma_y x sigma_y in this basis: antidiagonal signs.
# Right-multiplication reverses columns and applies them: A F = A[:, ::-1] * s.
_FLIP_DIAG = np.array([-1.0, 1.0, 1.0, -1.0])


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """4x4 real symmetric reduced density matrix for one site pair."""

    rho: np.ndarray
    sites: tuple[int, int]

    def __post_init__(self):
        rho = np.asarray(self.rho, dtype=np.float64)
        object.__setattr__(self, "rho", rho)
        if rho.shape != (4, 4):
            raise ParameterError(f"rho must be 4x4, got shape {rho.shape}")
        asym = float(np.abs(rho - rho.T).max())
        if asym > 1e-12:
            raise NumericalError(f"rho asymmetry {asym:.3e} exceeds tolerance")
        trace_defect = float(abs(np.trace(rho) - 1.0))
        if trace_defect > 1e-10:
            raise NumericalError(f"trace(rho) deviates from 1 by {trace_defect:.3e}")
        smallest = float(np.linalg.eigvalsh(rho)[0])
        if smallest < -1e-10:
            raise NumericalError(f"rho has eigenvalue {smallest:.3e} below -1e-10")


@lru_cache(maxsize=256)
def _pair_groups(basis: SectorBasis, p: int, q: int):
    """Index structure for reducing sector vectors to the (p, q) pair.

    Returns the reduced-basis cell of every sector word, the words with
    pair pattern |10>, and the positions of their |01> swap partners.
    """
    states = basis.states
    bp = (states >> (p - 1)) & 1
    bq = (states >> (q - 1)) & 1
    cell = (3 - (2 * bp + bq)).astype(np.intp)
    sel = np.where(cell == 1)[0]
    partners = states[sel] ^ ((1 << (p - 1)) | (1 << (q - 1)))
    partner_idx = np.searchsorted(states, partners)
    return cell, sel, partner_idx


def reduce_to_pair(state: np.ndarray, basis: SectorBasis, p: int, q: int) -> TwoQubitState:
    """Trace a normalized sector state down to the density matrix of sites (p, q).

    One pass over the sector basis accumulates populations keyed by the
    pair's bits.  Fixed magnetization forbids coherences between cells
    of different pair magnetization, so only the |10><01| element (and
    its transpose) can be nonzero off the diagonal.
    """
    if not (1 <= p <= basis.length and 1 <= q <= basis.length):
        raise ParameterError(f"sites ({p}, {q}) out of range for a {basis.length}-site chain")
    if p >= q:
        raise ParameterError(f"sites must satisfy p < q, got ({p}, {q})")
    vec = np.asarray(state, dtype=np.float64)
    if vec.shape != (basis.dimension,):
        raise ParameterError(
            f"state has shape {vec.shape}, expected ({basis.dimension},) for this sector"
        )
    norm = float(np.linalg.norm(vec))
    if abs(norm - 1.0) > 1e-8:
        raise ParameterError(f"state norm {norm!r} is not 1 within 1e-8")

    cell, sel, partner_idx = _pair_groups(basis, p, q)
    rho = np.zeros((4, 4))
    rho[np.diag_indices(4)] = np.bincount(cell, weights=vec * vec, minlength=4)
    coherence = float(vec[sel] @ vec[partner_idx]) if sel.size else 0.0
    rho[1, 2] = coherence
    rho[2, 1] = coherence
    return TwoQubitState(rho=rho, sites=(p, q))


def concurrence_mixed(state: TwoQubitState) -> float:
    """Wootters concurrence of a two-site mixed state.

    Square roots of the eigenvalues of rho * rho_tilde, sorted
    descending, combined as max(l1 - l2 - l3 - l4, 0).

    For real rho the flip transform F satisfies rho * rho_tilde =
    (rho F)^2, so those square roots equal |eig(sqrt(rho) F sqrt(rho))|.
    Going through symmetric eigensolvers keeps every lambda accurate to
    machine precision; a general eigensolver on rho * rho_tilde loses
    ~1e-8 on the repeated zero eigenvalues of nearly pure states.
    """
    rho = state.rho
    occupations, frame = np.linalg.eigh(rho)
    if float(occupations[0]) < -1e-10:
        raise NumericalError(f"rho has eigenvalue {float(occupations[0]):.3e} below -1e-10")
    sqrt_rho = frame @ (np.sqrt(np.clip(occupations, 0.0, None))[:, None] * frame.T)
    core = (sqrt_rho[:, ::-1] * _FLIP_DIAG) @ sqrt_rho  # sqrt_rho F sqrt_rho
    lam = np.abs(np.linalg.eigvalsh(core))
    lam[::-1].sort()
    return float(min(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0), 1.0))


def concurrence_pure(amplitudes) -> float:
    """Concurrence 2|ad - bc| of a pure two-qubit state (a, b, c, d)."""
    amps = np.asarray(amplitudes, dtype=np.float64)
    if amps.shape != (4,):
        raise ParameterError(f"expected 4 amplitudes, got shape {amps.shape}")
    norm_sq = float(amps @ amps)
    if abs(norm_sq - 1.0) > 1e-10:
        raise ParameterError(f"amplitudes are not normalized: |psi|^2 = {norm_sq!r}")
    return float(min(2.0 * abs(amps[0] * amps[3] - amps[1] * amps[2]), 1.0))
