"""Symmetric eigendecomposition and spectral diagnostics.

Provides the participation number of an eigenstate (npc), unfolded
level spacings, and the chaos indicator eta that locates a spacing
distribution between the Poisson (regular) and Wigner-Dyson (chaotic)
references.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, ParameterError
from .hamiltonian import SectorHamiltonian

# Histogram support for eta; reference mass beyond this point is < 3e-9.
_HIST_MAX = 5.0


def poisson_pdf(s):
    """Spacing density of an integrable (regular) spectrum."""
    return np.exp(-np.asarray(s, dtype=np.float64))


def wigner_dyson_pdf(s):
    """Wigner surmise spacing density of a chaotic spectrum."""
    s = np.asarray(s, dtype=np.float64)
    return (np.pi * s / 2.0) * np.exp(-np.pi * s * s / 4.0)


def _wigner_dyson_cdf(s: float) -> float:
    return 1.0 - math.exp(-math.pi * s * s / 4.0)


def _reference_crossing(lo: float = 0.1, hi: float = 1.0, tol: float = 1e-12) -> float:
    """First intersection of the Poisson and Wigner-Dyson densities, by bisection."""

    def f(s: float) -> float:
        return math.exp(-s) - (math.pi * s / 2.0) * math.exp(-math.pi * s * s / 4.0)

    flo = f(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) * flo > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


#: Integration endpoint of eta: where the two reference densities first cross.
S0 = _reference_crossing()


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Ascending eigenvalues and orthonormal eigenvectors (columns)."""

    eigenvalues: np.ndarray  # (D,)
    eigenvectors: np.ndarray  # (D, D); column j belongs to eigenvalues[j]

    @property
    def dimension(self) -> int:
        return int(self.eigenvalues.size)


@dataclass(frozen=True, eq=False)
class SpacingSample:
    """Unfolded nearest-neighbor spacings, normalized to unit mean."""

    spacings: np.ndarray

    def __post_init__(self):
        s = self.spacings
        if s.size == 0:
            raise ParameterError("spacing sample must be nonempty")
        if np.any(s < 0.0):
            raise ParameterError("spacings must be nonnegative")
        mean = float(s.mean())
        if abs(mean - 1.0) > 1e-9:
            raise ParameterError(f"spacing sample mean {mean!r} is not 1 after unfolding")


def diagonalize(ham: SectorHamiltonian | np.ndarray) -> SpectralDecomposition:
    """Full eigendecomposition of a dense real symmetric matrix.

    Accepts a SectorHamiltonian or a plain symmetric array.  Eigenvalues
    come back ascending; eigenvectors are the matching orthonormal
    columns.  Column norms and residuals are verified before returning.
    Within a numerically degenerate cluster the eigenvectors are
    whatever basis the solver picked; downstream statistics report them
    as computed.
    """
    matrix = ham.matrix if isinstance(ham, SectorHamiltonian) else np.asarray(ham, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ParameterError(f"expected a square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ParameterError("matrix contains non-finite entries")
    if not np.array_equal(matrix, matrix.T):
        raise ParameterError("matrix is not exactly symmetric")

    try:
        eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(
            "eigensolver failed to converge on a "
            f"{matrix.shape[0]}x{matrix.shape[1]} matrix "
            f"(max |entry| {np.abs(matrix).max():.3e})"
        ) from exc

    norms = np.linalg.norm(eigenvectors, axis=0)
    if np.abs(norms - 1.0).max() > 1e-10:
        raise NumericalError(f"eigenvector norms deviate from 1 by {np.abs(norms - 1.0).max():.3e}")
    residual = matrix @ eigenvectors - eigenvectors * eigenvalues
    res_norms = np.linalg.norm(residual, axis=0)
    allowed = 1e-8 * np.maximum(1.0, np.abs(eigenvalues))
    if np.any(res_norms > allowed):
        worst = int(np.argmax(res_norms / allowed))
        raise NumericalError(
            f"eigenpair residual {res_norms[worst]:.3e} exceeds tolerance at index {worst}"
        )

    eigenvalues.flags.writeable = False
    eigenvectors.flags.writeable = False
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def npc(vector: np.ndarray) -> float:
    """Number of principal components 1 / sum_i |a_i|^4 of a normalized vector.

    Equals 1 for a single basis register and D for a uniform spread over
    D registers.
    """
    v = np.asarray(vector, dtype=np.float64)
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise ParameterError("npc is undefined for the zero vector")
    if abs(norm - 1.0) > 1e-8:
        raise ParameterError(f"vector norm {norm!r} is not 1 within 1e-8")
    return float(1.0 / np.sum(np.abs(v) ** 4))


def unfolded_spacings(eigenvalues: np.ndarray, edge_trim: float = 0.1) -> SpacingSample:
    """Consecutive spacings of the retained spectrum, normalized to unit mean.

    A fraction ``edge_trim`` of levels is dropped at each spectral edge
    (rounded up) to remove non-universal band edges before normalizing.
    """
    levels = np.asarray(eigenvalues, dtype=np.float64)
    if levels.ndim != 1:
        raise ParameterError("eigenvalues must be a 1-D array")
    if not 0.0 <= edge_trim < 0.5:
        raise ParameterError(f"edge_trim must lie in [0, 0.5), got {edge_trim}")
    if np.any(np.diff(levels) < 0.0):
        raise ParameterError("eigenvalues must be ascending")

    n_trim = math.ceil(edge_trim * levels.size)
    retained = levels[n_trim : levels.size - n_trim]
    if retained.size < 20:
        raise ParameterError(
            f"only {retained.size} levels remain after trimming; need at least 20"
        )
    spacings = np.diff(retained)
    mean = float(spacings.mean())
    if mean <= 0.0:
        raise NumericalError("spectrum is fully degenerate; cannot unfold spacings")
    return SpacingSample(spacings=spacings / mean)


def eta(sample: SpacingSample, bin_width: float = 0.05) -> float:
    """Chaos indicator: 1 for a Poisson spacing distribution, 0 for Wigner-Dyson.

    Integrates the histogram-minus-Wigner-Dyson difference up to the
    reference crossing S0 (pro-rating the bin that straddles S0) and
    normalizes by the analytic Poisson-minus-Wigner-Dyson integral.
    """
    if bin_width <= 0.0:
        raise ParameterError(f"bin_width must be positive, got {bin_width}")
    spacings = sample.spacings
    if spacings.size == 0:
        raise ParameterError("spacing sample must be nonempty")

    n_bins = math.ceil(_HIST_MAX / bin_width)
    edges = bin_width * np.arange(n_bins + 1)
    counts, _ = np.histogram(spacings, bins=edges)
    total = spacings.size  # spacings beyond the histogram range carry no weight

    numerator = 0.0
    for k in range(n_bins):
        lo, hi = edges[k], edges[k + 1]
        if hi <= S0:
            numerator += counts[k] / total - (_wigner_dyson_cdf(hi) - _wigner_dyson_cdf(lo))
        else:
            fraction = (S0 - lo) / bin_width
            numerator += (counts[k] / total) * fraction
            numerator -= _wigner_dyson_cdf(S0) - _wigner_dyson_cdf(lo)
            break

    denominator = (1.0 - math.exp(-S0)) - _wigner_dyson_cdf(S0)
    return numerator / denominator
