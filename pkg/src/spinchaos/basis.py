"""Fixed-magnetization basis of an L-site spin-1/2 chain.

Bit convention: site n occupies bit (n - 1), so site 1 is the least
significant bit and printed kets read right to left.  Bit value 1 means
spin up (one excitation).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .errors import ParameterError

# Largest chain we enumerate densely; C(24, 12) ~ 2.7M words.
MAX_DENSE_LENGTH = 24


@dataclass(frozen=True, eq=False)
class SectorBasis:
    """All L-bit words with a fixed number of up spins, sorted ascending.

    Immutable after construction; safe to share across parallel workers.
    """

    length: int
    n_up: int
    states: np.ndarray  # int64, strictly ascending

    @property
    def dimension(self) -> int:
        return int(self.states.size)

    def __len__(self) -> int:
        return self.dimension

    def index_of(self, word: int) -> int:
        """Ordinal position of ``word`` within the sector."""
        i = int(np.searchsorted(self.states, word))
        if i == self.dimension or int(self.states[i]) != int(word):
            raise ParameterError(
                f"word {word:#b} is not in the (L={self.length}, n_up={self.n_up}) sector"
            )
        return i


def build_sector(length: int, n_up: int, max_length: int = MAX_DENSE_LENGTH) -> SectorBasis:
    """Enumerate the sector with ``n_up`` up spins on ``length`` sites.

    Parameters
    ----------
    length : int
        Number of sites, 1 <= length <= max_length.
    n_up : int
        Number of up spins, 0 <= n_up <= length.
    max_length : int
        Practicality bound for dense enumeration/diagonalization.

    Returns
    -------
    SectorBasis
        Basis of dimension C(length, n_up) with ascending word order.
    """
    if not isinstance(length, (int, np.integer)) or length < 1:
        raise ParameterError(f"length must be a positive integer, got {length!r}")
    if length > max_length:
        raise ParameterError(f"length {length} exceeds the dense bound {max_length}")
    if not isinstance(n_up, (int, np.integer)) or not 0 <= n_up <= length:
        raise ParameterError(f"n_up must lie in [0, {length}], got {n_up!r}")

    words = np.fromiter(
        (sum(1 << b for b in bits) for bits in combinations(range(length), n_up)),
        dtype=np.int64,
        count=comb(length, n_up),
    )
    words.sort()
    words.flags.writeable = False
    return SectorBasis(length=int(length), n_up=int(n_up), states=words)


def site_bit(word: int, site: int, length: int) -> int:
    """Spin of ``site`` (1 = up) in ``word`` under the bit-ordering convention."""
    if not 1 <= site <= length:
        raise ParameterError(f"site must lie in [1, {length}], got {site}")
    if not 0 <= word < (1 << length):
        raise ParameterError(f"word {word!r} is not an {length}-bit word")
    return (int(word) >> (site - 1)) & 1
