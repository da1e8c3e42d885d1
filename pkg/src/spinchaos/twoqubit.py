"""Closed-form solution of the isotropic two-site chain.

Serves as the analytic oracle for the numerical pipeline and backs the
``two-qubit`` CLI subcommand.  The |11> and |00> registers decouple;
the entangled doublet lives in the {|10>, |01>} block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class TwoQubitAnalytic:
    """Spectrum, eigenvectors, concurrence, and npc of the one-excitation doublet.

    ``vector_plus``/``vector_minus`` are amplitudes over {|10>, |01>}.
    ``sigma`` = h1 + h2 enters no computed field; it only shifts the
    decoupled |11>/|00> registers.
    """

    coupling: float  # J, isotropic
    sigma: float  # h1 + h2
    delta: float  # h1 - h2
    energy_plus: float
    energy_minus: float
    vector_plus: tuple[float, float]
    vector_minus: tuple[float, float]
    concurrence: float  # identical for both doublet states
    npc: float  # likewise


def solve_two_qubit(coupling: float, h1: float, h2: float) -> TwoQubitAnalytic:
    """Solve the isotropic two-site chain with fields (h1, h2) exactly.

    Eigenvectors come from the stable rotation-angle form
    theta = atan2(J, delta) rather than the textbook closed form, whose
    denominator vanishes on one branch.

    A zero coupling with distinct fields yields trivial product
    eigenvectors with zero concurrence; zero coupling with equal fields
    leaves the doublet degenerate and is rejected.
    """
    for name, value in (("coupling", coupling), ("h1", h1), ("h2", h2)):
        if not math.isfinite(value):
            raise ParameterError(f"{name} must be finite, got {value!r}")

    delta = h1 - h2
    sigma = h1 + h2
    splitting = math.hypot(coupling, delta)
    if splitting == 0.0:
        raise ParameterError(
            "coupling = 0 with equal fields leaves a degenerate doublet; "
            "eigenvector normalization is undefined"
        )

    theta = math.atan2(coupling, delta)
    cos_half = math.cos(theta / 2.0)
    sin_half = math.sin(theta / 2.0)

    concurrence = abs(coupling) / splitting
    return TwoQubitAnalytic(
        coupling=coupling,
        sigma=sigma,
        delta=delta,
        energy_plus=-coupling / 4.0 + splitting / 2.0,
        energy_minus=-coupling / 4.0 - splitting / 2.0,
        vector_plus=(cos_half, sin_half),
        vector_minus=(-sin_half, cos_half),
        concurrence=concurrence,
        npc=1.0 / (1.0 - concurrence * concurrence / 2.0),
    )
