"""Conserved-quantity functionals and per-step monitoring records.

Mass and mean are computed through the consistent mass matrix, which
integrates products of piecewise-linear functions exactly. Because the node
coordinate vector is itself piecewise linear, ``x @ Mass @ u`` is the exact
first moment of the interpolant, and it is precisely the quantity the
mean-conserving operator keeps constant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .assembly import SymTridiagonal
from .mesh import Mesh1D


@dataclass(frozen=True)
class DiagnosticsRecord:
    """Mass, mean and minimum of a state, with drifts relative to a baseline.

    Drifts follow the ``initial minus current`` sign convention.
    """

    time: float
    mass: float
    mean: float
    min_value: float
    delta_mass: float
    delta_mean: float


def discrete_mass(u: np.ndarray, mass_matrix: SymTridiagonal) -> float:
    """Integral of the piecewise-linear function with coefficients `u`."""
    return float(mass_matrix.matvec(u).sum())


def discrete_mean(
    u: np.ndarray, mass_matrix: SymTridiagonal, mesh: Mesh1D
) -> float:
    """First moment of the interpolant divided by its mass."""
    weighted = mass_matrix.matvec(u)
    total = weighted.sum()
    if total == 0.0:
        raise ValueError("mean is undefined for a state with zero mass")
    return float(mesh.nodes @ weighted / total)


def record(
    u: np.ndarray,
    time: float,
    mass_matrix: SymTridiagonal,
    mesh: Mesh1D,
    baseline: DiagnosticsRecord | None = None,
) -> DiagnosticsRecord:
    """Build the diagnostics record for state `u` at `time`.

    `baseline` (the t=0 record) is required for any time after zero; drifts
    are reported as baseline value minus current value.
    """
    if baseline is None and time > 0.0:
        raise ValueError("a t=0 baseline record is required for time > 0")
    weighted = mass_matrix.matvec(u)
    mass = float(weighted.sum())
    mean = float(mesh.nodes @ weighted / mass)
    rec = DiagnosticsRecord(
        time=float(time),
        mass=mass,
        mean=mean,
        min_value=float(u.min()),
        delta_mass=(baseline.mass - mass) if baseline is not None else 0.0,
        delta_mean=(baseline.mean - mean) if baseline is not None else 0.0,
    )
    return rec
