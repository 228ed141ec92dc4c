"""Independent reference solutions used for verification.

For zero-flux boundaries the smoothed density has a closed form: a cosine
series whose modes decay like ``exp(-(k*pi/L)**2 * t)``. Its coefficients
are computed from exact point evaluations at the sample positions, so the
series shares nothing with the finite-element pipeline and can serve as an
oracle for it. The mean-conserving problem has no closed form here; a
fine-step run of the same integrator acts as the reference instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .assembly import BcKind, SymTridiagonal
from .mesh import Mesh1D
from .sample import DataSample
from .solver import SolverConfig, run
from .validation import check_positive_int


@dataclass(frozen=True, eq=False)
class SpectralSolution:
    """Truncated cosine series for the zero-flux diffusion problem.

    ``coefficients[0]`` is the flat mode 1/(b-a); ``coefficients[k]``
    multiplies ``cos(k*pi*(x-a)/(b-a))`` before time decay is applied.
    """

    a: float
    b: float
    coefficients: np.ndarray
    t: float

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Series values at positions `x`, with decay at time `t` applied."""
        x = np.asarray(x, dtype=float)
        length = self.b - self.a
        k = np.arange(1, self.coefficients.size)
        freq = k * np.pi / length
        damped = self.coefficients[1:] * np.exp(-(freq**2) * self.t)
        return self.coefficients[0] + np.cos(np.outer(x - self.a, freq)) @ damped

    def mean(self) -> float:
        """First moment of the series, integrated analytically.

        Uses ``int_0^L xi*cos(k*pi*xi/L) dxi = L^2*((-1)^k - 1)/(k*pi)^2``.
        """
        length = self.b - self.a
        k = np.arange(1, self.coefficients.size)
        damped = self.coefficients[1:] * np.exp(-((k * np.pi / length) ** 2) * self.t)
        moment = length**2 * ((-1.0) ** k - 1.0) / (k * np.pi) ** 2
        # Total mass is coefficients[0]*L = 1; shift by `a` to leave the
        # reference frame of the series argument.
        return float(self.a + length**2 * self.coefficients[0] / 2.0 + damped @ moment)


def spectral_neumann(sample: DataSample, t: float, k_max: int) -> SpectralSolution:
    """Cosine-series solution at time `t` for the zero-flux problem seeded by `sample`.

    Mode k carries coefficient ``2/(N*L) * sum_i cos(k*pi*(b_i - a)/L)``;
    the flat mode is 1/L, so the series integrates to one for any
    truncation.
    """
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t!r}")
    k_max = check_positive_int(k_max, "k_max")
    length = sample.b - sample.a
    k = np.arange(1, k_max + 1)
    phases = np.cos(np.outer(k, (sample.points - sample.a) * (np.pi / length)))
    coeffs = np.empty(k_max + 1)
    coeffs[0] = 1.0 / length
    coeffs[1:] = (2.0 / (sample.n * length)) * phases.sum(axis=1)
    return SpectralSolution(a=sample.a, b=sample.b, coefficients=coeffs, t=t)


def reference_run(
    mesh: Mesh1D,
    u0: np.ndarray,
    bc: BcKind,
    t_final: float,
    refinement: int,
) -> np.ndarray:
    """Fine-step implicit Euler solution: ``t_final/(100*refinement)`` per step."""
    refinement = check_positive_int(refinement, "refinement")
    config = SolverConfig(dt=t_final / (100 * refinement), t_final=t_final, bc=bc)
    return run(mesh, u0, config).final_density


def l2_error(u: np.ndarray, v: np.ndarray, mass_matrix: SymTridiagonal) -> float:
    """L2 norm of the piecewise-linear difference, ``sqrt((u-v) @ Mass @ (u-v))``."""
    d = np.asarray(u, dtype=float) - np.asarray(v, dtype=float)
    return float(np.sqrt(max(d @ mass_matrix.matvec(d), 0.0)))
