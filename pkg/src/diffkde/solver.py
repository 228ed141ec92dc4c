"""Implicit Euler time stepping with O(n) linear solves.

Each step solves ``(Mass + dt*K_eff) u_next = Mass @ u``. The system matrix
is symmetric tridiagonal, optionally minus a rank-one boundary coupling.
The tridiagonal part is factorized once per step size (Thomas algorithm)
and the rank-one part is folded in with the Sherman-Morrison formula, so a
step never forms a dense matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .assembly import (
    BcKind,
    BcOperator,
    SymTridiagonal,
    assemble_mass,
    assemble_stiffness,
    build_bc_operator,
)
from .diagnostics import DiagnosticsRecord, record
from .errors import NumericalError, RankOneBreakdownError, SingularPivotError
from .mesh import Mesh1D

_PIVOT_FLOOR = 1e-300
_BREAKDOWN_TOL = 1e-12


class TridiagonalFactorization:
    """LU factorization of a symmetric tridiagonal matrix, reusable across solves.

    Plain Thomas elimination without pivoting; the system matrices built in
    this package are symmetric positive definite, for which this is stable.
    """

    def __init__(self, tri: SymTridiagonal):
        diag = tri.diag.tolist()
        off = tri.off.tolist()
        n = len(diag)
        pivots = [0.0] * n
        lower = [0.0] * (n - 1)
        d = diag[0]
        if abs(d) < _PIVOT_FLOOR:
            raise SingularPivotError("zero pivot at row 0")
        pivots[0] = d
        for i in range(1, n):
            b = off[i - 1]
            m = b / d
            lower[i - 1] = m
            d = diag[i] - m * b
            if abs(d) < _PIVOT_FLOOR:
                raise SingularPivotError(f"zero pivot at row {i}")
            pivots[i] = d
        self._n = n
        self._pivots = pivots
        self._lower = lower
        self._upper = off

    @property
    def n(self) -> int:
        return self._n

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        rhs = np.asarray(rhs, dtype=float)
        n = self._n
        if rhs.shape != (n,):
            raise ValueError(f"rhs has length {rhs.size}, matrix dimension is {n}")
        lower, pivots, upper = self._lower, self._pivots, self._upper
        y = rhs.tolist()
        for i in range(1, n):
            y[i] -= lower[i - 1] * y[i - 1]
        y[n - 1] /= pivots[n - 1]
        for i in range(n - 2, -1, -1):
            y[i] = (y[i] - upper[i] * y[i + 1]) / pivots[i]
        return np.array(y)


def solve_tridiag(t: SymTridiagonal, rhs: np.ndarray) -> np.ndarray:
    """Solve ``t @ y = rhs`` by Thomas elimination."""
    return TridiagonalFactorization(t).solve(rhs)


def solve_rank_one_corrected(
    t: SymTridiagonal, w: np.ndarray, scale: float, rhs: np.ndarray
) -> np.ndarray:
    """Solve ``(t - scale * outer(w, w)) @ y = rhs`` via Sherman-Morrison.

    Two tridiagonal solves with `t` replace one solve with the corrected
    matrix: ``y = y0 + scale*(w @ y0) / (1 - scale*(w @ z)) * z`` where
    ``t @ y0 = rhs`` and ``t @ z = w``.
    """
    fact = TridiagonalFactorization(t)
    y0 = fact.solve(rhs)
    if scale == 0.0:
        return y0
    w = np.asarray(w, dtype=float)
    z = fact.solve(w)
    denom = 1.0 - scale * (w @ z)
    if abs(denom) < _BREAKDOWN_TOL:
        raise RankOneBreakdownError(
            f"rank-one correction denominator {denom!r} is numerically zero"
        )
    return y0 + (scale * (w @ y0) / denom) * z


class _EulerStepper:
    """One implicit Euler step, with the factorization held for reuse."""

    def __init__(self, mass: SymTridiagonal, op: BcOperator, dt: float):
        if dt <= 0.0:
            raise ValueError(f"dt must be positive, got {dt!r}")
        system = SymTridiagonal(
            mass.diag + dt * op.stiffness.diag, mass.off + dt * op.stiffness.off
        )
        self._mass = mass
        self._fact = TridiagonalFactorization(system)
        self._w = op.correction_vector
        if self._w is not None:
            self._scale = dt * op.correction_scale
            self._z = self._fact.solve(self._w)
            denom = 1.0 - self._scale * (self._w @ self._z)
            if abs(denom) < _BREAKDOWN_TOL:
                raise RankOneBreakdownError(
                    f"rank-one correction denominator {denom!r} is numerically zero"
                )
            self._denom = denom

    def step(self, u: np.ndarray) -> np.ndarray:
        y = self._fact.solve(self._mass.matvec(u))
        if self._w is not None:
            y += (self._scale * (self._w @ y) / self._denom) * self._z
        return y


def step_implicit_euler(
    u: np.ndarray, mass: SymTridiagonal, op: BcOperator, dt: float
) -> np.ndarray:
    """Advance `u` by one implicit Euler step of size `dt`."""
    return _EulerStepper(mass, op, dt).step(np.asarray(u, dtype=float))


@dataclass(frozen=True)
class SolverConfig:
    """Time-stepping parameters.

    `t_final` is the diffusion time, i.e. the smoothing bandwidth. The run
    takes ``ceil(t_final/dt)`` steps, shortening the last one to land on
    `t_final` exactly. `snapshot_stride` keeps every k-th state in the
    trajectory; by default only the initial and final states are kept.
    """

    dt: float
    t_final: float
    bc: BcKind
    snapshot_stride: int | None = None

    def __post_init__(self):
        if self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt!r}")
        if self.t_final <= 0.0:
            raise ValueError(f"t_final must be positive, got {self.t_final!r}")
        if self.dt > self.t_final:
            raise ValueError(
                f"dt={self.dt!r} exceeds t_final={self.t_final!r}"
            )
        if self.snapshot_stride is not None and self.snapshot_stride < 1:
            raise ValueError(
                f"snapshot_stride must be >= 1, got {self.snapshot_stride!r}"
            )

    @property
    def num_steps(self) -> int:
        # Guard against ratios like 0.1/1e-3 landing a hair above an
        # integer and spawning a spurious extra step.
        return max(1, math.ceil((self.t_final / self.dt) * (1.0 - 1e-12)))


@dataclass(frozen=True, eq=False)
class Trajectory:
    """States and per-step diagnostics produced by :func:`run`."""

    times: np.ndarray
    snapshots: list[np.ndarray]
    snapshot_times: np.ndarray
    diagnostics: list[DiagnosticsRecord] = field(repr=False)

    @property
    def final_density(self) -> np.ndarray:
        return self.snapshots[-1]


def run(mesh: Mesh1D, u0: np.ndarray, config: SolverConfig) -> Trajectory:
    """Evolve `u0` on `mesh` to ``config.t_final``.

    Diagnostics are recorded at every step (including t=0); snapshots follow
    ``config.snapshot_stride``, always including the initial and final
    states. Solver failures are re-raised with the failing step index.
    """
    u0 = np.asarray(u0, dtype=float)
    if u0.shape != (mesh.n_nodes,):
        raise ValueError(
            f"initial coefficients have length {u0.size}, mesh has "
            f"{mesh.n_nodes} nodes"
        )
    mass = assemble_mass(mesh)
    op = build_bc_operator(assemble_stiffness(mesh), mesh, config.bc)

    n = config.num_steps
    dt = config.dt
    last_dt = config.t_final - (n - 1) * dt
    times = np.empty(n + 1)
    times[:n] = dt * np.arange(n)
    times[n] = config.t_final

    baseline = record(u0, 0.0, mass, mesh)
    diagnostics = [baseline]
    snapshots = [u0.copy()]
    snapshot_times = [0.0]
    stride = config.snapshot_stride

    stepper = _EulerStepper(mass, op, dt)
    last_stepper = stepper
    if abs(last_dt - dt) > 1e-12 * dt:
        last_stepper = _EulerStepper(mass, op, last_dt)

    u = u0
    for i in range(1, n + 1):
        try:
            u = (last_stepper if i == n else stepper).step(u)
        except NumericalError as exc:
            raise type(exc)(f"time step {i} failed: {exc}") from exc
        diagnostics.append(record(u, times[i], mass, mesh, baseline=baseline))
        if i == n or (stride is not None and i % stride == 0):
            snapshots.append(u.copy())
            snapshot_times.append(float(times[i]))

    return Trajectory(
        times=times,
        snapshots=snapshots,
        snapshot_times=np.array(snapshot_times),
        diagnostics=diagnostics,
    )
