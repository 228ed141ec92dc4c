"""Galerkin matrices for piecewise-linear (hat) elements on a uniform mesh.

The consistent mass matrix collects the inner products of hat functions,
the stiffness matrix the inner products of their derivatives. The spatial
operator applied during time stepping is the stiffness matrix, optionally
corrected by a symmetric rank-one term that couples the two boundary nodes
and makes the semi-discrete system conserve both the total integral of the
solution and its first moment.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .mesh import Mesh1D


class BcKind(enum.Enum):
    """Boundary handling for the diffusion operator."""

    NEUMANN = "neumann"
    MEAN_CONSERVING = "mean-conserving"


@dataclass(frozen=True, eq=False)
class SymTridiagonal:
    """Symmetric tridiagonal matrix; only the diagonal and one off-diagonal are stored."""

    diag: np.ndarray
    off: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.off, dtype=float)
        if diag.ndim != 1 or diag.size < 1:
            raise ValueError("diag must be a non-empty 1D array")
        if off.shape != (diag.size - 1,):
            raise ValueError(
                f"off must have length {diag.size - 1}, got {off.shape}"
            )
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "off", off)

    @property
    def n(self) -> int:
        return self.diag.size

    def matvec(self, u: np.ndarray) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if u.shape != (self.n,):
            raise ValueError(f"vector has length {u.size}, matrix dimension is {self.n}")
        out = self.diag * u
        out[:-1] += self.off * u[1:]
        out[1:] += self.off * u[:-1]
        return out


@dataclass(frozen=True, eq=False)
class BcOperator:
    """Effective spatial operator: stiffness plus an optional rank-one correction.

    With a correction the operator acts as ``K @ u - scale * (w @ u) * w``
    where ``w`` is +1 at the last node, -1 at the first node and zero
    elsewhere, and ``scale = 1/(b - a)``. This annihilates both the constant
    vector and the node-coordinate vector, which is exactly what makes the
    time stepping conserve mass and mean.
    """

    kind: BcKind
    stiffness: SymTridiagonal
    correction_vector: np.ndarray | None = None
    correction_scale: float = 0.0

    def apply(self, u: np.ndarray) -> np.ndarray:
        """Matrix-vector product with the effective operator."""
        out = self.stiffness.matvec(u)
        w = self.correction_vector
        if w is not None:
            out -= self.correction_scale * (w @ u) * w
        return out


def assemble_mass(mesh: Mesh1D) -> SymTridiagonal:
    """Consistent mass matrix: interior diagonal 2h/3, boundary h/3, off-diagonal h/6."""
    h = mesh.h
    diag = np.full(mesh.n_nodes, 2.0 * h / 3.0)
    diag[0] = diag[-1] = h / 3.0
    off = np.full(mesh.n_nodes - 1, h / 6.0)
    return SymTridiagonal(diag, off)


def assemble_stiffness(mesh: Mesh1D) -> SymTridiagonal:
    """Stiffness matrix: interior diagonal 2/h, boundary 1/h, off-diagonal -1/h."""
    h = mesh.h
    diag = np.full(mesh.n_nodes, 2.0 / h)
    diag[0] = diag[-1] = 1.0 / h
    off = np.full(mesh.n_nodes - 1, -1.0 / h)
    return SymTridiagonal(diag, off)


def build_bc_operator(
    stiffness: SymTridiagonal, mesh: Mesh1D, kind: BcKind
) -> BcOperator:
    """Wrap the stiffness matrix with the boundary treatment for `kind`.

    Neumann boundaries need no modification (they are the natural, do-nothing
    choice in the weak form). The mean-conserving variant subtracts the
    rank-one boundary coupling described on :class:`BcOperator`.
    """
    if stiffness.n != mesh.n_nodes:
        raise ValueError(
            f"stiffness dimension {stiffness.n} does not match mesh with "
            f"{mesh.n_nodes} nodes"
        )
    if kind is BcKind.NEUMANN:
        return BcOperator(kind=kind, stiffness=stiffness)
    w = np.zeros(mesh.n_nodes)
    w[0] = -1.0
    w[-1] = 1.0
    w.setflags(write=False)
    return BcOperator(
        kind=kind,
        stiffness=stiffness,
        correction_vector=w,
        correction_scale=1.0 / (mesh.b - mesh.a),
    )
