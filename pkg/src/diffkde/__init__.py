"""Kernel density estimation on an interval by diffusion smoothing.

A discrete 1D sample is placed on a uniform finite-element mesh as an
average of point masses and evolved under the heat equation. The stopping
time plays the role of the bandwidth. Two boundary treatments are
available: zero-flux (Neumann) boundaries, which conserve total probability
mass but let the sample mean drift, and a nonlocal pair of conditions that
conserves mass and mean simultaneously. Conservation holds exactly for the
discrete functionals, up to linear-solver roundoff, and is tracked per step.
"""

from .assembly import (
    BcKind,
    BcOperator,
    SymTridiagonal,
    assemble_mass,
    assemble_stiffness,
    build_bc_operator,
)
from .diagnostics import DiagnosticsRecord, discrete_mass, discrete_mean, record
from .errors import (
    NumericalError,
    OutOfDomainError,
    RankOneBreakdownError,
    SampleFormatError,
    SingularPivotError,
)
from .estimator import DiffusionDensity
from .mesh import Mesh1D, build_mesh
from .reference import SpectralSolution, l2_error, reference_run, spectral_neumann
from .sample import DataSample, generate_uniform, histogram, load_sample, project_deltas
from .solver import (
    SolverConfig,
    Trajectory,
    run,
    solve_rank_one_corrected,
    solve_tridiag,
    step_implicit_euler,
)

__version__ = "0.1.0"

__all__ = [
    "BcKind",
    "BcOperator",
    "DataSample",
    "DiagnosticsRecord",
    "DiffusionDensity",
    "Mesh1D",
    "NumericalError",
    "OutOfDomainError",
    "RankOneBreakdownError",
    "SampleFormatError",
    "SingularPivotError",
    "SolverConfig",
    "SpectralSolution",
    "SymTridiagonal",
    "Trajectory",
    "assemble_mass",
    "assemble_stiffness",
    "build_bc_operator",
    "build_mesh",
    "discrete_mass",
    "discrete_mean",
    "generate_uniform",
    "histogram",
    "l2_error",
    "load_sample",
    "project_deltas",
    "record",
    "reference_run",
    "run",
    "solve_rank_one_corrected",
    "solve_tridiag",
    "spectral_neumann",
    "step_implicit_euler",
]
