"""Data-sample ingestion and projection onto the finite-element basis.

A sample is a list of points in [a, b]. Its empirical measure (an average
of point masses) is represented on the mesh by loading each point onto its
nearest node with weight 1/(N*h), then rescaling once so the piecewise
linear function integrates to exactly one. The rescale is needed because
the two boundary hat functions integrate to h/2 rather than h.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .assembly import SymTridiagonal
from .errors import OutOfDomainError, SampleFormatError
from .mesh import Mesh1D
from .validation import check_domain, check_positive_int


@dataclass(frozen=True, eq=False)
class DataSample:
    """Sample points together with the domain they are estimated on."""

    points: np.ndarray
    a: float
    b: float

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 1 or points.size == 0:
            raise ValueError("sample must be a non-empty 1D array of points")
        bad = (points < self.a) | (points > self.b) | ~np.isfinite(points)
        if bad.any():
            offenders = points[bad][:10]
            raise OutOfDomainError(
                f"{int(bad.sum())} point(s) outside [{self.a}, {self.b}]: "
                f"{offenders.tolist()}"
            )
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def n(self) -> int:
        return self.points.size


def load_sample(path, a: float, b: float) -> DataSample:
    """Read one decimal value per line from `path`.

    Lines starting with '#' and blank lines are ignored. Raises
    :class:`SampleFormatError` (with the line number) on unparseable lines
    and :class:`OutOfDomainError` when values fall outside [a, b].
    """
    a, b = check_domain(a, b)
    values = []
    bad_domain = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            value = float(line)
        except ValueError:
            raise SampleFormatError(
                f"{path}: line {lineno}: could not parse {line!r} as a number"
            ) from None
        if not np.isfinite(value) or value < a or value > b:
            bad_domain.append((lineno, value))
        values.append(value)
    if bad_domain:
        listing = ", ".join(f"{v!r} (line {ln})" for ln, v in bad_domain[:10])
        raise OutOfDomainError(
            f"{path}: {len(bad_domain)} value(s) outside [{a}, {b}]: {listing}"
        )
    if not values:
        raise SampleFormatError(f"{path}: no data lines found")
    return DataSample(points=np.array(values), a=a, b=b)


def generate_uniform(n: int, a: float, b: float, seed: int) -> DataSample:
    """Draw `n` points uniformly from [a, b] with a seeded generator.

    The same seed always produces the same sample.
    """
    a, b = check_domain(a, b)
    n = check_positive_int(n, "n")
    rng = np.random.default_rng(seed)
    return DataSample(points=rng.uniform(a, b, size=n), a=a, b=b)


def project_deltas(
    sample: DataSample, mesh: Mesh1D, mass: SymTridiagonal
) -> np.ndarray:
    """Coefficients of the sample's empirical measure on the hat-function basis.

    Each point contributes 1/(N*h) to its nearest node; the result is then
    rescaled by one global factor so that the discrete mass
    ``ones @ mass @ u`` equals one exactly.
    """
    if (sample.a, sample.b) != (mesh.a, mesh.b):
        raise ValueError(
            f"sample domain [{sample.a}, {sample.b}] does not match mesh "
            f"domain [{mesh.a}, {mesh.b}]"
        )
    u = np.zeros(mesh.n_nodes)
    idx = mesh.nearest_nodes(sample.points)
    np.add.at(u, idx, 1.0 / (sample.n * mesh.h))
    u /= mass.matvec(u).sum()
    return u


def histogram(sample: DataSample, bins: int) -> list[tuple[float, int]]:
    """Counts over `bins` equal-width bins spanning [a, b].

    Only the last bin is closed on the right, so a point at b lands in it.
    """
    bins = check_positive_int(bins, "bins")
    counts, edges = np.histogram(sample.points, bins=bins, range=(sample.a, sample.b))
    return [(float(left), int(count)) for left, count in zip(edges[:-1], counts)]
