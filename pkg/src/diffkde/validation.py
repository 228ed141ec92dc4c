"""Small input-validation helpers used throughout the package."""

from __future__ import annotations

import numpy as np


def check_domain(a: float, b: float) -> tuple[float, float]:
    """Return (a, b) as floats, requiring b > a."""
    a, b = float(a), float(b)
    if not b > a:
        raise ValueError(f"domain must satisfy b > a, got a={a!r}, b={b!r}")
    return a, b


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    """Return `value` as int, requiring it to be at least `minimum`."""
    ivalue = int(value)
    if ivalue != value or ivalue < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return ivalue


def as_points_1d(X) -> np.ndarray:
    """Coerce sample input to a 1D float array.

    Accepts a 1D array-like or a single-column 2D array (the usual
    ``(n_samples, 1)`` estimator input). Rejects empty and non-finite data.
    """
    pts = np.asarray(X, dtype=float)
    if pts.ndim == 2 and pts.shape[1] == 1:
        pts = pts[:, 0]
    if pts.ndim != 1:
        raise ValueError(
            f"expected 1D data or a single-column 2D array, got shape {pts.shape}"
        )
    if pts.size == 0:
        raise ValueError("sample is empty")
    if not np.all(np.isfinite(pts)):
        raise ValueError("sample contains non-finite values")
    return pts
