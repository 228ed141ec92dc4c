"""Independent dense/quadrature oracles used only by the tests.

These deliberately avoid the package's own solve paths: dense matrices are
built entry by entry, solved by hand-rolled Gaussian elimination (or LAPACK
via numpy for bulk cases), and integrals are done with per-element Simpson
quadrature, which is exact for products of piecewise-linear functions.
"""

import numpy as np


def tridiag_dense(tri) -> np.ndarray:
    """Dense copy of a SymTridiagonal."""
    a = np.diag(np.asarray(tri.diag, dtype=float))
    off = np.asarray(tri.off, dtype=float)
    a += np.diag(off, 1) + np.diag(off, -1)
    return a


def operator_dense(op) -> np.ndarray:
    """Dense copy of a BcOperator (stiffness minus rank-one correction)."""
    a = tridiag_dense(op.stiffness)
    if op.correction_vector is not None:
        w = np.asarray(op.correction_vector, dtype=float)
        a = a - op.correction_scale * np.outer(w, w)
    return a


def gauss_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Gaussian elimination with partial pivoting, written out longhand."""
    a = np.array(a, dtype=float)
    x = np.array(b, dtype=float)
    n = a.shape[0]
    for col in range(n - 1):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot, col] == 0.0:
            raise ZeroDivisionError("singular matrix")
        if pivot != col:
            a[[col, pivot]] = a[[pivot, col]]
            x[[col, pivot]] = x[[pivot, col]]
        for row in range(col + 1, n):
            factor = a[row, col] / a[col, col]
            a[row, col:] -= factor * a[col, col:]
            x[row] -= factor * x[col]
    for row in range(n - 1, -1, -1):
        x[row] = (x[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    return x


def simpson_l2(u: np.ndarray, v: np.ndarray, mesh) -> float:
    """L2 norm of the piecewise-linear difference via per-element Simpson.

    The integrand is quadratic on each element, so Simpson is exact.
    """
    d = np.asarray(u, dtype=float) - np.asarray(v, dtype=float)
    left, right = d[:-1], d[1:]
    mid = 0.5 * (left + right)
    total = (mesh.h / 6.0) * np.sum(left**2 + 4.0 * mid**2 + right**2)
    return float(np.sqrt(total))
