"""Uniform 1D finite-element mesh."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfDomainError
from .validation import check_domain, check_positive_int


@dataclass(frozen=True, eq=False)
class Mesh1D:
    """Uniform partition of [a, b] into `num_elements` linear elements.

    Nodes are ``a + i*h`` for i = 0..num_elements, with the last node clamped
    to ``b`` exactly. Immutable after construction.
    """

    a: float
    b: float
    num_elements: int
    h: float
    nodes: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.num_elements + 1

    def nearest_nodes(self, xs: np.ndarray) -> np.ndarray:
        """Indices of the nodes closest to `xs` (assumed inside [a, b]).

        Exact midpoints between two nodes resolve to the lower index.
        """
        xs = np.asarray(xs, dtype=float)
        guess = np.ceil((xs - self.a) / self.h - 0.5).astype(np.intp)
        guess = np.clip(guess, 0, self.num_elements)
        # The arithmetic guess can be off by one in borderline rounding
        # cases, so compare against both neighbours. Candidate rows are in
        # ascending index order and argmin takes the first minimum, which
        # implements the lower-index tie-break.
        cand = np.stack(
            [
                np.clip(guess - 1, 0, self.num_elements),
                guess,
                np.clip(guess + 1, 0, self.num_elements),
            ]
        )
        dist = np.abs(self.nodes[cand] - xs)
        return cand[np.argmin(dist, axis=0), np.arange(xs.size)]

    def nearest_node(self, x: float) -> int:
        """Index of the node closest to `x`, ties resolved to the lower index."""
        x = float(x)
        if x < self.a or x > self.b:
            raise OutOfDomainError(f"x={x!r} lies outside [{self.a}, {self.b}]")
        return int(self.nearest_nodes(np.array([x]))[0])


def build_mesh(a: float, b: float, num_elements: int) -> Mesh1D:
    """Build a uniform mesh of `num_elements` elements on [a, b]."""
    a, b = check_domain(a, b)
    num_elements = check_positive_int(num_elements, "num_elements")
    h = (b - a) / num_elements
    nodes = a + h * np.arange(num_elements + 1)
    nodes[-1] = b
    nodes.setflags(write=False)
    return Mesh1D(a=a, b=b, num_elements=num_elements, h=h, nodes=nodes)
