"""Perron root and vector, equitable partitions, quotient matrices and bounds."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exact import charpoly, largest_real_root
from .graph import Graph, blocks, turan_parts


@dataclass(frozen=True, eq=False)
class SpectralResult:
    radius: float
    eigenvector: np.ndarray
    iterations: int
    residual: float

    def to_json(self) -> str:
        return json.dumps({
            "radius": f"{self.radius:.12f}",
            "iterations": self.iterations,
            "residual": self.residual,
        })


class ConvergenceError(RuntimeError):
    pass


def spectral_radius(g: Graph, tol: float = 1e-12, max_iter: int = 1_000_000) -> SpectralResult:
    """Perron pair of a connected graph by power iteration on A + I.

    The identity shift keeps the iteration convergent on bipartite graphs,
    where -rho is also an eigenvalue of A.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not g.is_connected():
        raise ValueError("spectral_radius needs a connected graph")
    n = g.n
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0, 0.0)
    a = g.adjacency.astype(float)
    x = np.full(n, 1.0 / math.sqrt(n))
    ax = a @ x
    rho = float(x @ ax)
    for it in range(1, max_iter + 1):
        y = ax + x
        x = y / np.linalg.norm(y)
        ax = a @ x
        new = float(x @ ax)
        residual = float(np.max(np.abs(ax - new * x)))
        if abs(new - rho) < tol and residual < 10 * tol:
            return SpectralResult(new, x, it, residual)
        rho = new
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def rayleigh_quotient(g: Graph, x) -> float:
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError("vector length must equal the number of vertices")
    if abs(np.linalg.norm(x) - 1.0) > 1e-12:
        raise ValueError("rayleigh_quotient needs a unit vector")
    return float(x @ g.adjacency.astype(float) @ x)


def exact_radius(g: Graph, precision: float = 1e-12) -> float:
    """Largest root of the full characteristic polynomial (works when disconnected)."""
    return largest_real_root(charpoly(g.int_matrix()), precision)


# --------------------------------------------------------------------------
# Equitable partitions
# --------------------------------------------------------------------------

Partition = tuple[tuple[int, ...], ...]


def make_partition(cells: Sequence[Sequence[int]], n: int) -> Partition:
    cells = tuple(tuple(int(v) for v in c) for c in cells)
    flat = [v for c in cells for v in c]
    if any(len(c) == 0 for c in cells):
        raise ValueError("partition cells must be nonempty")
    if sorted(flat) != list(range(n)):
        raise ValueError("cells must be disjoint and cover every vertex")
    return cells


def natural_partition(parts: Sequence[int]) -> Partition:
    """Blocks V_1, ..., V_k of a blow-up under block vertex ordering."""
    return tuple(tuple(b) for b in blocks(parts))


def singleton_partition(n: int) -> Partition:
    return tuple((v,) for v in range(n))


def _block_row_sums(g: Graph, p: Partition) -> list[list[np.ndarray]]:
    a = g.adjacency.astype(int)
    return [[a[np.ix_(ci, cj)].sum(axis=1) for cj in p] for ci in p]


def is_equitable(g: Graph, p: Partition) -> bool:
    p = make_partition(p, g.n)
    return all(np.all(s == s[0]) for row in _block_row_sums(g, p) for s in row)


def quotient(g: Graph, p: Partition) -> np.ndarray:
    """Quotient matrix B of an equitable partition (b_ij = row sum of block ij)."""
    p = make_partition(p, g.n)
    sums = _block_row_sums(g, p)
    if not all(np.all(s == s[0]) for row in sums for s in row):
        raise ValueError("partition is not equitable")
    return np.array([[int(s[0]) for s in row] for row in sums], dtype=np.int64)


def blowup_quotient(base: Graph, parts: Sequence[int]) -> np.ndarray:
    """B for the natural partition of base o parts, without building the blow-up."""
    a = base.adjacency.astype(np.int64)
    return a * np.asarray(parts, dtype=np.int64)[None, :]


def quotient_radius(g: Graph, p: Partition, tol: float = 1e-12) -> float:
    """rho(B) as the largest real root of the exact charpoly of B."""
    return largest_real_root(charpoly(quotient(g, p).tolist()), tol)


# --------------------------------------------------------------------------
# Bounds and closed forms
# --------------------------------------------------------------------------

def edge_count_bound(g: Graph) -> float:
    """sqrt(2m - n + 1), an upper bound on rho for connected graphs."""
    if not g.is_connected():
        raise ValueError("edge_count_bound needs a connected graph")
    return math.sqrt(2 * g.m - g.n + 1)


def turan_radius_closed_form(n: int, r: int) -> float:
    turan_parts(n, r)  # validates 1 <= r <= n
    q = n // r
    ceil_q = -(-n // r)
    disc = (n + 1) ** 2 - 4 * (n - r * q) * ceil_q
    return 0.5 * (n - 2 * q - 1 + math.sqrt(disc))
