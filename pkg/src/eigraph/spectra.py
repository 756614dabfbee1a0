"""Dense symmetric eigenvalues via cyclic Jacobi, plus graph matrix builders.

The solver sweeps all (p,q) pairs in row-major order, annihilating each
off-diagonal entry with a Givens rotation, until the off-diagonal Frobenius
norm drops below tol * max(||M||_F, 1).  The floor of 1 keeps the threshold
meaningful for near-zero matrices.  Eigenvalues only; eigenvectors are never
accumulated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import NonConvergence, ZeroVector
from .graphs import Graph, complement

SOLVER_TOL = 1e-10
MAX_SWEEPS = 100

DESCENDING = "descending"
ASCENDING = "ascending"


@dataclass(frozen=True)
class SymMatrix:
    """Dense real symmetric matrix; symmetry is exact, checked at construction."""

    order: int
    data: np.ndarray

    @staticmethod
    def from_array(arr: np.ndarray) -> "SymMatrix":
        a = np.asarray(arr, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise ValueError("matrix is not exactly symmetric")
        a = a.copy(order="C")
        a.flags.writeable = False
        return SymMatrix(order=a.shape[0], data=a)


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a symmetric matrix, sorted per `ordering`.

    `residual` is the final off-diagonal Frobenius norm of the solver; it is
    at most tol * max(||M||_F, 1) whenever the solver converged.
    """

    values: tuple[float, ...]
    ordering: str
    residual: float

    def at(self, k: int) -> float:
        """1-based access: at(1) is the first value in the declared ordering."""
        if not (1 <= k <= len(self.values)):
            raise IndexError(f"index {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def to_json_dict(self) -> dict:
        return {"order": self.ordering, "values": list(self.values), "residual": self.residual}


def adjacency_matrix(g: Graph) -> SymMatrix:
    """0/1 symmetric matrix with zero diagonal."""
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for i, j in g.edges():
        a[i - 1, j - 1] = 1.0
        a[j - 1, i - 1] = 1.0
    a.flags.writeable = False
    return SymMatrix(order=g.n, data=a)


def laplacian_matrix(g: Graph) -> SymMatrix:
    """Degree diagonal minus adjacency; every row sums to zero."""
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for i, j in g.edges():
        a[i - 1, j - 1] = -1.0
        a[j - 1, i - 1] = -1.0
        a[i - 1, i - 1] += 1.0
        a[j - 1, j - 1] += 1.0
    a.flags.writeable = False
    return SymMatrix(order=g.n, data=a)


@njit(cache=True)
def _jacobi_sweeps(a, tol, max_sweeps):  # pragma: no cover - compiled
    n = a.shape[0]
    fro2 = 0.0
    off2 = 0.0
    for i in range(n):
        for j in range(n):
            fro2 += a[i, j] * a[i, j]
            if i != j:
                off2 += a[i, j] * a[i, j]
    floor = fro2 ** 0.5
    if floor < 1.0:
        floor = 1.0
    thresh = tol * floor
    off = off2 ** 0.5
    sweeps = 0
    while off > thresh and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                tau = (aqq - app) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + (1.0 + tau * tau) ** 0.5)
                else:
                    t = -1.0 / (-tau + (1.0 + tau * tau) ** 0.5)
                c = 1.0 / (1.0 + t * t) ** 0.5
                s = t * c
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i, p]
                        aiq = a[i, q]
                        a[i, p] = c * aip - s * aiq
                        a[p, i] = a[i, p]
                        a[i, q] = c * aiq + s * aip
                        a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off2 = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off2 += 2.0 * a[i, j] * a[i, j]
        off = off2 ** 0.5
    return off, sweeps


def sym_eigenvalues(
    m: SymMatrix,
    tol: float = SOLVER_TOL,
    ordering: str = DESCENDING,
    max_sweeps: int = MAX_SWEEPS,
) -> Spectrum:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Raises NonConvergence (carrying the residual) if the off-diagonal norm
    is still above threshold after `max_sweeps` full sweeps.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if ordering not in (DESCENDING, ASCENDING):
        raise ValueError(f"unknown ordering {ordering!r}")
    work = np.array(m.data, dtype=np.float64, order="C", copy=True)
    residual, _ = _jacobi_sweeps(work, tol, max_sweeps)
    fro = float(np.linalg.norm(m.data))
    if residual > tol * max(fro, 1.0):
        raise NonConvergence(
            f"off-diagonal norm {residual:.3e} above threshold after {max_sweeps} sweeps",
            residual=float(residual),
        )
    vals = np.sort(np.diag(work))
    if ordering == DESCENDING:
        vals = vals[::-1]
    return Spectrum(values=tuple(float(v) for v in vals), ordering=ordering, residual=float(residual))


def adjacency_spectrum(g: Graph, tol: float = SOLVER_TOL) -> Spectrum:
    """Adjacency eigenvalues, largest first."""
    return sym_eigenvalues(adjacency_matrix(g), tol=tol, ordering=DESCENDING)


def laplacian_spectrum(g: Graph, tol: float = SOLVER_TOL) -> Spectrum:
    """Laplacian eigenvalues, smallest first; the first is 0 up to tol."""
    return sym_eigenvalues(laplacian_matrix(g), tol=tol, ordering=ASCENDING)


def rayleigh_quotient(m: SymMatrix, x) -> float:
    """<Mx, x> / <x, x>; always between the extreme eigenvalues of m."""
    v = np.asarray(x, dtype=np.float64).reshape(-1)
    if v.shape[0] != m.order:
        raise ValueError(f"vector length {v.shape[0]} != matrix order {m.order}")
    denom = float(v @ v)
    if denom == 0.0:
        raise ZeroVector("Rayleigh quotient of the zero vector")
    return float(v @ (m.data @ v)) / denom


@dataclass(frozen=True)
class GraphSpectra:
    """Adjacency and Laplacian spectra of a graph and of its complement."""

    graph: Graph
    co_graph: Graph
    mu: Spectrum        # adjacency of graph, descending
    lam: Spectrum       # Laplacian of graph, ascending
    mu_co: Spectrum     # adjacency of complement, descending
    lam_co: Spectrum    # Laplacian of complement, ascending


def graph_spectra(g: Graph, tol: float = SOLVER_TOL) -> GraphSpectra:
    """The four spectra shared by the inequality checks and family metrics.

    NonConvergence from any of the four solves is re-raised with the
    offending matrix named.
    """
    gb = complement(g)
    out = []
    for label, grph, builder, order in (
        ("adjacency(G)", g, adjacency_matrix, DESCENDING),
        ("laplacian(G)", g, laplacian_matrix, ASCENDING),
        ("adjacency(complement)", gb, adjacency_matrix, DESCENDING),
        ("laplacian(complement)", gb, laplacian_matrix, ASCENDING),
    ):
        try:
            out.append(sym_eigenvalues(builder(grph), tol=tol, ordering=order))
        except NonConvergence as exc:
            raise NonConvergence(f"{label}: {exc}", residual=exc.residual) from exc
    return GraphSpectra(graph=g, co_graph=gb, mu=out[0], lam=out[1], mu_co=out[2], lam_co=out[3])
