"""Distance, Laplacian and distance Laplacian matrices and their spectra.

Numeric spectra come from a cyclic Jacobi eigensolver; multiplicities of
integer eigenvalues are computed exactly as ``n - rank(M - lambda*I)`` with
fraction-free (Bareiss) elimination over Python integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import DisconnectedGraphError, Graph

ABS_TOL_FLOOR = 1e-10
REL_GROUPING_TOL = 1e-8


class ConvergenceError(ArithmeticError):
    def __init__(self, residual: float, sweeps: int):
        super().__init__(f"Jacobi did not converge in {sweeps} sweeps (off-diagonal residual {residual:.3e})")
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class DistanceData:
    dist: tuple[tuple[int, ...], ...]
    transmissions: tuple[int, ...]
    diameter: int


@dataclass(frozen=True)
class SpectrumNumeric:
    """Eigenvalues grouped into (value, multiplicity), descending."""

    groups: tuple[tuple[float, int], ...]
    values: tuple[float, ...]
    tol: float

    @property
    def n(self) -> int:
        return sum(m for _, m in self.groups)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.groups)

    @property
    def radius(self) -> float:
        return max(abs(v) for v in self.values)

    def multiplicity_near(self, value: float, tol: float | None = None) -> int:
        tol = self.tol if tol is None else tol
        return sum(m for v, m in self.groups if abs(v - value) <= tol)

    def as_list(self) -> list[list]:
        return [[_clean(v), m] for v, m in self.groups]

    def __str__(self) -> str:
        return format_groups(self.groups)


def _clean(v: float):
    r = round(v)
    if abs(v - r) <= 1e-9 * max(1.0, abs(v)):
        return int(r)
    return v


def format_groups(groups) -> str:
    parts = []
    for v, m in groups:
        c = _clean(v)
        s = str(c) if isinstance(c, int) else f"{c:.6f}"
        parts.append(s if m == 1 else f"{s}^{m}")
    return ", ".join(parts)


# -- matrices ------------------------------------------------------------

def all_pairs_distances(g: Graph) -> DistanceData:
    n = g.order
    rows = g.rows
    full = (1 << n) - 1
    dist = []
    for s in range(n):
        d = [0] * n
        seen = 1 << s
        frontier = seen
        level = 0
        while frontier:
            level += 1
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            seen |= nxt
            f = nxt
            while f:
                low = f & -f
                d[low.bit_length() - 1] = level
                f ^= low
            frontier = nxt
        if seen != full:
            raise DisconnectedGraphError("distances are undefined on a disconnected graph")
        dist.append(tuple(d))
    return DistanceData(
        dist=tuple(dist),
        transmissions=tuple(sum(r) for r in dist),
        diameter=max(max(r) for r in dist),
    )


def distance_matrix(g: Graph) -> np.ndarray:
    return np.array(all_pairs_distances(g).dist, dtype=np.int64).reshape(g.order, g.order)


def distance_laplacian(g: Graph) -> np.ndarray:
    dd = all_pairs_distances(g)
    d = np.array(dd.dist, dtype=np.int64).reshape(g.order, g.order)
    return np.diag(np.array(dd.transmissions, dtype=np.int64)) - d


def laplacian(g: Graph) -> np.ndarray:
    a = g.adjacency_matrix()
    return np.diag(a.sum(axis=1)) - a


# -- numeric eigenvalues -------------------------------------------------

def jacobi_eigenvalues(m, max_sweeps: int = 30, rel_tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, descending."""
    arr = np.asarray(m, dtype=float)
    n = arr.shape[0] if arr.ndim else 0
    if arr.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix must be symmetric")
    # plain lists beat numpy slicing at these sizes
    a = arr.tolist()
    scale = float(np.max(np.abs(arr))) if n else 0.0
    threshold = rel_tol * scale
    sqrt = math.sqrt
    for sweep in range(max_sweeps + 1):
        off = max((abs(a[p][q]) for p in range(n) for q in range(p + 1, n)), default=0.0)
        if off < threshold or scale == 0.0:
            break
        if sweep == max_sweeps:
            raise ConvergenceError(off, max_sweeps)
        for p in range(n - 1):
            ap_row = a[p]
            for q in range(p + 1, n):
                apq = ap_row[q]
                if abs(apq) < threshold:
                    continue
                aq_row = a[q]
                theta = (aq_row[q] - ap_row[p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                app, aqq = ap_row[p], aq_row[q]
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = ap_row[k]
                    akq = aq_row[k]
                    nkp = c * akp - s * akq
                    nkq = s * akp + c * akq
                    ap_row[k] = a[k][p] = nkp
                    aq_row[k] = a[k][q] = nkq
                ap_row[p] = app - t * apq
                aq_row[q] = aqq + t * apq
                ap_row[q] = aq_row[p] = 0.0
    return np.sort(np.array([a[i][i] for i in range(n)], dtype=float))[::-1]


def default_grouping_tol(values) -> float:
    radius = max((abs(v) for v in values), default=0.0)
    return max(ABS_TOL_FLOOR, REL_GROUPING_TOL * max(1.0, radius))


def group_values(values, tol: float) -> tuple[tuple[float, int], ...]:
    """Greedy grouping of descending values: a value joins the current group
    when it lies within ``tol`` of the group's previous member."""
    groups = []
    members = []
    for v in values:
        if members and members[-1] - v <= tol:
            members.append(v)
        else:
            if members:
                groups.append(members)
            members = [v]
    if members:
        groups.append(members)
    return tuple((float(sum(g) / len(g)), len(g)) for g in groups)


def numeric_spectrum(m, grouping_tol: float | None = None) -> SpectrumNumeric:
    vals = jacobi_eigenvalues(m)
    tol = default_grouping_tol(vals) if grouping_tol is None else grouping_tol
    if tol <= 0:
        raise ValueError("grouping tolerance must be positive")
    values = tuple(float(v) for v in vals)
    return SpectrumNumeric(groups=group_values(values, tol), values=values, tol=tol)


# -- exact rank ------------------------------------------------------------

def bareiss_rank(m) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    a = [[int(x) for x in row] for row in m]
    nrows = len(a)
    if nrows == 0:
        return 0
    ncols = len(a[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * p - f * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def exact_integer_multiplicity(m, lam: int) -> int:
    """Multiplicity of the integer ``lam`` as an eigenvalue of the symmetric integer matrix ``m``."""
    rows = [[int(x) for x in row] for row in m]
    n = len(rows)
    for i in range(n):
        rows[i][i] -= int(lam)
    return n - bareiss_rank(rows)
