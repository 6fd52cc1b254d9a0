"""Simple undirected graphs on vertices 0..n-1.

Adjacency is packed into a single integer holding the upper triangle in
graph6 order: pair (i, j) with i < j lives at bit ``j*(j-1)//2 + i``.
Per-vertex neighbour bitmasks are derived once and cached.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph6 text."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation needs a connected graph."""


def _pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    order: int
    bits: int = 0
    _rows: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ValueError(f"graph order must be >= 1, got {n}")
        if self.bits < 0 or self.bits >> (n * (n - 1) // 2):
            raise ValueError("adjacency bits exceed the triangle of an order-%d graph" % n)
        rows = [0] * n
        b = self.bits
        for j in range(1, n):
            base = j * (j - 1) // 2
            col = (b >> base) & ((1 << j) - 1)
            rows[j] = col
            i = 0
            while col:
                if col & 1:
                    rows[i] |= 1 << j
                col >>= 1
                i += 1
        object.__setattr__(self, "_rows", tuple(rows))

    # -- construction -------------------------------------------------
    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        bits = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            bits |= 1 << _pair_index(u, v)
        return cls(n, bits)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from neighbour bitmasks (must already be symmetric)."""
        n = len(rows)
        bits = 0
        for j in range(1, n):
            bits |= (rows[j] & ((1 << j) - 1)) << (j * (j - 1) // 2)
        g = cls(n, bits)
        if g._rows != tuple(rows):
            raise ValueError("rows are not a symmetric irreflexive relation")
        return g

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        n = len(matrix)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if matrix[i][j]]
        for i in range(n):
            if matrix[i][i]:
                raise ValueError(f"self-loop at vertex {i}")
            for j in range(i + 1, n):
                if bool(matrix[i][j]) != bool(matrix[j][i]):
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        return cls.from_edges(n, edges)

    # -- queries -------------------------------------------------------
    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return bool(self.bits >> _pair_index(u, v) & 1)

    def neighbors(self, v: int) -> list[int]:
        r = self._rows[v]
        return [u for u in range(self.order) if r >> u & 1]

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self._rows)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(self.order), 2) if self.has_edge(i, j)]

    def adjacency_matrix(self):
        import numpy as np

        n = self.order
        a = np.zeros((n, n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    # -- edits ---------------------------------------------------------
    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        return Graph(self.order, self.bits | 1 << _pair_index(u, v))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        return Graph(self.order, self.bits & ~(1 << _pair_index(u, v)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` of ``self`` becomes vertex ``perm[v]`` of the result."""
        return Graph.from_edges(self.order, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        index = {v: k for k, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def __str__(self) -> str:
        return f"Graph(n={self.order}, m={self.size}, g6={to_graph6(self)})"


# -- graph algebra -----------------------------------------------------

def complement(g: Graph) -> Graph:
    n = g.order
    return Graph(n, g.bits ^ ((1 << (n * (n - 1) // 2)) - 1))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise ValueError("disjoint_union needs at least one graph")
    edges = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.order
    return Graph.from_edges(offset, edges)


def join(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.order
    g = disjoint_union([g1, g2])
    cross = [(u, n1 + v) for u in range(n1) for v in range(g2.order)]
    return Graph(g.order, g.bits | Graph.from_edges(g.order, cross).bits)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    rows = g.rows
    unseen = (1 << g.order) - 1
    blocks = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= rows[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~comp
            comp |= frontier
        unseen &= ~comp
        blocks.append([v for v in range(g.order) if comp >> v & 1])
    return blocks


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


# -- primitives ----------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, (1 << (n * (n - 1) // 2)) - 1)


def empty_graph(n: int) -> Graph:
    return Graph(n, 0)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """S_n: one centre (vertex 0) joined to n-1 leaves."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def kite_graph(n: int, omega: int) -> Graph:
    """Ki_{n,omega}: clique on 0..omega-1, pendant path omega..n-1 hanging off vertex omega-1."""
    if not 1 <= omega <= n:
        raise ValueError(f"kite needs 1 <= omega <= n, got omega={omega}, n={n}")
    edges = list(combinations(range(omega), 2))
    edges += [(i, i + 1) for i in range(omega - 1, n - 1)]
    return Graph.from_edges(n, edges)


def complete_minus_edge(n: int) -> Graph:
    if n < 2:
        raise ValueError("K_n - e needs n >= 2")
    return complete_graph(n).remove_edge(0, 1)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if any(t < 1 for t in parts):
        raise ValueError(f"part sizes must be positive: {list(parts)}")
    return complement(disjoint_union([complete_graph(t) for t in parts]))


# -- graph6 ----------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.order
    if n > 62:
        raise ValueError("graph6 output supports n <= 62")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    # bits are stored little-endian in pair order; graph6 wants them big-endian
    out = [chr(63 + n)]
    b = g.bits
    for k in range(nchars):
        val = 0
        for t in range(6):
            idx = 6 * k + t
            val = (val << 1) | (b >> idx & 1 if idx < nbits else 0)
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} at position {pos} outside graph6 range 63..126")
    if s[0] == "~":
        raise GraphFormatError("long-form graph6 header (n > 62) is not supported")
    n = ord(s[0]) - 63
    if n < 1:
        raise GraphFormatError("graph6 order must be at least 1")
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = s[1:]
    if len(body) < nchars:
        raise GraphFormatError(f"truncated: order {n} needs {nchars} data bytes, got {len(body)}")
    if len(body) > nchars:
        raise GraphFormatError(f"trailing data after {nchars} data bytes")
    bits = 0
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        for t in range(6):
            idx = 6 * k + t
            if val >> (5 - t) & 1:
                if idx >= nbits:
                    raise GraphFormatError("non-zero padding bits")
                bits |= 1 << idx
    return Graph(n, bits)
