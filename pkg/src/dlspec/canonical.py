"""Canonical labeling for small graphs.

Colour refinement followed by a backtracking search over individualised
vertices. Leaves are compared by their upper-triangle bit string in graph6
order and the lexicographically largest one wins. Automorphisms discovered
at equal leaves prune sibling branches in the same orbit of the pointwise
stabiliser of the current path.
"""
from __future__ import annotations

from functools import lru_cache

from .graph import Graph, to_graph6

MAX_CANONICAL_ORDER = 12


def _refine(rows, cells):
    """Refine an ordered partition until equitable.

    Cells are split by each vertex's neighbour counts into every current cell;
    sub-cells are ordered by that signature so the result is labeling-invariant.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {}
            for v in c:
                r = rows[v]
                key = tuple((r & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new_cells.append(c)
                continue
            changed = True
            for key in sorted(sig):
                new_cells.append(sig[key])
        cells = new_cells
        if not changed:
            return cells


def _leaf_key(rows, order):
    key = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            key = (key << 1) | (rj >> order[i] & 1)
    return key


def _orbit_of(x, candidates, gens, n):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[ra] = rb
    root = find(x)
    return any(find(c) == root for c in candidates)


def canonical_labeling(g: Graph) -> list[int]:
    """Return the canonical vertex ordering: position k holds vertex ``order[k]``."""
    n = g.order
    if n > MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical labeling supports order <= {MAX_CANONICAL_ORDER}, got {n}")
    rows = g.rows
    if n == 1:
        return [0]
    start = _refine(rows, [list(range(n))])
    best = {"key": -1, "order": None}
    autos = []

    def search(cells, path):
        target = None
        for c in cells:
            if len(c) > 1:
                target = c
                break
        if target is None:
            order = [c[0] for c in cells]
            key = _leaf_key(rows, order)
            if key > best["key"]:
                best["key"] = key
                best["order"] = order
            elif key == best["key"]:
                perm = [0] * n
                for a, b in zip(best["order"], order):
                    perm[a] = b
                autos.append(perm)
            return
        idx = cells.index(target)
        explored = []
        for v in list(target):
            if explored:
                gens = [p for p in autos if all(p[x] == x for x in path)]
                if gens and _orbit_of(v, explored, gens, n):
                    continue
            rest = [u for u in target if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1:]
            search(_refine(rows, child), path + [v])
            explored.append(v)

    search(start, [])
    return best["order"]


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    order = canonical_labeling(g)
    pos = [0] * g.order
    for k, v in enumerate(order):
        pos[v] = k
    return to_graph6(g.relabel(pos))


def canonical_graph(g: Graph) -> Graph:
    from .graph import from_graph6

    return from_graph6(canonical_form(g))
