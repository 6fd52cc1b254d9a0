"""Connected graphs of small order, one per isomorphism class.

Every connected graph on n vertices has a non-cut vertex, so each class on n
vertices arises by attaching a new vertex to some connected graph on n - 1
vertices. An extension is kept only when the new vertex could be the
designated deletion vertex (a non-cut vertex with the largest local
invariant); survivors are then deduplicated by canonical form.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .canonical import canonical_form
from .graph import Graph, GraphFormatError, from_graph6, is_connected, to_graph6

log = logging.getLogger(__name__)

MAX_ORDER = 9
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


class CorpusError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


@dataclass
class GraphStream:
    """A finite, re-iterable sequence of connected graphs of one order."""

    source: str
    order: Optional[int]
    graphs: tuple[Graph, ...]

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


def _vertex_key(rows, v):
    r = rows[v]
    nbr_degrees = []
    x = r
    while x:
        low = x & -x
        nbr_degrees.append(rows[low.bit_length() - 1].bit_count())
        x ^= low
    return (r.bit_count(), tuple(sorted(nbr_degrees)))


def _is_cut_vertex(rows, n, v):
    full = ((1 << n) - 1) & ~(1 << v)
    start = full & -full
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= full & ~seen
        seen |= nxt
        frontier = nxt
    return seen != full


def _accept(rows, n, v):
    """Could ``v`` be the designated deletion vertex of this graph?"""
    kv = _vertex_key(rows, v)
    if _is_cut_vertex(rows, n, v):
        return False
    for u in range(n):
        if u != v and _vertex_key(rows, u) > kv and not _is_cut_vertex(rows, n, u):
            return False
    return True


@lru_cache(maxsize=None)
def _connected_forms(n: int) -> tuple[str, ...]:
    if n == 1:
        return (to_graph6(Graph(1)),)
    parents = _connected_forms(n - 1)
    seen = set()
    new = n - 1
    for g6 in parents:
        parent = from_graph6(g6)
        base_rows = list(parent.rows) + [0]
        for nbhd in range(1, 1 << new):
            rows = base_rows[:]
            rows[new] = nbhd
            x = nbhd
            while x:
                low = x & -x
                rows[low.bit_length() - 1] |= 1 << new
                x ^= low
            if not _accept(rows, n, new):
                continue
            seen.add(canonical_form(Graph.from_rows(rows)))
    log.debug("order %d: %d classes from %d parents", n, len(seen), len(parents))
    return tuple(sorted(seen))


def enumerate_connected(n: int) -> GraphStream:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ORDER}, got {n}")
    graphs = tuple(from_graph6(s) for s in _connected_forms(n))
    return GraphStream("generated", n, graphs)


def parse_corpus_lines(lines: Iterable[str], expect_order: Optional[int] = None,
                       dedup: bool = False, source: str = "corpus") -> GraphStream:
    graphs = []
    seen = set()
    order = expect_order
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        try:
            g = from_graph6(line.strip())
        except GraphFormatError as e:
            raise CorpusError(f"cannot parse {line!r}: {e}", lineno) from None
        if expect_order is not None and g.order != expect_order:
            raise CorpusError(f"order {g.order} does not match expected order {expect_order}", lineno)
        if order is None:
            order = g.order
        elif g.order != order:
            raise CorpusError(f"mixed orders in corpus ({order} and {g.order})", lineno)
        if not is_connected(g):
            raise CorpusError(f"graph {line!r} is disconnected", lineno)
        if dedup:
            cf = canonical_form(g)
            if cf in seen:
                continue
            seen.add(cf)
        graphs.append(g)
    return GraphStream(source, order, tuple(graphs))


def stream_corpus(path, expect_order: Optional[int] = None, dedup: bool = False) -> GraphStream:
    path = Path(path)
    with path.open("r", encoding="ascii") as fh:
        return parse_corpus_lines(fh, expect_order=expect_order, dedup=dedup, source=str(path))


def write_corpus(stream: Iterable[Graph], path) -> int:
    count = 0
    with Path(path).open("w", encoding="ascii", newline="\n") as fh:
        for g in stream:
            fh.write(to_graph6(g) + "\n")
            count += 1
    return count
