"""Closed-form spectral predictions used to cross-check the eigensolver.

Nothing here calls an eigensolver: predictions come from combinatorial data
(components, transmissions, part sizes) or from a spectrum handed in by the
caller.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .canonical import canonical_form
from .graph import (
    DisconnectedGraphError,
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_minus_edge,
    components,
    cycle_graph,
    is_connected,
    kite_graph,
    path_graph,
    star_graph,
)
from .spectra import SpectrumNumeric, all_pairs_distances, default_grouping_tol, group_values

# 4 sin^2(k pi / 8), k = 1, 2, 3
FOUR_SIN2_PI_8 = 0.58578643762690495119831127579030
FOUR_SIN2_2PI_8 = 2.0
FOUR_SIN2_3PI_8 = 3.41421356237309504880168872420970
# 4 sin^2(k pi / 4), k = 1, 2, 3
FOUR_SIN2_PI_4 = 2.0
FOUR_SIN2_2PI_4 = 4.0
FOUR_SIN2_3PI_4 = 2.0
TRIG_GUARD = 1e-12

Spectrumish = Union[SpectrumNumeric, Sequence[float]]


class TwinSetError(ValueError):
    """The vertex set handed to a twin lemma is not a valid twin set."""


# -- symbolic spectra ------------------------------------------------------

@dataclass(frozen=True)
class PatternEntry:
    """Eigenvalue ``a*n + b + c`` with multiplicity ``p*n + q``."""

    a: Fraction
    b: Fraction
    p: Fraction
    q: Fraction
    c: float = 0.0

    def value(self, n: int) -> float:
        return float(self.a * n + self.b) + self.c

    def exact_value(self, n: int) -> Fraction | None:
        if self.c != 0.0:
            return None
        return self.a * n + self.b

    def multiplicity(self, n: int) -> int:
        m = self.p * n + self.q
        if m.denominator != 1:
            raise ValueError(f"non-integral multiplicity {m} at n={n}")
        return int(m)


def entry(a=0, b=0, p=0, q=1, c=0.0) -> PatternEntry:
    return PatternEntry(Fraction(a), Fraction(b), Fraction(p), Fraction(q), float(c))


@dataclass(frozen=True)
class SpectrumPattern:
    entries: tuple[PatternEntry, ...]

    def evaluate(self, n: int) -> tuple[tuple[float, int], ...]:
        groups = tuple((e.value(n), e.multiplicity(n)) for e in self.entries)
        if any(m <= 0 for _, m in groups):
            raise ValueError(f"non-positive multiplicity at n={n}: {groups}")
        if sum(m for _, m in groups) != n:
            raise ValueError(f"multiplicities do not sum to n={n}: {groups}")
        vals = [v for v, _ in groups]
        if any(x <= y for x, y in zip(vals, vals[1:])):
            raise ValueError(f"pattern values not strictly decreasing at n={n}: {vals}")
        return groups

    def exact_entries(self, n: int) -> list[tuple[int, int]]:
        """(integer value, multiplicity) for every entry that is an integer at n."""
        out = []
        for e in self.entries:
            v = e.exact_value(n)
            if v is not None and v.denominator == 1:
                out.append((int(v), e.multiplicity(n)))
        return out


def pattern(*entries: PatternEntry) -> SpectrumPattern:
    return SpectrumPattern(tuple(entries))


_ZERO = entry(0, 0, 0, 1)

# Distance Laplacian spectra stated for the converse directions, keyed by family.
CONVERSE_SPECTRA: dict[str, SpectrumPattern] = {
    # multiplicity of n is 3, top eigenvalue n-4 times
    "F1:quarters": pattern(entry(Fraction(5, 4), 0, 1, -4), entry(1, 0, 0, 3), _ZERO),
    "F1:thirds": pattern(entry(Fraction(4, 3), Fraction(-1, 3), 1, -4), entry(1, 0, 0, 3), _ZERO),
    "F1:halves": pattern(entry(Fraction(3, 2), -1, 1, -4), entry(1, 0, 0, 3), _ZERO),
    "F3": pattern(entry(2, -3, 1, -4), entry(1, 0, 0, 3), _ZERO),
    # multiplicity of n is 2, top eigenvalue n-4 times
    "F4": pattern(entry(2, -2, 1, -4), entry(2, -4), entry(1, 0, 0, 2), _ZERO),
    "F5": pattern(entry(2, -3, 1, -4), entry(1, 2), entry(1, 0, 0, 2), _ZERO),
    "F6": pattern(entry(Fraction(3, 2), Fraction(-1, 2), 1, -4), entry(Fraction(3, 2), Fraction(-5, 2)),
                  entry(1, 0, 0, 2), _ZERO),
    "F7": pattern(entry(Fraction(3, 2), -1, 1, -4), entry(1, 2), entry(1, 0, 0, 2), _ZERO),
    "F8": pattern(entry(Fraction(4, 3), 0, 1, -4), entry(Fraction(4, 3), -2), entry(1, 0, 0, 2), _ZERO),
    # simple top eigenvalue, n twice, n-4 equal middle eigenvalues
    "F12": pattern(entry(0, 11), entry(0, 9, 0, 3), entry(0, 7, 0, 2), _ZERO),
    "F9": pattern(entry(2, -2), entry(1, 1, 1, -4), entry(1, 0, 0, 2), _ZERO),
    "F10": pattern(entry(2, -2), entry(Fraction(3, 2), -1, 1, -4), entry(1, 0, 0, 2), _ZERO),
    "F11": pattern(entry(Fraction(3, 2), 0), entry(Fraction(5, 4), 0, 1, -4), entry(1, 0, 0, 2), _ZERO),
    # eigenvalue n with multiplicity n-4
    "F20": pattern(entry(1, 4, 0, 3), entry(1, 0, 1, -4), _ZERO),
    "F21": pattern(entry(1, 2, 0, 3), entry(1, 0, 1, -4), _ZERO),
    "F13": pattern(entry(1, 4, 0, 2), entry(1, 2), entry(1, 0, 1, -4), _ZERO),
    "F14": pattern(entry(1, 3, 0, 2), entry(1, 2), entry(1, 0, 1, -4), _ZERO),
    "F15": pattern(entry(1, 4), entry(1, 1, 0, 2), entry(1, 0, 1, -4), _ZERO),
    "F16": pattern(entry(1, 4), entry(1, 2, 0, 2), entry(1, 0, 1, -4), _ZERO),
    "F17": pattern(entry(1, 0, c=FOUR_SIN2_3PI_8), entry(1, 0, c=FOUR_SIN2_2PI_8),
                   entry(1, 0, c=FOUR_SIN2_PI_8), entry(1, 0, 1, -4), _ZERO),
    "F18": pattern(entry(1, 4), entry(1, 3), entry(1, 1), entry(1, 0, 1, -4), _ZERO),
    "F19": pattern(entry(1, 3), entry(1, 2), entry(1, 1), entry(1, 0, 1, -4), _ZERO),
}


# -- spectrum transforms -----------------------------------------------------

def _values(spec: Spectrumish) -> list[float]:
    vals = list(spec.values) if isinstance(spec, SpectrumNumeric) else [float(v) for v in spec]
    return sorted(vals, reverse=True)


def _as_spectrum(values: list[float]) -> SpectrumNumeric:
    values = sorted(values, reverse=True)
    tol = default_grouping_tol(values)
    return SpectrumNumeric(groups=group_values(values, tol), values=tuple(values), tol=tol)


def _require_zero(vals: list[float], n: int):
    if len(vals) != n:
        raise ValueError(f"spectrum has {len(vals)} values, expected {n}")
    tol = default_grouping_tol(vals)
    if abs(vals[-1]) > tol:
        raise ValueError("a Laplacian spectrum must contain the eigenvalue 0")


def complement_laplacian_spectrum(l_spec: Spectrumish, n: int) -> SpectrumNumeric:
    """Laplacian spectrum of the complement: n - mu_{n-i} for i < n, plus 0."""
    mu = _values(l_spec)
    _require_zero(mu, n)
    # mu[k] is mu_{k+1}
    out = [n - mu[n - i - 1] for i in range(1, n)] + [0.0]
    return _as_spectrum(out)


def dl_spectrum_from_laplacian(l_spec: Spectrumish, n: int) -> SpectrumNumeric:
    """Distance Laplacian spectrum of a diameter <= 2 graph from its Laplacian spectrum."""
    mu = _values(l_spec)
    _require_zero(mu, n)
    out = [2 * n - mu[n - i - 1] for i in range(1, n)] + [0.0]
    return _as_spectrum(out)


# -- combinatorial predictions ----------------------------------------------

def predicted_multiplicity_of_n(g: Graph) -> int:
    if not is_connected(g):
        raise DisconnectedGraphError("multiplicity of n is only defined for connected graphs")
    return len(components(complement(g))) - 1


def multipartite_dl_spectrum(parts: Sequence[int]) -> tuple[tuple[int, int], ...]:
    if len(parts) < 2:
        raise ValueError("complete multipartite spectrum needs at least 2 parts")
    if any(t < 1 for t in parts):
        raise ValueError(f"part sizes must be positive: {list(parts)}")
    n = sum(parts)
    k = len(parts)
    mult: dict[int, int] = {}
    for t in parts:
        if t >= 2:
            mult[n + t] = mult.get(n + t, 0) + t - 1
    mult[n] = mult.get(n, 0) + k - 1
    mult[0] = 1
    return tuple(sorted(mult.items(), reverse=True))


def _shape(l_spec: Spectrumish):
    if isinstance(l_spec, SpectrumNumeric):
        return l_spec.groups
    vals = _values(l_spec)
    return group_values(vals, default_grouping_tol(vals))


def recognize_kn_minus_e(l_spec: Spectrumish, n: int) -> bool:
    """True iff the Laplacian spectrum has the shape (mu1^(n-2), mu2, 0), mu1 > mu2 > 0."""
    if n < 4:
        raise ValueError("K_n - e recognition needs n >= 4")
    groups = _shape(l_spec)
    if [m for _, m in groups] != [n - 2, 1, 1]:
        return False
    (mu1, _), (mu2, _), (zero, _) = groups
    tol = default_grouping_tol([mu1])
    return abs(zero) <= tol and mu1 > mu2 > tol


def recognize_two_distinct_mult_n2(l_spec: Spectrumish, n: int) -> str:
    """Classify a Laplacian spectrum (beta, alpha^(n-2), 0) as 'star' or 'balanced_bipartite'."""
    if n < 3:
        raise ValueError("needs n >= 3")
    groups = _shape(l_spec)
    if [m for _, m in groups] != [1, n - 2, 1]:
        return "none"
    (beta, _), (alpha, _), (zero, _) = groups
    tol = default_grouping_tol([beta])
    if abs(zero) > tol or not beta > alpha > tol:
        return "none"
    if abs(alpha - 1) <= tol:
        return "star"
    if n % 2 == 0 and abs(alpha - n / 2) <= tol:
        return "balanced_bipartite"
    return "none"


def _twin_transmission(g: Graph, vertices: Sequence[int], clique: bool) -> int:
    vs = sorted(set(vertices))
    if len(vs) != len(vertices) or len(vs) < 1:
        raise TwinSetError("twin set must be a non-empty set of distinct vertices")
    if any(not 0 <= v < g.order for v in vs):
        raise TwinSetError("twin set has vertices outside the graph")
    mask = sum(1 << v for v in vs)
    for i, u in enumerate(vs):
        for w in vs[i + 1:]:
            if g.has_edge(u, w) != clique:
                kind = "a clique" if clique else "an independent set"
                raise TwinSetError(f"vertices {u} and {w} break {kind}")
    outside = {g.rows[v] & ~mask for v in vs}
    if len(outside) != 1:
        raise TwinSetError("members have different neighbourhoods outside the set")
    tr = all_pairs_distances(g).transmissions
    values = {tr[v] for v in vs}
    if len(values) != 1:
        raise TwinSetError(f"twin transmissions differ: {sorted(values)}")
    return values.pop()


def twin_clique_eigenvalue(g: Graph, clique: Sequence[int]) -> tuple[int, int]:
    """(transmission + 1, p - 1) for a clique of twins."""
    t = _twin_transmission(g, clique, clique=True)
    return t + 1, len(clique) - 1


def twin_independent_eigenvalue(g: Graph, indep: Sequence[int]) -> tuple[int, int]:
    """(transmission + 2, p - 1) for an independent set of twins."""
    t = _twin_transmission(g, indep, clique=False)
    return t + 2, len(indep) - 1


# -- closed-form Laplacian spectra of small components ------------------------

def _path_spectrum(m):
    if m == 4:
        return [FOUR_SIN2_3PI_8, FOUR_SIN2_2PI_8, FOUR_SIN2_PI_8, 0.0]
    return [4 * math.sin(k * math.pi / (2 * m)) ** 2 for k in range(m)]


def _cycle_spectrum(m):
    if m == 4:
        return [FOUR_SIN2_2PI_4, FOUR_SIN2_PI_4, FOUR_SIN2_3PI_4, 0.0]
    return [4 * math.sin(k * math.pi / m) ** 2 for k in range(m)]


def _closed_form_table(m: int):
    """Yield (graph, Laplacian eigenvalues) for the component shapes the theorems use."""
    yield complete_graph(m), [float(m)] * (m - 1) + [0.0]
    if m >= 2:
        yield path_graph(m), _path_spectrum(m)
        yield star_graph(m), [float(m)] + [1.0] * (m - 2) + [0.0]
        yield complete_minus_edge(m), [float(m)] * (m - 2) + [float(m - 2), 0.0]
    if m >= 3:
        yield cycle_graph(m), _cycle_spectrum(m)
    for a in range(1, m // 2 + 1):
        b = m - a
        yield complete_bipartite(a, b), [float(m)] + [float(a)] * (b - 1) + [float(b)] * (a - 1) + [0.0]
    if m == 4:
        yield kite_graph(4, 3), [4.0, 3.0, 1.0, 0.0]


def closed_form_laplacian_spectrum(g: Graph) -> list[float]:
    """Laplacian eigenvalues of a connected component from a table of closed forms."""
    cf = canonical_form(g)
    for h, vals in _closed_form_table(g.order):
        if canonical_form(h) == cf:
            return sorted(vals, reverse=True)
    raise ValueError(f"no closed-form Laplacian spectrum for component {g}")


def predicted_dl_spectrum_via_complement(g: Graph) -> SpectrumNumeric:
    """Distance Laplacian spectrum from the complement's components.

    Requires a disconnected complement, which forces diameter <= 2.
    """
    co = complement(g)
    blocks = components(co)
    if len(blocks) < 2:
        raise ValueError("complement is connected; the diameter-2 transfer does not apply")
    mu_co = []
    for b in blocks:
        mu_co.extend(closed_form_laplacian_spectrum(co.induced_subgraph(b)))
    n = g.order
    mu_g = complement_laplacian_spectrum(mu_co, n)
    return dl_spectrum_from_laplacian(mu_g, n)
