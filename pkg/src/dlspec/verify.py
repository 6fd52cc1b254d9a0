"""Multiplicity profiles and exhaustive checks of the characterisation theorems."""
from __future__ import annotations

import logging
import time
from functools import lru_cache
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .canonical import canonical_form
from .enumerate import CONNECTED_COUNTS, GraphStream, enumerate_connected
from .families import FamilyConstraintError, FamilySpec, instantiate, make_spec
from .graph import Graph, from_graph6, to_graph6
from .oracles import CONVERSE_SPECTRA, predicted_multiplicity_of_n
from .spectra import (
    SpectrumNumeric,
    distance_laplacian,
    exact_integer_multiplicity,
    group_values,
    numeric_spectrum,
)

log = logging.getLogger(__name__)

INTEGRAL_TOL = 1e-6
TRIG_MATCH_TOL = 1e-7


class ThresholdError(ValueError):
    pass


class IncompleteSourceError(ValueError):
    pass


@dataclass(frozen=True)
class MultiplicityProfile:
    order: int
    spectrum: SpectrumNumeric
    m_partial1: int
    partial1_exact: bool
    m_n_exact: int
    m_n_predicted: int
    m_second: Optional[int]
    stable: bool
    case_label: Optional[str]

    @property
    def shape(self) -> tuple[int, ...]:
        return self.spectrum.multiplicities

    @property
    def partial1(self) -> float:
        return self.spectrum.groups[0][0]


def _rounds_to_int(v: float) -> Optional[int]:
    r = round(v)
    return int(r) if abs(v - r) <= INTEGRAL_TOL else None


@lru_cache(maxsize=1 << 18)
def classify(g: Graph, tol: Optional[float] = None) -> MultiplicityProfile:
    n = g.order
    dl = distance_laplacian(g)
    spec = numeric_spectrum(dl, tol)
    top, m_top = spec.groups[0]
    stable = True
    exact_top = False
    lam = _rounds_to_int(top)
    if lam is not None and n > 1:
        m_exact = exact_integer_multiplicity(dl, lam)
        if m_exact != m_top:
            log.warning("grouped top multiplicity %d disagrees with exact %d for %s", m_top, m_exact, to_graph6(g))
            stable = False
        m_top = m_exact
        exact_top = True
    else:
        for factor in (10.0, 0.1):
            alt = group_values(spec.values, spec.tol * factor)
            if alt[0][1] != m_top:
                stable = False
    m_n = exact_integer_multiplicity(dl, n)
    m_second = None
    if n >= 4:
        target = spec.values[n - 4]
        m_second = spec.multiplicity_near(target)
    case = None
    if n >= 5 and m_top == n - 4:
        case = {3: "a", 2: "b", 1: "c", 0: "d"}.get(m_n)
    return MultiplicityProfile(
        order=n,
        spectrum=spec,
        m_partial1=m_top,
        partial1_exact=exact_top,
        m_n_exact=m_n,
        m_n_predicted=predicted_multiplicity_of_n(g),
        m_second=m_second,
        stable=stable,
        case_label=case,
    )


def _classify_g6(g6: str) -> MultiplicityProfile:
    return classify(from_graph6(g6))


# -- theorem table ----------------------------------------------------------

@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    threshold: int
    statement: str
    lhs: Callable[[MultiplicityProfile], bool]
    candidates: Callable[[int], list[tuple[FamilySpec, str]]]


def _t31a_candidates(n):
    out = []
    if n % 4 == 0:
        out.append((make_spec("F1", n, parts=(n // 4,) * 4), "F1:quarters"))
    if (n - 1) % 3 == 0:
        q = (n - 1) // 3
        out.append((make_spec("F1", n, parts=(q, q, q, 1)), "F1:thirds"))
    if (n - 2) % 2 == 0:
        h = (n - 2) // 2
        out.append((make_spec("F1", n, parts=(h, h, 1, 1)), "F1:halves"))
    out.append((make_spec("F3", n), "F3"))
    return out


def _ids(*ids):
    return lambda n: [(make_spec(f, n), f) for f in ids]


def _top_n_minus_4(m_n):
    return lambda p: p.m_partial1 == p.order - 4 and p.m_n_exact == m_n


def _t41_lhs(p):
    n = p.order
    return p.m_partial1 == 1 and p.m_n_exact == 2 and p.shape == (1, n - 4, 2, 1)


def _t42_lhs(m_top):
    return lambda p: p.m_partial1 == m_top and p.m_n_exact == p.order - 4


THEOREMS: dict[str, Theorem] = {
    t.theorem_id: t
    for t in [
        Theorem("T31a", 6, "m(top) = n-4 and n has multiplicity 3", _top_n_minus_4(3), _t31a_candidates),
        Theorem("T31b", 6, "m(top) = n-4 and n has multiplicity 2", _top_n_minus_4(2),
                _ids("F4", "F5", "F6", "F7", "F8")),
        Theorem("T41", 5, "m(top) = 1, n has multiplicity 2, n-4 equal middle eigenvalues", _t41_lhs,
                _ids("F12", "F9", "F10", "F11")),
        Theorem("T42a", 5, "m(top) = 3 and n has multiplicity n-4", _t42_lhs(3), _ids("F20", "F21")),
        Theorem("T42b", 5, "m(top) = 2 and n has multiplicity n-4", _t42_lhs(2), _ids("F13", "F14")),
        Theorem("T42c", 5, "m(top) = 1 and n has multiplicity n-4", _t42_lhs(1),
                _ids("F15", "F16", "F17", "F18", "F19")),
    ]
}


def predicted_families(theorem_id: str, n: int) -> list[tuple[FamilySpec, str, Graph]]:
    """All families on the theorem's right-hand side that exist at order n."""
    out = []
    for spec, key in THEOREMS[theorem_id].candidates(n):
        try:
            out.append((spec, key, instantiate(spec)))
        except FamilyConstraintError:
            continue
    return out


def converse_matches(profile: MultiplicityProfile, pattern_key: str, n: int) -> bool:
    """Does the classified spectrum equal the stated converse spectrum?

    Integer entries are compared through exact multiplicities; non-integer
    entries numerically.
    """
    pat = CONVERSE_SPECTRA[pattern_key]
    expected = pat.evaluate(n)
    groups = profile.spectrum.groups
    if len(groups) != len(expected):
        return False
    for (v, m), (ev, em) in zip(groups, expected):
        if abs(v - ev) > TRIG_MATCH_TOL * max(1.0, abs(ev)) or m != em:
            return False
    return True


def exact_converse_check(g: Graph, pattern_key: str, n: int) -> bool:
    dl = distance_laplacian(g)
    return all(exact_integer_multiplicity(dl, v) == m
               for v, m in CONVERSE_SPECTRA[pattern_key].exact_entries(n))


# -- reports ------------------------------------------------------------------

REPORT_SCHEMA = {
    "type": "object",
    "required": ["theorem", "n", "counts", "verdict", "counterexamples", "families", "elapsed_ms"],
    "properties": {
        "theorem": {"type": "string"},
        "n": {"type": "integer", "minimum": 1},
        "counts": {
            "type": "object",
            "required": ["scanned", "satisfying", "predicted"],
            "properties": {k: {"type": "integer", "minimum": 0} for k in ("scanned", "satisfying", "predicted")},
        },
        "verdict": {"enum": ["equal", "counterexample"]},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["graph6", "spectrum"],
                "properties": {
                    "graph6": {"type": "string"},
                    "spectrum": {"type": "array", "items": {"type": "array", "minItems": 2, "maxItems": 2}},
                    "kind": {"type": "string"},
                },
            },
        },
        "families": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "graph6"],
                "properties": {"id": {"type": "string"}, "graph6": {"type": "string"}},
            },
        },
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
}


@dataclass
class VerificationReport:
    theorem: str
    n: int
    scanned: int
    enumerated_satisfying: set[str]
    predicted: dict[str, list[str]]
    counterexamples: list[dict] = field(default_factory=list)
    families: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0
    normative: bool = True

    @property
    def verdict(self) -> str:
        return "equal" if not self.counterexamples else "counterexample"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "n": self.n,
            "counts": {
                "scanned": self.scanned,
                "satisfying": len(self.enumerated_satisfying),
                "predicted": len(self.predicted),
            },
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "families": self.families,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "normative": self.normative,
        }


def _profiles(graphs: list[Graph], workers: int) -> list[MultiplicityProfile]:
    if workers <= 1 or len(graphs) < 64:
        return [classify(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_classify_g6, [to_graph6(g) for g in graphs], chunksize=128))


def _checked_source(n: int, source: Optional[GraphStream]) -> tuple[list[Graph], list[str]]:
    if source is None:
        source = enumerate_connected(n)
    graphs = list(source)
    if any(g.order != n for g in graphs):
        raise IncompleteSourceError(f"source contains graphs of order other than {n}")
    forms = [canonical_form(g) for g in graphs]
    expected = CONNECTED_COUNTS.get(n)
    distinct = len(set(forms))
    if expected is not None and distinct != expected:
        raise IncompleteSourceError(
            f"source has {distinct} non-isomorphic connected graphs of order {n}, expected {expected}")
    if expected is None:
        log.warning("no reference count for order %d; completeness of the source is unchecked", n)
    return graphs, forms


def _spectrum_entry(g6: str, profile: MultiplicityProfile, kind: str) -> dict:
    return {
        "graph6": g6,
        "spectrum": profile.spectrum.as_list(),
        "kind": kind,
        "m_partial1": profile.m_partial1,
        "m_n_exact": profile.m_n_exact,
    }


def verify_theorem(theorem_id: str, n: int, source: Optional[GraphStream] = None,
                   force: bool = False, workers: int = 1) -> VerificationReport:
    key = {k.upper(): k for k in THEOREMS}.get(theorem_id.upper())
    if key is None:
        raise KeyError(f"unknown theorem {theorem_id!r}; choose from {sorted(THEOREMS)}")
    thm = THEOREMS[key]
    if n < thm.threshold and not force:
        raise ThresholdError(f"order below theorem threshold {thm.threshold}")
    start = time.perf_counter()
    graphs, forms = _checked_source(n, source)
    profiles = _profiles(graphs, workers)

    satisfying: dict[str, MultiplicityProfile] = {}
    counterexamples = []
    for cf, p in sorted(zip(forms, profiles), key=lambda t: t[0]):
        if p.m_n_exact != p.m_n_predicted:
            counterexamples.append(_spectrum_entry(cf, p, "multiplicity_of_n_mismatch"))
        if not p.stable:
            log.warning("unstable grouping for %s", cf)
        if thm.lhs(p):
            satisfying[cf] = p

    predicted: dict[str, list[str]] = {}
    families = []
    for spec, pkey, g in predicted_families(key, n):
        cf = canonical_form(g)
        predicted.setdefault(cf, []).append(spec.label())
        prof = classify(g)
        families.append({
            "id": spec.label(),
            "graph6": to_graph6(g),
            "canonical": cf,
            "spectrum": prof.spectrum.as_list(),
            "converse_matches": converse_matches(prof, pkey, n) and exact_converse_check(g, pkey, n),
        })

    for cf in sorted(set(satisfying) - set(predicted)):
        counterexamples.append(_spectrum_entry(cf, satisfying[cf], "satisfies_but_not_predicted"))
    for cf in sorted(set(predicted) - set(satisfying)):
        counterexamples.append(_spectrum_entry(cf, classify(from_graph6(cf)), "predicted_but_not_satisfying"))

    report = VerificationReport(
        theorem=key,
        n=n,
        scanned=len(graphs),
        enumerated_satisfying=set(satisfying),
        predicted=predicted,
        counterexamples=counterexamples,
        families=families,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
        normative=n >= thm.threshold,
    )
    log.info("%s n=%d: %s (%d scanned)", key, n, report.verdict, report.scanned)
    return report


def explore_open_cases(n: int, source: Optional[GraphStream] = None,
                       workers: int = 1) -> list[tuple[Graph, MultiplicityProfile]]:
    """Graphs with top multiplicity n-4 whose eigenvalue n has multiplicity 1 or 0."""
    if n < 5:
        raise ThresholdError("open cases are defined for n >= 5")
    graphs, forms = _checked_source(n, source)
    profiles = _profiles(graphs, workers)
    out = {}
    for cf, p in zip(forms, profiles):
        if p.case_label in ("c", "d") and cf not in out:
            out[cf] = (from_graph6(cf), p)
    return [out[cf] for cf in sorted(out)]


def case_partition(n: int, source: Optional[GraphStream] = None) -> dict[str, list[str]]:
    """Canonical forms of all connected order-n graphs bucketed by case label."""
    graphs, forms = _checked_source(n, source)
    buckets: dict[str, list[str]] = {"a": [], "b": [], "c": [], "d": [], "none": []}
    for cf, g in sorted(zip(forms, graphs), key=lambda t: t[0]):
        buckets[classify(g).case_label or "none"].append(cf)
    return buckets
