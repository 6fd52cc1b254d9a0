import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlspec.families import instantiate, make_spec
from dlspec.graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    complete_minus_edge,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from dlspec.oracles import (
    CONVERSE_SPECTRA,
    FOUR_SIN2_3PI_8,
    FOUR_SIN2_PI_8,
    TwinSetError,
    closed_form_laplacian_spectrum,
    complement_laplacian_spectrum,
    dl_spectrum_from_laplacian,
    multipartite_dl_spectrum,
    predicted_dl_spectrum_via_complement,
    predicted_multiplicity_of_n,
    recognize_kn_minus_e,
    recognize_two_distinct_mult_n2,
    twin_clique_eigenvalue,
    twin_independent_eigenvalue,
)
from dlspec.spectra import distance_laplacian, exact_integer_multiplicity, laplacian, numeric_spectrum


def _lap(g):
    return numeric_spectrum(laplacian(g))


def test_trig_constants():
    assert FOUR_SIN2_PI_8 == pytest.approx(4 * math.sin(math.pi / 8) ** 2, abs=1e-15)
    assert FOUR_SIN2_3PI_8 == pytest.approx(2 + math.sqrt(2), abs=1e-15)
    assert FOUR_SIN2_PI_8 + FOUR_SIN2_3PI_8 == pytest.approx(4, abs=1e-15)


def test_multipartite_examples():
    assert multipartite_dl_spectrum([3, 3, 1]) == ((10, 4), (7, 2), (0, 1))
    assert multipartite_dl_spectrum([1, 1, 1]) == ((3, 2), (0, 1))
    with pytest.raises(ValueError):
        multipartite_dl_spectrum([4])
    with pytest.raises(ValueError):
        multipartite_dl_spectrum([2, 0])


def test_complement_laplacian_of_path():
    got = complement_laplacian_spectrum(_lap(path_graph(4)), 4)
    want = sorted(numeric_spectrum(laplacian(complement(path_graph(4)))).values, reverse=True)
    assert np.allclose(got.values, want, atol=1e-10)


def test_transfer_requires_zero():
    with pytest.raises(ValueError):
        dl_spectrum_from_laplacian([3.0, 2.0, 1.0], 3)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_complement_spectrum_property(pair):
    n, bits = pair
    g = Graph(n, bits)
    got = complement_laplacian_spectrum(_lap(g), n).values
    want = numeric_spectrum(laplacian(complement(g))).values
    assert np.allclose(got, want, atol=1e-8)


def test_multiplicity_of_n_examples():
    assert predicted_multiplicity_of_n(complete_graph(5)) == 4
    assert predicted_multiplicity_of_n(path_graph(5)) == 0
    g = complete_multipartite([2, 2, 1])
    assert predicted_multiplicity_of_n(g) == 2
    assert exact_integer_multiplicity(distance_laplacian(g), 5) == 2


def test_kn_minus_e_recognition():
    for n in range(4, 9):
        assert recognize_kn_minus_e(_lap(complete_minus_edge(n)), n)
        assert not recognize_kn_minus_e(_lap(complete_graph(n)), n)
        assert not recognize_kn_minus_e(_lap(path_graph(n)), n)
    with pytest.raises(ValueError):
        recognize_kn_minus_e(_lap(complete_graph(3)), 3)


def test_two_distinct_recognition():
    assert recognize_two_distinct_mult_n2(_lap(star_graph(6)), 6) == "star"
    assert recognize_two_distinct_mult_n2(_lap(complete_bipartite(3, 3)), 6) == "balanced_bipartite"
    assert recognize_two_distinct_mult_n2(_lap(cycle_graph(6)), 6) == "none"
    assert recognize_two_distinct_mult_n2(_lap(complete_bipartite(2, 4)), 6) == "none"


def test_twin_examples():
    assert twin_independent_eigenvalue(star_graph(5), [1, 2, 3, 4]) == (9, 3)
    assert twin_clique_eigenvalue(complete_graph(4), [0, 1, 2]) == (4, 2)
    with pytest.raises(TwinSetError):
        twin_clique_eigenvalue(path_graph(4), [0, 3])
    with pytest.raises(TwinSetError):
        twin_independent_eigenvalue(path_graph(4), [0, 2])
    with pytest.raises(TwinSetError):
        twin_clique_eigenvalue(complete_graph(3), [0, 0])


def test_closed_form_component_spectra():
    cases = [complete_graph(4), path_graph(4), star_graph(4), complete_minus_edge(4), cycle_graph(4),
             complete_bipartite(1, 3), path_graph(5), cycle_graph(6), complete_bipartite(2, 3)]
    for h in cases:
        want = numeric_spectrum(laplacian(h)).values
        assert np.allclose(closed_form_laplacian_spectrum(h), want, atol=1e-12)
    with pytest.raises(ValueError):
        closed_form_laplacian_spectrum(Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]))


def test_prediction_via_complement_matches_direct():
    shapes = [[complete_graph(3), complete_graph(1), complete_graph(1)],
              [path_graph(4), complete_graph(1), complete_graph(1), complete_graph(1)],
              [star_graph(4), complete_graph(2), complete_graph(1)],
              [cycle_graph(4), complete_graph(2), complete_graph(1)]]
    for parts in shapes:
        g = complement(disjoint_union(parts))
        got = predicted_dl_spectrum_via_complement(g).values
        want = numeric_spectrum(distance_laplacian(g)).values
        assert np.allclose(got, want, atol=1e-9)
    with pytest.raises(ValueError):
        predicted_dl_spectrum_via_complement(path_graph(5))


# Converse patterns evaluated at one order, frozen from the closed forms.
FROZEN = {
    ("F20", 7): [(11, 3), (7, 3), (0, 1)],
    ("F13", 7): [(11, 2), (9, 1), (7, 3), (0, 1)],
    ("F12", 7): [(11, 1), (9, 3), (7, 2), (0, 1)],
    ("F4", 7): [(12, 3), (10, 1), (7, 2), (0, 1)],
    ("F15", 6): [(10, 1), (7, 2), (6, 2), (0, 1)],
}


@pytest.mark.parametrize("key,n", sorted(FROZEN))
def test_converse_pattern_values(key, n):
    got = [(round(v, 9), m) for v, m in CONVERSE_SPECTRA[key].evaluate(n)]
    assert got == FROZEN[(key, n)]


def test_patterns_reject_bad_orders():
    with pytest.raises(ValueError):
        CONVERSE_SPECTRA["F11"].evaluate(4)
    with pytest.raises(ValueError):
        CONVERSE_SPECTRA["F20"].evaluate(4)


def test_every_pattern_matches_its_family():
    orders = {"F1:quarters": 8, "F1:thirds": 7, "F1:halves": 8, "F12": 7, "F6": 7, "F8": 9,
              "F11": 8, "F10": 8, "F7": 8, "F21": 7}
    for key, pat in CONVERSE_SPECTRA.items():
        n = orders.get(key, 7)
        if key.startswith("F1:"):
            parts = {"F1:quarters": (2, 2, 2, 2), "F1:thirds": (2, 2, 2, 1), "F1:halves": (3, 3, 1, 1)}[key]
            g = instantiate(make_spec("F1", parts=parts))
        else:
            g = instantiate(make_spec(key, n))
        got = numeric_spectrum(distance_laplacian(g)).groups
        want = pat.evaluate(n)
        assert len(got) == len(want), key
        for (v, m), (ev, em) in zip(got, want):
            assert m == em and abs(v - ev) <= 1e-7 * max(1, ev), key
        dl = distance_laplacian(g)
        for v, m in pat.exact_entries(n):
            assert exact_integer_multiplicity(dl, v) == m


def _planted(rng, p, clique):
    """A random connected host with a planted twin set of size p."""
    k = rng.randint(1, 5)
    host_edges = [(rng.randrange(v), v) for v in range(1, k)]
    host_edges += [(a, b) for a in range(k) for b in range(a + 1, k) if rng.random() < 0.4]
    attach = [v for v in range(k) if rng.random() < 0.5] or [0]
    n = k + p
    edges = list(host_edges)
    twins = list(range(k, n))
    for t in twins:
        edges += [(v, t) for v in attach]
    if clique:
        edges += [(a, b) for a in twins for b in twins if a < b]
    g = Graph.from_edges(n, set((min(a, b), max(a, b)) for a, b in edges))
    perm = list(range(n))
    rng.shuffle(perm)
    return g.relabel(perm), [perm[t] for t in twins]


@pytest.mark.parametrize("clique", [True, False])
def test_planted_twins_small_sample(clique):
    rng = random.Random(clique)
    fn = twin_clique_eigenvalue if clique else twin_independent_eigenvalue
    for _ in range(40):
        g, twins = _planted(rng, rng.randint(2, 5), clique)
        value, mult = fn(g, twins)
        assert exact_integer_multiplicity(distance_laplacian(g), value) >= mult
