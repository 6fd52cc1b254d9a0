import itertools
from fractions import Fraction

import pytest

from dlspec.canonical import canonical_form
from dlspec.graph import Graph, is_connected, to_graph6


def fraction_rank(m):
    """Rank by Gauss-Jordan over Fractions; independent of the Bareiss path."""
    a = [[Fraction(int(x)) for x in row] for row in m]
    if not a:
        return 0
    r = 0
    for j in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][j] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][j] != 0:
                f = a[i][j] / a[r][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def brute_canonical(g):
    """Largest graph6 string over all n! relabelings."""
    return max(to_graph6(g.relabel(p)) for p in itertools.permutations(range(g.order)))


def brute_isomorphic(g, h):
    if g.order != h.order or g.size != h.size:
        return False
    target = h.bits
    return any(g.relabel(p).bits == target for p in itertools.permutations(range(g.order)))


def labeled_connected_classes(n):
    """Every labeled graph on n vertices, filtered to connected, deduplicated."""
    nbits = n * (n - 1) // 2
    forms = set()
    for bits in range(1 << nbits):
        g = Graph(n, bits)
        if is_connected(g):
            forms.add(canonical_form(g))
    return forms


@pytest.fixture(scope="session")
def brute_force_classes():
    return {n: labeled_connected_classes(n) for n in range(1, 7)}


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call":
        return
    number, title = marker.args
    ACCEPTANCE_RESULTS[number] = (title, rep.outcome)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, outcome = ACCEPTANCE_RESULTS[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {title}")
