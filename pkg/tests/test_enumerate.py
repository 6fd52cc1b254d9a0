import pytest

from dlspec.canonical import canonical_form
from dlspec.enumerate import (
    CONNECTED_COUNTS,
    CorpusError,
    enumerate_connected,
    parse_corpus_lines,
    stream_corpus,
    write_corpus,
)
from dlspec.graph import is_connected, to_graph6


def test_counts_up_to_eight():
    for n in range(1, 9):
        graphs = list(enumerate_connected(n))
        assert len(graphs) == CONNECTED_COUNTS[n]
        assert all(is_connected(g) and g.order == n for g in graphs)
        assert len({canonical_form(g) for g in graphs}) == len(graphs)


def test_matches_labeled_brute_force(brute_force_classes):
    for n, forms in brute_force_classes.items():
        assert {canonical_form(g) for g in enumerate_connected(n)} == forms


def test_order_bounds():
    with pytest.raises(ValueError):
        enumerate_connected(0)
    with pytest.raises(ValueError):
        enumerate_connected(10)


def test_stream_is_reiterable():
    s = enumerate_connected(5)
    assert list(s) == list(s)
    assert len(s) == 21


def test_corpus_round_trip(tmp_path):
    path = tmp_path / "n5.g6"
    assert write_corpus(enumerate_connected(5), path) == 21
    back = stream_corpus(path, expect_order=5)
    assert [to_graph6(g) for g in back] == [to_graph6(g) for g in enumerate_connected(5)]


def test_corpus_errors_carry_line_numbers():
    with pytest.raises(CorpusError) as info:
        parse_corpus_lines(["Bw", "B!"])
    assert info.value.line == 2
    with pytest.raises(CorpusError, match="disconnected"):
        parse_corpus_lines(["Bw", "B?"])
    with pytest.raises(CorpusError, match="mixed"):
        parse_corpus_lines(["Bw", "A_"])
    with pytest.raises(CorpusError, match="expected order"):
        parse_corpus_lines(["Bw"], expect_order=4)


def test_corpus_dedup_and_blank_lines():
    # two labelings of P_3 collapse under dedup
    s = parse_corpus_lines(["Bg", "", "BW", "Bw\n"], dedup=True)
    assert len(s) == 2
    assert len(parse_corpus_lines(["Bg", "BW"])) == 2


@pytest.mark.slow
def test_order_nine_count():
    assert len(enumerate_connected(9)) == 261080
