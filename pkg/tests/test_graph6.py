import networkx as nx
import numpy as np
import pytest

from spectral_rank.graph import Graph, catalog, complete_graph, cycle
from spectral_rank.graph6 import HEADER, bundled_corpus, from_graph6, read_corpus, to_graph6


def test_known_encodings():
    assert to_graph6(cycle(5)) == "Dhc"
    assert to_graph6(complete_graph(5)) == "D~{"
    assert to_graph6(Graph.from_edges(1, [])) == "@"
    assert to_graph6(cycle(5), header=True) == HEADER + "Dhc"


def test_round_trip_matches_networkx():
    rng = np.random.default_rng(0)
    for _ in range(200):
        n = int(rng.integers(1, 70))
        a = np.triu(rng.random((n, n)) < rng.uniform(0.05, 0.9), 1)
        g = Graph(a | a.T)
        text = to_graph6(g)
        ref = nx.to_graph6_bytes(nx.from_numpy_array(g.adjacency.astype(int)), header=False).decode().strip()
        assert text == ref
        assert from_graph6(text) == g


def test_large_order_header():
    g = cycle(100)
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


@pytest.mark.parametrize("bad", ["", "D", "Dh", "Dhcc", "D h", "Dhd"])
def test_malformed_strings_are_rejected(bad):
    with pytest.raises(ValueError):
        from_graph6(bad)


def test_read_corpus_skips_comments():
    text = "# header\nDhc  # C5\n\n  D~{\n"
    assert list(read_corpus(text)) == ["Dhc", "D~{"]


def test_bundled_corpus_round_trips_byte_for_byte():
    corpus = bundled_corpus()
    assert len(corpus) > 50
    for code, _ in corpus:
        assert to_graph6(from_graph6(code)) == code


def test_bundled_corpus_labels_match_graphs():
    for code, label in bundled_corpus():
        if label in ("G1", "G7", "G10", "H"):
            assert from_graph6(code) == catalog(label)
