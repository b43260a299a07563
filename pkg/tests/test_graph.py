import numpy as np
import pytest

from spectral_rank.exact import rank
from spectral_rank.extremal import enumeration_data, f_parts, find_h_candidates, mask_to_graph
from spectral_rank.graph import (
    Graph,
    blocks,
    blow_up,
    catalog,
    catalog_ids,
    clique_number,
    complete_graph,
    complete_multipartite,
    contains_clique,
    cycle,
    delete_edge,
    family_graph,
    is_isomorphic,
    parse_family,
    path,
    rotate_edges,
    star,
    turan,
    turan_parts,
)


def test_graph_invariants_are_enforced():
    with pytest.raises(ValueError):
        Graph(np.array([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        Graph(np.array([[1]]))
    with pytest.raises(ValueError):
        Graph(np.zeros((0, 0)))
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        g.adjacency[0, 2] = True


def test_graph_basic_queries():
    g = cycle(5)
    assert (g.n, g.m) == (5, 5)
    assert g.neighbors(0) == {1, 4}
    assert g.degrees() == [2] * 5
    assert g.is_connected()
    assert not Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected()
    assert g == cycle(5) and hash(g) == hash(cycle(5))


def test_catalog_examples():
    assert is_isomorphic(catalog("G7"), cycle(5))
    assert sorted(catalog("G1").degrees(), reverse=True) == [3, 2, 2, 2, 1]
    assert sorted(catalog("G10").degrees(), reverse=True) == [3, 3, 3, 2, 2, 1]
    assert catalog("K4") == complete_graph(4)
    assert set(catalog_ids()) >= {"G1", "G7", "G10", "H", "H1", "H2", "H3", "H4"}
    with pytest.raises(KeyError):
        catalog("G2")


def test_catalog_edges_match_quotient_supports():
    assert sorted(catalog("G1").edges()) == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 4)]
    assert sorted(catalog("G10").edges()) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 4), (3, 5)]


def test_catalog_returns_fresh_equal_graphs():
    a, b = catalog("G10"), catalog("G10")
    assert a == b and a is not b


def test_blow_up_examples():
    g1 = catalog("G1")
    assert blow_up(g1, (1, 1, 1, 1, 1)) == g1
    assert is_isomorphic(blow_up(complete_graph(2), (2, 3)), complete_multipartite((2, 3)))
    assert blow_up(catalog("G10"), (1, 1, 1, 1, 1, 2)) == catalog("H2")
    with pytest.raises(ValueError):
        blow_up(g1, (1, 1, 1))
    with pytest.raises(ValueError):
        blow_up(g1, (1, 1, 0, 1, 1))


def test_blow_up_counts_and_block_structure():
    rng = np.random.default_rng(1)
    for base_id in ("G1", "G7", "G10", "H"):
        base = catalog(base_id)
        for _ in range(10):
            parts = tuple(int(v) for v in rng.integers(1, 4, size=base.n))
            g = blow_up(base, parts)
            assert g.n == sum(parts)
            assert g.m == sum(parts[i] * parts[j] for i, j in base.edges())
            bl = blocks(parts)
            for i, bi in enumerate(bl):
                assert not g.adjacency[np.ix_(bi, bi)].any()
                for j, bj in enumerate(bl):
                    assert g.adjacency[np.ix_(bi, bj)].all() == base.has_edge(i, j)


def test_turan_examples():
    assert is_isomorphic(turan(6, 3), complete_multipartite((2, 2, 2)))
    assert turan_parts(5, 2) == (3, 2)
    assert is_isomorphic(turan(5, 2), complete_multipartite((3, 2)))
    for n in range(1, 12):
        for r in range(1, n + 1):
            parts = turan_parts(n, r)
            assert max(parts) - min(parts) <= 1 and sum(parts) == n
            assert turan(n, r) == blow_up(complete_graph(r), parts)
    with pytest.raises(ValueError):
        turan(3, 4)
    with pytest.raises(ValueError):
        turan(3, 0)


def test_complete_multipartite_examples():
    assert complete_multipartite((1, 1, 1)) == complete_graph(3)
    assert complete_multipartite((3, 2)).m == 6
    k = complete_multipartite((4, 1, 1))
    assert sorted(k.degrees()) == [2, 2, 2, 2, 5, 5]


def test_contains_clique_examples():
    assert contains_clique(complete_graph(5), 5)
    assert not contains_clique(cycle(5), 3)
    assert not contains_clique(turan(9, 3), 4)
    assert contains_clique(turan(9, 3), 3)
    assert clique_number(catalog("G10")) == 3
    assert contains_clique(Graph.from_edges(2, []), 1)


def test_ranked_graphs_are_clique_free_exhaustively():
    for n in range(2, 8):
        data = enumeration_data(n)
        assert np.all(data.clique_numbers <= data.ranks)


def test_clique_number_batch_agrees_with_branch_and_bound():
    data = enumeration_data(5)
    for mask, q in zip(data.masks[::7].tolist(), data.clique_numbers[::7].tolist()):
        assert clique_number(mask_to_graph(mask, 5)) == q


def test_modular_rank_agrees_with_exact_rank():
    for n, step in ((6, 1), (7, 97)):
        data = enumeration_data(n)
        for mask, r in zip(data.masks[::step].tolist(), data.ranks[::step].tolist()):
            assert rank(mask_to_graph(mask, n).int_matrix()) == r


def test_delete_edge():
    assert is_isomorphic(delete_edge(complete_graph(3), 0, 1), path(3))
    with pytest.raises(ValueError):
        delete_edge(path(3), 0, 2)


def test_rotate_edges_preconditions():
    p3 = path(3)  # 0 - 1 - 2, center 1
    # the center is already a neighbor of both leaves, so it is not a legal target
    with pytest.raises(ValueError):
        rotate_edges(p3, 0, 2, [1])
    g = star(4)  # center 0
    rotated = rotate_edges(g, 0, 1, [2, 3])
    assert is_isomorphic(rotated, star(4))
    assert rotated.neighbors(1) == {0, 2, 3}
    with pytest.raises(ValueError):
        rotate_edges(g, 0, 1, [1])


@pytest.mark.parametrize("n", [8])
def test_rotation_turns_g10_blow_up_into_g1_blow_up(n):
    for k in range(2, n - 4):
        f2 = family_graph(f"G10:1,1,1,1,{k - 1},{n - k - 3}")
        # v1 is vertex 0, v3 is vertex 2, v4 is vertex 3 under block ordering
        rotated = rotate_edges(f2, 0, 2, [3])
        assert is_isomorphic(rotated, family_graph(f"G1:1,1,1,{k},{n - k - 3}"))


def test_is_isomorphic_and_limits():
    g = cycle(6)
    perm = [3, 0, 5, 1, 4, 2]
    h = Graph(g.adjacency[np.ix_(perm, perm)])
    assert is_isomorphic(g, h)
    assert not is_isomorphic(cycle(6), path(6))
    with pytest.raises(ValueError):
        is_isomorphic(cycle(9), cycle(9))


def test_parse_family():
    assert parse_family("G1:1,1,1,1,4") == ("G1", (1, 1, 1, 1, 4))
    assert parse_family("K3") == ("K3", None)
    with pytest.raises(ValueError):
        parse_family("G1:1,0,1,1,1")
    assert family_graph("G10:" + ",".join(map(str, f_parts(12, 1)))).n == 12


def test_h_is_the_unique_candidate_and_matches_catalog():
    candidates = find_h_candidates()
    assert len(candidates) == 1
    h = catalog("H")
    assert is_isomorphic(candidates[0], h)
    assert h.degrees()[0] == 2  # the blown-up vertex


def test_h_blow_up_embeds_in_g10_blow_up():
    # in G10 o (1,1,1,n4,n5,n6), block V5 with v2, v3 and v1 carries H o (n5,1,1,1)
    for n4, n5, n6 in [(1, 1, 1), (2, 3, 2), (1, 4, 5)]:
        parts = (1, 1, 1, n4, n5, n6)
        f = blow_up(catalog("G10"), parts)
        bl = blocks(parts)
        h = blow_up(catalog("H"), (n5, 1, 1, 1))
        where = bl[4] + bl[1] + bl[2] + bl[0]
        sub = f.adjacency[np.ix_(where, where)]
        assert np.all(sub[h.adjacency])
        assert h.m < f.m
