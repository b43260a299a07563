import json
import math

import numpy as np
import pytest

from spectral_rank.exact import IntPolynomial, charpoly
from spectral_rank.extremal import f_parts
from spectral_rank.graph import (
    Graph,
    blow_up,
    catalog,
    complete_graph,
    complete_multipartite,
    cycle,
    family_graph,
    path,
    star,
    turan,
)
from spectral_rank.spectral import (
    ConvergenceError,
    blowup_quotient,
    edge_count_bound,
    exact_radius,
    is_equitable,
    natural_partition,
    quotient,
    quotient_radius,
    rayleigh_quotient,
    singleton_partition,
    spectral_radius,
    turan_radius_closed_form,
)


@pytest.mark.parametrize("spec, rho, tol", [
    ("G7", 2.0, 1e-12),
    ("G1:1,1,1,1,2", 2.2784, 5e-5),
    ("G7:4,1,4,1,1", 3.6737, 5e-5),
    ("G10:1,1,1,1,1,7", 3.0, 1e-12),
])
def test_spectral_radius_examples(spec, rho, tol):
    assert abs(spectral_radius(family_graph(spec)).radius - rho) < tol


def test_complete_bipartite_radius():
    assert abs(spectral_radius(complete_multipartite((2, 8))).radius - 4) < 1e-12


def test_perron_vector_is_positive_unit_and_residual_small():
    for g in (cycle(7), path(6), star(5), family_graph("G10:1,1,1,1,2,5")):
        res = spectral_radius(g)
        assert np.all(res.eigenvector > 0)
        assert abs(np.linalg.norm(res.eigenvector) - 1) < 1e-12
        a = g.adjacency.astype(float)
        assert np.max(np.abs(a @ res.eigenvector - res.radius * res.eigenvector)) < 1e-10
        assert res.residual < 1e-11


def test_bipartite_graphs_converge():
    # A alone oscillates on bipartite graphs; the shifted iteration must not
    for g in (path(9), cycle(8), complete_multipartite((3, 5))):
        res = spectral_radius(g)
        assert abs(res.radius - np.linalg.eigvalsh(g.adjacency.astype(float))[-1]) < 1e-10


def test_spectral_radius_errors():
    with pytest.raises(ValueError):
        spectral_radius(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(ValueError):
        spectral_radius(cycle(5), tol=0)
    with pytest.raises(ConvergenceError):
        spectral_radius(path(30), max_iter=2)


def test_single_vertex():
    assert spectral_radius(Graph.from_edges(1, [])).radius == 0.0


def test_spectral_result_json():
    payload = json.loads(spectral_radius(cycle(5)).to_json())
    assert payload["radius"] == "2.000000000000"
    assert set(payload) == {"radius", "iterations", "residual"}


def test_exact_radius_handles_disconnected_graphs():
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
    assert abs(exact_radius(g) - 2) < 1e-12


def test_rayleigh_quotient():
    g = family_graph("G1:1,1,1,2,5")
    res = spectral_radius(g)
    assert abs(rayleigh_quotient(g, res.eigenvector) - res.radius) < 1e-10
    k = complete_graph(6)
    assert abs(rayleigh_quotient(k, np.full(6, 1 / math.sqrt(6))) - 5) < 1e-12
    with pytest.raises(ValueError):
        rayleigh_quotient(k, np.ones(6))
    with pytest.raises(ValueError):
        rayleigh_quotient(k, np.ones(5) / math.sqrt(5))


def test_rayleigh_lower_bound_with_neighbouring_eigenvector():
    n, i = 15, 2
    res = spectral_radius(family_graph("G10:" + ",".join(map(str, f_parts(n, i)))))
    for j in (i - 1, i + 1):
        g = family_graph("G10:" + ",".join(map(str, f_parts(n, j))))
        bound = rayleigh_quotient(g, res.eigenvector)
        rho = spectral_radius(g).radius
        assert bound <= rho + 1e-12
        # the difference form used to compare neighbours: rho_j - rho_i >= x_i^T A_j x_i - rho_i
        assert rho - res.radius >= bound - res.radius - 1e-12


def test_partitions_and_quotients():
    g = cycle(5)
    p = singleton_partition(5)
    assert is_equitable(g, p)
    assert np.array_equal(quotient(g, p), g.adjacency.astype(int))
    p3 = path(3)
    assert is_equitable(p3, ((1,), (0, 2)))
    assert quotient(p3, ((1,), (0, 2))).tolist() == [[0, 2], [1, 0]]
    assert not is_equitable(path(4), ((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        quotient(path(4), ((0, 1), (2, 3)))
    with pytest.raises(ValueError):
        is_equitable(path(4), ((0, 1), (1, 2, 3)))


def test_natural_partition_gives_printed_g1_quotient():
    n2, n3, n4, n5 = 2, 3, 4, 5
    parts = (1, n2, n3, n4, n5)
    g = blow_up(catalog("G1"), parts)
    b = quotient(g, natural_partition(parts))
    expected = [[0, n2, n3, n4, 0], [1, 0, 0, n4, 0], [1, 0, 0, 0, n5], [1, n2, 0, 0, 0], [0, 0, n3, 0, 0]]
    assert b.tolist() == expected
    assert blowup_quotient(catalog("G1"), parts).tolist() == expected


def test_quotient_radius_examples():
    parts = (1, 1, 1, 1, 1, 7)
    g = blow_up(catalog("G10"), parts)
    assert abs(quotient_radius(g, natural_partition(parts)) - 3) < 1e-12
    assert abs(quotient_radius(cycle(5), singleton_partition(5)) - 2) < 1e-12
    parts = (4, 1, 4, 1, 1)
    assert abs(quotient_radius(blow_up(catalog("G7"), parts), natural_partition(parts)) - 3.6737) < 5e-5


def test_quotient_radius_matches_power_iteration():
    rng = np.random.default_rng(2)
    for base_id in ("G1", "G7", "G10", "H", "H4"):
        base = catalog(base_id)
        for _ in range(8):
            parts = tuple(int(v) for v in rng.integers(1, 5, size=base.n))
            g = blow_up(base, parts)
            assert abs(quotient_radius(g, natural_partition(parts)) - spectral_radius(g).radius) < 1e-9


def test_blow_up_charpoly_factorization_examples():
    for base_id, parts in [("G1", (1, 1, 1, 1, 4)), ("G10", (2, 1, 3, 1, 1, 2)), ("G7", (3, 1, 2, 1, 1))]:
        g = blow_up(catalog(base_id), parts)
        k = len(parts)
        assert charpoly(g.int_matrix()) == IntPolynomial.x_power(g.n - k) * charpoly(
            blowup_quotient(catalog(base_id), parts).tolist())


def test_eigenvector_is_constant_on_blocks():
    rng = np.random.default_rng(4)
    for base_id in ("G1", "G7", "G10"):
        base = catalog(base_id)
        for _ in range(5):
            parts = tuple(int(v) for v in rng.integers(1, 5, size=base.n))
            x = spectral_radius(blow_up(base, parts)).eigenvector
            for block in natural_partition(parts):
                assert np.ptp(x[list(block)]) < 1e-9


def test_f_family_has_equal_entries_on_second_and_third_vertex():
    for n in (12, 17, 25):
        for i in range(1, (n - 4) // 2 + 1):
            x = spectral_radius(family_graph("G10:" + ",".join(map(str, f_parts(n, i))))).eigenvector
            assert abs(x[1] - x[2]) < 1e-9


def test_edge_count_bound_examples():
    assert edge_count_bound(star(5)) == 2.0
    assert abs(spectral_radius(star(5)).radius - 2) < 1e-12
    assert edge_count_bound(complete_graph(4)) == 3.0
    assert abs(edge_count_bound(cycle(5)) - math.sqrt(6)) < 1e-15
    with pytest.raises(ValueError):
        edge_count_bound(Graph.from_edges(3, [(0, 1)]))


def test_turan_closed_form_examples():
    assert turan_radius_closed_form(6, 3) == 4.0
    assert abs(turan_radius_closed_form(5, 2) - math.sqrt(6)) < 1e-15
    assert abs(turan_radius_closed_form(11, 5) - spectral_radius(turan(11, 5)).radius) < 1e-9
    for n in range(2, 30):
        for r in range(1, n + 1):
            regular = n % r == 0
            assert (abs(turan_radius_closed_form(n, r) - (n - n // r)) < 1e-12) == regular
    with pytest.raises(ValueError):
        turan_radius_closed_form(3, 5)
