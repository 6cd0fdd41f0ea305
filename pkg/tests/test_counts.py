import pytest

from clusterhodge.errors import NotAcyclic, NotPrincipal, TooLarge
from clusterhodge.counts import (
    brute_force_count,
    closed_form_s_le_3,
    consistency_suite,
    graph_stats,
    interpolate_point_count,
    point_count_poly,
)
from clusterhodge.exchange import principal_from_graph, validate
from clusterhodge.graphs import Graph, cycle_graph, path_graph, star_graph
from clusterhodge.gysin import hodge_table
from clusterhodge.poly import IntPolynomial

from conftest import corpus

M01 = validate([[0], [1]], 1, 1)
M22 = validate([[0, 2], [-2, 0]], 2, 0)


def test_point_count_examples():
    pc = point_count_poly(M01)
    assert pc.polynomial == IntPolynomial.from_coeffs([1, -1, 1])
    assert pc.modulus == 1

    # edgeless principal on n vertices: ((q-1)^2 + q)^n
    for n in (1, 2, 3):
        m = principal_from_graph(Graph.from_edges(n, []))
        factor = IntPolynomial.from_coeffs([1, -1, 1])  # (q-1)^2 + q
        assert point_count_poly(m).polynomial == factor**n

    pc22 = point_count_poly(M22)
    assert pc22.polynomial == IntPolynomial.from_coeffs([1, 2, 1])
    assert pc22.modulus == 2


def test_point_count_degree_and_leading_coefficient():
    for m in corpus():
        poly = point_count_poly(m).polynomial
        assert poly.degree == m.d
        assert poly.coefficients[-1] == 1


def test_point_count_multiplicative_over_components():
    g1, g2 = path_graph(2), star_graph(3)
    pairs = [(u, v) for u, v in g1.edges]
    pairs += [(u + 2, v + 2) for u, v in g2.edges]
    both = Graph.from_edges(5, pairs)
    p_both = point_count_poly(principal_from_graph(both)).polynomial
    p1 = point_count_poly(principal_from_graph(g1)).polynomial
    p2 = point_count_poly(principal_from_graph(g2)).polynomial
    assert p_both == p1 * p2


def test_brute_force_examples():
    assert brute_force_count(M01, 3) == 7
    assert brute_force_count(M01, 5) == 21
    edge = principal_from_graph(path_graph(2))
    assert brute_force_count(edge, 3) == 40  # (3-1)^4 + 2*3*(3-1)^2
    assert point_count_poly(edge)(3) == 40


def test_brute_force_weighted_congruence():
    pc = point_count_poly(M22)
    for q in (5, 13):
        assert (q - 1) % (2 * pc.modulus) == 0
        assert brute_force_count(M22, q) == pc(q)


def test_brute_force_guard_and_validation():
    big = principal_from_graph(star_graph(5))
    with pytest.raises(TooLarge):
        brute_force_count(big, 101)
    with pytest.raises(ValueError):
        brute_force_count(M01, 4)
    cyc = validate([[0, 1, -1], [-1, 0, 1], [1, -1, 0]], 3, 0)
    with pytest.raises(NotAcyclic):
        brute_force_count(cyc, 3)


def test_interpolation_recovers_polynomial():
    assert interpolate_point_count(M01, 1) == IntPolynomial.from_coeffs([1, -1, 1])
    pc = point_count_poly(M22)
    assert interpolate_point_count(M22, pc.modulus) == pc.polynomial


def test_graph_stats_examples():
    st = graph_stats(star_graph(4))
    assert (st.components, st.isolated, st.triangles, st.h1) == (1, 0, 0, 0)
    assert st.degrees == (3, 1, 1, 1)
    assert st.e_increments == (2, 0, 0, 0)

    st =graph_stats(Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert (st.components, st.triangles, st.h1) == (1, 1, 1)
    assert st.e_increments == (0, 0, 0)

    st = graph_stats(Graph.from_edges(2, []))
    assert (st.components, st.isolated) == (2, 2)
    assert st.e_increments == (-1, -1)


def test_closed_forms_examples():
    z4 = closed_form_s_le_3(principal_from_graph(star_graph(4)))
    assert z4[(4, 3)] == 1
    z5 = closed_form_s_le_3(principal_from_graph(star_graph(5)))
    assert z5[(4, 3)] == 3
    # trees with >= 2 vertices: (3,2) absent and (4,3) = sum C(d_i - 1, 2)
    for graph in [path_graph(4), star_graph(4), star_graph(5)]:
        formulas = closed_form_s_le_3(principal_from_graph(graph))
        assert (3, 2) not in formulas
        from math import comb

        expected = sum(comb(graph.degree(v) - 1, 2) for v in range(graph.n_vertices))
        assert formulas.get((4, 3), 0) == expected
    with pytest.raises(NotPrincipal):
        closed_form_s_le_3(M01 if M01.n != M01.m else validate([[0], [2]], 1, 1))


def test_closed_forms_match_hodge_table():
    graphs = [
        path_graph(1),
        path_graph(2),
        path_graph(3),
        star_graph(4),
        cycle_graph(4),
        Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)]),
        Graph.from_edges(4, [(0, 1), (2, 3)]),
        Graph.from_edges(3, []),
    ]
    for graph in graphs:
        m = principal_from_graph(graph)
        table = hodge_table(m)
        closed = closed_form_s_le_3(m)
        slice_ = {(k, s): v for (k, s), v in table.dims.items() if s <= 3 and v}
        assert closed == slice_, graph.edges


def test_consistency_suite_on_random_matrices():
    import random

    from conftest import random_acyclic_matrix

    rng = random.Random(99)
    ran = 0
    while ran < 8:
        m = random_acyclic_matrix(rng, n_max=3, m_max=3)
        report = consistency_suite(m)
        assert not report.failed, report.render()
        ran += 1


def test_consistency_suite_pass_and_skips():
    report = consistency_suite(principal_from_graph(star_graph(4)))
    assert not report.failed
    assert all(c.status == "PASS" for c in report.checks)

    report = consistency_suite(M22)
    assert not report.failed
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["alternating point-count identity"] == "SKIP"
    assert statuses["curious Lefschetz symmetry"] == "PASS"
    assert statuses["brute-force point counts"] == "PASS"
