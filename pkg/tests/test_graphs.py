import itertools

import pytest

from clusterhodge.errors import CycleTooSmall, NotAForest, NotAnEdge, VertexInX
from clusterhodge.graphs import (
    CONTRACTIBLE,
    CohomologyBasis,
    Graph,
    Sphere,
    all_graphs,
    anticliques,
    closed_form_cycle,
    closed_form_path,
    complete_graph,
    connected_graphs,
    cycle_graph,
    forest_homotopy,
    forests,
    independence_complex,
    join,
    mv_delta,
    path_graph,
    reduced_cohomology,
    star_graph,
    trees,
)


def test_anticliques_examples():
    assert anticliques(path_graph(3)).sizes() == [1, 3, 1]
    assert anticliques(Graph.from_edges(4, [])).sizes() == [1, 4, 6, 4, 1]
    assert anticliques(complete_graph(4)).sizes() == [1, 4]


def test_anticliques_downward_closed():
    g = cycle_graph(5)
    fam = anticliques(g)
    members = set(fam.all_masks())
    for mask in members:
        sub = mask
        while sub:
            sub = (sub - 1) & mask
            assert sub in members


def test_reduced_cohomology_conventions():
    # the complex {empty set} alone carries H~^{-1}
    assert reduced_cohomology(independence_complex(Graph.from_edges(0, []))).dims == {-1: 1}
    # a single vertex is contractible
    assert reduced_cohomology(independence_complex(path_graph(1))).dims == {}
    # I(P5 on 5 vertices) ~ S^1  (path of length 4 = 3*1+1)
    assert reduced_cohomology(independence_complex(path_graph(5))).dims == {1: 1}
    # I(C6) ~ S^1 v S^1
    assert reduced_cohomology(independence_complex(cycle_graph(6))).dims == {1: 2}


def test_closed_form_path_examples():
    assert closed_form_path(3) == CONTRACTIBLE
    assert closed_form_path(4) == Sphere(1)
    assert closed_form_path(0) == Sphere(-1)
    with pytest.raises(ValueError):
        closed_form_path(-1)


def test_closed_form_path_matches_direct():
    # a path with k edges has k+1 vertices
    for edges in range(1, 9):
        direct = reduced_cohomology(independence_complex(path_graph(edges + 1)))
        assert closed_form_path(edges).cohomology().dims == direct.dims


def test_closed_form_cycle_examples():
    assert closed_form_cycle(3).dims == {0: 2}
    assert closed_form_cycle(4).dims == {0: 1}
    assert closed_form_cycle(6).dims == {1: 2}
    with pytest.raises(CycleTooSmall):
        closed_form_cycle(2)


def test_closed_form_cycle_matches_direct():
    for m in range(3, 10):
        direct = reduced_cohomology(independence_complex(cycle_graph(m)))
        assert closed_form_cycle(m).dims == direct.dims


def test_forest_homotopy_examples():
    assert forest_homotopy(star_graph(4)) == Sphere(0)
    assert forest_homotopy(Graph.from_edges(4, [(0, 1), (2, 3)])) == Sphere(1)
    assert forest_homotopy(path_graph(5)) == Sphere(1)
    with pytest.raises(NotAForest):
        forest_homotopy(cycle_graph(3))


def test_forest_homotopy_matches_direct_up_to_9():
    for forest in forests(9):
        expected = reduced_cohomology(independence_complex(forest)).dims
        assert forest_homotopy(forest).cohomology().dims == expected


def test_join_rule():
    assert join(Sphere(0), Sphere(0)) == Sphere(1)
    assert join(Sphere(-1), Sphere(2)) == Sphere(2)
    assert join(CONTRACTIBLE, Sphere(5)) == CONTRACTIBLE


def test_enumeration_counts():
    assert [len(all_graphs(v)) for v in range(1, 6)] == [1, 2, 4, 11, 34]
    assert [len(connected_graphs(v)) for v in range(1, 6)] == [1, 1, 2, 6, 21]
    assert [len(trees(v)) for v in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]


def test_vanishing_bound_exhaustive_m_le_6():
    # H~^r(I(G)) = 0 for r > m/2 - 1, over every labeled graph on <= 6 vertices
    for v in range(0, 7):
        pairs = list(itertools.combinations(range(v), 2))
        for edge_bits in range(1 << len(pairs)):
            g = Graph.from_edges(
                v, [p for k, p in enumerate(pairs) if edge_bits >> k & 1]
            )
            dims = reduced_cohomology(independence_complex(g)).dims
            for r, h in dims.items():
                if h:
                    assert r <= v / 2 - 1 or (v == 0 and r == -1)


def test_join_additivity_poincare():
    # for disconnected G, the shifted Poincare polynomial multiplies
    def shifted_poly(g):
        dims = reduced_cohomology(independence_complex(g)).dims
        out = [0] * (g.n_vertices + 2)
        for r, h in dims.items():
            out[r + 1] = h
        return out

    def mul(a, b):
        out = [0] * (len(a) + len(b))
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    cases = [
        (path_graph(3), cycle_graph(3)),
        (Graph.from_edges(2, [(0, 1)]), Graph.from_edges(2, [(0, 1)])),
        (star_graph(3), path_graph(2)),
    ]
    for g1, g2 in cases:
        pairs = [(u + 0, v + 0) for u, v in g1.edges]
        pairs += [(u + g1.n_vertices, v + g1.n_vertices) for u, v in g2.edges]
        both = Graph.from_edges(g1.n_vertices + g2.n_vertices, pairs)
        lhs = shifted_poly(both)
        rhs = mul(shifted_poly(g1), shifted_poly(g2))
        assert lhs[: len(rhs)] == rhs[: len(lhs)] or [
            c for c in lhs if c
        ] == [c for c in rhs if c]


def test_euler_characteristic():
    for g in all_graphs(5)[:12] + [cycle_graph(6), star_graph(5)]:
        cx = independence_complex(g)
        dims = reduced_cohomology(cx).dims
        homological = sum((-1) ** r * h for r, h in dims.items())
        # include H~^{-1} of the empty complex through the dims themselves
        assert homological == cx.euler_characteristic_reduced()


def test_mv_delta_isomorphism_on_edge():
    g = Graph.from_edges(2, [(0, 1)])
    maps = mv_delta(g, 0, 0, 1)
    assert list(maps) == [-1]
    assert maps[-1] == [[1]]


def test_mv_delta_zero_for_deep_paths():
    # middle edge of a 6-path: both sides have pendant 2-paths
    p6 = path_graph(6)
    maps = mv_delta(p6, 0b110011, 2, 3)
    # H~^1 of I(2 disjoint edges) is 1-dim but H~^2 of I(P6) vanishes
    assert maps == {1: []}


def test_mv_delta_vanishing_domain():
    g = Graph.from_edges(3, [(1, 2)])
    assert mv_delta(g, 0b001, 1, 2) == {}


def test_mv_delta_validation():
    g = path_graph(3)
    with pytest.raises(NotAnEdge):
        mv_delta(g, 0, 0, 2)
    with pytest.raises(VertexInX):
        mv_delta(g, 0b001, 0, 1)


def test_mv_delta_is_cochain_map_into_cocycles():
    # the produced classes are genuine: coordinates() would raise otherwise
    g = cycle_graph(5)
    x = 0b00110  # vertices 1, 2
    maps = mv_delta(g, x, 0, 4)
    assert maps  # at least one degree present


def test_cohomology_basis_coordinates_roundtrip():
    cx = independence_complex(cycle_graph(6))
    basis = CohomologyBasis(cx, 1)
    assert basis.dim == 2
    for i, rep in enumerate(basis.representatives):
        coords = basis.coordinates(rep)
        assert [int(c) for c in coords] == [1 if j == i else 0 for j in range(2)]
