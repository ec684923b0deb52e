from fractions import Fraction

import pytest

from chaindex import Graph, Vertex, build_crossed_chain, build_plain_chain
from chaindex import oracles as oc
from chaindex.linalg import det_bareiss, laplacian


def k2():
    return Graph("ab", [("a", "b")])


def path3():
    return Graph("abc", [("a", "b"), ("b", "c")])


def triangle():
    return Graph("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def star4():
    return Graph("abcd", [("a", "b"), ("a", "c"), ("a", "d")])


# --- resistance ---------------------------------------------------------------


def test_bridge_resistance_is_one():
    assert oc.resistance(k2(), "a", "b") == 1
    assert oc.resistance(star4(), "a", "c") == 1


def test_triangle_resistance():
    assert oc.resistance(triangle(), "a", "b") == Fraction(2, 3)


def test_resistance_q1_rung_pair():
    g = build_crossed_chain(1)
    assert oc.resistance(g, Vertex(1), Vertex(1, True)) == Fraction(1, 2)


def test_resistance_q1_adjacent_rail_pair():
    # grounded-solve potentials: phi(1) - phi(2) under unit current 1 -> 2
    g = build_crossed_chain(1)
    assert oc.resistance(g, Vertex(1), Vertex(2)) == Fraction(1, 2)


def test_resistance_symmetric_and_matches_minor_ratio():
    # independent route: r(u, v) = det L[{u, v}] / det L[{u}]
    g = build_crossed_chain(1)
    lap = laplacian(g)

    def minor(drop):
        keep = [i for i in range(len(lap)) if i not in drop]
        return det_bareiss([[lap[i][j] for j in keep] for i in keep])

    tau = minor({0})
    pairs = [(Vertex(1), Vertex(3)), (Vertex(2), Vertex(4, True)),
             (Vertex(5), Vertex(5, True))]
    for u, v in pairs:
        expected = Fraction(minor({g.position(u), g.position(v)}), tau)
        assert oc.resistance(g, u, v) == expected
        assert oc.resistance(g, v, u) == expected


def test_resistance_triangle_inequality_and_distance_bound():
    g = build_crossed_chain(1)
    vs = g.vertices
    r = {(u, v): oc.resistance(g, u, v) for u in vs for v in vs if u != v}
    for u in vs:
        dist = g.distances_from(u)
        for v in vs:
            if u == v:
                continue
            assert r[(u, v)] <= dist[v]
    for u, v, w in [(vs[0], vs[3], vs[7]), (vs[1], vs[9], vs[4]), (vs[2], vs[5], vs[8])]:
        assert r[(u, v)] + r[(v, w)] >= r[(u, w)]


def test_resistance_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        oc.resistance(k2(), "a", "a")


# --- Kirchhoff indices ----------------------------------------------------------


def test_kirchhoff_k2():
    assert oc.kirchhoff_index(k2()) == 1


def test_kirchhoff_q1_q2():
    assert oc.kirchhoff_index(build_crossed_chain(1)) == Fraction(95, 3)
    assert oc.kirchhoff_index(build_crossed_chain(2)) == 156


def test_kirchhoff_routes_agree_independently():
    for g in (triangle(), star4(), build_crossed_chain(1), build_plain_chain(2)):
        assert oc.kirchhoff_from_resistances(g) == oc.kirchhoff_from_spectrum(g)


def test_degree_kirchhoff_k2():
    assert oc.degree_kirchhoff_index(k2()) == 1


def test_degree_kirchhoff_q1_q2():
    assert oc.degree_kirchhoff_index(build_crossed_chain(1)) == Fraction(1298, 3)
    assert oc.degree_kirchhoff_index(build_crossed_chain(2)) == 2496


def test_degree_kirchhoff_routes_agree_independently():
    for g in (triangle(), star4(), build_crossed_chain(1), build_plain_chain(1)):
        assert oc.degree_kirchhoff_from_resistances(g) == \
            oc.degree_kirchhoff_from_spectrum(g)


def test_disconnected_rejected():
    g = Graph("abcd", [("a", "b"), ("c", "d")])
    for fn in (oc.kirchhoff_index, oc.degree_kirchhoff_index,
               oc.spanning_tree_count, oc.wiener_index, oc.gutman_index):
        with pytest.raises(ValueError):
            fn(g)


# --- spanning trees ---------------------------------------------------------------


def test_spanning_trees_q1_q2():
    assert oc.spanning_tree_count(build_crossed_chain(1)) == 12288
    assert oc.spanning_tree_count(build_crossed_chain(2)) == 113246208


def test_spanning_trees_of_trees():
    assert oc.spanning_tree_count(path3()) == 1
    assert oc.spanning_tree_count(star4()) == 1
    assert oc.spanning_tree_count(triangle()) == 3


def test_spanning_trees_independent_of_dropped_vertex():
    g = build_crossed_chain(2)
    drops = [g.vertices[0], g.vertices[7], g.vertices[-1]]
    counts = {oc.spanning_tree_count(g, drop=v) for v in drops}
    assert counts == {113246208}


@pytest.mark.parametrize("n", [5, 6])
def test_spanning_trees_larger_sizes(n):
    # the power-product form continues to hold past the printed check range
    assert oc.spanning_tree_count(build_crossed_chain(n)) == \
        2 ** (10 * n + 2) * 3 ** (2 * n - 1)


# --- distance indices ---------------------------------------------------------------


def test_wiener_small_graphs():
    assert oc.wiener_index(k2()) == 1
    assert oc.wiener_index(path3()) == 4


def test_gutman_small_graphs():
    assert oc.gutman_index(k2()) == 1
    # path on 3 vertices, degrees (1, 2, 1): 1*2*1 + 2*1*1 + 1*1*2 = 6
    assert oc.gutman_index(path3()) == 6


def test_wiener_q1_hand_count():
    # 45 pairs: rails contribute 2*20, cross pairs with distinct indices 40,
    # mirror pairs 1+1+1 (rungs) + 2+2 (no rung) = 7; total 87.
    assert oc.wiener_index(build_crossed_chain(1)) == 87


def test_gutman_q1_frozen():
    assert oc.gutman_index(build_crossed_chain(1)) == 1179


def test_distance_class_sums_q1():
    g = build_crossed_chain(1)
    assert oc.wiener_class_sums(g) == [84, 32, 28, 30, 0]
    assert oc.gutman_class_sums(g) == [486, 462, 480, 400, 530, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_class_sums_recombine(n):
    g = build_crossed_chain(n)
    assert sum(oc.wiener_class_sums(g)) == 2 * oc.wiener_index(g)
    assert sum(oc.gutman_class_sums(g)) == 2 * oc.gutman_index(g)


def test_class_sums_require_crossed_chain():
    with pytest.raises(ValueError):
        oc.wiener_class_sums(build_plain_chain(1))


# --- bundles -----------------------------------------------------------------------


def test_bundle_q1():
    b = oc.index_bundle(build_crossed_chain(1))
    assert (b.kf, b.kf_star, b.tau, b.wiener, b.gutman) == (
        Fraction(95, 3), Fraction(1298, 3), 12288, 87, 1179,
    )


def test_bundle_plain_chain_runs_exactly():
    # no closed forms exist for the plain chain; the oracles still agree
    # along their independent routes and produce exact values
    b = oc.index_bundle(build_plain_chain(1))
    assert (b.kf, b.kf_star, b.tau, b.wiener, b.gutman) == (
        Fraction(2155, 31), Fraction(10085, 31), 31, 113, 529,
    )


def test_bundle_json_round_trip():
    b = oc.index_bundle(build_crossed_chain(2))
    data = b.to_json_dict()
    assert data["kf"] == "156" and data["tau"] == "113246208"
    assert oc.IndexBundle.from_json_dict(data) == b
