from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secantkit.complexes import complex_of_ideal, secant_complex
from secantkit.errors import InvalidInput
from secantkit.graphs import edge_ideal, secant_edge_ideal
from secantkit.io import data_path, load
from secantkit.monomial import MonomialIdeal
from secantkit.posets import Poset, antichain_secant, stanley_reisner_ideal
from secantkit.triangulation import (
    NamedConfig,
    PointConfiguration,
    build_config,
    from_complex,
    from_simplices,
    is_full,
    lex_triangulation,
    nonedge_graph,
    normalized_volume,
    partitionable_via_secant_complex,
    pulling_triangulation,
    r_partitionable,
    rook_placement,
    rook_triangulation,
    scroll_forbidden_check,
    scroll_index,
    scroll_lex_priority,
    scroll_nonedge_rule,
    segre_index,
    segre_star_simplex,
    validate_triangulation,
)

VERONESE = build_config(NamedConfig("veronese3"))
VERONESE_TRI = load("triangulation", data_path("veronese3.tri"))
SCROLL_TRI = load("triangulation", data_path("scroll26.tri"))


def test_veronese_columns():
    assert VERONESE.points == (
        (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
        (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3),
    )
    assert VERONESE.rank == 3


def test_p1xp1_columns():
    C = build_config(NamedConfig("p1xp1o22"))
    assert [p[1] for p in C.points] == [0, 0, 0, 1, 1, 1, 2, 2, 2]
    assert [p[2] for p in C.points] == [0, 1, 2] * 3
    assert C.labels[0] == "x1" and C.labels[-1] == "x9"


def test_scroll_and_segre_configs():
    S = build_config(NamedConfig("scroll", (1, 1)))
    assert S.n == 4 and S.dim == 3 and S.rank == 3
    assert S.points[scroll_index(S, 2, 1)] == (1, 0, 1)
    G = build_config(NamedConfig("segre", (1, 2)))
    assert G.n == 6 and G.rank == 4  # rank-deficient embedding in Z^5
    assert G.points[segre_index(G, (1, 2))] == (0, 1, 0, 0, 1)


def test_named_config_parse_and_errors():
    assert NamedConfig.parse("segre:1,2") == NamedConfig("segre", (1, 2))
    for bad in ("segre", "scroll:0,1", "cube", "segre:a"):
        with pytest.raises(InvalidInput):
            NamedConfig.parse(bad)


def test_point_configuration_validation():
    with pytest.raises(InvalidInput):
        PointConfiguration([(1, 0), (1, 0)])
    with pytest.raises(InvalidInput):
        PointConfiguration([(1, 0), (2, 0)], (1, 0))
    with pytest.raises(InvalidInput):
        PointConfiguration([(0, 0), (1, 0)])  # no omega exists
    assert PointConfiguration([(1, 0), (1, 1)]).omega == (1, 0)


def test_veronese_is_valid_and_full():
    rep = validate_triangulation(VERONESE_TRI)
    assert rep.valid and rep.certificate == "exact"
    assert rep.volume == normalized_volume(VERONESE) == 27
    assert is_full(VERONESE_TRI) and len(VERONESE_TRI.simplices) == 9


def test_validation_failures():
    missing = from_simplices(VERONESE, VERONESE_TRI.simplices[1:])
    assert validate_triangulation(missing).failure.startswith("volume")
    collinear = from_simplices(VERONESE, [{0, 1, 3}] + list(VERONESE_TRI.simplices))
    assert validate_triangulation(collinear).failure.startswith("independence")
    square = build_config(NamedConfig("segre", (1, 1)))
    crossing = from_simplices(square, [{0, 1, 3}, {1, 2, 3}])
    rep = validate_triangulation(crossing)
    assert rep.failure.startswith("intersection")


def test_is_full_examples():
    corners = from_simplices(VERONESE, [{0, 6, 9}])
    assert validate_triangulation(corners).valid
    assert not is_full(corners)


def test_nonedges_single_simplex():
    tri = PointConfiguration([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert nonedge_graph(from_simplices(tri, [{0, 1, 2}])).edges == frozenset()


def test_veronese_nonedges():
    I = edge_ideal(nonedge_graph(VERONESE_TRI), VERONESE.context())
    names = [VERONESE.context().format(g, "*") for g in I.gens]
    assert names[:3] == ["x0*x3", "x0*x4", "x0*x5"]
    assert names[-2:] == ["x6*x9", "x7*x9"]
    assert len(names) == 27  # 45 pairs minus the 18 edges of the triangulation


def test_veronese_three_secant_and_leading_term():
    ctx = VERONESE.context()
    S = secant_edge_ideal(nonedge_graph(VERONESE_TRI), 3, ctx)
    assert S == MonomialIdeal.parse(ctx, ["x0 x4 x6 x9"])
    assert ctx.monomial("x0 x4 x6 x9") in S


def test_veronese_partitionable_counts():
    assert r_partitionable(VERONESE_TRI, 1).count == 9
    rep3 = r_partitionable(VERONESE_TRI, 3)
    assert rep3.count == 4 and rep3.expected_dim_ok and rep3.expected_dim == 8
    omitted = sorted(min(set(range(10)) - set(s)) for s in rep3.sets)
    assert omitted == [0, 4, 6, 9]
    rep2 = r_partitionable(VERONESE_TRI, 2)
    assert rep2.count <= 14 < 15
    assert rep2.count == 12


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_partitionable_routes_agree(r):
    for T in (VERONESE_TRI, SCROLL_TRI):
        assert r_partitionable(T, r).count == partitionable_via_secant_complex(T, r)


def test_secant_complex_of_veronese_triangulation():
    D = secant_complex(VERONESE_TRI.complex(), 3)
    big = {f for f in D.facets if len(f) == 9}
    assert big == {frozenset(range(1, 11)) - {v + 1} for v in (0, 4, 6, 9)}


# -- the diagonal triangulation and its zigzag poset -------------------

P1P1 = build_config(NamedConfig("p1xp1o22"))
M = [[1, 2, 4, 5], [2, 3, 5, 6], [4, 5, 7, 8], [5, 6, 8, 9]]


def diagonal_terms(k):
    ctx = P1P1.context()
    gens = set()
    for R in combinations(range(4), k):
        for C in combinations(range(4), k):
            e = [0] * 9
            for a, b in zip(R, C):
                e[M[a][b] - 1] += 1
            gens.add(tuple(e))
    return MonomialIdeal(ctx, gens)


def test_diagonal_triangulation():
    T = from_complex(P1P1, complex_of_ideal(diagonal_terms(2)))
    assert validate_triangulation(T).valid and is_full(T)
    assert T == load("triangulation", data_path("p1xp1o22-diagonal.tri"))
    G = nonedge_graph(T)
    for r in (1, 2, 3):
        assert secant_edge_ideal(G, r, P1P1.context()) == diagonal_terms(r + 1)


def test_diagonal_triangulation_matches_zigzag_poset():
    T = load("triangulation", data_path("p1xp1o22-diagonal.tri"))
    P = load("poset", data_path("zigzag.poset"))
    chains = {frozenset(c) for c in combinations(P.elements, 3)
              if all(P.comparable(a, b) for a, b in combinations(c, 2))}
    assert chains == {frozenset(i + 1 for i in s) for s in T.simplices}
    G = nonedge_graph(T)
    for r in (1, 2, 3):
        assert antichain_secant(P, r).gens == secant_edge_ideal(G, r).gens
    assert stanley_reisner_ideal(P).gens == edge_ideal(G).gens


# -- pulling, lex and Segre ---------------------------------------------------

def test_pulling_square():
    square = build_config(NamedConfig("segre", (1, 1)))
    T = pulling_triangulation(square, [0, 1, 2, 3])
    assert len(T.simplices) == 2 and all(0 in s for s in T.simplices)


@pytest.mark.parametrize("d", [(1, 1), (1, 2), (2, 2), (1, 1, 1)])
def test_segre_lex_top_simplex(d):
    C = build_config(NamedConfig("segre", d))
    for idx in product(*(range(x + 1) for x in d)):
        v = segre_index(C, idx)
        T = lex_triangulation(C, [v] + [i for i in range(C.n) if i != v])
        assert validate_triangulation(T).valid
        assert [s for s in T.simplices if v in s] == [segre_star_simplex(C, idx)]


def test_rook_examples():
    assert rook_placement((1, 1), 2) is None
    assert rook_placement((2, 2), 2) is None  # two coordinates cannot differ in three places
    assert rook_placement((2, 2), 1) == [(0, 0)]
    found = rook_placement((3, 3, 3), 4)
    assert found is not None and len(found) == 4
    assert all(sum(a != b for a, b in zip(x, y)) > 2 for x, y in combinations(found, 2))


def brute_force_max_rooks(d):
    cells = list(product(*(range(x + 1) for x in d)))
    best = 0
    for k in range(1, len(cells) + 1):
        if any(all(sum(a != b for a, b in zip(x, y)) > 2 for x, y in combinations(S, 2))
               for S in combinations(cells, k)):
            best = k
        else:
            break
    return best


@pytest.mark.parametrize("d", [(1, 1, 1), (2, 2, 2), (1, 1, 1, 1)])
def test_rooks_match_brute_force(d):
    best = brute_force_max_rooks(d)
    assert rook_placement(d, best) is not None
    assert rook_placement(d, best + 1) is None


def test_rook_simplices_are_disjoint_maximal_simplices():
    d = (1, 1, 1, 1)
    C = build_config(NamedConfig("segre", d))
    rooks = rook_placement(d, 2)
    T = rook_triangulation(C, rooks)
    stars = [segre_star_simplex(C, r) for r in rooks]
    assert all(s in T.simplices for s in stars)
    assert not (stars[0] & stars[1])
    assert validate_triangulation(T).valid
    assert r_partitionable(T, 2).count >= 1


def test_rank_limit():
    C = build_config(NamedConfig("segre", (2, 2, 2)))
    with pytest.raises(InvalidInput):
        pulling_triangulation(C, range(C.n))


# -- scrolls ----------------------------------------------------------------

def planar_tree_edges(T):
    rep = scroll_forbidden_check(T)
    return rep.tree_edges


def test_scroll22_pulling_gives_planar_spanning_trees():
    C = build_config(NamedConfig("scroll", (2, 2)))
    from itertools import permutations

    for order in permutations(range(6)):
        T = pulling_triangulation(C, order)
        assert validate_triangulation(T).valid and is_full(T)
        edges = planar_tree_edges(T)
        assert len(edges) == 3 + 3 - 1  # spanning tree of K_{3,3}
        for (a, b), (c, d) in combinations(edges, 2):
            assert not (a[1] < c[1] and b[1] > d[1]) and not (a[1] > c[1] and b[1] < d[1])


def test_reconstructed_scroll_has_both_patterns():
    assert validate_triangulation(SCROLL_TRI).valid and is_full(SCROLL_TRI)
    rep = scroll_forbidden_check(SCROLL_TRI)
    assert rep.claws == (((1, 1), ((2, 3), (2, 4), (2, 5))),)
    assert rep.boundary == (((1, 0), ((2, 0), (2, 1), (2, 2), (2, 3))),)
    assert not rep.clean


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_column_order_lex_is_clean(m):
    C = build_config(NamedConfig("scroll", (m, m)))
    T = lex_triangulation(C, scroll_lex_priority(C))
    assert validate_triangulation(T).valid and is_full(T)
    assert scroll_forbidden_check(T).clean
    assert {(a - 1, b - 1) for a, b in nonedge_graph(T).edges} == scroll_nonedge_rule(C)


def test_staircase_is_clean():
    C = build_config(NamedConfig("scroll", (3, 3)))
    x = lambda i, j: scroll_index(C, i, j)
    simplices = []
    for j in range(3):
        simplices.append({x(1, j), x(2, j), x(1, j + 1)})
        simplices.append({x(2, j), x(1, j + 1), x(2, j + 1)})
    T = from_simplices(C, simplices)
    assert validate_triangulation(T).valid
    assert scroll_forbidden_check(T).clean


def test_scroll_check_rejects_other_configs():
    with pytest.raises(InvalidInput):
        scroll_forbidden_check(VERONESE_TRI)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["veronese3", "scroll:2,3", "segre:1,2", "p1xp1o22"]), st.data())
def test_pulling_is_valid_and_full(name, data):
    C = build_config(NamedConfig.parse(name))
    order = data.draw(st.permutations(list(range(C.n))))
    T = pulling_triangulation(C, order)
    assert validate_triangulation(T).valid
    assert is_full(T)
    assert order[0] in T.vertices()


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["veronese3", "scroll:2,3", "p1xp1o22"]), st.data())
def test_lex_is_valid(name, data):
    C = build_config(NamedConfig.parse(name))
    order = data.draw(st.permutations(list(range(C.n))))
    assert validate_triangulation(lex_triangulation(C, order)).valid


def test_degree_chain_for_veronese():
    # the true degree 15 of the 2-secant bounds the count from above
    assert r_partitionable(VERONESE_TRI, 2).degree_lower_bound <= 15
