import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ctx_of, graphs
from secantkit.errors import InvalidInput, LimitExceeded
from secantkit.graphs import (
    Graph,
    Hypergraph,
    QuadraticMonomialIdeal,
    blow_up,
    chromatic_number,
    clique_number,
    edge_ideal,
    facet_ideal,
    hypergraph_chromatic,
    hypergraph_colorable,
    is_perfect,
    non_colorable_sets,
    odd_hole_generators,
    perfect_by_secant_degrees,
    quadratic_secant,
    secant_edge_ideal,
    spgt_degree_classification,
)
from secantkit.join import secant
from secantkit.monomial import MonomialIdeal


def test_chromatic_examples():
    assert chromatic_number(Graph.cycle(5)) == 3
    assert chromatic_number(Graph.complete(4)) == 4
    assert chromatic_number(Graph.petersen()) == 3
    assert chromatic_number(Graph(3)) == 1
    assert chromatic_number(Graph(0)) == 0
    assert clique_number(Graph.cycle(5)) == 2


def test_chromatic_limit():
    with pytest.raises(LimitExceeded):
        chromatic_number(Graph(25))
    assert chromatic_number(Graph(25), limit=30) == 1


def test_limit_env_override(monkeypatch):
    monkeypatch.setenv("SECANTKIT_LIMIT", "4")
    with pytest.raises(LimitExceeded):
        chromatic_number(Graph.cycle(5))


def test_c5_secants():
    I = edge_ideal(Graph.cycle(5))
    assert secant_edge_ideal(Graph.cycle(5), 2) == MonomialIdeal.parse(I.ctx, ["x1 x2 x3 x4 x5"])
    assert secant_edge_ideal(Graph.cycle(5), 3).is_zero()
    assert secant_edge_ideal(Graph.cycle(5), 1) == I


def test_k4_secant_triangles():
    S = secant_edge_ideal(Graph.complete(4), 2)
    assert sorted(map(sum, S.gens)) == [3, 3, 3, 3]


def test_odd_holes_examples():
    assert odd_hole_generators(Graph.cycle(5)) == [frozenset(range(1, 6))]
    assert odd_hole_generators(Graph.cycle(6)) == []
    assert len(odd_hole_generators(Graph.complete(4))) == 4  # triangles count as odd cycles


def test_perfect_examples():
    rep = is_perfect(Graph.cycle(5))
    assert not rep.perfect and rep.witness == frozenset(range(1, 6)) and not rep.secant_criterion
    assert is_perfect(Graph.cycle(6)).perfect
    assert not is_perfect(Graph.cycle(7).complement()).perfect


def test_spgt_examples():
    c7 = spgt_degree_classification(Graph.cycle(7).complement())
    assert (c7.clause, c7.r) == (2, 3)
    assert c7.degrees[3] == [7]
    c9 = spgt_degree_classification(Graph.cycle(9).complement())
    assert (c9.clause, c9.r) == (2, 4)
    assert spgt_degree_classification(Graph.cycle(5)).clause == 1
    with pytest.raises(InvalidInput):
        spgt_degree_classification(Graph.cycle(6))


def test_hypergraph_examples():
    assert hypergraph_chromatic(Hypergraph.fano()) == 3
    assert hypergraph_chromatic(Hypergraph(3, frozenset([frozenset({1, 2, 3})]))) == 2
    assert not hypergraph_colorable(Hypergraph.fano(), 2)
    with pytest.raises(InvalidInput):
        Hypergraph(2, frozenset([frozenset({1})]))
    with pytest.raises(InvalidInput):
        Hypergraph(3, frozenset([frozenset({1, 2}), frozenset({1, 2, 3})]))


def test_hypergraph_matches_graph_coloring():
    G = Graph.petersen()
    assert hypergraph_chromatic(Hypergraph.from_graph(G)) == chromatic_number(G)
    assert facet_ideal(Hypergraph.from_graph(G)) == edge_ideal(G)


def test_fano_secant_vanishes_at_chromatic_number():
    H = Hypergraph.fano()
    I = facet_ideal(H)
    assert not secant(I, 2).ideal.is_zero()
    assert secant(I, 3).ideal.is_zero()


def test_quadratic_secant_examples():
    ctx = ctx_of(1)
    Q = QuadraticMonomialIdeal.from_ideal(MonomialIdeal.parse(ctx, ["x1^2"]))
    assert quadratic_secant(Q, 2, ctx) == MonomialIdeal.parse(ctx, ["x1^3"])
    G, owner = blow_up(Q, 3)
    assert G == Graph.complete(3) and owner == [1, 1, 1]


def test_quadratic_rejects_non_quadratic():
    with pytest.raises(InvalidInput):
        QuadraticMonomialIdeal.from_ideal(MonomialIdeal.parse(ctx_of(2), ["x1^3"]))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_chromatic_is_first_vanishing_secant(G):
    chi = chromatic_number(G)
    vanish = next(r for r in range(1, G.n + 2) if secant_edge_ideal(G, r).is_zero())
    assert vanish == max(chi, 1)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(1, 4))
def test_generators_have_degree_above_r(G, r):
    assert all(sum(g) >= r + 1 for g in secant_edge_ideal(G, r).gens)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.integers(2, 3))
def test_coloring_route_matches_general_secant(G, r):
    assert secant_edge_ideal(G, r) == secant(edge_ideal(G), r).ideal


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_r2_generators_are_odd_holes(G):
    assert set(non_colorable_sets(G, 2)) == set(odd_hole_generators(G))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_perfection_equivalence(G):
    rep = is_perfect(G)
    assert rep.perfect == rep.secant_criterion == perfect_by_secant_degrees(G)


@st.composite
def quadratic_ideals(draw):
    n = draw(st.integers(1, 4))
    quads = [tuple(int(k in (i, j)) + int(k == i == j) for k in range(n))
             for i in range(n) for j in range(i, n)]
    gens = draw(st.lists(st.sampled_from(quads), min_size=1, max_size=5))
    return MonomialIdeal(ctx_of(n), gens)


@settings(max_examples=50, deadline=None)
@given(quadratic_ideals(), st.integers(1, 3))
def test_quadratic_secant_matches_general(I, r):
    Q = QuadraticMonomialIdeal.from_ideal(I)
    assert quadratic_secant(Q, r, I.ctx) == secant(I, r).ideal


def test_graph_validation():
    with pytest.raises(InvalidInput):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(InvalidInput):
        Graph.from_edges(3, [(1, 4)])
    assert Graph.from_edges(3, [(2, 1)]).edges == frozenset({(1, 2)})
    assert len(Graph.cycle(5).complement().edges) == 10 - 5
