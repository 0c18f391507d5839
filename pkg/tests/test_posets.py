import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secantkit.errors import InvalidInput, LimitExceeded
from secantkit.join import secant
from secantkit.posets import (
    MinorFamily,
    Poset,
    antichain_secant,
    antichains,
    build_poset,
    delightful_witness_check,
    family_polynomials,
    min_chain_partition,
    minor_leading_terms,
    revlex_leading,
    stanley_reisner_ideal,
    width,
)


@st.composite
def posets(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=12)) if pairs else []
    # a relabelling keeps covers acyclic while not always increasing
    perm = draw(st.permutations(list(range(1, n + 1))))
    return Poset(range(1, n + 1), [(perm[a - 1], perm[b - 1]) for a, b in covers])


def test_poset_basics():
    P = Poset.chain(4)
    assert P.leq(1, 4) and not P.leq(4, 1)
    assert width(P) == 1 and width(Poset.antichain(4)) == 4
    assert P.covers() == [(1, 2), (2, 3), (3, 4)]
    with pytest.raises(InvalidInput):
        Poset([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(InvalidInput):
        Poset([1, 2], [(1, 3)])


def test_antichains_examples():
    P = Poset(range(1, 5), [(1, 3), (2, 3), (2, 4)])
    assert antichains(P, 2) == [(1, 2), (1, 4), (3, 4)]
    assert stanley_reisner_ideal(P).gens == ((1, 1, 0, 0), (1, 0, 0, 1), (0, 0, 1, 1))
    assert antichain_secant(Poset.antichain(3), 2).gens == ((1, 1, 1),)
    assert antichain_secant(Poset.chain(3), 1).is_zero()


def test_linear_extension_respects_order():
    P = Poset(range(1, 6), [(3, 1), (1, 5), (4, 2)])
    ext = P.linear_extension()
    assert all(ext.index(a) < ext.index(b) for a, b in P.covers())


def test_family_posets():
    G = build_poset(MinorFamily("generic", 2, 3))
    assert len(G) == 6 and width(G) == 2
    S = build_poset(MinorFamily("symmetric", 3))
    assert len(S) == 6 and width(S) == 3
    Pf = build_poset(MinorFamily("pfaffian", 4))
    assert len(Pf) == 6 and width(Pf) == 2
    with pytest.raises(InvalidInput):
        MinorFamily("symmetric", 3, 4)
    with pytest.raises(InvalidInput):
        MinorFamily("hankel", 3)


def test_pfaffian_expansion():
    polys = dict(family_polynomials(MinorFamily("pfaffian", 4), 2))
    assert polys[(1, 2, 3, 4)] == {((1, 2), (3, 4)): 1, ((1, 3), (2, 4)): -1, ((1, 4), (2, 3)): 1}


def test_pfaffian_4_leading_term():
    F = MinorFamily("pfaffian", 4)
    P = build_poset(F)
    idx = {x: i for i, x in enumerate(P.elements)}
    expected = [0] * len(P)
    expected[idx[(1, 4)]] = expected[idx[(2, 3)]] = 1
    assert minor_leading_terms(F, 2) == {tuple(expected)}


def test_revlex_leading():
    # smallest variable first: the term avoiding "a" wins
    assert revlex_leading({("a", "d"): 1, ("b", "c"): -1}, ["a", "b", "c", "d"]) == ("b", "c")


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_generic_witness(m, n):
    F = MinorFamily("generic", m, n)
    for k in range(2, F.max_k() + 1):
        assert delightful_witness_check(F, k).ok


@pytest.mark.parametrize("m", range(2, 5))
def test_symmetric_witness(m):
    F = MinorFamily("symmetric", m)
    for k in range(2, m + 1):
        assert delightful_witness_check(F, k).ok


@pytest.mark.parametrize("m", range(4, 7))
def test_pfaffian_witness(m):
    F = MinorFamily("pfaffian", m)
    for k in range(2, F.max_k() + 1):
        assert delightful_witness_check(F, k).ok


def test_witness_detects_a_bad_order():
    F = MinorFamily("generic", 2, 2)
    bad = [(1, 1), (1, 2), (2, 1), (2, 2)]  # x11 smallest, so x12 x21 leads
    rep = delightful_witness_check(F, 2, order=bad)
    assert not rep.ok and rep.missing and rep.extra


def test_witness_limits():
    with pytest.raises(InvalidInput):
        delightful_witness_check(MinorFamily("generic", 2, 2), 1)
    with pytest.raises(LimitExceeded):
        minor_leading_terms(MinorFamily("generic", 7, 7), 2)


@settings(max_examples=60, deadline=None)
@given(posets(), st.integers(1, 3))
def test_antichain_secant_matches_general_secant(P, r):
    assert antichain_secant(P, r) == secant(stanley_reisner_ideal(P), r).ideal


@settings(max_examples=60, deadline=None)
@given(posets(), st.integers(1, 4))
def test_antichain_secant_degrees(P, r):
    S = antichain_secant(P, r)
    assert all(sum(g) == r + 1 for g in S.gens)
    assert S.is_zero() == (r >= width(P))


@settings(max_examples=60, deadline=None)
@given(posets(max_n=10))
def test_dilworth(P):
    chains = min_chain_partition(P)
    assert len(chains) == width(P)
    assert sorted(x for c in chains for x in c) == sorted(P.elements)
    for c in chains:
        assert all(P.leq(a, b) for a, b in zip(c, c[1:]))


def test_restrict_gives_ladder():
    P = build_poset(MinorFamily("generic", 3, 3))
    ladder = P.restrict([x for x in P.elements if x != (1, 1)])
    # the main diagonal is the only 3-antichain, so dropping a corner lowers the width
    assert len(ladder) == 8 and width(ladder) == 2
