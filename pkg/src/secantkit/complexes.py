"""Stanley-Reisner complexes of squarefree ideals and their secant complexes.

Complexes are stored by facets (sets of 1-based vertices).  The void complex
(no faces at all) has no facets and corresponds to the unit ideal; the
complex whose only face is the empty set has the single facet ``frozenset()``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Optional

from .errors import InvalidInput
from .monomial import (
    MonomialIdeal,
    VariableContext,
    intersect_all,
    irreducible_decomposition,
    radical,
)


def maximal_sets(sets: Iterable[frozenset]) -> frozenset:
    sets = set(frozenset(s) for s in sets)
    return frozenset(s for s in sets if not any(s < t for t in sets))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        facets = set(frozenset(f) for f in self.facets)
        for f in facets:
            if not all(1 <= v <= self.n for v in f):
                raise InvalidInput(f"facet {sorted(f)} outside 1..{self.n}")
        object.__setattr__(self, "facets", maximal_sets(facets))

    def sorted_facets(self) -> list:
        return sorted(self.facets, key=lambda f: (len(f), sorted(f)))

    def is_void(self) -> bool:
        return not self.facets

    def has_face(self, face: Iterable[int]) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)


def complex_of_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """Faces are the supports of the squarefree standard monomials of I."""
    if not I.is_squarefree():
        raise InvalidInput("complex_of_ideal needs a squarefree monomial ideal")
    n = I.ctx.n
    if I.is_unit():
        return SimplicialComplex(n, frozenset())
    facets = [
        frozenset(i + 1 for i in range(n) if u[i] == 0)
        for u in irreducible_decomposition(I)
    ]
    return SimplicialComplex(n, frozenset(facets))


def ideal_of_complex(D: SimplicialComplex, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    """Stanley-Reisner ideal: the intersection of the primes <x_i : i not in F> over facets F."""
    ctx = ctx or VariableContext.standard(D.n)
    if ctx.n != D.n:
        raise InvalidInput("context size differs from the vertex count")
    primes = (
        MonomialIdeal(ctx, [ctx.var(i - 1) for i in range(1, D.n + 1) if i not in F])
        for F in D.sorted_facets()
    )
    return intersect_all(ctx, primes)


def secant_complex(D: SimplicialComplex, r: int) -> SimplicialComplex:
    """Facets are the maximal unions of r faces of D."""
    if r < 1:
        raise InvalidInput("r must be at least 1")
    if D.is_void():
        return D
    unions = (frozenset().union(*combo) for combo in combinations_with_replacement(D.sorted_facets(), r))
    return SimplicialComplex(D.n, maximal_sets(unions))


def dimension(D: SimplicialComplex) -> int:
    """Krull dimension of the Stanley-Reisner ring: the largest facet size (-1 when void)."""
    return max((len(f) for f in D.facets), default=-1)


def degree(D: SimplicialComplex) -> int:
    """Number of facets of maximal size."""
    dim = dimension(D)
    return sum(1 for f in D.facets if len(f) == dim)


def ideal_dimension(I: MonomialIdeal) -> int:
    """Krull dimension of K[x]/I, computed on the radical."""
    return dimension(complex_of_ideal(radical(I)))


# -- cyclic polytopes -------------------------------------------------------

def gale_evenness(F: frozenset, n: int) -> bool:
    """Every pair i < j outside F encloses an even number of elements of F."""
    outside = [i for i in range(1, n + 1) if i not in F]
    for a, b in combinations(outside, 2):
        if sum(1 for v in F if a < v < b) % 2:
            return False
    return True


def cyclic_polytope_facets(n: int, d: int) -> frozenset:
    """Facets of the d-dimensional cyclic polytope on n vertices, by Gale evenness."""
    if not n > d >= 2:
        raise InvalidInput("need n > d >= 2")
    return frozenset(
        frozenset(F) for F in combinations(range(1, n + 1), d)
        if gale_evenness(frozenset(F), n)
    )


def cycle_complex(n: int) -> SimplicialComplex:
    """The n-cycle as a 1-dimensional complex: the complex of I(complement of C_n)."""
    return SimplicialComplex(n, frozenset(frozenset((i, i % n + 1)) for i in range(1, n + 1)))


def cyclic_polytope_crosscheck(n: int, r: int) -> bool:
    """Secant complex of the n-cycle versus the Gale-evenness facets of C(n, 2r)."""
    if n <= 3 or 2 * r > n - 1:
        raise InvalidInput("need n > 3 and 2r <= n - 1")
    from .graphs import Graph, edge_ideal

    D = complex_of_ideal(edge_ideal(Graph.cycle(n).complement()))
    return secant_complex(D, r).facets == cyclic_polytope_facets(n, 2 * r)
