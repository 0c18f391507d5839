"""Posets, antichain secants and determinantal / Pfaffian leading-term witnesses.

The secant J(P)^{r} of the ideal of 2-element antichains of a poset P is
generated by the monomials of the (r+1)-element antichains.  For the three
matrix families below, the poset is chosen so that its antichains are the
leading terms of minors (resp. sub-Pfaffians) under a reverse lexicographic
order refining the poset; :func:`delightful_witness_check` verifies that by
actually expanding the determinants and Pfaffians.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from . import limits
from .errors import InvalidInput
from .monomial import MonomialIdeal, VariableContext


class Poset:
    """A finite poset given by covering pairs; the order relation is cached."""

    def __init__(self, elements: Sequence, covers: Iterable = ()):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise InvalidInput("duplicate poset elements")
        self._index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        below = [[False] * n for _ in range(n)]
        for i in range(n):
            below[i][i] = True
        for a, b in covers:
            if a not in self._index or b not in self._index:
                raise InvalidInput(f"cover {a} < {b} mentions an unknown element")
            below[self._index[a]][self._index[b]] = True
        for k in range(n):
            for i in range(n):
                if below[i][k]:
                    row_k = below[k]
                    row_i = below[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        for i in range(n):
            for j in range(i + 1, n):
                if below[i][j] and below[j][i]:
                    raise InvalidInput(f"covers contain a cycle through {self.elements[i]} and {self.elements[j]}")
        self._leq = below

    @classmethod
    def from_relation(cls, elements: Sequence, leq) -> "Poset":
        """Build from a predicate leq(a, b); covers are extracted automatically."""
        elements = tuple(elements)
        lt = {(a, b) for a in elements for b in elements if a != b and leq(a, b)}
        covers = [
            (a, b) for (a, b) in lt
            if not any((a, c) in lt and (c, b) in lt for c in elements)
        ]
        return cls(elements, sorted(covers, key=str))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(range(1, n + 1), [(i, i + 1) for i in range(1, n)])

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(range(1, n + 1), [])

    def __len__(self):
        return len(self.elements)

    def leq(self, a, b) -> bool:
        return self._leq[self._index[a]][self._index[b]]

    def comparable(self, a, b) -> bool:
        i, j = self._index[a], self._index[b]
        return self._leq[i][j] or self._leq[j][i]

    def covers(self) -> list:
        n = len(self.elements)
        out = []
        for i in range(n):
            for j in range(n):
                if i != j and self._leq[i][j] and not any(
                    k not in (i, j) and self._leq[i][k] and self._leq[k][j] for k in range(n)
                ):
                    out.append((self.elements[i], self.elements[j]))
        return out

    def restrict(self, labels: Iterable) -> "Poset":
        """Induced subposet (used for ladder-shaped regions)."""
        keep = [x for x in self.elements if x in set(labels)]
        return Poset.from_relation(keep, self.leq)

    def linear_extension(self) -> list:
        """A linear extension, smallest elements first, ties broken by element order."""
        n = len(self.elements)
        indeg = [sum(1 for i in range(n) if i != j and self._leq[i][j]) for j in range(n)]
        heap = [j for j in range(n) if indeg[j] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            j = heapq.heappop(heap)
            out.append(self.elements[j])
            for k in range(n):
                if k != j and self._leq[j][k]:
                    indeg[k] -= 1
                    if indeg[k] == 0:
                        heapq.heappush(heap, k)
        return out

    def variable_names(self) -> tuple:
        names = []
        for x in self.elements:
            if isinstance(x, tuple):
                sep = "" if all(isinstance(c, int) and 0 <= c < 10 for c in x) else "_"
                names.append("x" + sep.join(str(c) for c in x))
            else:
                names.append(f"x{x}")
        return tuple(names)

    def context(self) -> VariableContext:
        return VariableContext(self.variable_names())


def antichains(P: Poset, k: int) -> list:
    """All k-element antichains, each as a tuple in element order."""
    if k < 1:
        raise InvalidInput("k must be at least 1")
    elems = P.elements
    out = []

    def grow(chosen: list, start: int):
        if len(chosen) == k:
            out.append(tuple(chosen))
            return
        for i in range(start, len(elems)):
            x = elems[i]
            if all(not P.comparable(x, y) for y in chosen):
                chosen.append(x)
                grow(chosen, i + 1)
                chosen.pop()

    grow([], 0)
    return out


def width(P: Poset) -> int:
    """Size of a largest antichain."""
    k = 0
    while k < len(P) and antichains(P, k + 1):
        k += 1
    return k


def min_chain_partition(P: Poset) -> list:
    """A partition of P into the fewest chains (Dilworth, via bipartite matching)."""
    elems = P.elements
    n = len(elems)
    succ = [[j for j in range(n) if j != i and P.leq(elems[i], elems[j])] for i in range(n)]
    match_right = [-1] * n

    def augment(i, seen):
        for j in succ[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    for i in range(n):
        augment(i, [False] * n)
    nxt = {match_right[j]: j for j in range(n) if match_right[j] >= 0}
    starts = [j for j in range(n) if match_right[j] < 0]
    chains = []
    for s in starts:
        chain = [s]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append([elems[i] for i in chain])
    return chains


def _antichain_ideal(P: Poset, size: int) -> MonomialIdeal:
    ctx = P.context()
    idx = {x: i for i, x in enumerate(P.elements)}
    gens = []
    for A in antichains(P, size):
        e = [0] * ctx.n
        for x in A:
            e[idx[x]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ctx, gens)


def stanley_reisner_ideal(P: Poset) -> MonomialIdeal:
    """J(P), generated by x_a x_b over incomparable pairs."""
    return _antichain_ideal(P, 2)


def antichain_secant(P: Poset, r: int) -> MonomialIdeal:
    """J(P)^{r} = <m_A : A an antichain with r+1 elements>."""
    if r < 1:
        raise InvalidInput("r must be at least 1")
    return _antichain_ideal(P, r + 1)


# -- matrix families --------------------------------------------------------

KINDS = ("generic", "symmetric", "pfaffian")


@dataclass(frozen=True)
class MinorFamily:
    kind: str
    rows: int
    cols: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown family {self.kind!r}; expected one of {KINDS}")
        if self.rows < 1 or (self.cols is not None and self.cols < 1):
            raise InvalidInput("matrix sizes must be positive")
        if self.kind != "generic" and self.cols not in (None, self.rows):
            raise InvalidInput(f"{self.kind} matrices are square")
        if self.cols is None:
            object.__setattr__(self, "cols", self.rows)

    def max_k(self) -> int:
        if self.kind == "generic":
            return min(self.rows, self.cols)
        if self.kind == "symmetric":
            return self.rows
        return self.rows // 2


def build_poset(F: MinorFamily) -> Poset:
    m = F.rows
    if F.kind == "generic":
        labels = [(i, j) for i in range(1, m + 1) for j in range(1, F.cols + 1)]
        return Poset.from_relation(labels, lambda a, b: a[0] <= b[0] and a[1] >= b[1])
    if F.kind == "symmetric":
        labels = [(i, j) for i in range(1, m + 1) for j in range(i, m + 1)]
        return Poset.from_relation(labels, lambda a, b: a[0] <= b[0] and a[1] >= b[1])
    labels = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    return Poset.from_relation(labels, lambda a, b: a[0] <= b[0] and a[1] <= b[1])


def _entry(F: MinorFamily, i: int, j: int):
    if F.kind == "generic":
        return (i, j)
    return (min(i, j), max(i, j))


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _add_term(poly: dict, labels, coeff: int):
    key = tuple(sorted(labels))
    poly[key] = poly.get(key, 0) + coeff


def _determinant(F: MinorFamily, rows, cols) -> dict:
    poly = {}
    for p in permutations(range(len(rows))):
        _add_term(poly, [_entry(F, rows[t], cols[p[t]]) for t in range(len(rows))], _perm_sign(p))
    return {k: c for k, c in poly.items() if c}


def _pfaffian(indices: tuple) -> dict:
    if not indices:
        return {(): 1}
    first, rest = indices[0], indices[1:]
    poly = {}
    for pos, j in enumerate(rest):
        sign = -1 if pos % 2 else 1
        remaining = rest[:pos] + rest[pos + 1:]
        for labels, c in _pfaffian(remaining).items():
            _add_term(poly, labels + ((first, j),), sign * c)
    return {k: c for k, c in poly.items() if c}


def family_polynomials(F: MinorFamily, k: int):
    """Yield (description, polynomial) for every k x k minor / 2k x 2k sub-Pfaffian.

    A polynomial is a dict mapping a sorted tuple of entry labels (one per
    factor, with repetition) to its integer coefficient.
    """
    if not 1 <= k <= F.max_k():
        raise InvalidInput(f"k={k} out of range for {F}")
    if F.kind == "pfaffian":
        for S in combinations(range(1, F.rows + 1), 2 * k):
            yield S, _pfaffian(S)
        return
    for R in combinations(range(1, F.rows + 1), k):
        for C in combinations(range(1, F.cols + 1), k):
            if F.kind == "symmetric" and R > C:
                continue  # the transposed minor is the same polynomial
            poly = _determinant(F, R, C)
            if poly:
                yield (R, C), poly


def revlex_leading(poly: dict, order: Sequence) -> tuple:
    """Leading term under reverse lexicographic order, ``order`` listing variables smallest first."""
    rank = {x: t for t, x in enumerate(order)}

    def key(labels):
        counts = [0] * len(order)
        for x in labels:
            counts[rank[x]] += 1
        return tuple(-c for c in counts)

    return max(poly, key=key)


def minor_leading_terms(F: MinorFamily, k: int, order: Optional[Sequence] = None,
                        limit: Optional[int] = None) -> set:
    """Leading terms (as exponent vectors over the poset's variables) of all k x k
    minors, or of all 2k x 2k sub-Pfaffians, under revlex on a linear extension
    of the family's poset."""
    limits.check("poset_matrix", max(F.rows, F.cols), limit)
    P = build_poset(F)
    order = P.linear_extension() if order is None else list(order)
    idx = {x: i for i, x in enumerate(P.elements)}
    out = set()
    for _, poly in family_polynomials(F, k):
        e = [0] * len(P)
        for x in revlex_leading(poly, order):
            e[idx[x]] += 1
        out.add(tuple(e))
    return out


@dataclass(frozen=True)
class WitnessReport:
    ok: bool
    missing: frozenset = field(default_factory=frozenset)  # antichain monomials with no minor
    extra: frozenset = field(default_factory=frozenset)    # leading terms that are not antichains


def delightful_witness_check(F: MinorFamily, k: int, order: Optional[Sequence] = None,
                             limit: Optional[int] = None) -> WitnessReport:
    """Compare the generators of J(P)^{k-1} with the leading terms of the family."""
    if k < 2:
        raise InvalidInput("witness checks start at k = 2")
    P = build_poset(F)
    gens = set(antichain_secant(P, k - 1).gens)
    terms = minor_leading_terms(F, k, order, limit)
    return WitnessReport(gens == terms, frozenset(gens - terms), frozenset(terms - gens))
