"""Edge ideals, hypergraph facet ideals and their secants via exact coloring.

Vertices are numbered 1..n in the public API; internally vertex sets are
bitmasks over 0..n-1.  The generators of the r-th secant of an edge ideal are
the squarefree monomials m_V for the vertex-critical sets V, those whose
induced subgraph is not r-colorable while every proper subset is.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from . import limits
from .errors import InvalidInput
from .monomial import MonomialIdeal, VariableContext


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _to_set(mask: int) -> frozenset:
    return frozenset(v + 1 for v in _bits(mask))


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInput("vertex count must be non-negative")
        clean = set()
        for e in self.edges:
            i, j = tuple(e)
            if i == j:
                raise InvalidInput(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvalidInput(f"edge {e} outside 1..{self.n}")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, combinations(range(1, n + 1), 2))

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    def complement(self) -> "Graph":
        return Graph.from_edges(
            self.n, [e for e in combinations(range(1, self.n + 1), 2) if e not in self.edges]
        )

    def adjacency(self) -> list:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return adj

    def sorted_edges(self) -> list:
        return sorted(self.edges)


# -- exact coloring ---------------------------------------------------------

def _colorable(adj: list, mask: int, k: int) -> bool:
    """Whether the subgraph induced on ``mask`` admits a proper k-coloring."""
    verts = list(_bits(mask))
    if len(verts) <= k:
        return True
    if k <= 0:
        return False
    # color high-degree vertices first
    verts.sort(key=lambda v: -bin(adj[v] & mask).count("1"))
    classes = [0] * k

    def place(idx: int, used: int) -> bool:
        if idx == len(verts):
            return True
        v = verts[idx]
        bit = 1 << v
        for c in range(min(used + 1, k)):
            if not adj[v] & classes[c]:
                classes[c] |= bit
                if place(idx + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~bit
        return False

    return place(0, 0)


def _clique_number(adj: list, mask: int) -> int:
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, mask)
    return best


def _greedy_colors(adj: list, mask: int) -> int:
    colors = {}
    for v in sorted(_bits(mask), key=lambda v: -bin(adj[v] & mask).count("1")):
        taken = {colors[u] for u in _bits(adj[v] & mask) if u in colors}
        colors[v] = next(c for c in range(len(taken) + 1) if c not in taken)
    return len(set(colors.values()))


def _chromatic(adj: list, mask: int) -> int:
    if not mask:
        return 0
    lo = _clique_number(adj, mask)
    hi = _greedy_colors(adj, mask)
    for k in range(lo, hi):
        if _colorable(adj, mask, k):
            return k
    return hi


def chromatic_number(G: Graph, limit: Optional[int] = None) -> int:
    """Exact chromatic number (clique lower bound, greedy upper bound, backtracking)."""
    limits.check("chromatic", G.n, limit)
    return _chromatic(G.adjacency(), (1 << G.n) - 1)


def clique_number(G: Graph) -> int:
    return _clique_number(G.adjacency(), (1 << G.n) - 1)


def is_colorable(G: Graph, k: int, vertices: Optional[Iterable[int]] = None) -> bool:
    mask = (1 << G.n) - 1 if vertices is None else _mask(vertices)
    return _colorable(G.adjacency(), mask, k)


# -- secants of edge ideals -------------------------------------------------

def _context(n: int, ctx: Optional[VariableContext]) -> VariableContext:
    if ctx is None:
        return VariableContext.standard(max(n, 1))
    if ctx.n != max(n, 1):
        raise InvalidInput(f"context has {ctx.n} variables, graph has {n} vertices")
    return ctx


def _squarefree(ctx: VariableContext, vertex_sets: Iterable[Iterable[int]]) -> MonomialIdeal:
    gens = []
    for V in vertex_sets:
        e = [0] * ctx.n
        for v in V:
            e[v - 1] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ctx, gens)


def edge_ideal(G: Graph, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    return _squarefree(_context(G.n, ctx), G.edges)


def _critical_masks(adj: list, n: int, r: int) -> list:
    full = (1 << n) - 1
    if _colorable(adj, full, r):
        return []
    found = []
    for size in range(r + 1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if any(g & mask == g for g in found):
                continue
            if not _colorable(adj, mask, r):
                found.append(mask)
    return found


def non_colorable_sets(G: Graph, r: int, limit: Optional[int] = None) -> list:
    """Vertex-critical sets: G_V not r-colorable, every proper subset r-colorable."""
    if r < 1:
        raise InvalidInput("r must be at least 1")
    limits.check("edge_secant", G.n, limit)
    masks = _critical_masks(G.adjacency(), G.n, r)
    return sorted((_to_set(m) for m in masks), key=lambda s: (len(s), sorted(s)))


def secant_edge_ideal(G: Graph, r: int, ctx: Optional[VariableContext] = None,
                      limit: Optional[int] = None) -> MonomialIdeal:
    """I(G)^{r}, generated by m_V over the vertex-critical non-r-colorable sets V."""
    return _squarefree(_context(G.n, ctx), non_colorable_sets(G, r, limit))


def _is_cycle(adj: list, mask: int) -> bool:
    verts = list(_bits(mask))
    if len(verts) < 3 or any(bin(adj[v] & mask).count("1") != 2 for v in verts):
        return False
    seen, stack = 0, [verts[0]]
    while stack:
        v = stack.pop()
        if seen >> v & 1:
            continue
        seen |= 1 << v
        stack.extend(_bits(adj[v] & mask & ~seen))
    return seen == mask


def odd_hole_generators(G: Graph, limit: Optional[int] = None) -> list:
    """All vertex sets inducing a cycle of odd length >= 3 (by exhaustive enumeration)."""
    limits.check("edge_secant", G.n, limit)
    adj = G.adjacency()
    out = []
    for size in range(3, G.n + 1, 2):
        for combo in combinations(range(G.n), size):
            mask = sum(1 << v for v in combo)
            if _is_cycle(adj, mask):
                out.append(_to_set(mask))
    return out


@dataclass(frozen=True)
class PerfectReport:
    perfect: bool
    witness: Optional[frozenset]
    secant_criterion: bool


def perfect_by_secant_degrees(G: Graph, limit: Optional[int] = None) -> bool:
    """Every nonzero secant I(G)^{r} is generated in degree r+1."""
    chi = chromatic_number(G)
    for r in range(1, chi):
        sets = non_colorable_sets(G, r, limit)
        if any(len(V) != r + 1 for V in sets):
            return False
    return True


def is_perfect(G: Graph, limit: Optional[int] = None) -> PerfectReport:
    """Brute-force perfection check over all induced subgraphs.

    The witness is a smallest vertex set V with chi(G_V) != omega(G_V); it is
    minimally imperfect.  ``secant_criterion`` is the independent answer from
    the generator degrees of the secant ideals.
    """
    limits.check("perfect", G.n, limit)
    adj = G.adjacency()
    witness = None
    for size in range(1, G.n + 1):
        for combo in combinations(range(G.n), size):
            mask = sum(1 << v for v in combo)
            if _chromatic(adj, mask) != _clique_number(adj, mask):
                witness = _to_set(mask)
                break
        if witness is not None:
            break
    return PerfectReport(witness is None, witness, perfect_by_secant_degrees(G, limit))


@dataclass(frozen=True)
class SPGTReport:
    clause: Optional[int]
    r: Optional[int]
    degrees: dict  # r -> sorted generator degrees of I(G)^{r}


def spgt_degree_classification(G: Graph, r_max: Optional[int] = None,
                               limit: Optional[int] = None) -> SPGTReport:
    """Which clause of the degree dichotomy an imperfect graph satisfies.

    Clause 1: I(G)^{2} has a minimal generator of odd degree > 3.
    Clause 2: for the first r > 2 at which I(G)^{r} is not generated in degree
    r+1, its generator degrees lie in {r+1, 2r+1}, and all earlier secants are
    generated in degree s+1.
    """
    report = is_perfect(G, limit)
    if report.perfect:
        raise InvalidInput("graph is perfect; no classification clause applies")
    chi = chromatic_number(G)
    r_max = chi - 1 if r_max is None else r_max
    degrees = {}
    deg2 = sorted({len(V) for V in non_colorable_sets(G, 2, limit)})
    degrees[2] = deg2
    if any(d > 3 and d % 2 for d in deg2):
        return SPGTReport(1, 2, degrees)
    for r in range(3, r_max + 1):
        deg = sorted({len(V) for V in non_colorable_sets(G, r, limit)})
        degrees[r] = deg
        if deg and deg != [r + 1]:
            ok = set(deg) <= {r + 1, 2 * r + 1} and 2 * r + 1 in deg
            return SPGTReport(2 if ok else None, r, degrees)
    return SPGTReport(None, None, degrees)


# -- hypergraphs ------------------------------------------------------------

@dataclass(frozen=True)
class Hypergraph:
    n: int
    hyperedges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(frozenset(e) for e in self.hyperedges)
        for e in edges:
            if len(e) < 2:
                raise InvalidInput(f"hyperedge {sorted(e)} has fewer than two vertices")
            if not all(1 <= v <= self.n for v in e):
                raise InvalidInput(f"hyperedge {sorted(e)} outside 1..{self.n}")
        for a in edges:
            for b in edges:
                if a < b:
                    raise InvalidInput(f"hyperedge {sorted(a)} is contained in {sorted(b)}")
        object.__setattr__(self, "hyperedges", edges)

    @classmethod
    def from_graph(cls, G: Graph) -> "Hypergraph":
        return cls(G.n, frozenset(frozenset(e) for e in G.edges))

    @classmethod
    def fano(cls) -> "Hypergraph":
        lines = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]
        return cls(7, frozenset(frozenset(l) for l in lines))


def facet_ideal(H: Hypergraph, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    return _squarefree(_context(H.n, ctx), H.hyperedges)


def hypergraph_colorable(H: Hypergraph, k: int) -> bool:
    """Some k-coloring leaves no hyperedge monochromatic."""
    if not H.hyperedges:
        return k >= 1 or H.n == 0
    if k < 1:
        return H.n == 0
    edges_at = {v: [e for e in H.hyperedges if v in e] for v in range(1, H.n + 1)}
    color = {}

    def ok(v):
        for e in edges_at[v]:
            if all(u in color for u in e) and len({color[u] for u in e}) == 1:
                return False
        return True

    def place(v: int, used: int) -> bool:
        if v > H.n:
            return True
        for c in range(min(used + 1, k)):
            color[v] = c
            if ok(v) and place(v + 1, max(used, c + 1)):
                return True
            del color[v]
        return False

    return place(1, 0)


def hypergraph_chromatic(H: Hypergraph, limit: Optional[int] = None) -> int:
    limits.check("hypergraph", H.n, limit)
    if H.n == 0:
        return 0
    k = 1
    while not hypergraph_colorable(H, k):
        k += 1
    return k


# -- quadratic monomial ideals ----------------------------------------------

@dataclass(frozen=True)
class QuadraticMonomialIdeal:
    n: int
    squarefree_edges: frozenset = field(default_factory=frozenset)
    square_vertices: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "squarefree_edges", Graph(self.n, self.squarefree_edges).edges)
        sq = frozenset(self.square_vertices)
        if not all(1 <= v <= self.n for v in sq):
            raise InvalidInput("square vertex outside 1..n")
        object.__setattr__(self, "square_vertices", sq)

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> "QuadraticMonomialIdeal":
        edges, squares = set(), set()
        for g in I.gens:
            if sum(g) != 2:
                raise InvalidInput(f"{I.ctx.format(g)} is not quadratic")
            sup = [i + 1 for i, e in enumerate(g) if e]
            if len(sup) == 1:
                squares.add(sup[0])
            else:
                edges.add(tuple(sup))
        return cls(I.ctx.n, frozenset(edges), frozenset(squares))

    def to_ideal(self, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
        ctx = _context(self.n, ctx)
        gens = []
        for i, j in self.squarefree_edges:
            gens.append(tuple(1 if k in (i - 1, j - 1) else 0 for k in range(ctx.n)))
        for i in self.square_vertices:
            gens.append(ctx.var(i - 1, 2))
        return MonomialIdeal(ctx, gens)


def blow_up(Q: QuadraticMonomialIdeal, m: int) -> tuple:
    """The graph G_m: one vertex per non-square variable, m copies per square variable.

    Returns the graph and the list mapping each graph vertex (1-based) to its
    original variable index (1-based).
    """
    owner = []
    for i in range(1, Q.n + 1):
        owner.extend([i] * (m if i in Q.square_vertices else 1))
    edges = []
    for a, b in combinations(range(len(owner)), 2):
        i, j = owner[a], owner[b]
        if (i == j and i in Q.square_vertices) or (min(i, j), max(i, j)) in Q.squarefree_edges:
            edges.append((a + 1, b + 1))
    return Graph.from_edges(len(owner), edges), owner


def quadratic_secant(Q: QuadraticMonomialIdeal, r: int, ctx: Optional[VariableContext] = None,
                     limit: Optional[int] = None) -> MonomialIdeal:
    """I^{r} for a quadratic monomial ideal via the squarefree blow-up graph.

    Uses r+1 copies of every squared variable, enough for the clique of
    copies that produces x_i^{r+1}.
    """
    if r < 1:
        raise InvalidInput("r must be at least 1")
    ctx = _context(Q.n, ctx)
    G, owner = blow_up(Q, r + 1)
    gens = []
    for V in non_colorable_sets(G, r, limit):
        e = [0] * ctx.n
        for v in V:
            e[owner[v - 1] - 1] += 1
        gens.append(tuple(e))
    return MonomialIdeal(ctx, gens)
