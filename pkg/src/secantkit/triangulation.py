"""Lattice point configurations and their triangulations.

Points live in homogeneous coordinates (a rational ω with ω·a = 1 for every
point), so affine independence is linear independence and a maximal simplex
has exactly ``rank`` vertices.  All geometry is exact over the rationals.

Point indices are 0-based throughout this module.  ``nonedge_graph`` shifts
them by one because :class:`Graph` vertices are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from . import linalg
from .complexes import SimplicialComplex, secant_complex
from .errors import InvalidInput
from .graphs import Graph
from .monomial import VariableContext

EXACT_RANK_LIMIT = 5  # homogeneous rank, i.e. affine dimension <= 4


@dataclass(frozen=True)
class PointConfiguration:
    points: tuple
    omega: tuple = None
    labels: tuple = None
    kind: str = "custom"
    params: tuple = ()

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if not pts:
            raise InvalidInput("a configuration needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise InvalidInput("points have different lengths")
        if len(set(pts)) != len(pts):
            raise InvalidInput("points must be distinct")
        object.__setattr__(self, "points", pts)
        omega = self.omega
        if omega is None:
            omega = linalg.solve([list(col) for col in zip(*pts)], [1] * len(pts))
            if omega is None:
                raise InvalidInput("configuration is not homogeneous (no ω with ω·a = 1)")
        omega = tuple(Fraction(w) for w in omega)
        if len(omega) != len(pts[0]):
            raise InvalidInput("ω has the wrong length")
        for p in pts:
            if sum(w * x for w, x in zip(omega, p)) != 1:
                raise InvalidInput(f"ω·{p} != 1")
        object.__setattr__(self, "omega", omega)
        labels = self.labels or tuple(f"x{i}" for i in range(len(pts)))
        if len(labels) != len(pts):
            raise InvalidInput("label count differs from point count")
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return len(self.points[0])

    @property
    def rank(self) -> int:
        return _coords(self)[1]

    def coords(self, i: int) -> tuple:
        """Point i in a basis of the span of the configuration (length ``rank``)."""
        return _coords(self)[0][i]

    def context(self) -> VariableContext:
        return VariableContext(tuple(str(x) for x in self.labels))


@lru_cache(maxsize=64)
def _coords(config: PointConfiguration) -> tuple:
    # project onto independent coordinate rows so rank-deficient embeddings work
    cols = [list(c) for c in zip(*config.points)]
    keep = linalg.row_basis(cols)
    return tuple(tuple(p[k] for k in keep) for p in config.points), len(keep)


# -- named configurations ---------------------------------------------------

@dataclass(frozen=True)
class NamedConfig:
    kind: str
    params: tuple = ()

    KINDS = ("veronese3", "segre", "scroll", "p1xp1o22")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InvalidInput(f"unknown configuration {self.kind!r}; expected one of {self.KINDS}")
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        if any(x < 1 for x in self.params):
            raise InvalidInput("parameters must be positive")
        if self.kind in ("segre", "scroll") and not self.params:
            raise InvalidInput(f"{self.kind} needs at least one parameter")

    @classmethod
    def parse(cls, text: str) -> "NamedConfig":
        """``veronese3``, ``p1xp1o22``, ``segre:1,2`` or ``scroll:2,6``."""
        kind, _, rest = text.strip().partition(":")
        try:
            params = tuple(int(x) for x in rest.split(",")) if rest else ()
        except ValueError:
            raise InvalidInput(f"bad parameters in {text!r}") from None
        return cls(kind, params)


def build_config(k: NamedConfig) -> PointConfiguration:
    if k.kind == "veronese3":
        pts = [(3 - b - c, b, c) for b in range(4) for c in range(4 - b)]
        pts.sort(reverse=True)
        return PointConfiguration(pts, (Fraction(1, 3),) * 3, kind="veronese3")
    if k.kind == "p1xp1o22":
        pts = [(1, a, b) for a in range(3) for b in range(3)]
        return PointConfiguration(pts, (1, 0, 0), tuple(f"x{i}" for i in range(1, 10)), kind="p1xp1o22")
    if k.kind == "segre":
        d = k.params
        offsets = [sum(x + 1 for x in d[:t]) for t in range(len(d))]
        width = sum(x + 1 for x in d)
        pts, labels = [], []
        for idx in product(*(range(x + 1) for x in d)):
            v = [0] * width
            for off, i in zip(offsets, idx):
                v[off + i] = 1
            pts.append(tuple(v))
            labels.append("v" + "".join(str(i) for i in idx))
        omega = (Fraction(1, len(d)),) * width
        return PointConfiguration(pts, omega, tuple(labels), kind="segre", params=d)
    lam = k.params
    nrows = len(lam)
    pts, labels = [], []
    for i, li in enumerate(lam, start=1):
        for j in range(li + 1):
            v = [j] + [0] * nrows
            v[i] = 1
            pts.append(tuple(v))
            labels.append(f"x{i}{j}" if max(lam) < 10 and nrows < 10 else f"x{i}_{j}")
    omega = (0,) + (1,) * nrows
    return PointConfiguration(pts, omega, tuple(labels), kind="scroll", params=lam)


def scroll_index(config: PointConfiguration, i: int, j: int) -> int:
    """Point index of x_{ij} (rows 1-based, columns 0-based) in a scroll configuration."""
    if config.kind != "scroll":
        raise InvalidInput("not a scroll configuration")
    lam = config.params
    if not (1 <= i <= len(lam) and 0 <= j <= lam[i - 1]):
        raise InvalidInput(f"x{i}{j} is not a point of scroll{lam}")
    return sum(x + 1 for x in lam[: i - 1]) + j


def segre_index(config: PointConfiguration, idx: Sequence[int]) -> int:
    if config.kind != "segre":
        raise InvalidInput("not a Segre configuration")
    d = config.params
    if len(idx) != len(d) or not all(0 <= a <= b for a, b in zip(idx, d)):
        raise InvalidInput(f"multi-index {tuple(idx)} out of range for {d}")
    pos = 0
    for a, b in zip(idx, d):
        pos = pos * (b + 1) + a
    return pos


# -- triangulations ---------------------------------------------------------

@dataclass(frozen=True)
class Triangulation:
    config: PointConfiguration
    simplices: tuple = field(default_factory=tuple)

    def __post_init__(self):
        simps = {frozenset(int(i) for i in s) for s in self.simplices}
        for s in simps:
            if not all(0 <= i < self.config.n for i in s):
                raise InvalidInput(f"simplex {sorted(s)} uses an unknown point index")
        object.__setattr__(self, "simplices", tuple(sorted(simps, key=sorted)))

    def sorted_simplices(self) -> list:
        return [tuple(sorted(s)) for s in self.simplices]

    def vertices(self) -> frozenset:
        return frozenset().union(*self.simplices) if self.simplices else frozenset()

    def complex(self) -> SimplicialComplex:
        """The triangulation as a simplicial complex on 1-based vertices."""
        return SimplicialComplex(self.config.n, frozenset(frozenset(i + 1 for i in s) for s in self.simplices))


@lru_cache(maxsize=4096)
def _det_cached(config: PointConfiguration, simplex: tuple) -> Fraction:
    return linalg.det([config.coords(i) for i in simplex])


def _det(config: PointConfiguration, simplex: Iterable[int]) -> Fraction:
    return _det_cached(config, tuple(sorted(simplex)))


@lru_cache(maxsize=64)
def normalized_volume(config: PointConfiguration) -> Fraction:
    """Normalized volume of conv(A), in units of the lattice spanned in chosen coordinates."""
    return sum(abs(_det(config, s)) for s in placing_triangulation(config, range(config.n)).simplices)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    certificate: str  # "exact", "volume-certified" or "failed"
    failure: Optional[str] = None
    volume: Fraction = Fraction(0)
    expected_volume: Fraction = Fraction(0)


@lru_cache(maxsize=65536)
def _circuit(config: PointConfiguration, supp: tuple) -> Optional[dict]:
    """The dependence supported exactly on ``supp``, if ``supp`` is a circuit."""
    kernel = linalg.nullspace([list(row) for row in zip(*(config.coords(i) for i in supp))])
    if len(kernel) != 1 or any(x == 0 for x in kernel[0]):
        return None
    return dict(zip(supp, kernel[0]))


def _circuit_conflict(config: PointConfiguration, s: frozenset, t: frozenset) -> bool:
    """Is there a circuit with positive part in s and negative part in t?

    Such a circuit is a point of conv(s) ∩ conv(t) outside conv(s ∩ t), i.e. an
    improper intersection.  Circuits have at most rank + 1 elements and, since
    s and t are independent, must meet both s - t and t - s.
    """
    only_s, only_t = s - t, t - s
    if not only_s or not only_t:
        return False
    pts = sorted(s | t)
    for size in range(2, min(len(pts), config.rank + 1) + 1):
        for supp in combinations(pts, size):
            if only_s.isdisjoint(supp) or only_t.isdisjoint(supp):
                continue
            vec = _circuit(config, supp)
            if vec is None:
                continue
            for sign in (1, -1):
                if all((i in s) if sign * c > 0 else (i in t) for i, c in vec.items()):
                    return True
    return False


def validate_triangulation(T: Triangulation) -> ValidationReport:
    """Independence, volume and (for small rank) proper-intersection checks."""
    config = T.config
    d = config.rank
    expected = normalized_volume(config)
    for s in T.simplices:
        if len(s) != d:
            return ValidationReport(False, "failed", f"independence: simplex {sorted(s)} has {len(s)} vertices, expected {d}", Fraction(0), expected)
        if _det(config, s) == 0:
            return ValidationReport(False, "failed", f"independence: simplex {sorted(s)} is degenerate", Fraction(0), expected)
    volume = sum((abs(_det(config, s)) for s in T.simplices), Fraction(0))
    if volume != expected:
        return ValidationReport(False, "failed", f"volume: simplices cover {volume}, conv(A) has {expected}", volume, expected)
    if d > EXACT_RANK_LIMIT:
        return ValidationReport(True, "volume-certified", None, volume, expected)
    for s, t in combinations(T.simplices, 2):
        if _circuit_conflict(config, s, t) or _circuit_conflict(config, t, s):
            return ValidationReport(False, "failed", f"intersection: simplices {sorted(s)} and {sorted(t)} overlap improperly", volume, expected)
    return ValidationReport(True, "exact", None, volume, expected)


def is_full(T: Triangulation) -> bool:
    return T.vertices() == frozenset(range(T.config.n))


def nonedge_graph(T: Triangulation) -> Graph:
    """Pairs of points that are not both in a common maximal simplex (vertices shifted to 1-based)."""
    n = T.config.n
    edges = [
        (i + 1, j + 1) for i, j in combinations(range(n), 2)
        if not any(i in s and j in s for s in T.simplices)
    ]
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class PartitionReport:
    r: int
    count: int
    expected_dim_ok: bool
    degree_lower_bound: int
    expected_dim: int
    sets: tuple


def r_partitionable(T: Triangulation, r: int) -> PartitionReport:
    """Point sets that are disjoint unions of r maximal simplices."""
    if r < 1:
        raise InvalidInput("r must be at least 1")
    simps = list(T.simplices)
    found = set()

    def extend(start: int, used: frozenset, depth: int):
        if depth == r:
            found.add(used)
            return
        for k in range(start, len(simps)):
            if not (simps[k] & used):
                extend(k + 1, used | simps[k], depth + 1)

    extend(0, frozenset(), 0)
    sets = tuple(sorted(tuple(sorted(s)) for s in found))
    d, n = T.config.rank, T.config.n
    return PartitionReport(r, len(sets), bool(sets), len(sets), min(r * d - 1, n - 1), sets)


def partitionable_via_secant_complex(T: Triangulation, r: int) -> int:
    """Independent count: size-rd facets of the r-th secant complex."""
    d = T.config.rank
    return sum(1 for f in secant_complex(T.complex(), r).facets if len(f) == r * d)


# -- constructions ----------------------------------------------------------

def _order(config: PointConfiguration, order: Iterable[int]) -> list:
    order = [int(i) for i in order]
    if sorted(order) != list(range(config.n)):
        raise InvalidInput("order must be a permutation of the point indices")
    return order


def _check_rank(config: PointConfiguration):
    if config.rank > EXACT_RANK_LIMIT:
        raise InvalidInput(f"exact geometry is implemented up to rank {EXACT_RANK_LIMIT}")


def placing_triangulation(config: PointConfiguration, order: Iterable[int]) -> Triangulation:
    """Insert points one at a time; each new point is coned over the boundary facets it sees."""
    order = _order(config, order)
    _check_rank(config)
    placed: list = []
    simplices: list = []
    for p in order:
        if not placed:
            placed, simplices = [p], [frozenset([p])]
            continue
        rows = [config.coords(i) for i in placed]
        if linalg.rank(rows + [config.coords(p)]) > linalg.rank(rows):
            simplices = [s | {p} for s in simplices]
            placed.append(p)
            continue
        ridges: dict = {}
        for s in simplices:
            for v in s:
                ridges.setdefault(s - {v}, []).append((s, v))
        new = []
        for ridge, owners in ridges.items():
            if len(owners) != 1:
                continue
            s, v = owners[0]
            basis = sorted(s)
            coef = linalg.solve([config.coords(i) for i in basis], config.coords(p))
            if coef[basis.index(v)] < 0:
                new.append(ridge | {p})
        simplices.extend(new)
        placed.append(p)
    return Triangulation(config, tuple(simplices))


def lex_triangulation(config: PointConfiguration, priority: Iterable[int]) -> Triangulation:
    """Triangulation of a lexicographic term order; ``priority[0]`` is the largest variable.

    The largest variable is placed last, so it lies in as few simplices as possible.
    """
    return placing_triangulation(config, list(reversed(list(priority))))


@lru_cache(maxsize=4096)
def _facets_of(config: PointConfiguration, pts: tuple) -> list:
    """Facets (as point subsets) of the convex hull of the given points."""
    basis = [pts[k] for k in linalg.row_basis([config.coords(i) for i in pts])]
    dim = len(basis)
    local = {i: linalg.solve([config.coords(b) for b in basis], config.coords(i)) for i in pts}
    facets = set()
    for sub in combinations(pts, dim - 1):
        rows = [local[i] for i in sub]
        if linalg.rank(rows) != dim - 1:
            continue
        normal = linalg.nullspace(rows)[0]
        vals = {i: sum(a * b for a, b in zip(normal, local[i])) for i in pts}
        if all(x >= 0 for x in vals.values()) or all(x <= 0 for x in vals.values()):
            facets.add(frozenset(i for i in pts if vals[i] == 0))
    return sorted(facets, key=sorted)


@lru_cache(maxsize=4096)
def _halfspaces(config: PointConfiguration, pts: tuple) -> list:
    """(facet, normal) pairs of a full-rank point set; normal . x >= 0 on the hull."""
    out = []
    for F in _facets_of(config, pts):
        rows = [config.coords(i) for i in sorted(F)]
        normal = linalg.nullspace(rows)[0]
        inside = next(i for i in pts if i not in F)
        if sum(a * b for a, b in zip(normal, config.coords(inside))) < 0:
            normal = [-a for a in normal]
        out.append((F, normal))
    return out


def pulling_triangulation(config: PointConfiguration, order: Iterable[int]) -> Triangulation:
    """Pull every point in turn: each cell containing it is replaced by cones over its facets missing it.

    Cells carry every configuration point they contain.  The first point of
    ``order`` ends up in every maximal simplex, and since every point is pulled
    at some stage the result is always full.
    """
    order = _order(config, order)
    _check_rank(config)
    if config.rank == 1:
        return Triangulation(config, (frozenset(order[:1]),))
    cells = {frozenset(range(config.n))}
    for p in order:
        refined = set()
        for C in cells:
            if p not in C:
                refined.add(C)
                continue
            for F in _facets_of(config, tuple(sorted(C))):
                if p in F:
                    continue
                core = tuple(sorted(F | {p}))
                bounds = _halfspaces(config, core)
                refined.add(frozenset(
                    q for q in C
                    if all(sum(a * b for a, b in zip(nv, config.coords(q))) >= 0 for _, nv in bounds)
                ))
        cells = refined
    return Triangulation(config, tuple(cells))


def from_simplices(config: PointConfiguration, simplices: Iterable[Iterable[int]]) -> Triangulation:
    return Triangulation(config, tuple(frozenset(s) for s in simplices))


def from_complex(config: PointConfiguration, D: SimplicialComplex) -> Triangulation:
    """Read a triangulation off a complex on 1-based vertices (e.g. the complex of an initial ideal)."""
    return Triangulation(config, tuple(frozenset(i - 1 for i in f) for f in D.facets))


# -- Segre rook placements ---------------------------------------------------

def _hamming(a, b) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def rook_placement(d: Sequence[int], s: int) -> Optional[list]:
    """s multi-indices with pairwise Hamming distance > 2, by exhaustive backtracking."""
    if s < 1:
        raise InvalidInput("s must be at least 1")
    cells = list(product(*(range(x + 1) for x in d)))
    chosen: list = []

    def search(start: int) -> bool:
        if len(chosen) == s:
            return True
        for k in range(start, len(cells)):
            if len(cells) - k < s - len(chosen):
                return False
            c = cells[k]
            if all(_hamming(c, o) > 2 for o in chosen):
                chosen.append(c)
                if search(k + 1):
                    return True
                chosen.pop()
        return False

    return list(chosen) if search(0) else None


def segre_star_simplex(config: PointConfiguration, idx: Sequence[int]) -> frozenset:
    """Indices of the points at Hamming distance <= 1 from v_idx."""
    d = config.params
    centre = tuple(idx)
    return frozenset(
        segre_index(config, c) for c in product(*(range(x + 1) for x in d)) if _hamming(c, centre) <= 1
    )


def rook_triangulation(config: PointConfiguration, rooks: Sequence[Sequence[int]]) -> Triangulation:
    """Lex triangulation with the rook vertices ranked above every other point."""
    top = [segre_index(config, r) for r in rooks]
    rest = [i for i in range(config.n) if i not in top]
    return lex_triangulation(config, top + rest)


# -- scrolls ---------------------------------------------------------------

def scroll_lex_priority(config: PointConfiguration) -> list:
    """Variables sorted by x_ij > x_kl iff j < l, or j = l and i < k (largest first)."""
    if config.kind != "scroll":
        raise InvalidInput("not a scroll configuration")
    lam = config.params
    pairs = [(i, j) for i in range(1, len(lam) + 1) for j in range(lam[i - 1] + 1)]
    pairs.sort(key=lambda ij: (ij[1], ij[0]))
    return [scroll_index(config, i, j) for i, j in pairs]


@dataclass(frozen=True)
class ScrollReport:
    tree_edges: tuple
    claws: tuple      # pattern (1): (centre, leaves)
    boundary: tuple   # pattern (2): (centre, leaves)

    @property
    def clean(self) -> bool:
        return not self.claws and not self.boundary


def scroll_forbidden_check(T: Triangulation) -> ScrollReport:
    config = T.config
    if config.kind != "scroll" or len(config.params) != 2:
        raise InvalidInput("scroll_forbidden_check needs a two-row scroll configuration")
    lam = config.params
    pos = {}
    for i in (1, 2):
        for j in range(lam[i - 1] + 1):
            pos[scroll_index(config, i, j)] = (i, j)
    tree = set()
    for s in T.simplices:
        for a, b in combinations(sorted(s), 2):
            (i, j), (k, l) = pos[a], pos[b]
            if i != k:
                tree.add(((i, j), (k, l)) if i == 1 else ((k, l), (i, j)))
    adj = {v: set() for v in pos.values()}
    for u, v in tree:
        adj[u].add(v)
        adj[v].add(u)
    claws, boundary = [], []
    for a, b in ((1, 2), (2, 1)):
        la, lb = lam[a - 1], lam[b - 1]
        for i in range(1, la):
            for j in range(0, lb - 1):
                leaves = [(b, j + t) for t in range(3)]
                if all(x in adj[(a, i)] for x in leaves):
                    claws.append(((a, i), tuple(leaves)))
        for i, js in ((0, range(0, 4)), (la, range(lb - 3, lb + 1))):
            leaves = [(b, j) for j in js]
            if lb >= 3 and all(x in adj[(a, i)] for x in leaves):
                boundary.append(((a, i), tuple(leaves)))
    return ScrollReport(tuple(sorted(tree)), tuple(sorted(claws)), tuple(sorted(boundary)))


def scroll_nonedge_rule(config: PointConfiguration) -> frozenset:
    """Pairs (x_ij, x_kl) with j + 1 < l, or j + 1 = l and i < k, as 0-based index pairs."""
    lam = config.params
    pairs = [(i, j) for i in range(1, len(lam) + 1) for j in range(lam[i - 1] + 1)]
    out = set()
    for (i, j), (k, l) in product(pairs, repeat=2):
        if j + 1 < l or (j + 1 == l and i < k):
            a, b = scroll_index(config, i, j), scroll_index(config, k, l)
            out.add((min(a, b), max(a, b)))
    return frozenset(out)


def expected_secant_dimension(config: PointConfiguration, r: int) -> int:
    """Projective dimension min(rd - 1, n - 1) of the r-th secant when it is as expected."""
    return min(r * config.rank - 1, config.n - 1)
