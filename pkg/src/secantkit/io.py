"""Plain-text readers and writers for ideals, graphs, posets, complexes and triangulations.

Every reader ignores blank lines and ``#`` comments.  Writers emit canonical,
sorted, newline-terminated text that the matching reader accepts.
"""
from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from .complexes import SimplicialComplex
from .errors import InvalidInput
from .graphs import Graph, Hypergraph
from .monomial import MonomialIdeal, VariableContext
from .posets import Poset
from .triangulation import NamedConfig, PointConfiguration, Triangulation, build_config

Source = Union[str, Path]


def _lines(text: str) -> list:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, what: str) -> list:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise InvalidInput(f"malformed {what} line: {line!r}") from None


def _header(lines: list, keyword: str, nargs: int) -> list:
    if not lines:
        raise InvalidInput(f"empty input, expected '{keyword}' header")
    parts = lines[0].split()
    if parts[0] != keyword or len(parts) != nargs + 1:
        raise InvalidInput(f"expected header '{keyword}' with {nargs} argument(s), got {lines[0]!r}")
    return _ints(" ".join(parts[1:]), keyword) if nargs else []


def read_text(source: Source) -> str:
    return Path(source).read_text()


def data_path(name: str) -> Path:
    """Path of a file shipped in the package data directory."""
    return Path(str(resources.files("secantkit") / "data" / name))


# -- ideals -----------------------------------------------------------------

def parse_ideal(text: str, ctx: Optional[VariableContext] = None) -> MonomialIdeal:
    lines = _lines(text)
    if not lines or lines[0].split()[0] != "vars":
        raise InvalidInput("ideal files start with a 'vars' line")
    file_ctx = VariableContext(tuple(lines[0].split()[1:]))
    if ctx is not None and ctx != file_ctx:
        raise InvalidInput(f"variable lists differ: {ctx.names} vs {file_ctx.names}")
    body = lines[1:]
    if body == ["zero"]:
        return MonomialIdeal.zero(file_ctx)
    if "zero" in body:
        raise InvalidInput("'zero' must be the only generator line")
    try:
        return MonomialIdeal.parse(file_ctx, body)
    except (KeyError, ValueError) as exc:
        raise InvalidInput(f"bad generator: {exc}") from None


def format_ideal(I: MonomialIdeal) -> str:
    lines = ["vars " + " ".join(I.ctx.names)]
    lines += [I.ctx.format(g) for g in I.gens] if I.gens else ["zero"]
    return "\n".join(lines) + "\n"


# -- graphs -----------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    (n,) = _header(lines, "graph", 1)
    edges = []
    for line in lines[1:]:
        e = _ints(line, "edge")
        if len(e) != 2:
            raise InvalidInput(f"edge lines hold two vertices: {line!r}")
        edges.append(tuple(e))
    return Graph.from_edges(n, edges)


def format_graph(G: Graph) -> str:
    return "\n".join([f"graph {G.n}"] + [f"{i} {j}" for i, j in G.sorted_edges()]) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _lines(text)
    (n,) = _header(lines, "hypergraph", 1)
    return Hypergraph(n, frozenset(frozenset(_ints(l, "hyperedge")) for l in lines[1:]))


def format_hypergraph(H: Hypergraph) -> str:
    edges = sorted(sorted(e) for e in H.hyperedges)
    return "\n".join([f"hypergraph {H.n}"] + [" ".join(map(str, e)) for e in edges]) + "\n"


# -- posets and complexes ---------------------------------------------------

def parse_poset(text: str) -> Poset:
    lines = _lines(text)
    (n,) = _header(lines, "poset", 1)
    covers = []
    for line in lines[1:]:
        parts = line.replace("<", " < ").split()
        if len(parts) != 3 or parts[1] != "<":
            raise InvalidInput(f"poset lines look like 'i < j': {line!r}")
        a, b = _ints(parts[0] + " " + parts[2], "cover")
        covers.append((a, b))
    return Poset(range(1, n + 1), covers)


def format_poset(P: Poset) -> str:
    return "\n".join([f"poset {len(P)}"] + [f"{a} < {b}" for a, b in sorted(P.covers())]) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    lines = _lines(text)
    (n,) = _header(lines, "complex", 1)
    facets = []
    for line in lines[1:]:
        facets.append(frozenset() if line == "empty" else frozenset(_ints(line, "facet")))
    return SimplicialComplex(n, frozenset(facets))


def format_complex(D: SimplicialComplex) -> str:
    body = [" ".join(map(str, sorted(f))) if f else "empty" for f in D.sorted_facets()]
    return "\n".join([f"complex {D.n}"] + body) + "\n"


# -- configurations and triangulations --------------------------------------

def _parse_config_block(lines: list) -> tuple:
    n, d = _header(lines, "config", 2)
    if len(lines) < n + 2:
        raise InvalidInput("config block is truncated")
    points = []
    for line in lines[1: n + 1]:
        p = _ints(line, "point")
        if len(p) != d:
            raise InvalidInput(f"point {line!r} does not have {d} coordinates")
        points.append(tuple(p))
    omega_line = lines[n + 1].split()
    if omega_line[0] != "omega" or len(omega_line) != d + 1:
        raise InvalidInput("expected an 'omega' line with d rationals after the points")
    try:
        omega = tuple(Fraction(x) for x in omega_line[1:])
    except (ValueError, ZeroDivisionError):
        raise InvalidInput(f"bad omega entries: {lines[n + 1]!r}") from None
    return PointConfiguration(points, omega), lines[n + 2:]


def parse_config(text: str) -> PointConfiguration:
    lines = _lines(text)
    if lines and lines[0].split()[0] == "named":
        return build_config(NamedConfig.parse(lines[0].split(None, 1)[1]))
    config, rest = _parse_config_block(lines)
    if rest:
        raise InvalidInput("unexpected lines after the omega line")
    return config


def format_config(config: PointConfiguration) -> str:
    lines = [f"config {config.n} {config.dim}"]
    lines += [" ".join(map(str, p)) for p in config.points]
    lines.append("omega " + " ".join(str(w) for w in config.omega))
    return "\n".join(lines) + "\n"


def parse_triangulation(text: str, config: Optional[PointConfiguration] = None) -> Triangulation:
    """A ``triangulation`` block, optionally preceded by a ``named`` line or a ``config`` block."""
    lines = _lines(text)
    if lines and lines[0].split()[0] == "named":
        embedded = build_config(NamedConfig.parse(lines[0].split(None, 1)[1]))
        lines = lines[1:]
    elif lines and lines[0].split()[0] == "config":
        embedded, lines = _parse_config_block(lines)
    else:
        embedded = None
    config = config or embedded
    if config is None:
        raise InvalidInput("no configuration: embed one in the file or pass it separately")
    if not lines or lines[0] != "triangulation":
        raise InvalidInput("expected a 'triangulation' line")
    simplices = [frozenset(_ints(l, "simplex")) for l in lines[1:]]
    return Triangulation(config, tuple(simplices))


def format_triangulation(T: Triangulation, embed: Optional[str] = None) -> str:
    """``embed`` is ``None`` (simplices only), ``"config"`` or a named-config string."""
    lines = []
    if embed == "config":
        lines.append(format_config(T.config).rstrip("\n"))
    elif embed:
        lines.append(f"named {embed}")
    lines.append("triangulation")
    lines += [" ".join(map(str, s)) for s in T.sorted_simplices()]
    return "\n".join(lines) + "\n"


def load(kind: str, source: Source, **kw):
    parser = {
        "ideal": parse_ideal, "graph": parse_graph, "hypergraph": parse_hypergraph,
        "poset": parse_poset, "complex": parse_complex, "config": parse_config,
        "triangulation": parse_triangulation,
    }[kind]
    return parser(read_text(source), **kw)


def format_sets(sets: Iterable[Iterable[int]]) -> list:
    return [" ".join(map(str, s)) for s in sorted(tuple(sorted(s)) for s in sets)]
