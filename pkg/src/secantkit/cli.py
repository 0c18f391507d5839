"""Command-line front end: ``secantkit <verb> [inputs] [flags]``.

Each verb prints a canonical, sorted, newline-terminated report (or the same
fields as JSON with ``--json``).  Exit status: 0 success, 1 domain error or a
failed self-check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import io
from .complexes import cyclic_polytope_crosscheck, cyclic_polytope_facets, degree, dimension, secant_complex
from .errors import SecantKitError
from .graphs import (
    chromatic_number,
    clique_number,
    edge_ideal,
    hypergraph_chromatic,
    is_perfect,
    odd_hole_generators,
    secant_edge_ideal,
)
from .join import METHODS, join, join_alexander, secant
from .monomial import MonomialIdeal, alexander_dual, irreducible_decomposition, standard_monomials
from .posets import MinorFamily, antichain_secant, delightful_witness_check
from .triangulation import (
    NamedConfig,
    build_config,
    is_full,
    lex_triangulation,
    nonedge_graph,
    pulling_triangulation,
    r_partitionable,
    rook_placement,
    scroll_forbidden_check,
    scroll_lex_priority,
    validate_triangulation,
)


class UsageError(Exception):
    pass


class Report:
    """Ordered text lines plus the matching JSON fields; ``ok`` False means exit 1."""

    def __init__(self, lines=None, data=None, ok=True):
        self.lines = list(lines or [])
        self.data = dict(data or {})
        self.ok = ok


# -- input helpers ------------------------------------------------------------

def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    bundled = io.data_path(p.name)
    if bundled.exists():
        return bundled
    raise UsageError(f"no such file: {path}")


def _load(kind: str, path: str, **kw):
    return io.load(kind, _resolve(path), **kw)


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _ideal_data(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ctx.names), "generators": [I.ctx.format(g) for g in I.gens]}


def _ideal_report(I: MonomialIdeal, extra=None, comments=()) -> Report:
    lines = [f"# {c}" for c in comments] + io.format_ideal(I).splitlines()
    data = _ideal_data(I)
    data.update(extra or {})
    return Report(lines, data)


def _config_from(args):
    if getattr(args, "named", None):
        return build_config(NamedConfig.parse(args.named))
    if getattr(args, "config", None):
        return _load("config", args.config)
    return None


def _triangulation(args):
    config = _config_from(args)
    if not args.tri:
        raise UsageError("a triangulation file is required")
    return _load("triangulation", args.tri, config=config)


def _sets(sets) -> list:
    return [list(s) for s in sorted(tuple(sorted(s)) for s in sets)]


# -- monomial ideals ------------------------------------------------------------

def cmd_join(args) -> Report:
    I = _load("ideal", args.A)
    J = _load("ideal", args.B, ctx=I.ctx)
    method = {"decomp": "decomposition"}.get(args.method, args.method)
    if method == "decomposition":
        K = join(I, J, args.char)
    elif method == "alexander":
        K = join_alexander(I, J, _int_list(args.avec) if args.avec else None, args.char)
    else:
        raise UsageError("join supports --method decomp or alexander")
    return _ideal_report(K, {"method": method, "char": args.char})


def _secant_route(I, args, method):
    avec = _int_list(args.avec) if args.avec else None
    return secant(I, args.r, args.char, method, a=avec, degree_bound=args.degree_bound)


def cmd_secant(args) -> Report:
    I = _load("ideal", args.I)
    if args.method != "all":
        res = _secant_route(I, args, args.method)
        comments = [f"oracle truncated at degree {res.degree_bound}"] if res.truncated else []
        return _ideal_report(res.ideal, {"method": res.method, "char": res.char.p, "r": args.r,
                                         "truncated": res.truncated}, comments)
    routes = ["decomposition"] if args.char else list(METHODS)
    results = {m: _secant_route(I, args, m) for m in routes}
    bound = args.degree_bound

    def view(res):
        gens = res.ideal.gens
        if bound is not None:
            gens = tuple(g for g in gens if sum(g) <= bound)
        return gens

    views = {m: view(res) for m, res in results.items()}
    reference = views[routes[0]]
    if all(v == reference for v in views.values()):
        return _ideal_report(results[routes[0]].ideal, {"method": "all", "routes": routes, "agree": True,
                                                        "char": args.char, "r": args.r})
    lines = ["routes disagree"]
    diff = {}
    common = set.intersection(*(set(v) for v in views.values()))
    for m in routes:
        only = [I.ctx.format(g) for g in views[m] if g not in common]
        diff[m] = only
        lines.append(f"{m}: " + (", ".join(only) if only else "(nothing extra)"))
    return Report(lines, {"method": "all", "routes": routes, "agree": False, "diff": diff}, ok=False)


def cmd_dual(args) -> Report:
    I = _load("ideal", args.I)
    a = _int_list(args.avec) if args.avec else list(I.max_exponents())
    return _ideal_report(alexander_dual(I, a), {"avec": a})


def cmd_decompose(args) -> Report:
    I = _load("ideal", args.I)
    comps = irreducible_decomposition(I)
    ctx = I.ctx
    texts = ["<" + ", ".join(ctx.format(ctx.var(i, e)) for i, e in enumerate(u) if e) + ">" if any(u) else "<0>"
             for u in comps]
    return Report([f"components {len(comps)}"] + texts,
                  {"components": texts, "exponents": [list(u) for u in comps]})


def cmd_standard(args) -> Report:
    I = _load("ideal", args.I)
    mons = standard_monomials(I, args.deg)
    texts = [I.ctx.format(m) for m in mons]
    return Report([f"count {len(mons)}"] + texts, {"count": len(mons), "monomials": texts})


# -- graphs -----------------------------------------------------------------

def cmd_chromatic(args) -> Report:
    G = _load("graph", args.G)
    chi, omega = chromatic_number(G, args.limit), clique_number(G)
    return Report([f"chromatic {chi}", f"clique {omega}"], {"chromatic": chi, "clique": omega})


def cmd_edge_secant(args) -> Report:
    G = _load("graph", args.G)
    return _ideal_report(secant_edge_ideal(G, args.r, limit=args.limit), {"r": args.r})


def cmd_perfect(args) -> Report:
    G = _load("graph", args.G)
    rep = is_perfect(G, args.limit)
    witness = sorted(rep.witness) if rep.witness else []
    lines = [f"perfect {str(rep.perfect).lower()}",
             "witness " + (" ".join(map(str, witness)) if witness else "none"),
             f"secant-criterion {str(rep.secant_criterion).lower()}"]
    return Report(lines, {"perfect": rep.perfect, "witness": witness,
                          "secant_criterion": rep.secant_criterion},
                  ok=rep.perfect == rep.secant_criterion)


def cmd_odd_holes(args) -> Report:
    G = _load("graph", args.G)
    holes = _sets(odd_hole_generators(G, args.limit))
    return Report([f"count {len(holes)}"] + [" ".join(map(str, h)) for h in holes],
                  {"count": len(holes), "holes": holes})


def cmd_hyper_chromatic(args) -> Report:
    H = _load("hypergraph", args.H)
    chi = hypergraph_chromatic(H, args.limit)
    return Report([f"chromatic {chi}"], {"chromatic": chi})


# -- posets and complexes ---------------------------------------------------------

def cmd_poset_secant(args) -> Report:
    P = _load("poset", args.P)
    return _ideal_report(antichain_secant(P, args.r), {"r": args.r})


def cmd_minor_check(args) -> Report:
    F = MinorFamily(args.family, args.rows, args.cols)
    ks = [args.k] if args.k else list(range(2, F.max_k() + 1))
    lines, rows, ok = [], [], True
    for k in ks:
        rep = delightful_witness_check(F, k, limit=args.limit)
        ok &= rep.ok
        lines.append(f"k {k} ok {str(rep.ok).lower()} missing {len(rep.missing)} extra {len(rep.extra)}")
        rows.append({"k": k, "ok": rep.ok, "missing": sorted(map(list, rep.missing)),
                     "extra": sorted(map(list, rep.extra))})
    lines.append(f"all {str(ok).lower()}")
    return Report(lines, {"family": F.kind, "rows": F.rows, "cols": F.cols, "checks": rows, "all": ok}, ok=ok)


def cmd_complex_secant(args) -> Report:
    D = _load("complex", args.C)
    S = secant_complex(D, args.r)
    dim, deg = dimension(S), degree(S)
    lines = [f"dimension {dim}", f"degree {deg}"] + io.format_complex(S).splitlines()
    return Report(lines, {"r": args.r, "dimension": dim, "degree": deg,
                          "facets": _sets(S.facets)})


def cmd_cyclic_check(args) -> Report:
    ok = cyclic_polytope_crosscheck(args.n, args.r)
    facets = cyclic_polytope_facets(args.n, 2 * args.r)
    return Report([f"crosscheck {str(ok).lower()}", f"facets {len(facets)}"],
                  {"crosscheck": ok, "facets": len(facets)}, ok=ok)


# -- triangulations ---------------------------------------------------------

def cmd_tri_validate(args) -> Report:
    T = _triangulation(args)
    rep = validate_triangulation(T)
    full = is_full(T)
    lines = [f"valid {str(rep.valid).lower()}", f"certificate {rep.certificate}",
             f"volume {rep.volume}", f"expected-volume {rep.expected_volume}",
             f"full {str(full).lower()}"]
    if rep.failure:
        lines.append(f"failure {rep.failure}")
    return Report(lines, {"valid": rep.valid, "certificate": rep.certificate, "volume": str(rep.volume),
                          "expected_volume": str(rep.expected_volume), "full": full,
                          "failure": rep.failure}, ok=rep.valid)


def cmd_tri_partitionable(args) -> Report:
    T = _triangulation(args)
    rep = r_partitionable(T, args.r)
    lines = [f"count {rep.count}", f"expected-dimension {str(rep.expected_dim_ok).lower()}",
             f"dimension {rep.expected_dim}", f"degree-lower-bound {rep.degree_lower_bound}"]
    lines += [" ".join(map(str, s)) for s in rep.sets]
    return Report(lines, {"r": rep.r, "count": rep.count, "expected_dim_ok": rep.expected_dim_ok,
                          "dimension": rep.expected_dim, "degree_lower_bound": rep.degree_lower_bound,
                          "sets": [list(s) for s in rep.sets]})


def cmd_tri_nonedges(args) -> Report:
    T = _triangulation(args)
    G = nonedge_graph(T)
    if args.graph:
        lines = io.format_graph(G).splitlines()
        return Report(lines, {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]})
    I = edge_ideal(G, T.config.context())
    return _ideal_report(I, {"count": len(I.gens)}, [f"{len(I.gens)} non-edges"])


def cmd_pulling(args) -> Report:
    config = _config_from(args)
    if config is None:
        raise UsageError("pulling needs --named or --config")
    order = _int_list(args.order) if args.order else list(range(config.n))
    if args.lex:
        T = lex_triangulation(config, order)
    else:
        T = pulling_triangulation(config, order)
    lines = io.format_triangulation(T).splitlines()
    return Report(lines, {"order": order, "lex": args.lex, "simplices": [list(s) for s in T.sorted_simplices()]})


def cmd_rooks(args) -> Report:
    sizes = _int_list(args.sizes)
    found = rook_placement(sizes, args.s)
    if found is None:
        return Report(["found false"], {"found": False, "rooks": []})
    rooks = sorted(list(r) for r in found)
    return Report(["found true"] + [" ".join(map(str, r)) for r in rooks], {"found": True, "rooks": rooks})


def cmd_scroll_check(args) -> Report:
    if args.tri:
        T = _triangulation(args)
    else:
        config = _config_from(args)
        if config is None or config.kind != "scroll":
            raise UsageError("scroll-check needs a triangulation file or --named scroll:a,b")
        T = lex_triangulation(config, scroll_lex_priority(config))
    rep = scroll_forbidden_check(T)

    def name(v):
        return f"x{v[0]}{v[1]}"

    claws = [f"{name(c)}: " + " ".join(name(v) for v in leaves) for c, leaves in rep.claws]
    bound = [f"{name(c)}: " + " ".join(name(v) for v in leaves) for c, leaves in rep.boundary]
    lines = [f"tree-edges {len(rep.tree_edges)}", f"interior-claws {len(claws)}"]
    lines += ["claw " + c for c in claws]
    lines.append(f"boundary-claws {len(bound)}")
    lines += ["boundary " + b for b in bound]
    lines.append(f"clean {str(rep.clean).lower()}")
    return Report(lines, {"tree_edges": [[name(u), name(v)] for u, v in rep.tree_edges],
                          "interior_claws": claws, "boundary_claws": bound, "clean": rep.clean})


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secantkit", description="Joins and secants of monomial ideals.")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return p

    def route_flags(p, methods):
        p.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
        p.add_argument("--method", choices=methods, default="decomp")
        p.add_argument("--avec", help="box vector a1,...,an for the Alexander route")

    p = add("join", cmd_join, "join of two ideals")
    p.add_argument("A")
    p.add_argument("B")
    route_flags(p, ["decomp", "alexander"])

    p = add("secant", cmd_secant, "r-th secant of an ideal")
    p.add_argument("I")
    p.add_argument("--r", type=int, required=True)
    route_flags(p, ["decomp", "alexander", "oracle", "all"])
    p.add_argument("--degree-bound", type=int, help="degree bound for the oracle route")

    p = add("dual", cmd_dual, "Alexander dual")
    p.add_argument("I")
    p.add_argument("--avec", help="a1,...,an (default: largest exponents)")

    p = add("decompose", cmd_decompose, "irreducible decomposition")
    p.add_argument("I")

    p = add("standard", cmd_standard, "standard monomials up to a degree")
    p.add_argument("I")
    p.add_argument("--deg", type=int, required=True)

    for name, func, arg, text in [
        ("chromatic", cmd_chromatic, "G", "chromatic and clique numbers"),
        ("perfect", cmd_perfect, "G", "perfection by brute force and by secant degrees"),
        ("odd-holes", cmd_odd_holes, "G", "vertex sets of induced odd cycles"),
        ("hyper-chromatic", cmd_hyper_chromatic, "H", "chromatic number of a hypergraph"),
    ]:
        p = add(name, func, text)
        p.add_argument(arg)
        p.add_argument("--limit", type=int, help="enumeration cap")

    p = add("edge-secant", cmd_edge_secant, "secant of an edge ideal via coloring")
    p.add_argument("G")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--limit", type=int)

    p = add("poset-secant", cmd_poset_secant, "secant of the antichain ideal of a poset")
    p.add_argument("P")
    p.add_argument("--r", type=int, required=True)

    p = add("minor-check", cmd_minor_check, "antichains versus leading terms of minors or Pfaffians")
    p.add_argument("--family", choices=["generic", "symmetric", "pfaffian"], required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int)
    p.add_argument("--k", type=int, help="minor size (default: every k >= 2)")
    p.add_argument("--limit", type=int)

    p = add("complex-secant", cmd_complex_secant, "secant complex")
    p.add_argument("C")
    p.add_argument("--r", type=int, required=True)

    p = add("cyclic-check", cmd_cyclic_check, "secant complex of a cycle versus a cyclic polytope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)

    def config_flags(p):
        p.add_argument("--named", help="veronese3 | p1xp1o22 | segre:d1,... | scroll:l1,...")
        p.add_argument("--config", help="configuration file")

    for name, func, text in [
        ("tri-validate", cmd_tri_validate, "check a triangulation"),
        ("tri-partitionable", cmd_tri_partitionable, "count r-partitionable sets"),
        ("tri-nonedges", cmd_tri_nonedges, "edge ideal of the non-edge graph"),
    ]:
        p = add(name, func, text)
        p.add_argument("tri")
        config_flags(p)
        if name == "tri-partitionable":
            p.add_argument("--r", type=int, required=True)
        if name == "tri-nonedges":
            p.add_argument("--graph", action="store_true", help="print the graph (1-based) instead")

    p = add("pulling", cmd_pulling, "pulling (or, with --lex, lexicographic) triangulation")
    config_flags(p)
    p.add_argument("--order", help="comma-separated point priority, highest first")
    p.add_argument("--lex", action="store_true", help="lexicographic (placing) instead of pulling")

    p = add("rooks", cmd_rooks, "non-attacking rook placement on a Segre board")
    p.add_argument("--sizes", required=True, help="d1,...,dn (board is (d1+1) x ... x (dn+1))")
    p.add_argument("--s", type=int, required=True)

    p = add("scroll-check", cmd_scroll_check, "forbidden claws in a scroll triangulation")
    p.add_argument("tri", nargs="?")
    config_flags(p)
    return parser


def run(argv: Optional[list] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except SecantKitError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.json:
        stdout.write(json.dumps(report.data, sort_keys=True) + "\n")
    else:
        stdout.write("".join(line + "\n" for line in report.lines))
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
