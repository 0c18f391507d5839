from itertools import combinations

from hypothesis import strategies as st

from secantkit.graphs import Graph
from secantkit.monomial import MonomialIdeal, VariableContext


def ctx_of(n):
    return VariableContext.standard(n)


@st.composite
def ideals(draw, n=None, max_deg=3, max_gens=4, min_gens=1, squarefree=False):
    n = draw(st.integers(1, 4)) if n is None else n
    top = 1 if squarefree else max_deg
    gens = draw(st.lists(
        st.tuples(*[st.integers(0, top)] * n).filter(lambda e: 0 < sum(e) <= max_deg),
        min_size=min_gens, max_size=max_gens))
    return MonomialIdeal(ctx_of(n), gens)


@st.composite
def ideal_pairs(draw, max_deg=3):
    n = draw(st.integers(1, 3))
    return draw(ideals(n=n, max_deg=max_deg)), draw(ideals(n=n, max_deg=max_deg))


@st.composite
def ideal_triples(draw):
    n = draw(st.integers(1, 3))
    return tuple(draw(ideals(n=n, max_deg=2, max_gens=3)) for _ in range(3))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def pytest_terminal_summary(terminalreporter):
    import re
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.RESULTS, key=lambda s: [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", s.split(":")[0])[1:]]):
        terminalreporter.write_line(line)
