import hypothesis.strategies as st
import networkx as nx
from hypothesis import settings

from partial_brauer import Partition
from partial_brauer.pb_core import NONE

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def partitions(draw, min_n=0, max_n=6, n=None):
    """A uniformly shuffled partial matching on 2n vertices."""
    if n is None:
        n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(2 * n)))
    pairs = draw(st.integers(0, n))
    partner = [NONE] * (2 * n)
    for i in range(pairs):
        a, b = order[2 * i], order[2 * i + 1]
        partner[a], partner[b] = b, a
    return Partition(n, tuple(partner))


def graph_product(a, b):
    """Product by connected components of the stacked diagram (networkx oracle)."""
    n = a.n
    g = nx.Graph()
    top = [("t", i) for i in range(n)]
    mid = [("m", i) for i in range(n)]
    bot = [("b", i) for i in range(n)]
    g.add_nodes_from(top + mid + bot)
    for v, w in enumerate(a.partner):
        if w != NONE:
            g.add_edge((top + mid)[v], (top + mid)[w])
    for v, w in enumerate(b.partner):
        if w != NONE:
            g.add_edge((mid + bot)[v], (mid + bot)[w])
    outer = {x: i for i, x in enumerate(top + bot)}
    partner = [NONE] * (2 * n)
    for comp in nx.connected_components(g):
        ends = [outer[x] for x in comp if x in outer]
        assert len(ends) <= 2
        if len(ends) == 2:
            partner[ends[0]], partner[ends[1]] = ends[1], ends[0]
    return Partition(n, tuple(partner))
