import random
from itertools import combinations

from hypothesis import strategies as st

from kended.graphs import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
    graph = Graph.from_edges(n, edges)
    if connected and not graph.is_connected():
        # join components along the vertex order
        extra = list(graph.edges())
        seen = graph.component_mask(0) if n else 0
        for v in range(n):
            if not (seen >> v) & 1:
                extra.append((draw(st.integers(min_value=0, max_value=v - 1)), v))
                graph = Graph.from_edges(n, extra)
                seen = graph.component_mask(0)
    return graph


@st.composite
def graph_with_subset(draw, min_n: int = 1, max_n: int = 6, connected: bool = False):
    graph = draw(graphs(min_n=min_n, max_n=max_n, connected=connected))
    smask = draw(st.integers(min_value=0, max_value=graph.full_mask))
    return graph, smask


def seeded_rng(seed: int) -> random.Random:
    return random.Random(seed)
