import itertools

from hypothesis import strategies as st

from isoprobe.graph import Graph, Permutation, disjoint_union
from isoprobe.generators import cycle


def g(n, edges, colors=None):
    """Graph from 1-based edges, as written in the test tables."""
    return Graph.from_edges(n, edges, colors)


def c6_and_two_triangles():
    return cycle(6), disjoint_union(cycle(3), cycle(3))


def random_graph(rng, n, p):
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_perm(rng, n):
    image = list(range(n))
    rng.shuffle(image)
    return Permutation(tuple(image))


@st.composite
def graphs(draw, min_n=0, max_n=12, colored=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    colors = None
    if colored:
        colors = tuple(draw(st.lists(st.integers(1, 3), min_size=n, max_size=n)))
    return Graph(n, frozenset(p for p, keep in zip(pairs, mask) if keep), colors)


@st.composite
def graph_and_perm(draw, min_n=1, max_n=12, colored=False):
    gr = draw(graphs(min_n, max_n, colored))
    image = draw(st.permutations(range(gr.n)))
    return gr, Permutation(tuple(image))
