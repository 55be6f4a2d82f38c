"""The standard small-graph corpus for occurrence-count checks."""

import random

from .generators import complete, cycle, gnp, grid, hypercube, path
from .oracle import verify_occurrences


def occurrence_corpus(max_n: int = 10, random_graphs: int = 20, seed: int = 8):
    """Yield ``(name, graph)``: paths, cycles, cliques, cubes, a grid, random G(8, 0.4)."""
    named = [(f"P_{n}", path(n)) for n in range(2, 7)]
    named += [(f"C_{n}", cycle(n)) for n in range(3, 9)]
    named += [(f"K_{n}", complete(n)) for n in range(2, 7)]
    named += [("Q_2", hypercube(2)), ("Q_3", hypercube(3)), ("grid_3x3", grid(3, 3))]
    for name, g in named:
        if g.n <= max_n:
            yield name, g
    rng = random.Random(seed)
    if 8 <= max_n:
        for i in range(random_graphs):
            yield f"G(8,0.4)#{i}", gnp(8, 0.4, rng)


def occurrence_suite(max_n: int = 10, random_graphs: int = 20):
    for name, g in occurrence_corpus(max_n, random_graphs):
        yield verify_occurrences(g, name)
