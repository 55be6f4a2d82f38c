"""Brute-force ground truth for small graphs.

Everything here is deliberately naive and independent of the solver's
search strategy; it is what the tests trust.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .coloring import unit_coloring
from .graph import Graph, Permutation, compose, invert, is_automorphism, is_isomorphism
from .refinement import Refiner, Trace, individualize
from .selector import select_cell
from .walk import leaf_permutation

MAX_BRUTE_N = 10
MAX_TREE_LEAVES = 100_000


class OracleRefusal(ValueError):
    pass


def _iso_maps(g1: Graph, g2: Graph):
    """Yield every bijection ``f: V1 -> V2`` preserving edges, non-edges and colors.

    Vertices of ``g1`` are assigned in index order; candidates in ``g2`` are
    tried in index order and pruned on degree, color and adjacency to the
    already-assigned prefix.
    """
    n = g1.n
    if n > MAX_BRUTE_N:
        raise OracleRefusal(f"n={n} exceeds the brute-force limit of {MAX_BRUTE_N}")
    if g2.n != n or g1.m != g2.m:
        return
    c1, c2 = g1.color_tuple(), g2.color_tuple()
    deg1 = [len(a) for a in g1.adj]
    deg2 = [len(a) for a in g2.adj]
    f = [-1] * n
    used = [False] * n

    def extend(v):
        if v == n:
            yield tuple(f)
            return
        for w in range(n):
            if used[w] or deg1[v] != deg2[w] or c1[v] != c2[w]:
                continue
            ok = True
            for u in range(v):
                if g1.has_edge(u, v) != g2.has_edge(f[u], w):
                    ok = False
                    break
            if not ok:
                continue
            f[v] = w
            used[w] = True
            yield from extend(v + 1)
            used[w] = False
            f[v] = -1

    yield from extend(0)


def brute_force_iso(g1: Graph, g2: Graph) -> Optional[Permutation]:
    """Witness ``phi`` with ``is_isomorphism(g1, g2, phi)``, or ``None``."""
    if max(g1.n, g2.n) > MAX_BRUTE_N:
        raise OracleRefusal(f"n exceeds the brute-force limit of {MAX_BRUTE_N}")
    for f in _iso_maps(g1, g2):
        phi = invert(Permutation(f))
        assert is_isomorphism(g1, g2, phi)
        return phi
    return None


def brute_force_aut_count(g: Graph) -> int:
    return sum(1 for _ in _iso_maps(g, g))


@dataclass
class TreeLeaf:
    base: tuple
    perm: Permutation
    trace_hash: int


@dataclass
class TreeEnumeration:
    leaves: list
    nodes: int
    classes: list = field(default_factory=list)

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)


def enumerate_tree(g: Graph, selector=select_cell, max_leaves: int = MAX_TREE_LEAVES) -> TreeEnumeration:
    """Materialize every leaf of the search tree and group leaves by automorphism.

    Classes are built by comparing each leaf against one representative per
    existing class.
    """
    refiner = Refiner(g)
    root = unit_coloring(g)
    root_trace = Trace()
    refiner.refine(root, (), root_trace)
    leaves = []
    nodes = 0
    stack = [(root, root_trace, ())]
    while stack:
        col, trace, base = stack.pop()
        nodes += 1
        cell = selector(col)
        if cell is None:
            leaves.append(TreeLeaf(base, leaf_permutation(col), trace.hash))
            if len(leaves) > max_leaves:
                raise OracleRefusal(f"more than {max_leaves} leaves (stopped at {len(leaves)})")
            continue
        for v in reversed(col.cell(cell)):
            child = individualize(col.copy(), v)
            child_trace = trace.copy()
            refiner.refine(child, (v,), child_trace)
            stack.append((child, child_trace, base + (v,)))

    reps = []
    classes = []
    for i, leaf in enumerate(leaves):
        for j, rep in enumerate(reps):
            if is_automorphism(g, compose(invert(leaves[rep].perm), leaf.perm)):
                classes[j].append(i)
                break
        else:
            reps.append(i)
            classes.append([i])
    return TreeEnumeration(leaves, nodes, classes)


@dataclass
class OccurrenceReport:
    name: str
    leaves: int
    classes: int
    aut: int
    class_sizes: list
    passed: bool

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.name}: leaves={self.leaves} |Aut|={self.aut} "
                f"classes={self.classes}")


def verify_occurrences(g: Graph, name: str = "graph", selector=select_cell) -> OccurrenceReport:
    """Check that every leaf class has exactly |Aut(G)| members."""
    enum = enumerate_tree(g, selector)
    aut = brute_force_aut_count(g)
    sizes = sorted(len(c) for c in enum.classes)
    ok = (all(s == aut for s in sizes)
          and enum.leaf_count % aut == 0
          and len(enum.classes) == enum.leaf_count // aut)
    return OccurrenceReport(name, enum.leaf_count, len(enum.classes), aut, sizes, ok)
