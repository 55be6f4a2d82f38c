"""Graph families and isomorphic / non-isomorphic pair construction."""

from __future__ import annotations

import itertools
import random
import warnings
from dataclasses import dataclass, field

from .graph import Graph, Permutation, apply_permutation, disjoint_union
from .oracle import MAX_BRUTE_N, brute_force_iso

FAMILIES = ("complete", "cycle", "path", "grid", "hypercube", "gnp", "random_regular",
            "random_tree")


class ParameterError(ValueError):
    pass


def complete(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def grid(a: int, b: int) -> Graph:
    edges = []
    for i in range(a):
        for j in range(b):
            v = i * b + j
            if j + 1 < b:
                edges.append((v, v + 1))
            if i + 1 < a:
                edges.append((v, v + b))
    return Graph(a * b, frozenset(edges))


def hypercube(d: int) -> Graph:
    n = 1 << d
    return Graph(n, frozenset((v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, frozenset(outer + spokes + inner))


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability must lie in [0, 1], got {p}")
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))


def random_regular(n: int, d: int, rng: random.Random, max_tries: int = 1000) -> Graph:
    """Configuration model; pairings with loops or multi-edges are rejected."""
    if n * d % 2 or not 0 <= d < max(n, 1):
        raise ParameterError(f"no {d}-regular graph on {n} vertices")
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            e = (u, v) if u < v else (v, u)
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph(n, frozenset(edges))
    raise ParameterError(f"configuration model failed {max_tries} times for n={n}, d={d}")


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 1:
        return Graph(n, frozenset())
    if n == 2:
        return Graph(2, frozenset({(0, 1)}))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph(n, frozenset(edges))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    image = list(range(n))
    rng.shuffle(image)
    return Permutation(tuple(image))


def double_edge_swap(g: Graph, rng: random.Random, tries: int = 1000) -> Graph:
    """Replace ``{a,b},{c,d}`` by ``{a,d},{c,b}``; degrees are preserved."""
    edges = sorted(g.edges)
    if len(edges) < 2:
        raise ParameterError("need at least two edges to swap")
    for _ in range(tries):
        (a, b), (c, d) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or g.has_edge(a, d) or g.has_edge(c, b):
            continue
        new = set(edges) - {(a, b) if a < b else (b, a), (c, d) if c < d else (d, c)}
        new.add((a, d) if a < d else (d, a))
        new.add((c, b) if c < b else (b, c))
        return Graph(g.n, frozenset(new), g.colors)
    raise ParameterError("no valid double edge swap found")


def move_edge(g: Graph, rng: random.Random) -> Graph:
    """Delete one edge and add one non-edge (edge count preserved)."""
    edges = sorted(g.edges)
    non_edges = [e for e in itertools.combinations(range(g.n), 2) if e not in g.edges]
    if not edges or not non_edges:
        raise ParameterError("graph is empty or complete; cannot move an edge")
    old = rng.choice(edges)
    new = rng.choice(non_edges)
    return Graph(g.n, frozenset(set(edges) - {old} | {new}), g.colors)


@dataclass
class PairSpec:
    family: str
    relation: str = "isomorphic"
    seed: int = 0
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.relation not in ("isomorphic", "nonisomorphic"):
            raise ParameterError(f"relation must be isomorphic or nonisomorphic, got {self.relation!r}")


def build(family: str, params: dict, rng: random.Random) -> Graph:
    p = params
    try:
        if family == "complete":
            return complete(p["n"])
        if family == "cycle":
            return cycle(p["n"])
        if family == "path":
            return path(p["n"])
        if family == "grid":
            return grid(p["a"], p["b"])
        if family == "hypercube":
            return hypercube(p["d"])
        if family == "gnp":
            return gnp(p["n"], p["p"], rng)
        if family == "random_regular":
            return random_regular(p["n"], p["d"], rng)
        if family == "random_tree":
            return random_tree(p["n"], rng)
    except KeyError as exc:
        raise ParameterError(f"family {family!r} needs parameter {exc.args[0]!r}") from None
    raise ParameterError(f"unknown family {family!r}")


def _perturb(family: str, g: Graph, params: dict, rng: random.Random) -> Graph:
    if family == "cycle":
        n = g.n
        if n < 6:
            raise ParameterError("cycle split needs n >= 6")
        a = n // 2
        return disjoint_union(cycle(a), cycle(n - a))
    if family == "complete":
        if g.n < 2:
            raise ParameterError("need n >= 2")
        return Graph(g.n, g.edges - {(0, 1)})
    if family in ("random_regular", "hypercube"):
        return double_edge_swap(g, rng)
    return move_edge(g, rng)


def generate(spec: PairSpec, max_tries: int = 200):
    """Deterministic pair ``(G1, G2)`` for ``spec``.

    Isomorphic pairs are ``(G, G^sigma)`` for a random ``sigma``.
    Non-isomorphic pairs perturb ``G`` and relabel the result; when
    ``n <= MAX_BRUTE_N`` the oracle confirms non-isomorphism (retrying new
    perturbations), above that the pair is returned with a warning unless
    the family guarantees it structurally.
    """
    rng = random.Random(spec.seed)
    g = build(spec.family, spec.params, rng)
    if spec.relation == "isomorphic":
        return g, apply_permutation(g, random_permutation(g.n, rng))
    for _ in range(max_tries):
        h = _perturb(spec.family, g, spec.params, rng)
        if spec.family in ("cycle", "complete"):
            break
        if g.n <= MAX_BRUTE_N:
            if brute_force_iso(g, h) is None:
                break
            continue
        warnings.warn(f"non-isomorphism of generated {spec.family} pair (n={g.n}) is not "
                      "oracle-verified", stacklevel=2)
        break
    else:
        raise ParameterError(f"no non-isomorphic perturbation found for {spec.family}")
    return g, apply_permutation(h, random_permutation(h.n, rng))
