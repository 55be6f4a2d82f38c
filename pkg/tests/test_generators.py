import random
import warnings

import pytest

from isoprobe.generators import (PairSpec, ParameterError, complete, cycle, generate, grid,
                                 hypercube, path, petersen, random_regular, random_tree)
from isoprobe.graph import to_dimacs
from isoprobe.oracle import brute_force_iso


def test_family_sizes():
    assert (complete(5).m, cycle(7).m, path(4).m) == (10, 7, 3)
    assert (grid(3, 4).n, grid(3, 4).m) == (12, 17)
    assert (hypercube(4).n, hypercube(4).m) == (16, 32)
    assert (petersen().n, petersen().m) == (10, 15)


def test_random_regular_degrees():
    gr = random_regular(50, 3, random.Random(0))
    assert all(len(a) == 3 for a in gr.adj)
    with pytest.raises(ParameterError):
        random_regular(7, 3, random.Random(0))


def test_random_tree():
    gr = random_tree(20, random.Random(1))
    assert gr.m == 19
    seen, stack = {0}, [0]
    while stack:
        for w in gr.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    assert len(seen) == 20


@pytest.mark.parametrize("spec", [
    PairSpec("gnp", "isomorphic", 3, {"n": 30, "p": 0.2}),
    PairSpec("random_regular", "nonisomorphic", 4, {"n": 10, "d": 3}),
    PairSpec("cycle", "nonisomorphic", 5, {"n": 12}),
    PairSpec("grid", "isomorphic", 6, {"a": 3, "b": 5}),
])
def test_byte_identical_output(spec):
    a, b = generate(spec), generate(spec)
    assert [to_dimacs(x) for x in a] == [to_dimacs(x) for x in b]


def test_isomorphic_pair():
    g1, g2 = generate(PairSpec("gnp", "isomorphic", 1, {"n": 9, "p": 0.4}))
    assert brute_force_iso(g1, g2) is not None


@pytest.mark.parametrize("family,params", [
    ("gnp", {"n": 8, "p": 0.4}), ("random_regular", {"n": 10, "d": 3}),
    ("random_tree", {"n": 9}), ("complete", {"n": 6}), ("cycle", {"n": 8}),
    ("hypercube", {"d": 3}), ("path", {"n": 7}),
])
def test_nonisomorphic_pairs_verified(family, params):
    for seed in range(3):
        g1, g2 = generate(PairSpec(family, "nonisomorphic", seed, params))
        assert g1.n == g2.n
        assert brute_force_iso(g1, g2) is None


def test_large_pair_warns():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        generate(PairSpec("gnp", "nonisomorphic", 0, {"n": 20, "p": 0.3}))
    assert caught


def test_bad_specs():
    with pytest.raises(ParameterError):
        PairSpec("moebius")
    with pytest.raises(ParameterError):
        PairSpec("cycle", "similar")
    with pytest.raises(ParameterError):
        generate(PairSpec("gnp", params={"n": 5}))
    with pytest.raises(ParameterError):
        generate(PairSpec("cycle", "nonisomorphic", 0, {"n": 5}))
