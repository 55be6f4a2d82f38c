import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoprobe.coloring import Coloring, unit_coloring
from isoprobe.generators import complete, cycle, hypercube, random_regular
from isoprobe.graph import Graph, apply_permutation, compose, invert, is_automorphism, is_isomorphism
from isoprobe.refinement import RefineMode, Refiner, Trace, individualize
from isoprobe.rng import SplitMix64
from isoprobe.selector import select_cell, select_cell_smallest
from isoprobe.walk import (FakeLeaf, Leaf, leaf_permutation, random_walk, random_walk_deviation,
                           replay_path)

from helpers import c6_and_two_triangles, g, graph_and_perm, random_graph


def test_k1_has_depth_zero():
    leaf = random_walk(Graph(1, frozenset()), SplitMix64(0))
    assert leaf.base == () and leaf.coloring.is_discrete()


def test_c4_base_length_two():
    for seed in range(10):
        assert len(random_walk(cycle(4), SplitMix64(seed)).base) == 2


def test_p3_base_length_one():
    p3 = g(3, [(1, 2), (2, 3)])
    for seed in range(10):
        leaf = random_walk(p3, SplitMix64(seed))
        assert len(leaf.base) == 1 and leaf.base[0] in (0, 2)


def test_k_n_base_length():
    for n in (2, 5, 8):
        assert len(random_walk(complete(n), SplitMix64(n)).base) == n - 1


def test_walk_is_seeded():
    gr = random_regular(40, 3, random.Random(2))
    a = random_walk(gr, SplitMix64(7))
    b = random_walk(gr, SplitMix64(7))
    assert a.base == b.base and a.key == b.key


def test_all_k4_leaves_share_key():
    keys = {random_walk(complete(4), SplitMix64(s)).key for s in range(30)}
    assert len(keys) == 1


def test_leaf_permutation_examples():
    col = Coloring.from_cells(3, [[2], [0], [1]])
    assert leaf_permutation(col).image == (1, 2, 0)
    with pytest.raises(ValueError):
        leaf_permutation(Coloring.from_cells(3, [[0, 1], [2]]))


@settings(max_examples=60, deadline=None)
@given(graph_and_perm(max_n=12, colored=True), st.integers(0, 2 ** 32))
def test_leaves_transport_under_relabelling(gp, seed):
    """Leaf of G^sigma along sigma(base) has permutation lambda o sigma^-1; candidates certify."""
    gr, sigma = gp
    h = apply_permutation(gr, sigma)
    leaf = random_walk(gr, SplitMix64(seed))
    image_base = tuple(sigma(v) for v in leaf.base)
    col_h = replay_path(h, image_base)
    lam, lam_h = leaf_permutation(leaf.coloring), leaf_permutation(col_h)
    assert compose(lam_h, sigma) == lam
    phi = compose(invert(lam), lam_h)
    assert is_isomorphism(gr, h, phi)


@settings(max_examples=40, deadline=None)
@given(graph_and_perm(max_n=12), st.integers(0, 2 ** 32), st.integers(0, 2 ** 32))
def test_equal_keys_give_automorphisms_on_small_graphs(gp, s1, s2):
    gr, _ = gp
    a = random_walk(gr, SplitMix64(s1))
    b = random_walk(gr, SplitMix64(s2))
    if a.key == b.key:
        phi = compose(invert(leaf_permutation(a.coloring)), leaf_permutation(b.coloring))
        assert is_automorphism(gr, phi)


class TestReplay:
    @settings(max_examples=60, deadline=None)
    @given(graph_and_perm(max_n=14, colored=True), st.integers(0, 2 ** 32))
    def test_fidelity(self, gp, seed):
        gr, _ = gp
        leaf = random_walk(gr, SplitMix64(seed))
        assert replay_path(gr, leaf.base).order == leaf.coloring.order

    def test_smallest_selector(self):
        gr = hypercube(4)
        leaf = random_walk(gr, SplitMix64(1), select_cell_smallest)
        assert replay_path(gr, leaf.base, select_cell_smallest).order == leaf.coloring.order

    def test_invalid_bases(self):
        c4 = cycle(4)
        leaf = random_walk(c4, SplitMix64(0))
        with pytest.raises(ValueError):
            replay_path(c4, leaf.base[:1])
        with pytest.raises(ValueError):
            replay_path(c4, leaf.base + (0,))
        with pytest.raises(ValueError):
            replay_path(c4, (leaf.base[0], leaf.base[0]))


class TestDeviationWalk:
    def test_self_comparison_reaches_leaf(self):
        gr = random_regular(30, 3, random.Random(5))
        target = random_walk(gr, SplitMix64(1)).trace
        for seed in range(10):
            out = random_walk_deviation(gr, target, 4, True, SplitMix64(seed))
            if isinstance(out, Leaf):
                assert out.trace.tokens == target.tokens

    def test_c6_vs_two_triangles_always_deviates(self):
        c6, tt = c6_and_two_triangles()
        for seed in range(10):
            target = random_walk(c6, SplitMix64(seed)).trace
            out = random_walk_deviation(tt, target, 4, False, SplitMix64(seed + 100))
            assert isinstance(out, FakeLeaf)
            assert out.deviation.position == 7
            target = random_walk(tt, SplitMix64(seed)).trace
            assert isinstance(random_walk_deviation(c6, target, 4, False, SplitMix64(seed)), FakeLeaf)

    def test_blueprint_can_mask_a_split_between_non_isomorphic_graphs(self):
        # skipping is only exact on isomorphic branches; a skipped pop may hide a split,
        # so a blueprint walk can end in a leaf whose trace copies the target's
        c6, tt = c6_and_two_triangles()
        target = random_walk(tt, SplitMix64(0)).trace
        out = random_walk_deviation(c6, target, 4, True, SplitMix64(0))
        assert isinstance(out, Leaf) and out.trace.tokens == target.tokens
        lam_t = leaf_permutation(replay_path(tt, random_walk(tt, SplitMix64(0)).base))
        phi = compose(invert(lam_t), leaf_permutation(out.coloring))
        assert not is_isomorphism(tt, c6, phi)

    def test_blueprint_leaf_replays(self):
        gr = random_graph(random.Random(3), 30, 0.15)
        target = random_walk(gr, SplitMix64(0)).trace
        ref = Refiner(gr)
        for seed in range(20):
            out = random_walk_deviation(gr, target, 4, True, SplitMix64(seed), select_cell, ref)
            if isinstance(out, Leaf):
                col = replay_path(gr, out.base, blueprint=target)
                assert col.order == out.coloring.order


@pytest.mark.parametrize("blueprint", [False, True])
def test_every_two_triangle_branch_deviates_from_c6_target(blueprint):
    c6, tt = c6_and_two_triangles()
    target = random_walk(c6, SplitMix64(3)).trace
    mode = RefineMode(target, 4, blueprint)
    for v in range(6):
        ref = Refiner(tt)
        col = unit_coloring(tt)
        trace = Trace()
        assert ref.refine(col, (), trace, mode).stable
        individualize(col, v)
        assert not ref.refine(col, (v,), trace, mode).stable
