"""Random root-to-leaf walks in the individualization-refinement tree."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring, unit_coloring
from .graph import Graph, Permutation
from .refinement import (END, Deviation, RECORD, RefineMode, Refiner, Trace, combine,
                         individualize)
from .rng import SplitMix64
from .selector import select_cell


@dataclass
class Leaf:
    """An actual leaf: the base that reached it, its discrete coloring, the full trace."""

    base: tuple
    coloring: Coloring
    trace: Trace

    @property
    def key(self) -> int:
        return self.trace.hash


@dataclass
class FakeLeaf:
    """An inner node whose trace deviated from the target's."""

    base: tuple
    deviation: Deviation

    @property
    def key(self) -> tuple:
        return tuple(self.deviation)


def _pick(col: Coloring, cell: int, rng: SplitMix64) -> int:
    return col.order[cell + rng.below(col.cell_size[cell])]


def random_walk(g: Graph, rng: SplitMix64, selector=select_cell,
                refiner: Optional[Refiner] = None) -> Leaf:
    refiner = refiner or Refiner(g)
    col = unit_coloring(g)
    trace = Trace()
    base = []
    refiner.refine(col, (), trace)
    cell = selector(col)
    while cell is not None:
        v = _pick(col, cell, rng)
        base.append(v)
        individualize(col, v)
        refiner.refine(col, (v,), trace)
        cell = selector(col)
    return Leaf(tuple(base), col, trace)


def random_walk_deviation(g: Graph, target: Trace, k: int, use_blueprint: bool,
                          rng: SplitMix64, selector=select_cell,
                          refiner: Optional[Refiner] = None):
    """Walk while comparing against ``target``; stop at the first deviation.

    Returns a :class:`FakeLeaf` on deviation, else a :class:`Leaf` whose
    trace equals ``target`` token for token.
    """
    refiner = refiner or Refiner(g)
    mode = RefineMode(target, k, use_blueprint)
    col = unit_coloring(g)
    trace = Trace()
    base = []
    out = refiner.refine(col, (), trace, mode)
    if out.deviation is not None:
        return FakeLeaf((), out.deviation)
    cell = selector(col)
    while cell is not None:
        v = _pick(col, cell, rng)
        base.append(v)
        individualize(col, v)
        out = refiner.refine(col, (v,), trace, mode)
        if out.deviation is not None:
            return FakeLeaf(tuple(base), out.deviation)
        cell = selector(col)
    if len(trace) != len(target):
        # target went deeper; cannot happen for a well-formed target, kept as a guard
        return FakeLeaf(tuple(base), Deviation(len(trace), combine(END, len(base))))
    return Leaf(tuple(base), col, trace)


def replay_path(g: Graph, base, selector=select_cell, refiner: Optional[Refiner] = None,
                blueprint: Optional[Trace] = None) -> Coloring:
    """Recompute the leaf coloring reached by ``base``.

    ``blueprint`` must be given for leaves that were found by a blueprint
    walk, so that the same worklist cells are skipped on replay.
    """
    refiner = refiner or Refiner(g)
    mode = RECORD if blueprint is None else RefineMode(blueprint, 0, True)
    col = unit_coloring(g)
    trace = Trace()
    refiner.refine(col, (), trace, mode)
    for depth, v in enumerate(base):
        cell = selector(col)
        if cell is None:
            raise ValueError(f"base longer than the branch: discrete at depth {depth}")
        if col.cell_of[v] != cell:
            raise ValueError(f"vertex {v + 1} is not in the selected cell at depth {depth}")
        individualize(col, v)
        out = refiner.refine(col, (v,), trace, mode)
        if out.deviation is not None:
            raise ValueError("base deviates from the blueprint it was recorded against")
    if selector(col) is not None:
        raise ValueError("base ends before reaching a leaf")
    return col


def leaf_permutation(col: Coloring) -> Permutation:
    """Map each vertex to its position in the discrete coloring."""
    if not col.is_discrete():
        raise ValueError("leaf_permutation needs a discrete coloring")
    return Permutation(tuple(col.pos))
