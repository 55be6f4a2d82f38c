"""Hash-keyed leaf storage for the two search trees.

Actual leaves are keyed by their trace hash, fake leaves by their
deviation pair; the two namespaces never mix. Equal keys only make a
record a *candidate* -- callers certify before trusting a match.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .coloring import Coloring
from .graph import Graph, Permutation
from .refinement import Deviation, Refiner, Trace
from .selector import select_cell
from .walk import FakeLeaf, Leaf, leaf_permutation, replay_path

FULL, PATH, FAKE = "full", "path", "fake"


@dataclass
class LeafRecord:
    key: object
    tree: int
    base: tuple
    coloring: Optional[Coloring] = None
    deviation: Optional[Deviation] = None
    blueprint: Optional[Trace] = None

    @property
    def kind(self) -> str:
        if self.deviation is not None:
            return FAKE
        return FULL if self.coloring is not None else PATH

    @property
    def is_fake(self) -> bool:
        return self.deviation is not None

    @classmethod
    def from_outcome(cls, tree: int, outcome, blueprint: Optional[Trace] = None) -> "LeafRecord":
        if isinstance(outcome, FakeLeaf):
            return cls(outcome.key, tree, outcome.base, deviation=outcome.deviation)
        if isinstance(outcome, Leaf):
            return cls(outcome.key, tree, outcome.base, coloring=outcome.coloring,
                       blueprint=blueprint)
        raise TypeError(f"not a walk outcome: {outcome!r}")


@dataclass
class StoreCounters:
    full: int = 0
    path: int = 0
    fake: int = 0
    materialized: int = 0
    replays: int = 0


class LeafStore:
    def __init__(self, full_leaf_budget: int = 64):
        self.full_leaf_budget = full_leaf_budget
        self._actual = ({}, {})
        self._fake = ({}, {})
        self._full_per_tree = [0, 0]
        self._pending = None
        self.counters = StoreCounters()

    def _maps(self, rec: LeafRecord):
        return self._fake if rec.is_fake else self._actual

    def candidates(self, rec: LeafRecord, tree: Optional[int] = None) -> list:
        """Same-kind records under ``rec.key``; both trees unless ``tree`` is given."""
        maps = self._maps(rec)
        trees = (1, 2) if tree is None else (tree,)
        out = []
        for t in trees:
            out.extend(maps[t - 1].get(rec.key, ()))
        return out

    def has_key(self, rec: LeafRecord, tree: int) -> bool:
        return rec.key in self._maps(rec)[tree - 1]

    def insert(self, rec: LeafRecord) -> LeafRecord:
        """Store ``rec``; a full leaf over budget is demoted to its path."""
        if rec.kind == FULL and self._full_per_tree[rec.tree - 1] >= self.full_leaf_budget:
            rec.coloring = None
        kind = rec.kind
        if kind == FULL:
            self._full_per_tree[rec.tree - 1] += 1
        setattr(self.counters, kind, getattr(self.counters, kind) + 1)
        self._maps(rec)[rec.tree - 1].setdefault(rec.key, []).append(rec)
        return rec

    def insert_or_candidates(self, rec: LeafRecord) -> list:
        """First half of a two-phase insert: return candidates and stage ``rec``.

        Follow up with :meth:`confirm_insert` or :meth:`discard`.
        """
        self._pending = rec
        return self.candidates(rec)

    def confirm_insert(self, rec: LeafRecord) -> LeafRecord:
        if self._pending is rec:
            self._pending = None
        return self.insert(rec)

    def discard(self, rec: LeafRecord):
        if self._pending is rec:
            self._pending = None

    def full_count(self, tree: int) -> int:
        return self._full_per_tree[tree - 1]

    def __len__(self):
        return sum(len(b) for maps in (self._actual, self._fake) for m in maps for b in m.values())


def materialize(g: Graph, rec: LeafRecord, selector=select_cell,
                refiner: Optional[Refiner] = None,
                counters: Optional[StoreCounters] = None) -> Permutation:
    """Leaf permutation of an actual-leaf record, replaying the path if needed."""
    if rec.is_fake:
        raise ValueError("fake leaves have no permutation")
    if counters is not None:
        counters.materialized += 1
    if rec.coloring is not None:
        return leaf_permutation(rec.coloring)
    if counters is not None:
        counters.replays += 1
    return leaf_permutation(replay_path(g, rec.base, selector, refiner, rec.blueprint))
