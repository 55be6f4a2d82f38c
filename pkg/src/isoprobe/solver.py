"""Probabilistic bidirectional isomorphism search.

Random leaves are drawn from both search trees in lockstep. A leaf that
collides with a stored leaf of the *other* tree may reveal an isomorphism;
one that collides within its own tree reveals an automorphism. When the
graphs are isomorphic both kinds of collision are equally likely, so a run
of automorphism-only collisions is evidence of non-isomorphism. Answers of
"isomorphic" are always certified; only "non-isomorphic" carries error.

An optional pre-phase runs the same game on a pruned tree: walks are
compared against the trace of a fixed target leaf and cut short at the
first deviation, whose value then serves as a (fake) leaf.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Optional

from .coloring import unit_coloring
from .graph import Graph, Permutation, compose, invert, is_isomorphism
from .leafstore import LeafRecord, LeafStore, materialize
from .refinement import Refiner, Trace
from .rng import SplitMix64
from .selector import get_selector
from .walk import Leaf, leaf_permutation, random_walk, random_walk_deviation

ISOMORPHIC = "isomorphic"
NON_ISOMORPHIC_CERTIFIED = "non-isomorphic-certified"
PROBABLY_NON_ISOMORPHIC = "probably-non-isomorphic"
INCONCLUSIVE = "inconclusive"


@dataclass
class SolverConfig:
    epsilon: float = 0.01
    k: int = 4
    d_threshold: Optional[int] = None
    use_deviation_phase: bool = True
    use_blueprint: bool = True
    selector: str = "first-largest"
    seed: int = 0
    full_leaf_budget: int = 64
    max_walks: int = 10 ** 6

    def __post_init__(self):
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.d_threshold is not None and self.d_threshold < 1:
            raise ValueError("d_threshold must be at least 1")
        if self.max_walks < 1:
            raise ValueError("max_walks must be at least 1")
        get_selector(self.selector)

    @property
    def quota(self) -> int:
        """Automorphism quota ``ceil(-log2(epsilon))``, at least 1."""
        return max(1, math.ceil(-math.log2(self.epsilon)))

    @property
    def deviation_quota(self) -> int:
        return self.d_threshold if self.d_threshold is not None else self.quota


@dataclass
class Stats:
    walks: int = 0
    nodes: int = 0
    leaves_full: int = 0
    leaves_path: int = 0
    leaves_fake: int = 0
    automorphisms: int = 0
    c: int = 0
    c_deviation: int = 0
    deviation_rounds: int = 0
    full_rounds: int = 0
    entered_full_phase: bool = False
    replays: int = 0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class Verdict:
    kind: str
    witness: Optional[Permutation] = None
    reason: Optional[str] = None
    error_bound: Optional[float] = None
    stats: Stats = field(default_factory=Stats)

    @property
    def isomorphic(self) -> bool:
        return self.kind == ISOMORPHIC

    @property
    def non_isomorphic(self) -> bool:
        return self.kind in (NON_ISOMORPHIC_CERTIFIED, PROBABLY_NON_ISOMORPHIC)


@dataclass
class PhaseOutcome:
    """Result of the deviation pre-phase: a verdict, or ``None`` to switch."""

    verdict: Optional[Verdict] = None

    @property
    def switch_to_full(self) -> bool:
        return self.verdict is None


def _degree_multiset(g: Graph):
    return sorted(len(a) for a in g.adj)


def precheck(g1: Graph, g2: Graph) -> Optional[Verdict]:
    """Cheap certified rejection; ``None`` when nothing separates the graphs."""
    if g1.n != g2.n:
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason=f"vertex counts differ ({g1.n} vs {g2.n})")
    if g1.m != g2.m:
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason=f"edge counts differ ({g1.m} vs {g2.m})")
    if _degree_multiset(g1) != _degree_multiset(g2):
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason="degree sequences differ")
    if sorted(g1.color_tuple()) != sorted(g2.color_tuple()):
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason="vertex color multisets differ")
    root1 = Refiner(g1).refine(unit_coloring(g1))
    root2 = Refiner(g2).refine(unit_coloring(g2))
    if root1.coloring.cell_sizes() != root2.coloring.cell_sizes():
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason="root refinements have different cell sizes")
    if root1.trace != root2.trace:
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason="root refinement traces differ")
    return None


def derive_candidate(g_a: Graph, l_a: LeafRecord, g_b: Graph, l_b: LeafRecord,
                     selector="first-largest", counters=None) -> Permutation:
    """Candidate map taking ``g_b`` onto ``g_a`` built from two leaves.

    The result is meant to be checked with ``is_isomorphism(g_a, g_b, phi)``
    (an automorphism check when both leaves come from the same graph).
    """
    sel = get_selector(selector)
    lam_a = materialize(g_a, l_a, sel, counters=counters)
    lam_b = materialize(g_b, l_b, sel, counters=counters)
    return compose(invert(lam_a), lam_b)


class _OutOfWalks(Exception):
    pass


class BidirectionalSearch:
    """State of one solver run: stores, counters, rng and per-graph engines."""

    def __init__(self, g1: Graph, g2: Graph, cfg: SolverConfig):
        self.graphs = (g1, g2)
        self.cfg = cfg
        self.rng = SplitMix64(cfg.seed)
        self.selector = get_selector(cfg.selector)
        self.refiners = (Refiner(g1), Refiner(g2))
        self.store = LeafStore(cfg.full_leaf_budget)
        self.stats = Stats()

    # -- helpers -----------------------------------------------------------

    def _graph(self, tree: int) -> Graph:
        return self.graphs[tree - 1]

    def _count_walk(self):
        if self.stats.walks >= self.cfg.max_walks:
            raise _OutOfWalks
        self.stats.walks += 1

    def walk(self, tree: int) -> Leaf:
        self._count_walk()
        leaf = random_walk(self._graph(tree), self.rng, self.selector, self.refiners[tree - 1])
        self.stats.nodes += len(leaf.base) + 1
        return leaf

    def deviation_walk(self, tree: int, target: Trace):
        self._count_walk()
        out = random_walk_deviation(self._graph(tree), target, self.cfg.k, self.cfg.use_blueprint,
                                    self.rng, self.selector, self.refiners[tree - 1])
        self.stats.nodes += len(out.base) + 1
        return out

    def _perm(self, rec: LeafRecord) -> Permutation:
        return materialize(self._graph(rec.tree), rec, self.selector,
                           self.refiners[rec.tree - 1], self.store.counters)

    def try_isomorphism(self, a: LeafRecord, b: LeafRecord) -> Optional[Permutation]:
        """Certified witness mapping G2 onto G1, or ``None``."""
        if a.tree == b.tree:
            raise ValueError("isomorphism candidates must come from different trees")
        r1, r2 = (a, b) if a.tree == 1 else (b, a)
        g1, g2 = self.graphs
        phi = compose(invert(self._perm(r1)), self._perm(r2))
        return phi if is_isomorphism(g1, g2, phi) else None

    def is_automorphic_pair(self, a: LeafRecord, b: LeafRecord) -> bool:
        g = self._graph(a.tree)
        phi = compose(invert(self._perm(a)), self._perm(b))
        return is_isomorphism(g, g, phi)

    def _isomorphic(self, phi: Permutation) -> Verdict:
        return Verdict(ISOMORPHIC, witness=phi, stats=self._final_stats())

    def _final_stats(self) -> Stats:
        s = self.stats
        s.leaves_full = self.store.counters.full
        s.leaves_path = self.store.counters.path
        s.leaves_fake = self.store.counters.fake
        s.replays = self.store.counters.replays
        return s

    def _find_isomorphism(self, recs: dict) -> Optional[Permutation]:
        """Cross-tree checks for the actual leaves of one round."""
        r1, r2 = recs.get(1), recs.get(2)
        if r1 is not None and r2 is not None and r1.key == r2.key:
            phi = self.try_isomorphism(r1, r2)
            if phi is not None:
                return phi
        for tree, rec in recs.items():
            for other in self.store.candidates(rec, 3 - tree):
                phi = self.try_isomorphism(rec, other)
                if phi is not None:
                    return phi
        return None

    def _automorphism_flags(self, recs: dict) -> dict:
        """One automorphism check per tree; stores leaves that found none."""
        flags = {}
        for tree, rec in recs.items():
            found = False
            for other in self.store.insert_or_candidates(rec):
                if other.tree == tree and self.is_automorphic_pair(rec, other):
                    found = True
                    break
            if found:
                self.stats.automorphisms += 1
                self.store.discard(rec)
            else:
                self.store.confirm_insert(rec)
            flags[tree] = found
        return flags

    # -- phases ------------------------------------------------------------

    def trivial_tree(self) -> Optional[Verdict]:
        """Resolve directly when the root colorings are already discrete."""
        g1, g2 = self.graphs
        c1 = self.refiners[0].refine(unit_coloring(g1)).coloring
        if not c1.is_discrete():
            return None
        c2 = self.refiners[1].refine(unit_coloring(g2)).coloring
        phi = compose(invert(leaf_permutation(c1)), leaf_permutation(c2))
        if is_isomorphism(g1, g2, phi):
            return self._isomorphic(phi)
        return Verdict(NON_ISOMORPHIC_CERTIFIED, reason="discrete root colorings do not match",
                       stats=self._final_stats())

    def deviation_phase(self) -> PhaseOutcome:
        """Play the collision game on the tree pruned at deviations from a target leaf."""
        tau = self.walk(1)
        self.store.insert(LeafRecord.from_outcome(1, tau))
        target = tau.trace
        blueprint = target if self.cfg.use_blueprint else None
        d = self.cfg.deviation_quota
        while True:
            self.stats.deviation_rounds += 1
            outs = {1: self.deviation_walk(1, target), 2: self.deviation_walk(2, target)}
            recs = {t: LeafRecord.from_outcome(t, o, blueprint) for t, o in outs.items()}
            actual = {t: r for t, r in recs.items() if not r.is_fake}
            fake = {t: r for t, r in recs.items() if r.is_fake}

            phi = self._find_isomorphism(actual)
            if phi is not None:
                return PhaseOutcome(self._isomorphic(phi))

            if len(fake) == 2 and fake[1].key == fake[2].key:
                return PhaseOutcome(None)
            for tree, rec in fake.items():
                if self.store.has_key(rec, 3 - tree):
                    return PhaseOutcome(None)

            flags = self._automorphism_flags(actual)
            for tree, rec in fake.items():
                if self.store.has_key(rec, tree):
                    flags[tree] = True
                else:
                    self.store.insert(rec)
            if any(flags.values()):
                self.stats.c_deviation += 1
                if self.stats.c_deviation >= d:
                    return PhaseOutcome(Verdict(PROBABLY_NON_ISOMORPHIC, error_bound=2.0 ** -d,
                                                stats=self._final_stats()))

    def full_phase(self) -> Verdict:
        q = self.cfg.quota
        self.stats.entered_full_phase = True
        c = 0
        while c <= q:
            self.stats.full_rounds += 1
            recs = {1: LeafRecord.from_outcome(1, self.walk(1)),
                    2: LeafRecord.from_outcome(2, self.walk(2))}
            phi = self._find_isomorphism(recs)
            if phi is not None:
                return self._isomorphic(phi)
            flags = self._automorphism_flags(recs)
            if flags[1] or flags[2]:
                c += 1
                self.stats.c = c
        return Verdict(PROBABLY_NON_ISOMORPHIC, error_bound=2.0 ** -q, stats=self._final_stats())

    def run(self) -> Verdict:
        g1, g2 = self.graphs
        rejected = precheck(g1, g2)
        if rejected is not None:
            rejected.stats = self._final_stats()
            return rejected
        try:
            trivial = self.trivial_tree()
            if trivial is not None:
                return trivial
            if self.cfg.use_deviation_phase:
                outcome = self.deviation_phase()
                if outcome.verdict is not None:
                    return outcome.verdict
            return self.full_phase()
        except _OutOfWalks:
            return Verdict(INCONCLUSIVE, reason=f"walk budget of {self.cfg.max_walks} exhausted",
                           stats=self._final_stats())


def deviation_phase(g1: Graph, g2: Graph, cfg: Optional[SolverConfig] = None) -> PhaseOutcome:
    """Run only the pre-phase (after the precheck) and report how it ended."""
    cfg = cfg or SolverConfig()
    search = BidirectionalSearch(g1, g2, cfg)
    rejected = precheck(g1, g2)
    if rejected is not None:
        return PhaseOutcome(rejected)
    try:
        trivial = search.trivial_tree()
        if trivial is not None:
            return PhaseOutcome(trivial)
        return search.deviation_phase()
    except _OutOfWalks:
        return PhaseOutcome(Verdict(INCONCLUSIVE, stats=search._final_stats()))


def random_iso(g1: Graph, g2: Graph, cfg: Optional[SolverConfig] = None) -> Verdict:
    """Decide isomorphism of ``g1`` and ``g2``.

    An ``isomorphic`` verdict carries a witness ``phi`` with
    ``is_isomorphism(g1, g2, phi)``. A ``probably-non-isomorphic`` verdict
    is wrong with probability at most ``cfg.epsilon``.
    """
    return BidirectionalSearch(g1, g2, cfg or SolverConfig()).run()
