"""Color refinement with trace recording.

The worklist loop follows the classic stack-based partition refinement:
pop a cell, count neighbours in every touched cell, split touched cells by
count and push every fragment except one largest. Every step is keyed by
cell ids (start offsets) and neighbour counts only, so two isomorphic
inputs produce identical token streams and corresponding colorings.

A refinement can be run against a previously recorded trace. It then
watches for the first token that differs (the *deviation*), keeps going
for ``k`` more worklist pops to make the deviation value more specific,
and stops. In blueprint mode, pops that were recorded as non-splitting
are skipped outright while the two traces still agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .coloring import Coloring
from .graph import Graph
from .rng import MASK64

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3

POP, SPLIT, END = 0, 1, 2
_POP_TAG = 0x9E37
_SPLIT_TAG = 0x7F4A
_END_TAG = 0xC15D


def mix(h: int, x: int) -> int:
    """One rolling-hash step: ``(h ^ x) * FNV_PRIME mod 2**64``."""
    return ((h ^ (x & MASK64)) * FNV_PRIME) & MASK64


def combine(*values: int) -> int:
    h = FNV_OFFSET
    for x in values:
        h = ((h ^ (x & MASK64)) * FNV_PRIME) & MASK64
    return h


class Trace:
    """Append-only token stream with its rolling hash.

    ``kinds`` tags each token as a worklist pop, a touched-cell split
    record or an end-of-refinement marker. ``splitting`` is only meaningful
    at pop positions and says whether that pop changed the coloring.
    """

    __slots__ = ("tokens", "kinds", "splitting", "hash")

    def __init__(self):
        self.tokens = []
        self.kinds = []
        self.splitting = []
        self.hash = FNV_OFFSET

    def append(self, token: int, kind: int):
        self.tokens.append(token)
        self.kinds.append(kind)
        self.splitting.append(False)
        self.hash = ((self.hash ^ token) * FNV_PRIME) & MASK64

    def copy(self) -> "Trace":
        t = Trace()
        t.tokens = self.tokens[:]
        t.kinds = self.kinds[:]
        t.splitting = self.splitting[:]
        t.hash = self.hash
        return t

    def __len__(self):
        return len(self.tokens)

    def __eq__(self, other):
        if not isinstance(other, Trace):
            return NotImplemented
        return self.tokens == other.tokens

    def __repr__(self):
        return f"Trace(len={len(self.tokens)}, hash={self.hash:#018x})"


def trace_hash(trace: Trace) -> int:
    """Recompute the rolling hash from the token list alone."""
    h = FNV_OFFSET
    for tok in trace.tokens:
        h = mix(h, tok)
    return h


class Deviation(NamedTuple):
    position: int
    value: int


@dataclass(frozen=True)
class RefineMode:
    """``target=None`` records; otherwise compare against ``target``."""

    target: Optional[Trace] = None
    k: int = 4
    blueprint: bool = False

    @classmethod
    def compare_against(cls, target: Trace, k: int = 4) -> "RefineMode":
        return cls(target, k, False)

    @classmethod
    def with_blueprint(cls, target: Trace, k: int = 4) -> "RefineMode":
        return cls(target, k, True)


RECORD = RefineMode()


@dataclass
class RefinementOutcome:
    coloring: Coloring
    trace: Trace
    deviation: Optional[Deviation] = None

    @property
    def stable(self) -> bool:
        return self.deviation is None


def individualize(coloring: Coloring, v: int) -> Coloring:
    """Split ``v`` off the front of its cell, in place. Returns ``coloring``."""
    c = coloring.cell_of[v]
    size = coloring.cell_size[c]
    if size < 2:
        raise ValueError(f"vertex {v + 1} is already a singleton")
    order, pos, cell_of = coloring.order, coloring.pos, coloring.cell_of
    pv = pos[v]
    u = order[c]
    order[c], pos[v] = v, c
    order[pv], pos[u] = u, pv
    coloring.cell_size[c] = 1
    coloring.cell_size[c + 1] = size - 1
    for i in range(c + 1, c + size):
        cell_of[order[i]] = c + 1
    coloring.num_cells += 1
    return coloring


class Refiner:
    """Refinement engine bound to one graph; owns its scratch counters.

    Not thread-safe; use one instance per thread.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.adj = graph.adj
        self._count = [0] * graph.n
        self.work = 0
        self.pops = 0
        self.skipped = 0
        self.calls = 0

    def refine(self, coloring: Coloring, nu=(), trace: Optional[Trace] = None,
               mode: RefineMode = RECORD) -> RefinementOutcome:
        """Refine ``coloring`` in place.

        With empty ``nu`` every cell seeds the worklist (root call);
        otherwise only the singleton cells of the freshly individualized
        vertices in ``nu`` do.
        """
        if trace is None:
            trace = Trace()
        self.calls += 1
        cell_of = coloring.cell_of
        cell_size = coloring.cell_size
        order = coloring.order
        pos = coloring.pos
        n = len(order)
        for v in nu:
            if cell_size[cell_of[v]] != 1:
                raise ValueError(f"vertex {v + 1} is not individualized")

        stack = []
        pending = set()
        if nu:
            for v in nu:
                c = cell_of[v]
                if c not in pending:
                    stack.append(c)
                    pending.add(c)
        else:
            for c in coloring.cell_ids():
                stack.append(c)
                pending.add(c)

        target = mode.target
        k = mode.k
        tgt_tokens = target.tokens if target is not None else None
        tgt_len = len(tgt_tokens) if target is not None else 0
        blueprint = mode.blueprint and target is not None
        dev_pos = -1
        dev_hash = 0
        pops_after = 0
        tokens = trace.tokens

        def emit(tok, kind):
            nonlocal dev_pos, dev_hash
            p = len(tokens)
            trace.append(tok, kind)
            if target is None:
                return
            if dev_pos < 0:
                if p >= tgt_len or tgt_tokens[p] != tok:
                    dev_pos = p
                    dev_hash = mix(FNV_OFFSET, tok)
            else:
                dev_hash = mix(dev_hash, tok)

        adj = self.adj
        count = self._count
        while stack:
            if coloring.num_cells == n:
                break
            if dev_pos >= 0:
                pops_after += 1
                if pops_after > k:
                    return RefinementOutcome(coloring, trace, Deviation(dev_pos, dev_hash))
            c = stack.pop()
            pending.discard(c)
            self.pops += 1
            csize = cell_size[c]
            tok = combine(_POP_TAG, c, csize)
            p = len(tokens)
            if (blueprint and dev_pos < 0 and p < tgt_len and target.kinds[p] == POP
                    and not target.splitting[p] and tgt_tokens[p] == tok):
                # non-splitting on the blueprint: replay its tokens, skip the work
                q = p + 1
                tkinds = target.kinds
                while q < tgt_len and tkinds[q] == SPLIT:
                    q += 1
                for i in range(p, q):
                    trace.append(tgt_tokens[i], tkinds[i])
                self.skipped += 1
                continue
            emit(tok, POP)

            touched = {}
            for i in range(c, c + csize):
                nbrs = adj[order[i]]
                self.work += len(nbrs) + 1
                for w in nbrs:
                    if count[w] == 0:
                        x = cell_of[w]
                        lst = touched.get(x)
                        if lst is None:
                            touched[x] = [w]
                        else:
                            lst.append(w)
                    count[w] += 1

            split_any = False
            for x in sorted(touched):
                tv = touched[x]
                xsize = cell_size[x]
                t = len(tv)
                self.work += t
                tv.sort(key=count.__getitem__)
                frags = []
                if t < xsize:
                    frags.append((xsize - t, 0))
                prev = -1
                for w in tv:
                    cw = count[w]
                    if cw != prev:
                        frags.append([0, cw])
                        prev = cw
                    frags[-1][0] += 1
                flat = []
                for fs, fc in frags:
                    flat.append(fs)
                    flat.append(fc)
                emit(combine(_SPLIT_TAG, x, len(frags), *flat), SPLIT)
                if len(frags) == 1:
                    continue
                split_any = True

                end = x + xsize
                slot = end
                for w in reversed(tv):
                    slot -= 1
                    pw = pos[w]
                    u = order[slot]
                    order[pw] = u
                    pos[u] = pw
                    order[slot] = w
                    pos[w] = slot

                starts = []
                s = x
                for fs, _ in frags:
                    starts.append(s)
                    cell_size[s] = fs
                    if s != x:
                        for i in range(s, s + fs):
                            cell_of[order[i]] = s
                    s += fs
                coloring.num_cells += len(frags) - 1

                if x in pending:
                    for sid in starts[1:]:
                        stack.append(sid)
                        pending.add(sid)
                else:
                    largest = 0
                    for j in range(1, len(frags)):
                        if frags[j][0] > frags[largest][0]:
                            largest = j
                    for j, sid in enumerate(starts):
                        if j != largest:
                            stack.append(sid)
                            pending.add(sid)

            for tv in touched.values():
                for w in tv:
                    count[w] = 0
            if split_any:
                trace.splitting[p] = True

        emit(combine(_END_TAG, coloring.num_cells), END)
        if dev_pos >= 0:
            return RefinementOutcome(coloring, trace, Deviation(dev_pos, dev_hash))
        return RefinementOutcome(coloring, trace)


def refine(graph: Graph, coloring: Coloring, nu=(), mode: RefineMode = RECORD,
           trace: Optional[Trace] = None) -> RefinementOutcome:
    return Refiner(graph).refine(coloring, nu, trace, mode)
