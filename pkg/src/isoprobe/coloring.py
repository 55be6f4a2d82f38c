"""Ordered-partition colorings.

A cell is identified by the index of its first vertex in ``order``. Cells
only ever split, so an id keeps naming the leading fragment of whatever
cell started there.
"""

from __future__ import annotations

from .graph import Graph


class Coloring:
    __slots__ = ("order", "pos", "cell_of", "cell_size", "num_cells")

    def __init__(self, order, cell_of, cell_size, num_cells):
        self.order = order
        self.pos = [0] * len(order)
        for i, v in enumerate(order):
            self.pos[v] = i
        self.cell_of = cell_of
        self.cell_size = cell_size
        self.num_cells = num_cells

    @classmethod
    def from_cells(cls, n: int, cells) -> "Coloring":
        """Build from a list of vertex lists, in cell order."""
        order = []
        cell_of = [0] * n
        cell_size = [0] * n
        for cell in cells:
            start = len(order)
            cell_size[start] = len(cell)
            for v in cell:
                cell_of[v] = start
                order.append(v)
        if sorted(order) != list(range(n)):
            raise ValueError("cells do not partition the vertex set")
        return cls(order, cell_of, cell_size, len(cells))

    @property
    def n(self) -> int:
        return len(self.order)

    def copy(self) -> "Coloring":
        c = Coloring.__new__(Coloring)
        c.order = self.order[:]
        c.pos = self.pos[:]
        c.cell_of = self.cell_of[:]
        c.cell_size = self.cell_size[:]
        c.num_cells = self.num_cells
        return c

    def is_discrete(self) -> bool:
        return self.num_cells == len(self.order)

    def cell_ids(self):
        i = 0
        n = len(self.order)
        while i < n:
            yield i
            i += self.cell_size[i]

    def cell(self, cid: int) -> list:
        return self.order[cid:cid + self.cell_size[cid]]

    def cells(self) -> list:
        return [self.cell(c) for c in self.cell_ids()]

    def cell_sizes(self) -> list:
        return [self.cell_size[c] for c in self.cell_ids()]

    def as_sets(self) -> list:
        return [frozenset(c) for c in self.cells()]

    def check(self):
        """Raise ``AssertionError`` if the internal arrays are inconsistent."""
        n = len(self.order)
        assert sorted(self.order) == list(range(n))
        count = 0
        for cid in self.cell_ids():
            count += 1
            assert self.cell_size[cid] >= 1
            for v in self.cell(cid):
                assert self.cell_of[v] == cid
        assert count == self.num_cells
        for i, v in enumerate(self.order):
            assert self.pos[v] == i

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.cells() == other.cells()

    def __repr__(self):
        cells = " | ".join(" ".join(str(v + 1) for v in c) for c in self.cells())
        return f"Coloring[{cells}]"


def unit_coloring(g: Graph) -> Coloring:
    """One cell per distinct initial color, ascending by color value."""
    if g.colors is None:
        return Coloring.from_cells(g.n, [list(range(g.n))] if g.n else [])
    groups = {}
    for v, c in enumerate(g.colors):
        groups.setdefault(c, []).append(v)
    return Coloring.from_cells(g.n, [groups[c] for c in sorted(groups)])
