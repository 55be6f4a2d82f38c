"""Graphs, permutations and DIMACS I/O.

Vertices are ``0..n-1`` inside the package. Everything that faces a user
(DIMACS files, :meth:`Graph.from_edges`, witness output) is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class DimacsError(ValueError):
    """Raised for malformed DIMACS input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., n-1}`` stored as its image list."""

    image: tuple

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a permutation: {image}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_one_based(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(int(x) - 1 for x in images))

    def to_one_based(self) -> list:
        return [x + 1 for x in self.image]

    def __len__(self):
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a o b``, i.e. ``v -> a(b(v))``."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    ai = a.image
    return Permutation(tuple(ai[x] for x in b.image))


def invert(a: Permutation) -> Permutation:
    inv = [0] * len(a)
    for v, x in enumerate(a.image):
        inv[x] = v
    return Permutation(tuple(inv))


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on vertices ``0..n-1`` with optional vertex colors.

    ``edges`` holds pairs ``(u, v)`` with ``u < v``. ``colors`` is either
    ``None`` or a tuple with one positive integer per vertex.
    """

    n: int
    edges: frozenset
    colors: Optional[tuple] = None
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.colors is not None:
            colors = tuple(int(c) for c in self.colors)
            if len(colors) != n:
                raise ValueError("colors must give one color per vertex")
            if any(c < 1 for c in colors):
                raise ValueError("colors must be positive integers")
            object.__setattr__(self, "colors", colors)
        nbrs = [[] for _ in range(n)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]],
                   colors: Optional[dict] = None) -> "Graph":
        """Build a graph from 1-based edges and an optional 1-based color map."""
        e = [(u - 1, v - 1) for u, v in edges]
        col = None
        if colors is not None:
            col = tuple(colors.get(v + 1, 1) for v in range(n))
        return cls(n, frozenset(e), col)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def color_tuple(self) -> tuple:
        """Colors with the uncolored case read as all-ones."""
        return self.colors if self.colors is not None else (1,) * self.n

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.color_tuple() == other.color_tuple())

    def __hash__(self):
        return hash((self.n, self.edges, self.color_tuple()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}{', colored' if self.colors else ''})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    colors = []
    offset = 0
    colored = any(g.colors is not None for g in graphs)
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        colors.extend(g.color_tuple())
        offset += g.n
    return Graph(offset, frozenset(edges), tuple(colors) if colored else None)


def apply_permutation(g: Graph, phi: Permutation) -> Graph:
    """Return ``G^phi``: edge ``{u, v}`` becomes ``{phi(u), phi(v)}``."""
    if len(phi) != g.n:
        raise ValueError(f"permutation of size {len(phi)} applied to graph with n={g.n}")
    img = phi.image
    edges = frozenset((img[u], img[v]) for u, v in g.edges)
    colors = None
    if g.colors is not None:
        col = [0] * g.n
        for v, c in enumerate(g.colors):
            col[img[v]] = c
        colors = tuple(col)
    return Graph(g.n, edges, colors)


def is_isomorphism(g1: Graph, g2: Graph, phi: Permutation) -> bool:
    """True iff ``phi`` maps ``g2`` onto ``g1`` (``g2^phi == g1``), colors included."""
    if not (g1.n == g2.n == len(phi)):
        raise ValueError("size mismatch")
    if g1.m != g2.m:
        return False
    img = phi.image
    c1 = g1.color_tuple()
    c2 = g2.color_tuple()
    for v in range(g2.n):
        if c1[img[v]] != c2[v]:
            return False
    e1 = g1.edges
    for u, v in g2.edges:
        a, b = img[u], img[v]
        if ((a, b) if a < b else (b, a)) not in e1:
            return False
    return True


def is_automorphism(g: Graph, phi: Permutation) -> bool:
    return is_isomorphism(g, g, phi)


def parse_dimacs(text) -> Graph:
    """Parse DIMACS ``edge`` format from ``str`` or ``bytes``.

    Duplicate edges collapse; vertices without a color line get color 1
    whenever any color line is present.
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = None
    edges = set()
    colors = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise DimacsError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(lineno, f"malformed header {line!r}")
            try:
                n = int(parts[2])
                m = int(parts[3])
            except ValueError:
                raise DimacsError(lineno, f"malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise DimacsError(lineno, "negative size in header")
            continue
        if n is None:
            raise DimacsError(lineno, "data before 'p edge' header")
        if tag not in ("e", "n") or len(parts) != 3:
            raise DimacsError(lineno, f"unrecognized line {line!r}")
        try:
            a, b = int(parts[1]), int(parts[2])
        except ValueError:
            raise DimacsError(lineno, f"non-integer field in {line!r}") from None
        if not 1 <= a <= n:
            raise DimacsError(lineno, f"vertex {a} out of range 1..{n}")
        if tag == "e":
            if not 1 <= b <= n:
                raise DimacsError(lineno, f"vertex {b} out of range 1..{n}")
            if a == b:
                raise DimacsError(lineno, f"self-loop at vertex {a}")
            edges.add((min(a, b) - 1, max(a, b) - 1))
        else:
            if b < 1:
                raise DimacsError(lineno, f"color must be positive, got {b}")
            colors[a - 1] = b
    if n is None:
        raise DimacsError(0, "missing 'p edge' header")
    col = tuple(colors.get(v, 1) for v in range(n)) if colors else None
    return Graph(n, frozenset(edges), col)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    if g.colors is not None:
        lines.extend(f"n {v + 1} {c}" for v, c in enumerate(g.colors))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
