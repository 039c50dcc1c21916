"""Trigraphs: graphs whose edges are split into black and red classes.

A trigraph is the state object of a contraction sequence.  Each live vertex
carries a label naming the set of original vertices merged into it, and
adjacency is stored as two per-vertex bitmasks (black, red) over the live
vertex slots, so neighbourhood set operations are single word operations.

Trigraph values are immutable: :meth:`Trigraph.contract` returns a new
trigraph, which is what makes backtracking search and memoization safe.
"""
from __future__ import annotations

from typing import Iterable, Iterator

Label = tuple[int, ...]

BLACK = "black"
RED = "red"


def as_label(members: Iterable[int]) -> Label:
    """Normalize an iterable of original vertex indices into a label."""
    label = tuple(sorted(set(int(m) for m in members)))
    if not label:
        raise ValueError("vertex label must be non-empty")
    return label


class Trigraph:
    """An immutable trigraph.

    ``labels[i]`` is the sorted tuple of original vertex indices merged into
    live vertex ``i``; live vertices are ordered by their smallest original
    index.  ``black[i]`` and ``red[i]`` are adjacency bitmasks over live
    slots; the two masks are disjoint and carry no self-loop bits.

    Construct instances through :func:`from_graph` (or the generator helpers
    in :mod:`twinwidth.structure`); the raw constructor trusts its arguments.
    """

    __slots__ = ("labels", "black", "red", "n_original")

    def __init__(
        self,
        labels: tuple[Label, ...],
        black: tuple[int, ...],
        red: tuple[int, ...],
        n_original: int,
    ):
        self.labels = labels
        self.black = black
        self.red = red
        self.n_original = n_original

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        """Number of live vertices."""
        return len(self.labels)

    def index_of(self, label: Iterable[int]) -> int:
        lab = as_label(label)
        try:
            return self.labels.index(lab)
        except ValueError:
            raise ValueError(f"unknown vertex label {lab!r}") from None

    def red_degree(self, label: Iterable[int]) -> int:
        """Number of red edges incident to the vertex with this label."""
        return self.red[self.index_of(label)].bit_count()

    def max_red_degree(self) -> int:
        """Largest red degree over live vertices (0 for a 1-vertex trigraph)."""
        return max(r.bit_count() for r in self.red)

    def color_of(self, u: Iterable[int], v: Iterable[int]) -> str | None:
        """Color of the edge between two live vertices, or None if absent."""
        iu = self.index_of(u)
        iv = self.index_of(v)
        if iu == iv:
            raise ValueError("no self-loops: identical labels")
        if self.black[iu] >> iv & 1:
            return BLACK
        if self.red[iu] >> iv & 1:
            return RED
        return None

    def edges(self) -> Iterator[tuple[Label, Label, str]]:
        """Yield (label_u, label_v, color) triples, slot-ordered."""
        for i in range(len(self.labels)):
            bi = self.black[i] >> (i + 1)
            ri = self.red[i] >> (i + 1)
            j = i + 1
            while bi or ri:
                if bi & 1:
                    yield self.labels[i], self.labels[j], BLACK
                elif ri & 1:
                    yield self.labels[i], self.labels[j], RED
                bi >>= 1
                ri >>= 1
                j += 1

    def edge_count(self) -> tuple[int, int]:
        """(black, red) edge counts."""
        b = sum(x.bit_count() for x in self.black) // 2
        r = sum(x.bit_count() for x in self.red) // 2
        return b, r

    def is_plain(self) -> bool:
        """True when the trigraph carries no red edges."""
        return not any(self.red)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Trigraph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.black == other.black
            and self.red == other.red
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.black, self.red))

    def __repr__(self) -> str:
        parts = [
            "{}{}{}".format(
                "+".join(map(str, u)), "--" if c == BLACK else "~~", "+".join(map(str, v))
            )
            for u, v, c in self.edges()
        ]
        return f"Trigraph({self.n} vertices: {', '.join(parts) or 'no edges'})"

    # -- contraction -------------------------------------------------------

    def contract(self, u: Iterable[int], v: Iterable[int]) -> "Trigraph":
        """Merge two live vertices and recolor edges at the merged vertex.

        A third vertex x keeps a black edge to the merged vertex only when
        it was black-adjacent to both u and v; any other adjacency to u or v
        turns into a red edge.  Edges not touching u or v are unchanged.
        """
        iu = self.index_of(u)
        iv = self.index_of(v)
        if iu == iv:
            raise ValueError("cannot contract a vertex with itself")
        return self.contract_indices(iu, iv)

    def contract_indices(self, a: int, b: int) -> "Trigraph":
        """Contract by live slot index; the fast path used by the solver."""
        if a > b:
            a, b = b, a
        labels, black, red = self.labels, self.black, self.red
        bit_a = 1 << a
        bit_b = 1 << b
        keep = ~(bit_a | bit_b)

        union = ((black[a] | red[a]) | (black[b] | red[b])) & keep
        common_black = black[a] & black[b] & keep
        red_w = union & ~common_black

        merged = tuple(sorted(labels[a] + labels[b]))
        new_labels = labels[:a] + (merged,) + labels[a + 1 : b] + labels[b + 1 :]

        # drop slot b: bits below b stay, bits above shift down one
        lo = bit_b - 1

        new_black = []
        new_red = []
        for i in range(len(labels)):
            if i == b:
                continue
            if i == a:
                bi, ri = common_black, red_w
            else:
                bi = black[i] & keep
                ri = red[i] & keep
                bit_i = 1 << i
                if common_black & bit_i:
                    bi |= bit_a
                elif union & bit_i:
                    ri |= bit_a
            new_black.append((bi & lo) | ((bi >> 1) & ~lo))
            new_red.append((ri & lo) | ((ri >> 1) & ~lo))

        return Trigraph(new_labels, tuple(new_black), tuple(new_red), self.n_original)

    # -- plain-graph operations ---------------------------------------------

    def complement(self) -> "Trigraph":
        """Edge-complement; defined for plain graphs only."""
        if not self.is_plain():
            raise ValueError("complement is defined for graphs without red edges")
        m = len(self.labels)
        full = (1 << m) - 1
        new_black = tuple((full & ~self.black[i]) & ~(1 << i) for i in range(m))
        return Trigraph(self.labels, new_black, self.red, self.n_original)

    def connected_components(self) -> list[tuple[Label, ...]]:
        """Partition live vertices by connectivity over edges of either color."""
        m = len(self.labels)
        adj = [self.black[i] | self.red[i] for i in range(m)]
        seen = 0
        components = []
        for start in range(m):
            if seen >> start & 1:
                continue
            frontier = 1 << start
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~comp
            seen |= comp
            members = tuple(self.labels[i] for i in range(m) if comp >> i & 1)
            components.append(members)
        return components


def from_graph(n: int, black_edges: Iterable[tuple[int, int]]) -> Trigraph:
    """Lift a plain graph on vertices 0..n-1 into a trigraph with no red edges.

    Duplicate pairs collapse; out-of-range indices and self-loops are
    rejected.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    black = [0] * n
    for i, j in black_edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for {n} vertices")
        if i == j:
            raise ValueError(f"self-loop ({i}, {j}) is not allowed")
        black[i] |= 1 << j
        black[j] |= 1 << i
    labels = tuple((i,) for i in range(n))
    return Trigraph(labels, tuple(black), (0,) * n, n)
