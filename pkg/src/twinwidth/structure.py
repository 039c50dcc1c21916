"""Named graph families and structural twin-width bounds.

Each recognizer implements one closed-form fact about twin-width:
complete and complete bipartite graphs have twin-width 0; a dominant
vertex, or every component having at most one cycle, bounds it by 2;
caterpillar trees and paths are bounded by 1; and any bound transfers
across complementation.  The exact solver uses these as sanity ceilings
and the test suite re-verifies them against exact values.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .trigraph import Trigraph, from_graph

RULE_COMPLETE_OR_BIPARTITE = "CompleteOrBipartite"
RULE_DOMINANT_VERTEX = "DominantVertex"
RULE_AT_MOST_ONE_CYCLE = "AtMostOneCyclePerComponent"
RULE_CATERPILLAR = "Caterpillar"
RULE_PATH_GRAPH = "PathGraph"
RULE_COMPLEMENT_REDUCTION = "ComplementReduction"

EXACT = "Exact"
UPPER_BOUND = "UpperBound"


@dataclass(frozen=True)
class StructuralBound:
    """A recognizer verdict: which rule fired and the bound it implies."""

    rule: str
    kind: str
    value: int


# -- named families -------------------------------------------------------


def complete(n: int) -> Trigraph:
    """K_n."""
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return from_graph(n, combinations(range(n), 2))


def complete_bipartite(n: int, m: int) -> Trigraph:
    """K_{n,m}: parts 0..n-1 and n..n+m-1, every cross pair an edge."""
    if n < 1 or m < 1:
        raise ValueError("complete bipartite parts must be non-empty")
    return from_graph(n + m, ((i, n + j) for i in range(n) for j in range(m)))


def cycle(n: int) -> Trigraph:
    """C_n."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Trigraph:
    """P_n."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return from_graph(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Trigraph:
    """Star on n vertices: center 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least 1 vertex")
    return from_graph(n, ((0, i) for i in range(1, n)))


def spider(*leg_lengths: int) -> Trigraph:
    """Tree made of paths (legs) glued at a common center vertex 0."""
    if any(length < 1 for length in leg_lengths):
        raise ValueError("spider leg lengths must be at least 1")
    edges = []
    nxt = 1
    for length in leg_lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_graph(nxt, edges)


_FAMILIES = {
    "complete": (complete, 1),
    "bipartite": (complete_bipartite, 2),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "spider": (spider, None),
}


def make_named(family: str, params: Sequence[int]) -> Trigraph:
    """Build a named family member from CLI-style arguments."""
    entry = _FAMILIES.get(family)
    if entry is None:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {family!r} (known: {known})")
    fn, arity = entry
    if arity is not None and len(params) != arity:
        raise ValueError(f"family {family!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# -- recognizers -----------------------------------------------------------


def _require_plain(g: Trigraph) -> None:
    if not g.is_plain():
        raise ValueError("structural recognizers apply to graphs without red edges")


def _is_complete(g: Trigraph) -> bool:
    m = g.n
    full = (1 << m) - 1
    return all(g.black[i] == full ^ (1 << i) for i in range(m))


def _is_complete_bipartite(g: Trigraph) -> bool:
    # exactly K_{n,m}: the complement must be two disjoint cliques
    h = g.complement()
    comps = h.connected_components()
    if len(comps) != 2:
        return False
    index = {lab: i for i, lab in enumerate(h.labels)}
    for comp in comps:
        idx = [index[lab] for lab in comp]
        for a, b in combinations(idx, 2):
            if not h.black[a] >> b & 1:
                return False
    return True


def _has_dominant_vertex(g: Trigraph) -> bool:
    m = g.n
    return any(b.bit_count() == m - 1 for b in g.black)


def _at_most_one_cycle_per_component(g: Trigraph) -> bool:
    index = {lab: i for i, lab in enumerate(g.labels)}
    for comp in g.connected_components():
        idx = [index[lab] for lab in comp]
        inside = 0
        for i in idx:
            inside |= 1 << i
        edges = sum((g.black[i] & inside).bit_count() for i in idx) // 2
        if edges > len(idx):
            return False
    return True


def _is_tree(g: Trigraph) -> bool:
    if len(g.connected_components()) != 1:
        return False
    return sum(b.bit_count() for b in g.black) // 2 == g.n - 1


def is_caterpillar(g: Trigraph) -> bool:
    """True iff g is a tree whose non-leaf vertices form a (possibly empty) path."""
    _require_plain(g)
    if not _is_tree(g):
        return False
    m = g.n
    spine = [i for i in range(m) if g.black[i].bit_count() >= 2]
    if len(spine) <= 1:
        return True
    inside = 0
    for i in spine:
        inside |= 1 << i
    # removing the leaves of a tree leaves a subtree, so degree <= 2 means path
    return all((g.black[i] & inside).bit_count() <= 2 for i in spine)


def _is_path(g: Trigraph) -> bool:
    return _is_tree(g) and all(b.bit_count() <= 2 for b in g.black)


def _direct_bounds(g: Trigraph) -> list[StructuralBound]:
    out = []
    if _is_complete(g) or _is_complete_bipartite(g):
        out.append(StructuralBound(RULE_COMPLETE_OR_BIPARTITE, EXACT, 0))
    if _has_dominant_vertex(g):
        out.append(StructuralBound(RULE_DOMINANT_VERTEX, UPPER_BOUND, 2))
    if _at_most_one_cycle_per_component(g):
        out.append(StructuralBound(RULE_AT_MOST_ONE_CYCLE, UPPER_BOUND, 2))
    if is_caterpillar(g):
        out.append(StructuralBound(RULE_CATERPILLAR, UPPER_BOUND, 1))
    if _is_path(g):
        out.append(StructuralBound(RULE_PATH_GRAPH, UPPER_BOUND, 1))
    return out


def recognize(g: Trigraph) -> list[StructuralBound]:
    """Every applicable structural rule, in a fixed order.

    Twin-width is invariant under complementation, so any direct rule that
    fires on the complement also bounds g; that transfer is reported as a
    single ComplementReduction entry carrying the best complement-side bound.
    """
    _require_plain(g)
    out = _direct_bounds(g)
    comp_bounds = _direct_bounds(g.complement())
    if comp_bounds:
        out.append(
            StructuralBound(
                RULE_COMPLEMENT_REDUCTION,
                UPPER_BOUND,
                min(b.value for b in comp_bounds),
            )
        )
    return out
