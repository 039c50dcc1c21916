"""Shared test utilities: random trigraph generation and edge maps."""
from __future__ import annotations

import random

from twinwidth import Trigraph, from_graph


def random_plain_graph(rng: random.Random, n: int, p: float = 0.5) -> Trigraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_graph(n, edges)


def random_trigraph(rng: random.Random, max_n: int = 8) -> Trigraph:
    """A random reachable trigraph: random graph, then a few random merges."""
    n = rng.randint(2, max_n)
    g = random_plain_graph(rng, n)
    for _ in range(rng.randint(0, n - 2)):
        a = rng.randrange(g.n)
        b = rng.randrange(g.n)
        if a != b:
            g = g.contract_indices(a, b)
    return g


def edge_map(g: Trigraph) -> dict[tuple, str]:
    """Edges keyed by label pair, for comparisons that survive relabeling."""
    out = {}
    for u, v, color in g.edges():
        out[(u, v) if u < v else (v, u)] = color
    return out
