"""Canonical forms and isomorphism-free enumeration of small graphs.

The canonical key of a trigraph is the lexicographically smallest pair
(black bitstring, red bitstring) over all orderings of its live vertices,
where bitstrings list the upper-triangle adjacency bits in column-major
order (the graph6 pair order).  Equal keys mean color-preserving
isomorphism, which is what the solver's memo table and the census
deduplication rely on, so the search below is exact: ordered backtracking
over vertex placements with prefix pruning and twin-transposition cuts,
never a hash.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .trigraph import Trigraph

MAX_ENUM_N = 10

# brute force over all labeled graphs up to this size; orderly vertex
# extension beyond (the brute path doubles as the test oracle)
_BRUTE_MAX = 5


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Relabeling-invariant fingerprint of a trigraph.

    ``black_bits`` / ``red_bits`` hold the canonical upper-triangle
    bitstrings packed into integers, first pair at the most significant bit;
    ``n`` fixes the bit length n(n-1)/2.
    """

    n: int
    black_bits: int
    red_bits: int


def _twin_masks(rows_a: tuple[int, ...], rows_b: tuple[int, ...] | None, m: int) -> list[int]:
    """twin[u] has bit v set when swapping u and v is an automorphism."""
    twin = [0] * m
    for u in range(m):
        for v in range(u + 1, m):
            swap = (1 << u) | (1 << v)
            ru = rows_a[u]
            if (ru >> u & 1) != (ru >> v & 1):
                ru ^= swap
            if ru != rows_a[v]:
                continue
            if rows_b is not None:
                rb = rows_b[u]
                if (rb >> u & 1) != (rb >> v & 1):
                    rb ^= swap
                if rb != rows_b[v]:
                    continue
            twin[u] |= 1 << v
            twin[v] |= 1 << u
    return twin


def _lexmin_single(rows: tuple[int, ...], m: int) -> tuple[int, tuple[int, ...]]:
    """Minimal upper-triangle bitstring of one edge class over all orderings.

    Returns (bits, perm) where perm[position] = vertex placed there.
    """
    nbits_total = m * (m - 1) // 2
    twin = _twin_masks(rows, None, m)
    best: int | None = None
    best_perm: tuple[int, ...] = ()
    placed: list[int] = []

    def extend(remaining: int, partial: int, nbits: int) -> None:
        nonlocal best, best_perm
        j = len(placed)
        if j == m:
            if best is None or partial < best:
                best = partial
                best_perm = tuple(placed)
            return
        cands = []
        r = remaining
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            col = 0
            rv = rows[v]
            for p in placed:
                col = (col << 1) | (rv >> p & 1)
            cands.append((col, v))
        cands.sort()
        kept = 0
        shift = nbits_total - (nbits + j)
        for col, v in cands:
            if twin[v] & kept:
                continue
            kept |= 1 << v
            part = (partial << j) | col
            # candidates are sorted, so once the prefix exceeds the best
            # everything after it does too
            if best is not None and part > best >> shift:
                break
            placed.append(v)
            extend(remaining ^ (1 << v), part, nbits + j)
            placed.pop()

    extend((1 << m) - 1, 0, 0)
    assert best is not None
    return best, best_perm


def _lexmin_constrained(
    black: tuple[int, ...], red: tuple[int, ...], black_min: int, m: int
) -> tuple[int, tuple[int, ...]]:
    """Minimal red bitstring among orderings whose black bitstring is black_min."""
    nbits_total = m * (m - 1) // 2
    twin = _twin_masks(black, red, m)
    # black column required at each position, sliced out of black_min
    req = []
    acc = 0
    for j in range(m):
        acc += j
        req.append(black_min >> (nbits_total - acc) & ((1 << j) - 1))
    best: int | None = None
    best_perm: tuple[int, ...] = ()
    placed: list[int] = []

    def extend(remaining: int, partial: int, nbits: int) -> None:
        nonlocal best, best_perm
        j = len(placed)
        if j == m:
            if best is None or partial < best:
                best = partial
                best_perm = tuple(placed)
            return
        need = req[j]
        cands = []
        r = remaining
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            bcol = 0
            rcol = 0
            bv = black[v]
            rv = red[v]
            for p in placed:
                bcol = (bcol << 1) | (bv >> p & 1)
                rcol = (rcol << 1) | (rv >> p & 1)
            if bcol == need:
                cands.append((rcol, v))
        cands.sort()
        kept = 0
        shift = nbits_total - (nbits + j)
        for rcol, v in cands:
            if twin[v] & kept:
                continue
            kept |= 1 << v
            part = (partial << j) | rcol
            if best is not None and part > best >> shift:
                break
            placed.append(v)
            extend(remaining ^ (1 << v), part, nbits + j)
            placed.pop()

    extend((1 << m) - 1, 0, 0)
    assert best is not None
    return best, best_perm


def canonical_labeling_raw(
    black: tuple[int, ...], red: tuple[int, ...], m: int
) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Canonical key plus one vertex ordering that realizes it."""
    if m == 1:
        return CanonicalKey(1, 0, 0), (0,)
    identity = tuple(range(m))
    has_black = any(black)
    has_red = any(red)
    if not has_red:
        if not has_black:
            return CanonicalKey(m, 0, 0), identity
        bits, perm = _lexmin_single(black, m)
        return CanonicalKey(m, bits, 0), perm
    if not has_black:
        bits, perm = _lexmin_single(red, m)
        return CanonicalKey(m, 0, bits), perm
    black_min, _ = _lexmin_single(black, m)
    red_min, perm = _lexmin_constrained(black, red, black_min, m)
    return CanonicalKey(m, black_min, red_min), perm


def canonical_form(g: Trigraph) -> CanonicalKey:
    """Order-invariant fingerprint; equal keys mean isomorphic trigraphs."""
    return canonical_labeling_raw(g.black, g.red, g.n)[0]


def canonical_labeling(g: Trigraph) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Key plus the witnessing ordering (perm[position] = live slot)."""
    return canonical_labeling_raw(g.black, g.red, g.n)


def from_canonical_key(key: CanonicalKey) -> Trigraph:
    """Rebuild the canonical representative trigraph, singleton labels 0..n-1."""
    n = key.n
    black = [0] * n
    red = [0] * n
    total = n * (n - 1) // 2
    k = 0
    for j in range(1, n):
        for i in range(j):
            shift = total - 1 - k
            if key.black_bits >> shift & 1:
                black[i] |= 1 << j
                black[j] |= 1 << i
            elif key.red_bits >> shift & 1:
                red[i] |= 1 << j
                red[j] |= 1 << i
            k += 1
    labels = tuple((i,) for i in range(n))
    return Trigraph(labels, tuple(black), tuple(red), n)


_class_cache: dict[int, tuple[CanonicalKey, ...]] = {}


def _classes_brute(n: int) -> set[CanonicalKey]:
    """Dedup all 2^(n(n-1)/2) labeled graphs by canonical key."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    zeros = (0,) * n
    keys = set()
    for code in range(1 << len(pairs)):
        rows = [0] * n
        c = code
        for i, j in pairs:
            if c & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            c >>= 1
        keys.add(canonical_labeling_raw(tuple(rows), zeros, n)[0])
    return keys


def _classes_extend(prev: tuple[CanonicalKey, ...], n: int) -> set[CanonicalKey]:
    """Orderly step: attach a new vertex to every (n-1)-class in every way."""
    zeros = (0,) * n
    keys = set()
    top = 1 << (n - 1)
    for key in prev:
        base = from_canonical_key(key).black
        for mask in range(top):
            rows = [base[i] | (top if mask >> i & 1 else 0) for i in range(n - 1)]
            rows.append(mask)
            keys.add(canonical_labeling_raw(tuple(rows), zeros, n)[0])
    return keys


def _classes(n: int) -> tuple[CanonicalKey, ...]:
    cached = _class_cache.get(n)
    if cached is None:
        if n <= _BRUTE_MAX:
            cached = tuple(sorted(_classes_brute(n)))
        else:
            cached = tuple(sorted(_classes_extend(_classes(n - 1), n)))
        _class_cache[n] = cached
    return cached


def enumerate_graphs(n: int, connected_only: bool = False, max_n: int = MAX_ENUM_N) -> Iterator[Trigraph]:
    """Stream one representative per isomorphism class, ascending canonical key."""
    if not 1 <= n <= max_n:
        raise ValueError(f"vertex count must be in 1..{max_n}, got {n}")
    for key in _classes(n):
        g = from_canonical_key(key)
        if connected_only and len(g.connected_components()) != 1:
            continue
        yield g


def enumerate_trees(n: int) -> Iterator[Trigraph]:
    """All tree classes on n vertices, by leaf attachment with canonical dedup."""
    if n < 1:
        raise ValueError("vertex count must be at least 1")
    level = {CanonicalKey(1, 0, 0)}
    for size in range(2, n + 1):
        zeros = (0,) * size
        nxt = set()
        top = 1 << (size - 1)
        for key in level:
            base = from_canonical_key(key).black
            for v in range(size - 1):
                rows = list(base)
                rows[v] |= top
                rows.append(1 << v)
                nxt.add(canonical_labeling_raw(tuple(rows), zeros, size)[0])
        level = nxt
    for key in sorted(level):
        yield from_canonical_key(key)
