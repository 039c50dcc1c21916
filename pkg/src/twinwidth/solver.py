"""Exact twin-width by budgeted depth-first search over contractions.

decide_tww answers "is there a contraction sequence whose every
intermediate trigraph has red degree at most d".  The search expands
merges in a twin-first order, prunes children that exceed the budget,
and memoizes visited states by canonical form so isomorphic branches are
never explored twice.  twin_width iterates the budget upward from zero;
failed low budgets populate the memo table for the runs that follow.

Two facts keep the search small.  A child's red degrees can change only
at the merged vertex and at vertices red-linked to it, so a candidate
merge is admitted or rejected from the parent's masks alone, without
building the child.  And once a state has at most budget + 2 vertices,
every possible continuation stays within budget (a trigraph on k
vertices cannot have red degree above k - 1), so any merge order
finishes the sequence.
"""
from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field

from .certificates import ContractionCertificate, Step, record_certificate
from .enumeration import CanonicalKey, canonical_labeling_raw, enumerate_graphs
from .graphio import emit_graph6, parse_graph6
from .structure import recognize
from .trigraph import Trigraph

Steps = tuple[Step, ...]


@dataclass
class SearchStats:
    states_expanded: int = 0
    memo_hits: int = 0
    elapsed: float = 0.0
    # input carried red edges: the result is the generalized trigraph width
    generalized: bool = False
    structural_ceiling: int | None = None


@dataclass
class SolveResult:
    twin_width: int
    certificate: ContractionCertificate | None
    stats: SearchStats


class MemoTable:
    """Canonical-form memo shared across budgets of one solve.

    ``failed[key]`` is the highest budget proven impossible for the state;
    an entry answers every query at that budget or below.  ``proven[key]``
    holds the lowest budget known to succeed plus a witness written in the
    coordinates of the canonical representative, so it can be replayed on
    any isomorphic state.  The optional entry cap evicts the oldest failed
    entries first (insertion order).
    """

    def __init__(self, max_entries: int | None = None):
        self.failed: dict[CanonicalKey, int] = {}
        self.proven: dict[CanonicalKey, tuple[int, Steps]] = {}
        self.max_entries = max_entries

    def store_failed(self, key: CanonicalKey, budget: int) -> None:
        old = self.failed.get(key)
        if old is None:
            if self.max_entries is not None and len(self.failed) >= self.max_entries:
                self.failed.pop(next(iter(self.failed)))
            self.failed[key] = budget
        elif budget > old:
            self.failed[key] = budget

    def store_proven(self, key: CanonicalKey, budget: int, steps: Steps) -> None:
        old = self.proven.get(key)
        if old is None or budget < old[0]:
            self.proven[key] = (budget, steps)


# cache entry: canonical key, perm (position -> slot), inverse (slot -> position)
_StateInfo = tuple[CanonicalKey, tuple[int, ...], tuple[int, ...]]


def _state_info(state: Trigraph, cache: dict) -> _StateInfo:
    sk = (state.black, state.red)
    info = cache.get(sk)
    if info is None:
        key, perm = canonical_labeling_raw(state.black, state.red, state.n)
        pos_of = [0] * state.n
        for pos, slot in enumerate(perm):
            pos_of[slot] = pos
        info = (key, perm, tuple(pos_of))
        cache[sk] = info
    return info


def _steps_to_canonical(steps: Steps, labels: tuple, pos_of: tuple[int, ...]) -> Steps:
    """Rewrite witness labels into canonical-representative coordinates."""
    slot_of = {e: s for s, lab in enumerate(labels) for e in lab}
    out = []
    for u, v in steps:
        cu = tuple(sorted({pos_of[slot_of[e]] for e in u}))
        cv = tuple(sorted({pos_of[slot_of[e]] for e in v}))
        out.append((cu, cv))
    return tuple(out)


def _steps_from_canonical(csteps: Steps, labels: tuple, perm: tuple[int, ...]) -> Steps:
    """Replay a canonical-coordinate witness on an isomorphic state."""
    out = []
    for cu, cv in csteps:
        u = tuple(sorted(e for pos in cu for e in labels[perm[pos]]))
        v = tuple(sorted(e for pos in cv for e in labels[perm[pos]]))
        out.append((u, v))
    return tuple(out)


def _any_tail(labels: tuple) -> Steps:
    """Contract the first two vertices until one remains."""
    steps = []
    cur = list(labels)
    while len(cur) > 1:
        u, v = cur[0], cur[1]
        steps.append((u, v))
        cur[0:2] = [tuple(sorted(u + v))]
    return tuple(steps)


def _child_red_ok(black: tuple[int, ...], red: tuple[int, ...], a: int, b: int, d: int) -> int | None:
    """Red edges at the merged vertex if the merge stays within budget, else None."""
    keep = ~((1 << a) | (1 << b))
    union = ((black[a] | red[a]) | (black[b] | red[b])) & keep
    red_w = union & ~(black[a] & black[b])
    rw = red_w.bit_count()
    if rw > d:
        return None
    x = red_w
    while x:
        low = x & -x
        ri = red[low.bit_length() - 1]
        # gains one red edge to the merged vertex, loses its red edges to a, b
        if ri.bit_count() + 1 - (ri >> a & 1) - (ri >> b & 1) > d:
            return None
        x ^= low
    return rw


def _search(state: Trigraph, d: int, memo: MemoTable, stats: SearchStats, cache: dict) -> Steps | None:
    m = state.n
    if m <= d + 2:
        return _any_tail(state.labels)
    key, perm, pos_of = _state_info(state, cache)
    proven = memo.proven.get(key)
    if proven is not None and proven[0] <= d:
        stats.memo_hits += 1
        return _steps_from_canonical(proven[1], state.labels, perm)
    failed_at = memo.failed.get(key)
    if failed_at is not None and failed_at >= d:
        stats.memo_hits += 1
        return None
    stats.states_expanded += 1

    labels, black, red = state.labels, state.black, state.red
    cands = []
    for b in range(1, m):
        for a in range(b):
            rw = _child_red_ok(black, red, a, b, d)
            if rw is not None:
                cands.append((rw, labels[a], labels[b], a, b))
    cands.sort()
    for rw, lu, lv, a, b in cands:
        child = state.contract_indices(a, b)
        tail = _search(child, d, memo, stats, cache)
        if tail is not None:
            steps = ((lu, lv),) + tail
            memo.store_proven(key, d, _steps_to_canonical(steps, labels, pos_of))
            return steps
    memo.store_failed(key, d)
    return None


def _decide(g: Trigraph, d: int, memo: MemoTable, stats: SearchStats, cache: dict) -> Steps | None:
    # the input trigraph is part of the sequence, so it must obey the budget
    if g.max_red_degree() > d:
        return None
    return _search(g, d, memo, stats, cache)


def decide_tww(g: Trigraph, d: int) -> tuple[bool, ContractionCertificate | None]:
    """True iff g contracts to one vertex with red degree at most d throughout.

    When true and the input is an uncontracted plain graph, the witnessing
    sequence is returned as a certificate.
    """
    if d < 0:
        raise ValueError("budget must be nonnegative")
    steps = _decide(g, d, MemoTable(), SearchStats(), {})
    if steps is None:
        return False, None
    if g.is_plain() and all(len(label) == 1 for label in g.labels):
        return True, record_certificate(g, steps)
    return True, None


def twin_width(g: Trigraph, memo_cap: int | None = None) -> SolveResult:
    """Exact twin-width with certificate, by ascending budget iteration."""
    start = time.perf_counter()
    stats = SearchStats(generalized=not g.is_plain())
    if not stats.generalized:
        bounds = recognize(g)
        if bounds:
            stats.structural_ceiling = min(b.value for b in bounds)
    memo = MemoTable(memo_cap)
    cache: dict = {}
    steps: Steps | None = None
    width = 0
    for d in range(g.n):  # d = n - 1 always succeeds
        steps = _decide(g, d, memo, stats, cache)
        if steps is not None:
            width = d
            break
    assert steps is not None
    if stats.structural_ceiling is not None and width > stats.structural_ceiling:
        raise RuntimeError(
            f"exact width {width} exceeds structural upper bound {stats.structural_ceiling}"
        )
    certificate = None
    if not stats.generalized and all(len(label) == 1 for label in g.labels):
        certificate = record_certificate(g, steps)
    stats.elapsed = time.perf_counter() - start
    return SolveResult(width, certificate, stats)


def twin_width_oracle(g: Trigraph) -> int:
    """Reference value by plain enumeration of every contraction sequence.

    No memoization, no pruning: the independent check for the searched
    solver.  Only usable for very small graphs.
    """

    def rec(state: Trigraph) -> int:
        m = state.n
        if m == 1:
            return 0
        best = m  # red degree can never reach the vertex count
        for b in range(1, m):
            for a in range(b):
                child = state.contract_indices(a, b)
                best = min(best, max(child.max_red_degree(), rec(child)))
        return best

    return max(g.max_red_degree(), rec(g))


# -- census ---------------------------------------------------------------


@dataclass
class CensusRecord:
    graph6: str
    n: int
    twin_width: int
    certificate: ContractionCertificate
    states_expanded: int


@dataclass
class CensusResult:
    n: int
    connected_only: bool
    records: list[CensusRecord]
    max_tww: int
    ahko_holds: bool  # no graph reaches twin-width n/2
    ahko_counterexample: str | None = None

    @property
    def classes(self) -> int:
        return len(self.records)


def _census_worker(args: tuple[str, int | None]) -> tuple[int, Steps, int]:
    g6, memo_cap = args
    result = twin_width(parse_graph6(g6), memo_cap=memo_cap)
    assert result.certificate is not None
    return result.twin_width, result.certificate.steps, result.stats.states_expanded


def census_max_tww(
    n: int,
    connected_only: bool = False,
    jobs: int | None = None,
    memo_cap: int | None = None,
) -> CensusResult:
    """Exact twin-width for every isomorphism class on n vertices.

    Rows are ordered by ascending canonical key.  Each graph is solved
    with its own memo table, so records (including search statistics) are
    identical no matter how many worker processes are used.
    """
    if not 1 <= n <= 8:
        raise ValueError(f"census supports 1..8 vertices, got {n}")
    graphs = list(enumerate_graphs(n, connected_only))
    tasks = [(emit_graph6(g), memo_cap) for g in graphs]
    if jobs is not None and jobs > 1:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            outcomes = pool.map(_census_worker, tasks, chunksize=max(1, len(tasks) // (4 * jobs)))
    else:
        outcomes = [_census_worker(task) for task in tasks]
    records = []
    for g, (g6, _), (width, steps, states) in zip(graphs, tasks, outcomes):
        records.append(CensusRecord(g6, n, width, record_certificate(g, steps), states))
    max_tww = max(r.twin_width for r in records)
    counterexample = next((r.graph6 for r in records if 2 * r.twin_width >= n), None)
    return CensusResult(
        n=n,
        connected_only=connected_only,
        records=records,
        max_tww=max_tww,
        ahko_holds=counterexample is None,
        ahko_counterexample=counterexample,
    )
