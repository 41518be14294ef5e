"""Exact metric dimension: lower bounds, certification, and search.

A set S of vertices resolves a connected graph when every vertex is
identified by its vector of distances to S. Finding a minimum resolving set
is treated as a minimum hitting set problem: the universe is the set of all
unordered vertex pairs, and a landmark w hits exactly the pairs (u, v) with
d(u, w) != d(v, w). A vertex hits all pairs containing itself (distance 0
against something positive), so the single covering condition handles
everything, including pairs inside S.

The solver runs three stages: twin-class pre-selection (all but one member
of each twin class is forced into any resolving set, and members are
interchangeable), a greedy cover with redundancy trimming for the incumbent,
and a depth-first branch and bound over the remaining pairs. Branching picks
the uncovered pair with the fewest remaining distinguishers and tries each
of them in index order, excluding earlier choices from later siblings so no
candidate set is visited twice. Pruning uses the twin bound, the counting
bound, and a sorted-coverage prefix bound; pair-hit bookkeeping is kept in
matrix form so every per-node quantity is one or two BLAS products.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import DisconnectedGraph, TooLarge
from .pisgraph import INF, PisGraph, all_pairs_distances, diameter

EXACT = "exact"
UPPER_BOUND = "upper_bound"
INFEASIBLE_BUDGET = "infeasible_budget"

BRUTEFORCE_MAX_VERTICES = 14
DEFAULT_BUDGET_S = 600.0


@dataclass(frozen=True)
class TwinPartition:
    """Partition of the vertex set into twin classes.

    Members of one class have identical open neighborhoods ("open" kind) or
    identical closed neighborhoods ("closed"); no third vertex can tell them
    apart. Classes are sorted by smallest member.
    """

    classes: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class ResolvingReport:
    """Outcome of a metric dimension computation."""

    vertices: tuple[int, ...]
    size: int | None
    status: str  # exact | upper_bound | infeasible_budget
    twin_bound: int
    info_bound: int
    millis: float

    def to_json_dict(self, labels: tuple[str, ...] | None = None) -> dict:
        named = list(self.vertices) if labels is None else [labels[v] for v in self.vertices]
        return {
            "set": named,
            "size": self.size,
            "status": self.status,
            "bounds": {"twin": self.twin_bound, "info": self.info_bound},
            "millis": round(self.millis, 3),
        }


def twin_partition(g: PisGraph) -> TwinPartition:
    """Group vertices by open or closed neighborhood.

    A vertex cannot have both an open and a closed twin, so the two
    groupings never collide and the union is the coarsest twin partition.
    """
    n = g.n
    by_open: dict[bytes, list[int]] = {}
    by_closed: dict[bytes, list[int]] = {}
    for v in range(n):
        by_open.setdefault(g.adj[v].tobytes(), []).append(v)
        closed = g.adj[v].copy()
        closed[v] = True
        by_closed.setdefault(closed.tobytes(), []).append(v)
    classes: list[tuple[int, ...]] = []
    kinds: list[str] = []
    grouped: set[int] = set()
    for groups, kind in ((by_open, "open"), (by_closed, "closed")):
        for members in groups.values():
            if len(members) >= 2:
                assert not grouped.intersection(members)
                classes.append(tuple(members))
                kinds.append(kind)
                grouped.update(members)
    for v in range(n):
        if v not in grouped:
            classes.append((v,))
            kinds.append("singleton")
    order = sorted(range(len(classes)), key=lambda i: classes[i][0])
    return TwinPartition(
        tuple(classes[i] for i in order), tuple(kinds[i] for i in order)
    )


def twin_lower_bound(tp: TwinPartition, n: int | None = None) -> int:
    """|V| minus the number of twin classes.

    Two same-class vertices left outside S are unresolvable, so S misses at
    most one vertex per class.
    """
    if n is None:
        n = sum(len(c) for c in tp.classes)
    return n - len(tp.classes)


def info_lower_bound(g: PisGraph, dist: np.ndarray | None = None) -> int:
    """Counting bound: smallest k with k + diam^k >= |V|.

    Vertices outside a resolving set of size k carry distance vectors with
    entries in 1..diam, of which there are diam^k.
    """
    n = g.n
    if n <= 1:
        return 0
    d = diameter(g, dist)
    k = 0
    while k + d**k < n:
        k += 1
    return k


def is_resolving(
    g: PisGraph, dist: np.ndarray, s: set[int] | frozenset[int] | tuple[int, ...] | list[int]
) -> tuple[bool, tuple[int, int] | None]:
    """Check whether S resolves the graph; on failure also return one
    unresolved pair (lexicographically first).

    Pairs touching S are always resolved by the member's own zero distance,
    so only vertices outside S need distinct representations.
    """
    cols = sorted(set(s))
    seen: dict[tuple, int] = {}
    in_s = set(cols)
    for v in range(g.n):
        if v in in_s:
            continue
        rep = tuple(int(dist[v, w]) for w in cols)
        if rep in seen:
            return False, (seen[rep], v)
        seen[rep] = v
    return True, None


def representation(dist: np.ndarray, v: int, s: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Distance vector of v with respect to the ordered landmark list."""
    return tuple(int(dist[v, w]) for w in s)


def metric_dimension_bruteforce(g: PisGraph, dist: np.ndarray | None = None) -> int:
    """Minimum resolving set size by subset enumeration in size order.

    Testing oracle only; refuses graphs with more than 14 vertices.
    """
    n = g.n
    if n > BRUTEFORCE_MAX_VERTICES:
        raise TooLarge(f"brute force is capped at {BRUTEFORCE_MAX_VERTICES} vertices, got {n}")
    if dist is None:
        dist = all_pairs_distances(g)
    if np.any(dist == INF):
        raise DisconnectedGraph("metric dimension needs a connected graph")
    for k in range(n + 1):
        for s in combinations(range(n), k):
            ok, _ = is_resolving(g, dist, s)
            if ok:
                return k
    raise AssertionError("unreachable: the full vertex set always resolves")


def metric_dimension_exact(
    g: PisGraph, budget_s: float = DEFAULT_BUDGET_S, dist: np.ndarray | None = None
) -> ResolvingReport:
    """Certified minimum resolving set via branch and bound.

    Returns status "exact" when the search space was exhausted (or the
    incumbent met a lower bound), "upper_bound" when the time budget ran out
    with a verified resolving set in hand, and "infeasible_budget" in the
    pathological case where not even the greedy stage finished.
    """
    t0 = time.perf_counter()
    deadline = t0 + budget_s
    if dist is None:
        dist = all_pairs_distances(g)
    if np.any(dist == INF):
        raise DisconnectedGraph("metric dimension needs a connected graph")
    n = g.n

    tp = twin_partition(g)
    twin_lb = twin_lower_bound(tp, n)
    info_lb = info_lower_bound(g, dist)
    global_lb = max(twin_lb, info_lb)

    def report(vertices, status):
        ok, _ = is_resolving(g, dist, vertices)
        assert ok, "internal error: candidate set does not resolve"
        return ResolvingReport(
            vertices=tuple(sorted(vertices)),
            size=len(vertices),
            status=status,
            twin_bound=twin_lb,
            info_bound=info_lb,
            millis=(time.perf_counter() - t0) * 1000.0,
        )

    if n == 1:
        return report((), EXACT)

    # Pair-hit matrix: row per unordered pair, column per candidate landmark.
    iu, iv = np.triu_indices(n, 1)
    m_bool = dist[iu, :] != dist[iv, :]
    m_f = m_bool.astype(np.float32)
    keep_f = 1.0 - m_f

    # Twin pre-selection: all but the highest-index member of every class.
    forced = [v for cls in tp.classes for v in cls[:-1]]
    allowed0 = np.ones(n, dtype=bool)
    allowed0[forced] = False
    uncov0 = np.ones(len(iu), dtype=np.float32)
    for w in forced:
        uncov0 *= keep_f[:, w]

    # Greedy cover from the forced core, then drop redundant picks.
    selected = list(forced)
    uncov = uncov0.copy()
    allowed = allowed0.copy()
    while uncov.any():
        if time.perf_counter() > deadline:
            return ResolvingReport((), None, INFEASIBLE_BUDGET, twin_lb, info_lb,
                                   (time.perf_counter() - t0) * 1000.0)
        colcov = (uncov @ m_f) * allowed
        w = int(np.argmax(colcov))
        assert colcov[w] > 0
        selected.append(w)
        allowed[w] = False
        uncov *= keep_f[:, w]
    for w in sorted(set(selected) - set(forced)):
        rest = [x for x in selected if x != w]
        if rest and bool(m_bool[:, rest].any(axis=1).all()):
            selected = rest

    best_set = tuple(sorted(selected))
    best_size = len(best_set)
    if best_size <= global_lb:
        return report(best_set, EXACT)

    timed_out = False
    sel_stack = list(forced)

    def dfs(uncov_f: np.ndarray, allowed_b: np.ndarray) -> None:
        nonlocal best_set, best_size, timed_out
        if timed_out or best_size <= global_lb:
            return
        if time.perf_counter() > deadline:
            timed_out = True
            return
        remaining = float(uncov_f.sum())
        if remaining == 0.0:
            if len(sel_stack) < best_size:
                best_size = len(sel_stack)
                best_set = tuple(sorted(sel_stack))
            return
        avail = best_size - 1 - len(sel_stack)
        if avail <= 0:
            return
        allowed_f = allowed_b.astype(np.float32)
        hits_per_pair = m_f @ allowed_f
        hits_per_pair = np.where(uncov_f > 0, hits_per_pair, np.inf)
        p = int(np.argmin(hits_per_pair))
        if hits_per_pair[p] == 0:
            return  # some pair has no remaining distinguisher
        coverage = (uncov_f @ m_f) * allowed_f
        take = min(avail, n)
        if float(np.partition(coverage, n - take)[n - take:].sum()) < remaining:
            return
        local_allowed = allowed_b.copy()
        for w in np.nonzero(m_bool[p] & allowed_b)[0].tolist():
            local_allowed[w] = False  # selected here, excluded from later siblings
            sel_stack.append(w)
            dfs(uncov_f * keep_f[:, w], local_allowed)
            sel_stack.pop()
            if timed_out or best_size <= global_lb:
                return

    dfs(uncov0, allowed0)

    if timed_out and best_size > global_lb:
        return report(best_set, UPPER_BOUND)
    return report(best_set, EXACT)
