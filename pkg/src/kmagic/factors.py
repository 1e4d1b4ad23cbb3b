"""Degree-constrained spanning subgraphs: f-factors and mod-3 factors.

The workhorse is the gadget reduction from f-factor to perfect matching:
replace each vertex v by deg(v) edge-end nodes plus deg(v) - f(v) core
nodes joined completely to the ends; each original edge becomes one
external edge between its two end nodes.  A perfect matching of the
gadget must match every core to an end, leaving exactly f(v) ends per
vertex matched through external edges, so external matched edges form an
f-factor and conversely.  General-graph maximum matching is delegated to
networkx; an exhaustive subset search doubles as a small-instance oracle.
"""

from __future__ import annotations

from typing import Sequence

import networkx as nx

from .errors import BudgetError, FactorError, RegularityError
from .graphs import MultiGraph, regularity

EXHAUSTIVE_EDGE_LIMIT = 20


def degree_constrained_factor(
    G: MultiGraph, targets: Sequence[int], method: str = "matching"
) -> frozenset[int] | None:
    """Spanning subgraph with prescribed degree at every vertex, or None.

    targets[v] is the exact degree required at v.  Raises FactorError if
    a target is outside 0..deg(v); returns None when no such subgraph
    exists (in particular when the target sum is odd).
    """
    if len(targets) != G.n:
        raise FactorError(f"expected {G.n} degree targets, got {len(targets)}")
    for v, t in enumerate(targets):
        if not 0 <= t <= G.degrees[v]:
            raise FactorError(f"target {t} at vertex {v} outside 0..{G.degrees[v]}")
    if sum(targets) % 2 != 0:
        return None
    if all(t == 0 for t in targets):
        return frozenset()
    if method == "exhaustive":
        return exhaustive_factor_search(G, targets)
    if method != "matching":
        raise FactorError(f"unknown method {method!r}")
    return _gadget_factor(G, targets)


def f_factor(G: MultiGraph, h: int, method: str = "matching") -> frozenset[int] | None:
    """Spanning h-regular subgraph of G, or None if absent."""
    r = max(G.degrees, default=0)
    if not 0 <= h <= r:
        raise FactorError(f"h must lie in 0..{r}, got {h}")
    return degree_constrained_factor(G, [h] * G.n, method=method)


def _gadget_factor(G: MultiGraph, targets: Sequence[int]) -> frozenset[int] | None:
    H = nx.Graph()
    for e in G.edges:
        H.add_edge(("end", e.id, 0), ("end", e.id, 1))
    ends_at: list[list[tuple[str, int, int]]] = [[] for _ in range(G.n)]
    for e in G.edges:
        ends_at[e.u].append(("end", e.id, 0))
        ends_at[e.v].append(("end", e.id, 1))
    for v in range(G.n):
        for j in range(G.degrees[v] - targets[v]):
            for end in ends_at[v]:
                H.add_edge(("core", v, j), end)
    matching = nx.max_weight_matching(H, maxcardinality=True)
    if 2 * len(matching) != H.number_of_nodes():
        return None
    matched_pairs = {frozenset(pair) for pair in matching}
    return frozenset(
        e.id
        for e in G.edges
        if frozenset((("end", e.id, 0), ("end", e.id, 1))) in matched_pairs
    )


def exhaustive_factor_search(
    G: MultiGraph, targets: Sequence[int], max_edges: int = EXHAUSTIVE_EDGE_LIMIT
) -> frozenset[int] | None:
    """Decide a degree-constrained factor by subset search with pruning.

    Independent of the matching route; intended for small instances and
    as a cross-check.  Raises BudgetError above max_edges.
    """
    if G.m > max_edges:
        raise BudgetError(f"exhaustive search capped at {max_edges} edges, m={G.m}")
    if len(targets) != G.n:
        raise FactorError(f"expected {G.n} degree targets, got {len(targets)}")
    for v, t in enumerate(targets):
        if not 0 <= t <= G.degrees[v]:
            raise FactorError(f"target {t} at vertex {v} outside 0..{G.degrees[v]}")
    if sum(targets) % 2 != 0:
        return None
    # avail[v] counts incident edges not yet decided
    avail = list(G.degrees)
    need = list(targets)
    chosen: list[int] = []

    def dfs(i: int) -> bool:
        if i == G.m:
            return all(x == 0 for x in need)
        e = G.edges[i]
        avail[e.u] -= 1
        avail[e.v] -= 1
        if need[e.u] > 0 and need[e.v] > 0:
            need[e.u] -= 1
            need[e.v] -= 1
            chosen.append(i)
            if need[e.u] <= avail[e.u] and need[e.v] <= avail[e.v] and dfs(i + 1):
                return True
            chosen.pop()
            need[e.u] += 1
            need[e.v] += 1
        if need[e.u] <= avail[e.u] and need[e.v] <= avail[e.v] and dfs(i + 1):
            return True
        avail[e.u] += 1
        avail[e.v] += 1
        return False

    return frozenset(chosen) if dfs(0) else None


def mod3_factor(G: MultiGraph, method: str = "matching") -> frozenset[int] | None:
    """Spanning subgraph with every degree congruent to 1 mod 3, or None.

    Requires an r-regular G with r odd and divisible by 3.  Degree
    profiles over {1, 4, ..., r} are tried in increasing total degree,
    ties broken lexicographically by vertex index; each profile is
    decided by the f-factor machinery.
    """
    r = regularity(G)
    if r is None or r % 3 != 0 or r % 2 == 0:
        raise RegularityError(f"need r-regular with r odd and 3 | r, got r={r}")
    allowed = tuple(range(1, r + 1, 3))
    lo, hi = G.n * allowed[0], G.n * allowed[-1]
    for total in range(lo, hi + 1):
        if total % 2 != 0 or total % 3 != (G.n % 3):
            continue
        for profile in _profiles(allowed, G.n, total):
            factor = degree_constrained_factor(G, profile, method=method)
            if factor is not None:
                return factor
    return None


def _profiles(allowed: tuple[int, ...], n: int, total: int):
    """Yield degree profiles with the given sum, lexicographically."""
    mn, mx = allowed[0], allowed[-1]
    prefix: list[int] = []

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(prefix)
            return
        tail = n - i - 1
        for a in allowed:
            rest = left - a
            if mn * tail <= rest <= mx * tail:
                prefix.append(a)
                yield from rec(i + 1, rest)
                prefix.pop()

    yield from rec(0, total)
