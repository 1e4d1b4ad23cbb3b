"""Loopless multigraphs, structural queries, and graph generators.

Vertices are integers 0..n-1.  Edges carry stable integer ids 0..m-1 in
insertion order; parallel edges are allowed, loops are not.  All graph
values are immutable after construction and every operation here is
deterministic.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphError, RegularityError

ORIGINAL = "original"


@dataclass(frozen=True)
class EdgeRecord:
    """One edge: id, endpoints u < v is not required, optional origin.

    For edges of a doubled graph, origin is the id of the source edge the
    record duplicates, or the marker string "original" for the kept copy.
    For subgraphs it is the id of the parent edge.
    """

    id: int
    u: int
    v: int
    origin: int | str | None = None


@dataclass(frozen=True)
class MultiGraph:
    """Immutable loopless multigraph with stable edge ids."""

    n: int
    edges: tuple[EdgeRecord, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: tuple of (neighbor, edge id), in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append((e.v, e.id))
            adj[e.v].append((e.u, e.id))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex: tuple of incident edge ids, ascending."""
        return tuple(tuple(eid for _, eid in nbrs) for nbrs in self.adjacency)

    def endpoints(self, eid: int) -> tuple[int, int]:
        e = self.edges[eid]
        return e.u, e.v


def build_graph(n: int, pairs: Iterable[tuple[int, int]]) -> MultiGraph:
    """Build a multigraph from an explicit edge list.

    Raises GraphError on a vertex index out of range or a loop edge.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    records = []
    for i, (u, v) in enumerate(pairs):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {i}: endpoint out of range: ({u}, {v})")
        if u == v:
            raise GraphError(f"edge {i}: loop at vertex {u} not allowed")
        records.append(EdgeRecord(i, u, v))
    return MultiGraph(n, tuple(records))


def subgraph(G: MultiGraph, edge_ids: Iterable[int]) -> tuple[MultiGraph, dict[int, int]]:
    """Spanning subgraph on the given edge ids.

    Returns the subgraph (same vertex set, edges reindexed from 0 with
    origin pointing at the parent id) and the map new id -> parent id.
    """
    ids = sorted(set(edge_ids))
    records = []
    id_map = {}
    for new_id, old_id in enumerate(ids):
        e = G.edges[old_id]
        records.append(EdgeRecord(new_id, e.u, e.v, origin=old_id))
        id_map[new_id] = old_id
    return MultiGraph(G.n, tuple(records)), id_map


# ---------------------------------------------------------------------------
# text format


def write_graph(G: MultiGraph) -> str:
    """Serialize to the line-based text format (ASCII, LF line endings)."""
    lines = [f"p {G.n} {G.m}"]
    lines.extend(f"{e.u} {e.v}" for e in G.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MultiGraph:
    """Parse the text format: 'p <n> <m>' then m lines '<u> <v>'.

    Lines starting with '#' are comments.  Raises GraphError on any
    deviation: bad header, wrong edge count, loops, bad indices.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty graph file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "p":
        raise GraphError(f"bad header line: {lines[0]!r}")
    try:
        n, m = int(head[1]), int(head[2])
    except ValueError:
        raise GraphError(f"bad header line: {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise GraphError(f"expected {m} edge lines, found {len(lines) - 1}")
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"bad edge line: {ln!r}") from None
    return build_graph(n, pairs)


# ---------------------------------------------------------------------------
# structural queries


def regularity(G: MultiGraph) -> int | None:
    """Common degree r if G is regular, else None."""
    if G.n == 0:
        return None
    degs = set(G.degrees)
    return degs.pop() if len(degs) == 1 else None


def components(G: MultiGraph) -> list[frozenset[int]]:
    """Connected components as vertex sets, ordered by smallest vertex."""
    seen = [False] * G.n
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w, _ in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(G: MultiGraph) -> bool:
    return len(components(G)) <= 1


@dataclass(frozen=True)
class TwoRegularProfile:
    """Cycle decomposition of a 2-regular graph.

    cycles holds one (vertex sequence, edge id sequence) pair per cycle;
    edge i of a cycle joins vertex i and vertex i+1 (indices mod length).
    """

    cycles: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    lengths: tuple[int, ...] = field(init=False)
    all_even: bool = field(init=False)

    def __post_init__(self) -> None:
        lengths = tuple(len(vs) for vs, _ in self.cycles)
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "all_even", all(l % 2 == 0 for l in lengths))


def two_regular_profile(G: MultiGraph) -> TwoRegularProfile:
    """Decompose a 2-regular graph into its cycles.

    Raises RegularityError if any vertex degree differs from 2.
    """
    if regularity(G) != 2:
        raise RegularityError("graph is not 2-regular")
    used = [False] * G.m
    cycles = []
    for start in range(G.n):
        first = [eid for eid in G.incident[start] if not used[eid]]
        if not first:
            continue
        verts = [start]
        eids = []
        u = start
        eid = first[0]
        while True:
            used[eid] = True
            eids.append(eid)
            a, b = G.endpoints(eid)
            u = b if a == u else a
            if u == start:
                break
            verts.append(u)
            eid = next(i for i in G.incident[u] if not used[i])
        cycles.append((tuple(verts), tuple(eids)))
    return TwoRegularProfile(tuple(cycles))


def find_bridges(G: MultiGraph) -> frozenset[int]:
    """Edge ids whose removal disconnects their component.

    A parallel edge is never a bridge.  Iterative lowpoint computation.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    bridges = []
    timer = 0
    for s in range(G.n):
        if disc[s] != -1:
            continue
        stack: list[tuple[int, int, int]] = [(s, -1, 0)]
        while stack:
            u, via, idx = stack.pop()
            if idx == 0:
                disc[u] = low[u] = timer
                timer += 1
            nbrs = G.adjacency[u]
            advanced = False
            while idx < len(nbrs):
                w, eid = nbrs[idx]
                idx += 1
                if eid == via:
                    continue
                if disc[w] == -1:
                    stack.append((u, via, idx))
                    stack.append((w, eid, 0))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced and via != -1:
                # u finished; propagate lowpoint to its parent
                pe = G.edges[via]
                p = pe.u if pe.v == u else pe.v
                if low[u] > disc[p]:
                    bridges.append(via)
                low[p] = min(low[p], low[u])
    return frozenset(bridges)


def edge_connectivity(G: MultiGraph) -> int:
    """Exact edge connectivity via repeated unit-capacity max-flow.

    Returns 0 for a disconnected graph (and degenerately for n <= 1).
    """
    if G.n <= 1:
        return 0
    if not is_connected(G):
        return 0
    best = G.m + 1
    for t in range(1, G.n):
        best = min(best, _max_flow(G, 0, t))
    return best


def _max_flow(G: MultiGraph, s: int, t: int) -> int:
    # each undirected edge becomes a forward/backward arc pair of capacity 1
    cap: dict[tuple[int, int], int] = {}
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for e in G.edges:
        cap[e.u, e.v] = cap.get((e.u, e.v), 0) + 1
        cap[e.v, e.u] = cap.get((e.v, e.u), 0) + 1
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    flow = 0
    while True:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in prev and cap.get((u, w), 0) > 0:
                    prev[w] = u
                    queue.append(w)
        if t not in prev:
            return flow
        path = []
        v = t
        while v != s:
            path.append((prev[v], v))
            v = prev[v]
        for u, w in path:
            cap[u, w] -= 1
            cap[w, u] = cap.get((w, u), 0) + 1
        flow += 1


# ---------------------------------------------------------------------------
# generators


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> MultiGraph:
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides nonempty")
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def circulant(n: int, offsets: Sequence[int]) -> MultiGraph:
    """Circulant graph: vertex i adjacent to i +- s for each offset s."""
    if n < 3:
        raise GraphError("circulant needs n >= 3")
    offs = sorted(set(offsets))
    if any(not 1 <= s <= n // 2 for s in offs):
        raise GraphError(f"offsets must lie in 1..{n // 2}")
    pairs = []
    for s in offs:
        if 2 * s == n:
            pairs.extend((i, i + s) for i in range(s))
        else:
            pairs.extend((i, (i + s) % n) for i in range(n))
    return build_graph(n, pairs)


def petersen() -> MultiGraph:
    """Outer 5-cycle, inner pentagram, five spokes."""
    pairs = [(i, (i + 1) % 5) for i in range(5)]
    pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    pairs += [(i, 5 + i) for i in range(5)]
    return build_graph(10, pairs)


def prism(n: int = 3) -> MultiGraph:
    """Prism over an n-cycle: two concentric n-cycles joined by rungs."""
    if n < 3:
        raise GraphError("prism needs n >= 3")
    pairs = [(i, (i + 1) % n) for i in range(n)]
    pairs += [(n + i, n + (i + 1) % n) for i in range(n)]
    pairs += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, pairs)


def random_regular(n: int, r: int, seed: int, retries: int = 1000) -> MultiGraph:
    """Random simple r-regular graph by the pairing model.

    Draws a uniform pairing of n*r cells, rejects pairings with loops or
    parallel edges, and retries up to `retries` times.  Deterministic for
    a fixed seed.
    """
    if n < 1 or r < 0:
        raise GraphError("need n >= 1 and r >= 0")
    if (n * r) % 2 != 0:
        raise GraphError("n * r must be even")
    if r >= n:
        raise GraphError("simple graph needs r < n")
    if seed is None:
        raise GraphError("random_regular requires a seed")
    rng = random.Random(seed)
    cells = [v for v in range(n) for _ in range(r)]
    for _ in range(retries):
        rng.shuffle(cells)
        pairs = [(cells[i], cells[i + 1]) for i in range(0, len(cells), 2)]
        seen = set()
        ok = True
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            if u == v or key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return build_graph(n, pairs)
    raise GraphError(f"no simple pairing found in {retries} attempts")


def disjoint_union(parts: Sequence[MultiGraph]) -> MultiGraph:
    """Disjoint union; vertices of later parts are shifted upward."""
    if not parts:
        raise GraphError("disjoint union of nothing")
    pairs = []
    offset = 0
    for P in parts:
        pairs.extend((P.edges[i].u + offset, P.edges[i].v + offset) for i in range(P.m))
        offset += P.n
    return build_graph(offset, pairs)


FAMILIES = (
    "cycle",
    "complete",
    "complete_bipartite",
    "circulant",
    "petersen",
    "prism",
    "random_regular",
    "disjoint_union",
)


def generate(family: str, params: dict) -> MultiGraph:
    """Family dispatcher used by the command line front end.

    params keys by family: cycle/complete: n; complete_bipartite: n, n2;
    circulant: n, offsets; prism: n; random_regular: n, r, seed;
    disjoint_union: parts, a list of (family, params) pairs.
    """
    try:
        if family == "cycle":
            return cycle(params["n"])
        if family == "complete":
            return complete(params["n"])
        if family == "complete_bipartite":
            return complete_bipartite(params["n"], params["n2"])
        if family == "circulant":
            return circulant(params["n"], params["offsets"])
        if family == "petersen":
            return petersen()
        if family == "prism":
            return prism(params.get("n", 3))
        if family == "random_regular":
            return random_regular(params["n"], params["r"], params["seed"])
        if family == "disjoint_union":
            return disjoint_union([generate(f, p) for f, p in params["parts"]])
    except KeyError as exc:
        raise GraphError(f"family {family!r}: missing parameter {exc}") from None
    raise GraphError(f"unknown family {family!r}")
