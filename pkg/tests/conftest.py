"""Shared fixtures: the reference graph corpus and small helpers."""

from __future__ import annotations

import pytest

from kmagic import (
    MultiGraph,
    build_graph,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    petersen,
    prism,
)

# Named corpus used across module and acceptance tests.  Mix of odd and
# even degree, odd and even order, bipartite and not, one disconnected.
CORPUS_BUILDERS = {
    "K4": lambda: complete(4),
    "K5": lambda: complete(5),
    "K6": lambda: complete(6),
    "K33": lambda: complete_bipartite(3, 3),
    "petersen": petersen,
    "prism3": lambda: prism(3),
    "cube": lambda: prism(4),
    "C3+C4": lambda: disjoint_union([cycle(3), cycle(4)]),
    "circ8_12": lambda: circulant(8, (1, 2)),
}


@pytest.fixture(scope="session")
def corpus() -> dict[str, MultiGraph]:
    return {name: make() for name, make in CORPUS_BUILDERS.items()}


def bridged_cubic_16() -> MultiGraph:
    """Cubic graph on 16 vertices: a hub joined by bridges to three
    copies of K4 with one edge subdivided.  Has no perfect matching
    (removing the hub leaves three odd components), so no spanning
    subgraph with all degrees 1 mod 3 exists."""
    pairs: list[tuple[int, int]] = []
    hub = 0
    base = 1
    for _ in range(3):
        a, b, x, y, w = range(base, base + 5)
        # K4 on {a, b, x, y} with edge (a, b) subdivided through w
        pairs += [(a, w), (w, b), (a, x), (a, y), (b, x), (b, y), (x, y)]
        pairs.append((hub, w))
        base += 5
    return build_graph(16, pairs)


@pytest.fixture(scope="session")
def bridged16() -> MultiGraph:
    return bridged_cubic_16()
