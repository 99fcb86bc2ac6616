"""Shared helpers for the test suite: small-graph catalogs, weighting
enumeration, and uniform configuration sampling."""

from __future__ import annotations

import itertools
from functools import lru_cache

from coverpebble import (
    BinaryWeighting,
    Configuration,
    Fuse,
    Graph,
    Multipartite,
    Path,
    Star,
    build_graph,
    generate,
)


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    reach = {0}
    frontier = [0]
    while frontier:
        cur = frontier.pop()
        for u, v in edges:
            for a, b in ((u, v), (v, u)):
                if a == cur and b not in reach:
                    reach.add(b)
                    frontier.append(b)
    return len(reach) == n


@lru_cache(maxsize=None)
def connected_edge_sets(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Every labeled connected graph on n vertices, as sorted edge tuples."""
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        if _connected(n, edges):
            out.append(tuple(edges))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(build_graph(n, edges) for edges in connected_edge_sets(n))


def small_catalog(max_n: int = 4) -> list[Graph]:
    """All labeled connected graphs with 1 to max_n vertices."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out


@lru_cache(maxsize=None)
def labeled_trees(n: int) -> tuple[Graph, ...]:
    """All labeled trees on n vertices (connected with n-1 edges)."""
    return tuple(g for g in connected_graphs(n) if len(g.edges) == n - 1)


def tree_representatives() -> list[tuple[str, Graph]]:
    """One representative per isomorphism class of trees on <= 5 vertices."""
    reps = [(f"path[{n}]", generate(Path(n))) for n in range(1, 6)]
    reps.append(("star[3]", generate(Star(3))))
    reps.append(("star[4]", generate(Star(4))))
    reps.append(("spider[5]", generate(Fuse(5, 3))))
    return reps


def order6_tree_representatives() -> list[tuple[str, Graph]]:
    """One representative per isomorphism class of trees on 6 vertices."""
    return [
        ("path[6]", generate(Path(6))),
        ("star[5]", generate(Star(5))),
        ("broom[6]", generate(Fuse(6, 4))),
        ("spider[2,1,1,1]", generate(Fuse(6, 3))),
        ("spider[2,2,1]", build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)])),
        ("double-star[2,2]", build_graph(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)])),
    ]


def all_weightings(n: int, min_order: int = 0) -> list[BinaryWeighting]:
    out = []
    for marks in itertools.product((0, 1), repeat=n):
        if sum(marks) >= min_order:
            out.append(BinaryWeighting(marks))
    return out


def random_composition(rng, total: int, parts: int) -> tuple[int, ...]:
    """Uniform composition of total into the given number of parts."""
    if parts == 1:
        return (total,)
    cuts = sorted(rng.sample(range(total + parts - 1), parts - 1))
    counts = []
    prev = -1
    for cut in cuts:
        counts.append(cut - prev - 1)
        prev = cut
    counts.append(total + parts - 2 - prev)
    return tuple(counts)


def random_config(rng, n: int, size: int) -> Configuration:
    return Configuration(random_composition(rng, size, n))


def move_pairs(cert) -> list[tuple[int, int]]:
    return [(m.src, m.dst) for m in cert.moves]
