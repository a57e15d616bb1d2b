"""Seeded random instances for property tests and the self-test suites."""

from __future__ import annotations

import itertools
import random

from .graph import Graph
from .purebraid import BraidWord

__all__ = [
    "all_graphs",
    "random_braid_word",
    "random_chordal_graph",
    "random_edge_word",
    "random_graph",
    "random_parent_map",
]


def all_graphs(n: int):
    """Every labelled graph on vertices ``0..n-1``."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), [p for k, p in enumerate(pairs) if mask >> k & 1])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.2, 0.8)
    pairs = itertools.combinations(range(n), 2)
    return Graph(range(n), [e for e in pairs if rng.random() < p])


def random_chordal_graph(rng: random.Random, n: int, max_edges: int | None = None) -> Graph:
    """Chordal by construction: each new vertex attaches to a clique.

    Labels are shuffled afterwards so the insertion order is not itself a
    reversed elimination ordering.
    """
    edges: list = []
    adj: dict = {0: set()}
    for v in range(1, n):
        # a clique among earlier vertices: grow from a random anchor
        clique: list = []
        if rng.random() < 0.85:
            anchor = rng.randrange(v)
            clique = [anchor]
            pool = sorted(adj[anchor])
            rng.shuffle(pool)
            for u in pool:
                if rng.random() < 0.6 and all(u in adj[c] for c in clique):
                    clique.append(u)
        if max_edges is not None:
            clique = clique[: max(0, max_edges - len(edges))]
        adj[v] = set(clique)
        for u in clique:
            adj[u].add(v)
            edges.append((u, v))
    labels = list(range(n))
    rng.shuffle(labels)
    relabel = dict(zip(range(n), labels))
    return Graph(range(n), [(relabel[u], relabel[v]) for u, v in edges])


def random_braid_word(rng: random.Random, index_set, length: int) -> BraidWord:
    index_set = tuple(index_set)
    pairs = list(itertools.combinations(index_set, 2))
    if not pairs:
        return BraidWord.identity(index_set)
    return BraidWord(
        index_set, tuple((rng.choice(pairs), rng.choice((1, -1))) for _ in range(length))
    )


def random_edge_word(rng: random.Random, g: Graph, length: int) -> list:
    if not g.edges:
        return []
    return [(rng.choice(g.edges), rng.choice((1, -1))) for _ in range(length)]


def random_parent_map(rng: random.Random, n: int) -> dict:
    """Parent map of a random rooted tree on ``0..n-1`` with root ``0``."""
    return {v: rng.randrange(v) for v in range(1, n)}
