"""Finite simple graphs, chordality, perfect elimination orderings, simplices.

Vertices keep their insertion order.  That order is used to store edges
canonically, to break ties deterministically, and to sort simplices, which
are represented as tuples of vertices in vertex order.
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Hashable, Iterable, Sequence
from functools import cached_property

from .errors import (
    InvalidPeo,
    NotASimplex,
    NotChordal,
    NotSimplicial,
    ParseError,
    SelfLoop,
    UnknownVertex,
)

__all__ = [
    "Graph",
    "chordless_cycle",
    "find_peo",
    "from_edges",
    "is_chordal",
    "is_chordal_by_cycles",
    "is_peo",
    "lex_bfs",
    "maximal_simplices",
    "parse_edge_list",
    "peo_with_suffix",
    "s_zero",
]


class Graph:
    """Immutable finite simple undirected graph."""

    __slots__ = ("vertices", "edges", "_order", "_adj", "__dict__")

    def __init__(self, vertices: Iterable[Hashable] = (), edges: Iterable[Sequence] = ()):
        vertices = tuple(vertices)
        order = {v: k for k, v in enumerate(vertices)}
        if len(order) != len(vertices):
            raise ValueError("vertex labels must be distinct")
        adj = {v: set() for v in vertices}
        canon = set()
        for e in edges:
            u, w = e
            for x in (u, w):
                if x not in order:
                    raise UnknownVertex(f"edge endpoint {x!r} is not a declared vertex")
            if u == w:
                raise SelfLoop(f"self-loop at {u!r}")
            if order[u] > order[w]:
                u, w = w, u
            canon.add((u, w))
            adj[u].add(w)
            adj[w].add(u)
        self.vertices = vertices
        self.edges = tuple(sorted(canon, key=lambda e: (order[e[0]], order[e[1]])))
        self._order = order
        self._adj = {v: frozenset(n) for v, n in adj.items()}

    # -- basic queries ------------------------------------------------------
    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self._order

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(vertices={list(self.vertices)!r}, edges={[list(e) for e in self.edges]!r})"

    def _require(self, v):
        if v not in self._order:
            raise UnknownVertex(f"{v!r} is not a vertex")

    def position(self, v) -> int:
        self._require(v)
        return self._order[v]

    def neighbors(self, v) -> frozenset:
        self._require(v)
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        self._require(u)
        self._require(v)
        return v in self._adj[u]

    def sort(self, subset: Iterable) -> tuple:
        """Vertices of ``subset`` in vertex order."""
        subset = set(subset)
        for v in subset:
            self._require(v)
        return tuple(v for v in self.vertices if v in subset)

    def edge(self, u, v) -> tuple:
        """Canonical form of the edge ``{u, v}``; raises if it is not an edge."""
        from .errors import NotAnEdge

        self._require(u)
        self._require(v)
        if v not in self._adj[u]:
            raise NotAnEdge(f"{{{u}, {v}}} is not an edge")
        return (u, v) if self._order[u] < self._order[v] else (v, u)

    def is_simplex(self, subset: Iterable) -> bool:
        members = list(set(subset))
        for v in members:
            self._require(v)
        return all(
            members[b] in self._adj[members[a]]
            for a in range(len(members))
            for b in range(a + 1, len(members))
        )

    def simplex(self, subset: Iterable) -> tuple:
        """Canonical tuple for a simplex; raises :class:`NotASimplex` otherwise."""
        s = self.sort(subset)
        if not self.is_simplex(s):
            raise NotASimplex(f"{list(s)} is not a simplex")
        return s

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def is_simplicial(self, v) -> bool:
        return self.is_simplex(self.neighbors(v))

    def induced(self, subset: Iterable) -> Graph:
        keep = set(subset)
        for v in keep:
            self._require(v)
        return Graph(
            (v for v in self.vertices if v in keep),
            (e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def delete_vertex(self, v) -> Graph:
        self._require(v)
        return self.induced(u for u in self.vertices if u != v)

    def delete(self, vertices: Iterable) -> Graph:
        drop = set(vertices)
        for v in drop:
            self._require(v)
        return self.induced(u for u in self.vertices if u not in drop)

    # -- cached derived data ------------------------------------------------
    @cached_property
    def maximal_simplices(self) -> tuple:
        return tuple(maximal_simplices(self))

    @cached_property
    def chordal(self) -> bool:
        return is_chordal(self)

    @cached_property
    def digest(self) -> str:
        """Short content hash used to tag serialized group elements."""
        blob = json.dumps(self.to_json(), sort_keys=True, default=str)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data) -> Graph:
        if isinstance(data, str):
            data = json.loads(data)
        edges = [tuple(e) for e in data.get("edges", [])]
        vertices = data.get("vertices")
        if vertices is None:
            vertices = _infer_vertices(edges)
        return cls(vertices, edges)

    def to_edge_list(self) -> str:
        lines = ["vertices: " + " ".join(map(str, self.vertices))]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self.vertices]
        lines += [f'  "{u}" -- "{v}";' for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def clique_diagram_dot(self, name: str = "cliques") -> str:
        """DOT of the maximal simplices, joined when they intersect."""
        cliques = self.maximal_simplices
        label = lambda s: "{" + ",".join(map(str, s)) + "}"  # noqa: E731
        lines = [f"graph {name} {{"]
        lines += [f'  "{label(s)}";' for s in cliques]
        for a in range(len(cliques)):
            for b in range(a + 1, len(cliques)):
                meet = self.sort(set(cliques[a]) & set(cliques[b]))
                if meet:
                    lines.append(
                        f'  "{label(cliques[a])}" -- "{label(cliques[b])}" [label="{label(meet)}"];'
                    )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _infer_vertices(edges) -> list:
    seen = {}
    for e in edges:
        for v in e:
            seen.setdefault(v, None)
    return list(seen)


def from_edges(vertex_list: Iterable, edge_list: Iterable[Sequence]) -> Graph:
    return Graph(vertex_list, edge_list)


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment.

    A line ``vertices: a b c`` declares vertices (and their order) up front; a
    line holding a single label declares an isolated vertex.  Otherwise the
    vertices are inferred from the edges in order of appearance.
    """
    declared: dict = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            for v in line.split(":", 1)[1].split():
                declared.setdefault(v, None)
            continue
        parts = line.split()
        if len(parts) == 1:
            declared.setdefault(parts[0], None)
        elif len(parts) == 2:
            edges.append((parts[0], parts[1]))
            declared.setdefault(parts[0], None)
            declared.setdefault(parts[1], None)
        else:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
    return Graph(list(declared), edges)


# ---------------------------------------------------------------------------
# elimination orderings
# ---------------------------------------------------------------------------

def lex_bfs(g: Graph) -> list:
    """Lexicographic breadth-first search; ties go to the lowest-order vertex."""
    n = len(g.vertices)
    labels = {v: [] for v in g.vertices}
    visited: list = []
    remaining = list(g.vertices)
    for number in range(n, 0, -1):
        v = max(remaining, key=lambda u: (labels[u], -g.position(u)))
        remaining.remove(v)
        visited.append(v)
        for u in g.neighbors(v):
            if u in labels and u not in visited:
                labels[u].append(number)
    return visited


def is_peo(g: Graph, order: Sequence) -> bool:
    """Each ``order[i]`` is simplicial among ``order[i:]``; ``order`` covers ``g``."""
    if len(order) != len(g.vertices) or set(order) != set(g.vertices):
        return False
    later = set(order)
    for v in order:
        later.discard(v)
        nbrs = [u for u in g.neighbors(v) if u in later]
        for a in range(len(nbrs)):
            for b in range(a + 1, len(nbrs)):
                if not g.has_edge(nbrs[a], nbrs[b]):
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_peo(g, lex_bfs(g)[::-1])


def find_peo(g: Graph) -> tuple:
    order = lex_bfs(g)[::-1]
    if not is_peo(g, order):
        raise NotChordal("graph has a chordless cycle of length >= 4")
    return tuple(order)


def check_peo(g: Graph, order: Sequence) -> tuple:
    order = tuple(order)
    if not is_peo(g, order):
        raise InvalidPeo(f"{list(order)} is not a perfect elimination ordering")
    return order


def peo_with_suffix(g: Graph, s: Iterable) -> tuple:
    """A PEO whose last ``|s|`` entries are exactly the simplex ``s``."""
    if not g.chordal:
        raise NotChordal("graph is not chordal")
    s = g.simplex(s)
    order = []
    rest = g
    while len(rest) > len(s):
        cands = [v for v in rest.vertices if v not in s and rest.is_simplicial(v)]
        # a chordal graph minus a simplex always contains a simplicial vertex
        v = cands[0]
        order.append(v)
        rest = rest.delete_vertex(v)
    order.extend(s)
    return check_peo(g, order)


def maximal_simplices(g: Graph) -> list:
    """Inclusion-maximal simplices of a chordal graph, in canonical order."""
    peo = find_peo(g)
    pos = {v: k for k, v in enumerate(peo)}
    cands = []
    for k, v in enumerate(peo):
        cands.append(frozenset([v]) | {u for u in g.neighbors(v) if pos[u] > k})
    maximal = {c for c in cands if not any(c < d for d in cands)}
    out = [g.sort(c) for c in maximal]
    out.sort(key=lambda s: [g.position(v) for v in s])
    return out


def s_zero(g: Graph, v) -> tuple:
    """For simplicial ``v``: its maximal simplex ``S`` and the core ``S0`` of ``S``.

    ``S0`` holds the members of ``S`` all of whose neighbours lie in ``S``.
    """
    if not g.is_simplicial(v):
        raise NotSimplicial(f"{v!r} is not simplicial")
    S = g.sort(g.neighbors(v) | {v})
    members = set(S)
    S0 = g.sort(s for s in S if g.neighbors(s) <= members)
    return S, S0


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

def chordless_cycle(g: Graph):
    """Return a cycle of length >= 4 without a chord, or ``None``.

    Walks every simple path starting at its lowest-order vertex.  A path that
    already has a chord cannot close into a chordless cycle, so such paths are
    not extended; every chordless cycle is still reached.
    """
    for s in g.vertices:
        ps = g.position(s)
        stack = [[s]]
        while stack:
            path = stack.pop()
            last = path[-1]
            for x in g.neighbors(last):
                if g.position(x) <= ps or x in path:
                    continue
                touches = [p for p in path[:-1] if g.has_edge(p, x)]
                if touches == [s] and len(path) >= 3:
                    return path + [x]
                if not touches:
                    stack.append(path + [x])
    return None


def is_chordal_by_cycles(g: Graph) -> bool:
    return chordless_cycle(g) is None
