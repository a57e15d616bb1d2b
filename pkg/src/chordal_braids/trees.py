"""Rooted trees and their comparability graphs.

For a rooted tree ``T`` the comparability graph joins every vertex to each of
its ancestors.  Its maximal simplices are the root-to-leaf chains, and a
leaves-first elimination gives normal-form layers whose ranks are the vertex
heights.
"""

from __future__ import annotations

import json
import re
from collections.abc import Mapping
from dataclasses import dataclass, field

from . import gamma as gm
from . import purebraid as pb
from .errors import ParseError, UnknownVertex
from .graph import Graph

__all__ = [
    "RootedTree",
    "comparability_graph",
    "height",
    "leaves_first_peo",
    "maximal_simplices_via_leaves",
    "parse_newick",
    "projection_kills_layers",
    "semidirect_profile",
]


@dataclass(frozen=True)
class RootedTree:
    root: object
    parent: Mapping = field(default_factory=dict)
    vertices: tuple = ()

    def __post_init__(self):
        parent = dict(self.parent)
        if self.root in parent:
            raise ValueError("the root has no parent")
        verts = tuple(self.vertices) or (self.root,) + tuple(
            v for v in _appearance(parent) if v != self.root
        )
        vset = set(verts)
        if len(vset) != len(verts) or self.root not in vset:
            raise ValueError("vertex list must be distinct and contain the root")
        for v, p in parent.items():
            if v not in vset or p not in vset:
                raise UnknownVertex(f"parent entry {v!r} -> {p!r} uses an undeclared vertex")
        for v in verts:
            if v != self.root and v not in parent:
                raise ValueError(f"{v!r} has no parent")
            seen = set()
            u = v
            while u != self.root:
                if u in seen:
                    raise ValueError(f"parent map has a cycle through {v!r}")
                seen.add(u)
                u = parent[u]
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "vertices", verts)

    def children(self, v) -> tuple:
        return tuple(u for u in self.vertices if self.parent.get(u, object()) == v and u != self.root)

    def chain(self, v) -> tuple:
        """The path from the root down to ``v``."""
        if v not in self.vertices:
            raise UnknownVertex(f"{v!r} is not a vertex of the tree")
        path = [v]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return tuple(reversed(path))

    def leaves(self) -> tuple:
        inner = set(self.parent.values())
        return tuple(v for v in self.vertices if v not in inner)

    def to_json(self) -> dict:
        return {"root": self.root, "parent": dict(self.parent), "vertices": list(self.vertices)}

    @classmethod
    def from_json(cls, data) -> RootedTree:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["root"], data.get("parent", {}), tuple(data.get("vertices", ())))

    def to_newick(self) -> str:
        def node(v):
            kids = self.children(v)
            return ("(" + ",".join(node(k) for k in kids) + ")" if kids else "") + str(v)

        return node(self.root) + ";"


def _appearance(parent: Mapping) -> list:
    seen: dict = {}
    for v, p in parent.items():
        seen.setdefault(p, None)
        seen.setdefault(v, None)
    return list(seen)


_NEWICK_LABEL = re.compile(r"[^(),;\s]+")


def parse_newick(text: str) -> RootedTree:
    """Parse nested-parenthesis trees such as ``((c)a,b)r;``.

    A child list may also follow its label, as in ``(a(c),b)r;``.
    """
    s = text.strip()
    if s.endswith(";"):
        s = s[:-1]
    pos = 0
    order: list = []
    parent: dict = {}
    kids_of: dict = {}

    def skip():
        nonlocal pos
        while pos < len(s) and s[pos].isspace():
            pos += 1

    def children_list():
        nonlocal pos
        kids = []
        pos += 1  # '('
        while True:
            kids.append(node())
            skip()
            if pos < len(s) and s[pos] == ",":
                pos += 1
                continue
            if pos < len(s) and s[pos] == ")":
                pos += 1
                return kids
            raise ParseError(f"expected ',' or ')' at offset {pos} in {text!r}")

    def node():
        nonlocal pos
        skip()
        kids = children_list() if pos < len(s) and s[pos] == "(" else []
        skip()
        m = _NEWICK_LABEL.match(s, pos)
        if not m:
            raise ParseError(f"missing label at offset {pos} in {text!r}")
        label = m.group(0)
        pos = m.end()
        skip()
        if pos < len(s) and s[pos] == "(":
            kids += children_list()
        if label in parent or label in order:
            raise ParseError(f"label {label!r} repeated")
        order.append(label)
        kids_of[label] = kids
        for k in kids:
            parent[k] = label
        return label

    root = node()
    skip()
    if pos != len(s):
        raise ParseError(f"trailing text {s[pos:]!r}")
    # preorder: every vertex comes after its parent
    verts: list = []
    stack = [root]
    while stack:
        v = stack.pop()
        verts.append(v)
        stack.extend(reversed(kids_of[v]))
    return RootedTree(root, parent, tuple(verts))


def comparability_graph(t: RootedTree) -> Graph:
    edges = []
    for v in t.vertices:
        for a in t.chain(v)[:-1]:
            edges.append((a, v))
    return Graph(t.vertices, edges)


def maximal_simplices_via_leaves(t: RootedTree) -> list:
    g = comparability_graph(t)
    out = [g.sort(t.chain(f)) for f in t.leaves()]
    out.sort(key=lambda s: [g.position(v) for v in s])
    return out


def height(t: RootedTree, s) -> int:
    return len(t.chain(s)) - 1


def vertices_by_height(t: RootedTree) -> dict:
    out: dict = {}
    for v in t.vertices:
        out.setdefault(height(t, v), []).append(v)
    return out


def semidirect_profile(t: RootedTree) -> tuple:
    """``(h, number of vertices of height h)`` for ``h = 1 .. max height``."""
    levels = vertices_by_height(t)
    top = max(levels)
    return tuple((h, len(levels.get(h, []))) for h in range(1, top + 1))


def leaves_first_peo(t: RootedTree) -> tuple:
    """Repeatedly remove a deepest leaf of what remains; ties by vertex order."""
    depth = {v: height(t, v) for v in t.vertices}
    alive = set(t.vertices)
    live_children = {v: 0 for v in t.vertices}
    for v, p in t.parent.items():
        live_children[p] += 1
    order = []
    while alive:
        leaves = [v for v in t.vertices if v in alive and live_children[v] == 0]
        v = max(leaves, key=lambda u: (depth[u], -t.vertices.index(u)))
        order.append(v)
        alive.discard(v)
        if v != t.root:
            live_children[t.parent[v]] -= 1
    return tuple(order)


def projection_kills_layers(t: RootedTree, gamma: gm.LimitElement, w) -> bool:
    """Projecting to the chain below ``w`` sees only the layers on that chain.

    Zeroes every normal-form layer (leaves-first PEO) at vertices off the chain
    and checks that the projection to the chain is unchanged.
    """
    g = comparability_graph(t)
    if gamma.graph != g:
        raise ValueError("element does not live over the comparability graph of t")
    chain = t.chain(w)
    nf = gm.normal_form(gamma, leaves_first_peo(t))
    keep = set(chain)
    zeroed = gm.GammaNormalForm(
        g,
        nf.peo,
        tuple(u if v in keep else u ** 0 for v, u in zip(nf.peo, nf.layers)),
    )
    delta = gm.from_normal_form(zeroed)
    target = g.sort(chain)
    return pb.equal(gm.project(gamma, target), gm.project(delta, target))
