"""Elements of the arrangement group of a chordal graph as compatible tuples.

A :class:`LimitElement` assigns to each maximal simplex ``S`` of a chordal
graph ``G`` a pure braid word over ``S``; the tuple is compatible when any
two components agree after forgetting down to the intersection of their
simplices.  The group is generated here by edge generators ``E[u,v]``, which
carry ``A[u,v]`` in every component containing both ends.

Along a perfect elimination ordering the group splits as an iterated
semidirect product of free groups.  :func:`normal_form` reads off the free
coordinates layer by layer; :func:`from_normal_form` reassembles them.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from . import purebraid as pb
from .errors import (
    AlphabetMismatch,
    GraphMismatch,
    InvariantViolation,
    NotAnEdge,
    NotChordal,
    NotASimplex,
    NotInKernel,
    NotSimplicial,
    ParseError,
    WrongIndexing,
)
from .freegroup import Alphabet, FreeWord
from .graph import Graph, check_peo, find_peo, s_zero

__all__ = [
    "GammaNormalForm",
    "LimitElement",
    "delete_simplicial_vertex",
    "edge_alphabet",
    "edge_generator",
    "equal",
    "from_edge_word",
    "from_normal_form",
    "identity",
    "is_compatible",
    "kernel_word",
    "normal_form",
    "project",
    "section",
    "verify_pullback_square",
]


def _require_chordal(g: Graph):
    if not g.chordal:
        raise NotChordal("the graph is not chordal")


def edge_alphabet(g: Graph, edges: Iterable | None = None) -> Alphabet:
    """Alphabet of edge generators; symbols are canonical edge tuples."""
    edges = g.edges if edges is None else edges
    return Alphabet(edges, [f"E[{u},{v}]" for u, v in edges])


@dataclass(frozen=True, eq=False)
class LimitElement:
    """Compatible tuple of braid words indexed by the maximal simplices."""

    graph: Graph
    components: Mapping  # maximal simplex (tuple) -> BraidWord over it

    def component(self, simplex) -> pb.BraidWord:
        return self.components[self.graph.simplex(simplex)]

    def _check(self, other: LimitElement):
        if self.graph != other.graph:
            raise GraphMismatch("elements live over different graphs")

    def __mul__(self, other: LimitElement) -> LimitElement:
        self._check(other)
        return LimitElement(
            self.graph, {S: w * other.components[S] for S, w in self.components.items()}
        )

    def inverse(self) -> LimitElement:
        return LimitElement(self.graph, {S: w.inverse() for S, w in self.components.items()})

    def __pow__(self, n: int) -> LimitElement:
        return LimitElement(self.graph, {S: w ** n for S, w in self.components.items()})

    def freely_reduced(self) -> LimitElement:
        return LimitElement(self.graph, {S: w.freely_reduced() for S, w in self.components.items()})

    def is_identity(self) -> bool:
        return all(pb.is_trivial(w) for w in self.components.values())

    def __str__(self):
        return "; ".join(
            "{" + ",".join(map(str, S)) + "}: " + str(w) for S, w in self.components.items()
        )

    def __repr__(self):
        return f"LimitElement({self})"

    def to_json(self) -> dict:
        return {
            "graph": self.graph.digest,
            "components": [
                {"simplex": list(S), "word": w.to_json()} for S, w in self.components.items()
            ],
        }

    @classmethod
    def from_json(cls, data, graph: Graph, *, check: bool = True) -> LimitElement:
        if isinstance(data, str):
            data = json.loads(data)
        if data.get("graph") != graph.digest:
            raise GraphMismatch("serialized element belongs to a different graph")
        comps = {}
        for entry in data["components"]:
            S = graph.simplex(entry["simplex"])
            comps[S] = pb.BraidWord.from_json(S, entry["word"])
        if set(comps) != set(graph.maximal_simplices):
            raise WrongIndexing("components must be indexed by the maximal simplices")
        comps = {S: comps[S] for S in graph.maximal_simplices}
        if check and not is_compatible(graph, comps):
            raise InvariantViolation("serialized components are not compatible")
        return cls(graph, comps)


def identity(g: Graph) -> LimitElement:
    _require_chordal(g)
    return LimitElement(g, {S: pb.BraidWord.identity(S) for S in g.maximal_simplices})


def edge_generator(g: Graph, edge, exp: int = 1) -> LimitElement:
    _require_chordal(g)
    u, v = g.edge(*edge)
    comps = {}
    for S in g.maximal_simplices:
        if u in S and v in S:
            comps[S] = pb.generator(S, u, v, exp)
        else:
            comps[S] = pb.BraidWord.identity(S)
    return LimitElement(g, comps)


def _edge_letters(g: Graph, word) -> list:
    """Normalize an edge word (FreeWord, text, or letter list) to ``[(edge, e)]``."""
    if isinstance(word, FreeWord):
        letters = word.letters
    elif isinstance(word, str):
        letters = parse_edge_word(g, word)
    else:
        letters = list(word)
    out = []
    for edge, e in letters:
        if not all(x in g for x in edge):
            raise NotAnEdge(f"{edge!r} names an unknown vertex")
        out.append((g.edge(*edge), e))
    return out


def parse_edge_word(g: Graph, text: str) -> list:
    """Parse ``E[a,b] E[b,c]^-1``; labels are matched by ``str``."""
    by_name = {str(v): v for v in g.vertices}
    letters = []
    pos = 0
    text = text.strip()
    if text == "1":
        return []
    for m in _EDGE_TOKEN.finditer(text):
        if text[pos:m.start()].strip():
            raise ParseError(f"cannot parse {text[pos:m.start()]!r}")
        pos = m.end()
        a, b = m.group(1).strip(), m.group(2).strip()
        if a not in by_name or b not in by_name:
            raise NotAnEdge(f"E[{a},{b}] names an unknown vertex")
        exp = int(m.group(3)) if m.group(3) else 1
        letters.extend([((by_name[a], by_name[b]), 1 if exp > 0 else -1)] * abs(exp))
    if text[pos:].strip():
        raise ParseError(f"cannot parse {text[pos:]!r}")
    return letters


_EDGE_TOKEN = re.compile(r"E\[([^,\]]+),([^\]]+)\](?:\^([+-]?\d+))?")


def from_edge_word(g: Graph, word) -> LimitElement:
    """Product of edge generators spelled by ``word``."""
    _require_chordal(g)
    letters = _edge_letters(g, word)
    comps = {}
    for S in g.maximal_simplices:
        members = set(S)
        comps[S] = pb.BraidWord(
            S, tuple((e, s) for e, s in letters if e[0] in members and e[1] in members)
        )
    return LimitElement(g, comps)


def is_compatible(g: Graph, components: Mapping) -> bool:
    """Pairwise agreement of the components on intersections of maximal simplices."""
    cliques = g.maximal_simplices
    if set(components) != set(cliques):
        raise WrongIndexing("components must be indexed by the maximal simplices")
    for a in range(len(cliques)):
        for b in range(a + 1, len(cliques)):
            meet = set(cliques[a]) & set(cliques[b])
            if len(meet) < 2:
                continue  # braid groups on fewer than two strands are trivial
            if not pb.equal(
                pb.forget(components[cliques[a]], meet), pb.forget(components[cliques[b]], meet)
            ):
                return False
    return True


def equal(gamma: LimitElement, delta: LimitElement) -> bool:
    """Componentwise braid equality."""
    gamma._check(delta)
    return all(pb.equal(w, delta.components[S]) for S, w in gamma.components.items())


def _containing(g: Graph, s: tuple) -> list:
    members = set(s)
    return [S for S in g.maximal_simplices if members <= set(S)]


def project(gamma: LimitElement, simplex, *, check: bool = True) -> pb.BraidWord:
    """Component of ``gamma`` at an arbitrary simplex."""
    g = gamma.graph
    s = g.simplex(simplex)
    if not s:
        raise NotASimplex("simplices are nonempty")
    hosts = _containing(g, s)
    w = pb.forget(gamma.components[hosts[0]], s)
    if check and len(hosts) > 1 and len(s) > 1:
        if not pb.equal(w, pb.forget(gamma.components[hosts[1]], s)):
            raise InvariantViolation(f"components disagree on {list(s)}")
    return w


def restrict(gamma: LimitElement, sub: Graph, *, avoid=None) -> LimitElement:
    """Image of ``gamma`` in the group of an induced subgraph.

    Each maximal simplex of ``sub`` takes its word from a maximal simplex of
    the ambient graph containing it, preferring hosts other than ``avoid``.
    """
    g = gamma.graph
    comps = {}
    for S in sub.maximal_simplices:
        hosts = _containing(g, S)
        if avoid is not None and len(hosts) > 1:
            hosts = [h for h in hosts if h != avoid] or hosts
        comps[S] = pb.forget(gamma.components[hosts[0]], S)
    return LimitElement(sub, comps)


def delete_simplicial_vertex(gamma: LimitElement, v) -> LimitElement:
    """Image under the map induced by forgetting the coordinate of ``v``."""
    g = gamma.graph
    if not g.is_simplicial(v):
        raise NotSimplicial(f"{v!r} is not simplicial")
    return restrict(gamma, g.delete_vertex(v))


def section(delta: LimitElement, g: Graph, v, peo=None) -> LimitElement:
    """Lift an element of the group of ``g - v`` back to ``g``.

    The lift rewrites ``delta`` in edge generators through its normal form and
    reads that edge word in ``g``.
    """
    if not g.is_simplicial(v):
        raise NotSimplicial(f"{v!r} is not simplicial")
    if delta.graph != g.delete_vertex(v):
        raise GraphMismatch("delta must live over g with v deleted")
    nf = normal_form(delta, peo if peo is not None else find_peo(delta.graph))
    return from_edge_word(g, nf.edge_letters())


def kernel_word(gamma: LimitElement, v) -> FreeWord:
    """Free coordinates of ``gamma`` when deleting ``v`` kills it.

    The result is a word in ``{E[u,v] : u adjacent to v}``.
    """
    g = gamma.graph
    if not g.is_simplicial(v):
        raise NotSimplicial(f"{v!r} is not simplicial")
    S = g.sort(g.neighbors(v) | {v})
    for T, w in gamma.components.items():
        if T != S and not pb.is_trivial(w):
            raise NotInKernel(f"component at {list(T)} is not trivial")
    coords = pb.kernel_coordinates(gamma.components[S], v)
    return _kernel_to_edges(g, v, coords)


def _kernel_to_edges(g: Graph, v, coords: FreeWord) -> FreeWord:
    edges = [g.edge(u, v) for u in g.sort(g.neighbors(v))]
    alph = edge_alphabet(g, edges)
    return FreeWord(alph, coords.code)


@dataclass(frozen=True)
class GammaNormalForm:
    """Free coordinates along a PEO: ``gamma = lift(layer_1) lift(layer_2) ...``.

    ``layers[i]`` is a reduced word over ``E[u, peo[i]]`` for the neighbours
    ``u`` of ``peo[i]`` that come later in ``peo``.
    """

    graph: Graph
    peo: tuple
    layers: tuple

    def layer(self, v) -> FreeWord:
        return self.layers[self.peo.index(v)]

    def edge_letters(self) -> list:
        out = []
        for u in self.layers:
            out.extend(u.letters)
        return out

    def edge_word(self) -> FreeWord:
        alph = edge_alphabet(self.graph)
        return FreeWord.reduce(alph, self.edge_letters())

    def ranks(self) -> tuple:
        return tuple(len(u.alphabet) for u in self.layers)

    def __eq__(self, other):
        return (
            isinstance(other, GammaNormalForm)
            and self.graph == other.graph
            and self.peo == other.peo
            and self.layers == other.layers
        )

    def __hash__(self):
        return hash((self.graph, self.peo, self.layers))

    def __str__(self):
        return "; ".join(f"{v}: {u}" for v, u in zip(self.peo, self.layers))

    def to_json(self) -> dict:
        return {
            "graph": self.graph.digest,
            "peo": list(self.peo),
            "layers": [[[list(e), s] for e, s in u.letters] for u in self.layers],
        }

    @classmethod
    def from_layers(cls, g: Graph, peo, layers) -> GammaNormalForm:
        """Build from per-vertex letter lists ``[(edge, +-1), ...]``."""
        peo = check_peo(g, peo)
        if len(layers) != len(peo):
            raise AlphabetMismatch("one layer per PEO vertex is required")
        built = []
        for k, (v, letters) in enumerate(zip(peo, layers)):
            alph = layer_alphabet(g, peo, k)
            built.append(FreeWord.reduce(alph, [(_edge_key(g, e), s) for e, s in letters]))
        return cls(g, peo, tuple(built))


def _edge_key(g: Graph, e):
    try:
        return g.edge(*e)
    except Exception as exc:
        raise AlphabetMismatch(f"{e!r} is not an edge") from exc


def layer_alphabet(g: Graph, peo, k: int) -> Alphabet:
    v = peo[k]
    later = set(peo[k + 1:])
    return edge_alphabet(g, [g.edge(u, v) for u in g.sort(g.neighbors(v) & later)])


def normal_form(gamma: LimitElement, peo=None) -> GammaNormalForm:
    """Peel the PEO vertices one by one, recording each free kernel layer."""
    g = gamma.graph
    _require_chordal(g)
    peo = check_peo(g, peo if peo is not None else find_peo(g))
    # delete along the PEO, keeping every intermediate element
    chain = [gamma]
    for v in peo[:-1]:
        chain.append(delete_simplicial_vertex(chain[-1], v))
    layers: list = []
    tail_letters: list = []  # edge word of the section lift of chain[k + 1]
    for k in range(len(peo) - 1, -1, -1):
        v = peo[k]
        cur = chain[k]
        alph = layer_alphabet(g, peo, k)
        if k == len(peo) - 1:
            layers.append(FreeWord.identity(alph))
            continue
        sec = from_edge_word(cur.graph, tail_letters)
        kappa = (cur * sec.inverse()).freely_reduced()
        coords = kernel_word(kappa, v)
        if coords.alphabet != alph:
            raise InvariantViolation("kernel alphabet does not match the layer alphabet")
        layer = coords
        layers.append(layer)
        tail_letters = list(layer.letters) + tail_letters
    layers.reverse()
    return GammaNormalForm(g, peo, tuple(layers))


def from_normal_form(nf: GammaNormalForm) -> LimitElement:
    g = nf.graph
    check_peo(g, nf.peo)
    for k, u in enumerate(nf.layers):
        if u.alphabet != layer_alphabet(g, nf.peo, k):
            raise AlphabetMismatch(f"layer of {nf.peo[k]!r} has the wrong alphabet")
    return from_edge_word(g, nf.edge_letters())


def normal_form_equal(gamma: LimitElement, delta: LimitElement, peo=None) -> bool:
    gamma._check(delta)
    peo = peo if peo is not None else find_peo(gamma.graph)
    return normal_form(gamma, peo).layers == normal_form(delta, peo).layers


def verify_pullback_square(g: Graph, v, gamma: LimitElement) -> bool:
    """Check that ``gamma`` is a point of the pull-back at the simplicial vertex ``v``.

    With ``(S, S0) = s_zero(g, v)`` the two legs are the component at ``S``
    and the restriction to ``g - S0``.  The restriction must itself be
    compatible, and both legs must agree on ``S - S0``.
    """
    if gamma.graph != g:
        raise GraphMismatch("element lives over a different graph")
    S, S0 = s_zero(g, v)
    outer = g.delete(S0)
    rest = restrict(gamma, outer, avoid=S)
    if outer.vertices and not is_compatible(outer, rest.components):
        return False
    base = tuple(s for s in S if s not in S0)
    if len(base) < 2:
        return True
    left = pb.forget(gamma.components[S], base)
    return all(
        pb.equal(left, pb.forget(rest.components[T], base))
        for T in outer.maximal_simplices
        if set(base) <= set(T)
    )
