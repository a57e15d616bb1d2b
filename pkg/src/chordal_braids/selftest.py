"""Seeded randomized cross-checks, one suite per acceptance criterion.

Every suite returns a :class:`SuiteResult`.  The default case counts are the
ones the acceptance tests run; ``cases`` overrides the random counts (the
exhaustive enumeration of small graphs always runs in full).
"""

from __future__ import annotations

import functools
import random
import time
from dataclasses import dataclass, field

from . import gamma as gm
from . import invariants as inv
from . import purebraid as pb
from . import trees as tr
from .errors import NotInKernel
from .generators import (
    all_graphs,
    random_braid_word,
    random_chordal_graph,
    random_edge_word,
    random_graph,
    random_parent_map,
)
from .graph import find_peo, is_chordal, is_chordal_by_cycles, is_peo

__all__ = ["SUITES", "SuiteResult", "run_all"]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, detail: str = ""):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 5:
            self.failures.append(detail)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed}/{self.total} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "total": self.total,
            "seconds": round(self.seconds, 3),
            "failures": self.failures,
        }


def random_peo(rng: random.Random, g) -> tuple:
    """A uniformly-chosen-step PEO: eliminate a random simplicial vertex each time."""
    order = []
    rest = g
    while len(rest):
        v = rng.choice([u for u in rest.vertices if rest.is_simplicial(u)])
        order.append(v)
        rest = rest.delete_vertex(v)
    return tuple(order)


def _timed(fn):
    @functools.wraps(fn)
    def wrapper(rng, cases=None):
        t0 = time.perf_counter()
        res = fn(rng, cases)
        res.seconds = time.perf_counter() - t0
        return res

    return wrapper


@_timed
def chordality(rng, cases=None):
    """LexBFS recognition against chordless-cycle search."""
    res = SuiteResult("chordality")
    for n in range(7):
        for g in all_graphs(n):
            res.record(is_chordal(g) == is_chordal_by_cycles(g), repr(g))
    for _ in range(500 if cases is None else cases):
        g = random_graph(rng, rng.randint(7, 8))
        res.record(is_chordal(g) == is_chordal_by_cycles(g), repr(g))
    return res


@_timed
def chromatic(rng, cases=None):
    """prod (q - N_i) against brute-force colourings, for two PEOs."""
    res = SuiteResult("chromatic")
    for _ in range(200 if cases is None else cases):
        g = random_chordal_graph(rng, rng.randint(1, 8))
        p1 = find_peo(g)
        p2 = p1
        for _attempt in range(20):
            p2 = random_peo(rng, g)
            if p2 != p1:
                break
        c1 = inv.chromatic_polynomial(g, p1)
        c2 = inv.chromatic_polynomial(g, p2)
        ok = c1 == c2 and is_peo(g, p2)
        ok = ok and all(c1(q) == inv.brute_force_coloring_count(g, q) for q in range(6))
        res.record(ok, f"{g!r}: {c1} vs {c2}")
    return res


@_timed
def regions(rng, cases=None):
    """prod (1 + N_i) against brute-force acyclic orientations."""
    res = SuiteResult("regions")
    for _ in range(100 if cases is None else cases):
        g = random_chordal_graph(rng, rng.randint(1, 9), max_edges=12)
        r = inv.region_count(g)
        ok = r == inv.brute_force_acyclic_orientations(g)
        ok = ok and r == abs(inv.chromatic_polynomial(g)(-1))
        res.record(ok, repr(g))
    return res


def _random_subset(rng, items):
    return tuple(x for x in items if rng.random() < 0.6)


def _same_action(u: pb.BraidWord, v: pb.BraidWord) -> bool:
    return u.index_set == v.index_set and pb.artin_auto(u) == pb.artin_auto(v)


@_timed
def functoriality(rng, cases=None):
    """forget o forget = forget, and forget o include = identity."""
    res = SuiteResult("functoriality")
    for _ in range(500 if cases is None else cases):
        I = tuple(range(1, rng.randint(1, 4) + 1))
        J = _random_subset(rng, I)
        K = _random_subset(rng, J)
        w = random_braid_word(rng, I, rng.randint(0, 12))
        # compare Artin images directly; pb.equal would shortcut on equal spellings
        ok = _same_action(pb.forget(pb.forget(w, J), K), pb.forget(w, K))
        u = random_braid_word(rng, J, rng.randint(0, 12))
        ok = ok and _same_action(pb.forget(pb.include(u, I), J), u)
        v = random_braid_word(rng, I, rng.randint(0, 12))
        ok = ok and _same_action(pb.forget(w * v, J), pb.forget(w, J) * pb.forget(v, J))
        res.record(ok, f"{w} | J={J} K={K}")
    return res


@_timed
def combing(rng, cases=None):
    """uncomb(comb(w)) = w, and comb equality agrees with the Artin action."""
    res = SuiteResult("combing")
    for _ in range(1000 if cases is None else cases):
        I = tuple(range(1, rng.randint(1, 4) + 1))
        w = random_braid_word(rng, I, rng.randint(0, 12))
        res.record(pb.equal(pb.uncomb(pb.comb(w)), w), str(w))
    for k in range(500 if cases is None else cases):
        I = tuple(range(1, rng.randint(2, 4) + 1))
        u = random_braid_word(rng, I, rng.randint(0, 12))
        if k % 3 == 0:
            v = random_braid_word(rng, I, rng.randint(0, 12))
        elif k % 3 == 1:
            v = _disguise(rng, u)
        else:
            v = _disguise(rng, u) * random_braid_word(rng, I, 1)
        res.record(pb.equal(u, v) == pb.comb_equal(u, v), f"{u} vs {v}")
    return res


def _disguise(rng, w: pb.BraidWord) -> pb.BraidWord:
    """An equal word spelled differently: insert a conjugate of a trivial pair."""
    I = w.index_set
    k = rng.randint(0, len(w))
    g = random_braid_word(rng, I, rng.randint(1, 3))
    h = random_braid_word(rng, I, 1)
    left = pb.BraidWord(I, w.factors[:k])
    right = pb.BraidWord(I, w.factors[k:])
    return left * g * h * h.inverse() * g.inverse() * right


def _random_element(rng, max_vertices=7, max_len=10):
    g = random_chordal_graph(rng, rng.randint(1, max_vertices))
    word = random_edge_word(rng, g, rng.randint(0, max_len))
    return g, gm.from_edge_word(g, word)


@_timed
def tower(rng, cases=None):
    """gamma = lift(kernel part) * section(delete(gamma, v)) at every simplicial v."""
    res = SuiteResult("tower")
    for _ in range(300 if cases is None else cases):
        g, gamma = _random_element(rng)
        ok = True
        for v in g.vertices:
            if not g.is_simplicial(v):
                continue
            delta = gm.delete_simplicial_vertex(gamma, v)
            sec = gm.section(delta, g, v)
            kappa = gamma * sec.inverse()
            lift = gm.from_edge_word(g, gm.kernel_word(kappa, v))
            ok = ok and gm.equal(lift * sec, gamma)
            try:
                gm.kernel_word(gamma, v)
                succeeded = True
            except NotInKernel:
                succeeded = False
            ok = ok and succeeded == delta.is_identity()
        res.record(ok, str(gamma))
    return res


def _corrupt(rng, g, gamma):
    """Replace one component so that the tuple stops being compatible."""
    cliques = g.maximal_simplices
    for _attempt in range(50):
        S = rng.choice(cliques)
        if len(S) < 2:
            continue
        comps = dict(gamma.components)
        comps[S] = comps[S] * random_braid_word(rng, S, rng.randint(1, 3))
        if not gm.is_compatible(g, comps):
            return gm.LimitElement(g, comps)
    return None


def _graph_with_shared_edge(rng):
    """A chordal graph where two maximal simplices share at least two vertices."""
    while True:
        g = random_chordal_graph(rng, rng.randint(4, 7))
        cl = g.maximal_simplices
        if any(len(set(a) & set(b)) >= 2 for a in cl for b in cl if a != b):
            return g


@_timed
def normal_forms(rng, cases=None):
    """Normal forms, normal-form equality, and the pull-back square."""
    res = SuiteResult("normal_forms")
    n = 300 if cases is None else cases
    for k in range(n):
        g, gamma = _random_element(rng)
        peo = find_peo(g)
        nf = gm.normal_form(gamma, peo)
        back = gm.from_normal_form(nf)
        ok = gm.normal_form(back, peo) == nf and gm.equal(back, gamma)
        if k % 2 == 0:
            # same element, different spelling via another PEO
            delta = gm.from_normal_form(gm.normal_form(gamma, random_peo(rng, g)))
        else:
            delta = gm.from_edge_word(g, random_edge_word(rng, g, rng.randint(0, 10)))
        by_nf = gm.normal_form(delta, peo).layers == nf.layers
        ok = ok and by_nf == gm.equal(gamma, delta)
        if k % 2 == 0:
            ok = ok and by_nf
        ok = ok and all(
            gm.verify_pullback_square(g, v, gamma) for v in g.vertices if g.is_simplicial(v)
        )
        res.record(ok, str(gamma))
    for _ in range(100 if cases is None else max(1, cases // 3)):
        g = _graph_with_shared_edge(rng)
        gamma = gm.from_edge_word(g, random_edge_word(rng, g, rng.randint(0, 10)))
        bad = _corrupt(rng, g, gamma)
        ok = bad is not None and not any(
            gm.verify_pullback_square(g, v, bad) for v in g.vertices if g.is_simplicial(v)
        )
        res.record(ok, f"corrupted {bad}")
    return res


@_timed
def complete_graph(rng, cases=None):
    """On K_n the limit group behaves exactly like P(n)."""
    from .graph import Graph

    res = SuiteResult("complete_graph")
    for _ in range(200 if cases is None else cases):
        n = rng.randint(2, 4)
        I = tuple(range(1, n + 1))
        K = Graph(I, [(a, b) for a in I for b in I if a < b])
        u = random_braid_word(rng, I, rng.randint(0, 12))
        v = random_braid_word(rng, I, rng.randint(0, 12)) if rng.random() < 0.5 else _disguise(rng, u)
        gu = gm.from_edge_word(K, u.factors)
        gv = gm.from_edge_word(K, v.factors)
        ok = gm.project(gu, I).factors == u.factors
        ok = ok and gm.equal(gu, gv) == pb.equal(u, v)
        ok = ok and pb.equal(gm.project(gu * gv, I), u * v)
        m = rng.choice(I)
        ok = ok and pb.equal(
            gm.delete_simplicial_vertex(gu, m).components[tuple(s for s in I if s != m)],
            pb.forget(u, [s for s in I if s != m]),
        )
        nf = gm.normal_form(gu, random_peo(rng, K))
        ok = ok and nf.ranks() == tuple(range(n - 1, -1, -1))
        ok = ok and pb.equal(gm.project(gm.from_normal_form(nf), I), u)
        # kernel coordinates computed both ways
        kern = u * pb.include(pb.forget(u, I[:-1]), I).inverse()
        kw = gm.kernel_word(gm.from_edge_word(K, kern.factors), I[-1])
        ok = ok and kw.code == pb.kernel_coordinates(kern).code
        res.record(ok, f"{u} | {v}")
    return res


@_timed
def rooted_trees(rng, cases=None):
    """Comparability graphs of rooted trees: cliques, ranks, projections."""
    res = SuiteResult("rooted_trees")
    for _ in range(100 if cases is None else cases):
        t = tr.RootedTree(0, random_parent_map(rng, rng.randint(1, 9)))
        g = tr.comparability_graph(t)
        ok = is_chordal(g)
        ok = ok and tr.maximal_simplices_via_leaves(t) == list(g.maximal_simplices)
        peo = tr.leaves_first_peo(t)
        ok = ok and is_peo(g, peo)
        gamma = gm.from_edge_word(g, random_edge_word(rng, g, rng.randint(0, 8)))
        nf = gm.normal_form(gamma, peo)
        ok = ok and all(len(u.alphabet) == tr.height(t, v) for v, u in zip(nf.peo, nf.layers))
        ok = ok and all(tr.projection_kills_layers(t, gamma, w) for w in t.vertices)
        res.record(ok, f"{t.to_newick()} {gamma}")
    return res


SUITES = {
    "chordality": chordality,
    "chromatic": chromatic,
    "regions": regions,
    "functoriality": functoriality,
    "combing": combing,
    "tower": tower,
    "normal_forms": normal_forms,
    "complete_graph": complete_graph,
    "rooted_trees": rooted_trees,
}


def run_all(seed: int = 0, cases: int | None = None, only=None, echo=None) -> list:
    out = []
    for name, suite in SUITES.items():
        if only and name not in only:
            continue
        res = suite(random.Random(f"{seed}:{name}"), cases)
        if echo is not None:
            echo(res.line())
        out.append(res)
    return out
