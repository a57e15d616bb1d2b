"""Counting invariants of chordal graphical arrangements, with brute-force oracles.

The elimination tower gives, for a PEO with later-neighbour counts ``N_i``,

* chromatic polynomial  ``prod (q - N_i)``,
* Poincare polynomial   ``prod (1 + N_i t)``,
* number of regions     ``prod (1 + N_i)``.

Each closed form is paired with an exhaustive count so the two can be
compared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gamma as gm
from .errors import TooLarge
from .graph import Graph, check_peo, find_peo

__all__ = [
    "ExponentVector",
    "IntPolynomial",
    "abelianization",
    "brute_force_acyclic_orientations",
    "brute_force_coloring_count",
    "chromatic_polynomial",
    "exponents",
    "poincare_polynomial",
    "region_count",
]

MAX_COLORING_VERTICES = 12
MAX_ORIENTATION_EDGES = 20


@dataclass(frozen=True)
class ExponentVector:
    peo: tuple
    exps: tuple

    def __iter__(self):
        return iter(self.exps)

    def __len__(self):
        return len(self.exps)


def exponents(g: Graph, peo=None) -> ExponentVector:
    peo = check_peo(g, peo) if peo is not None else find_peo(g)
    pos = {v: k for k, v in enumerate(peo)}
    exps = tuple(sum(1 for u in g.neighbors(v) if pos[u] > k) for k, v in enumerate(peo))
    return ExponentVector(peo, exps)


class IntPolynomial:
    """Univariate polynomial with exact integer coefficients, lowest degree first."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var: str = "q"):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def linear(cls, a: int, b: int, var: str = "q") -> IntPolynomial:
        """``a + b*var``."""
        return cls((a, b), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial((), self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out, self.var)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial([x + y for x, y in zip(a, b)], self.var)

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c][::-1]
        if not terms:
            return "0"
        out = []
        for n, (k, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if k == 0 else self.var if k == 1 else f"{self.var}^{k}"
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            if n == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def to_json(self) -> list:
        return list(self.coeffs)


def _product(factors, var: str) -> IntPolynomial:
    out = IntPolynomial((1,), var)
    for f in factors:
        out = out * f
    return out


def chromatic_polynomial(g: Graph, peo=None) -> IntPolynomial:
    return _product((IntPolynomial.linear(-n, 1, "q") for n in exponents(g, peo)), "q")


def poincare_polynomial(g: Graph, peo=None) -> IntPolynomial:
    return _product((IntPolynomial.linear(1, n, "t") for n in exponents(g, peo)), "t")


def region_count(g: Graph, peo=None) -> int:
    out = 1
    for n in exponents(g, peo):
        out *= 1 + n
    return out


def brute_force_coloring_count(g: Graph, q: int, chunk: int = 1 << 20) -> int:
    """Count proper ``q``-colourings by enumerating all ``q^|V|`` assignments."""
    n = len(g.vertices)
    if n > MAX_COLORING_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the limit of {MAX_COLORING_VERTICES}")
    if q < 0:
        raise ValueError("q must be nonnegative")
    if n == 0:
        return 1
    if q == 0:
        return 0
    idx = [(g.position(u), g.position(v)) for u, v in g.edges]
    total = q ** n
    count = 0
    powers = q ** np.arange(n, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(total, start + chunk), dtype=np.int64)
        colors = (codes[:, None] // powers[None, :]) % q
        ok = np.ones(len(codes), dtype=bool)
        for a, b in idx:
            ok &= colors[:, a] != colors[:, b]
        count += int(ok.sum())
    return count


def brute_force_acyclic_orientations(g: Graph) -> int:
    """Count acyclic orientations over all ``2^|E|`` choices of direction."""
    m = len(g.edges)
    if m > MAX_ORIENTATION_EDGES:
        raise TooLarge(f"{m} edges exceeds the limit of {MAX_ORIENTATION_EDGES}")
    n = len(g.vertices)
    idx = [(g.position(u), g.position(v)) for u, v in g.edges]
    count = 0
    for mask in range(1 << m):
        succ = [0] * n
        indeg = [0] * n
        for k, (a, b) in enumerate(idx):
            if mask >> k & 1:
                a, b = b, a
            succ[a] |= 1 << b
            indeg[b] += 1
        # Kahn's algorithm: acyclic iff every vertex gets removed
        ready = [v for v in range(n) if indeg[v] == 0]
        removed = 0
        while ready:
            v = ready.pop()
            removed += 1
            s = succ[v]
            while s:
                low = s & -s
                w = low.bit_length() - 1
                s ^= low
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
        count += removed == n
    return count


def abelianization(gamma: gm.LimitElement, peo=None) -> np.ndarray:
    """Exponent sum of each edge generator (in ``graph.edges`` order), via the normal form."""
    g = gamma.graph
    nf = gm.normal_form(gamma, peo)
    out = np.zeros(len(g.edges), dtype=np.int64)
    col = {e: k for k, e in enumerate(g.edges)}
    for layer in nf.layers:
        for e, s in layer.letters:
            out[col[e]] += s
    return out
