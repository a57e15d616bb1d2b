"""Pure (colored) braid groups on arbitrary ordered index sets.

An element of ``P(I)`` is written as a :class:`BraidWord` in the Artin
generators ``A[i,j]``.  Two independent tools decide equality:

* the Artin action on the free group ``<x_i : i in I>`` (:func:`artin_auto`,
  :func:`equal`), which is faithful and serves as the oracle;
* combing (:func:`comb`), which rewrites a word as a product of free layers,
  one per strand, and yields a genuine normal form.

The conjugation rules used by combing are not typed in by hand.  Each rule
``A^e y A^-e = C y C^-1`` (``y`` a kernel generator) is found by a short
search over conjugators ``C`` on four strands and checked against the Artin
action before use.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    BadIndex,
    BudgetExceeded,
    IndexSetMismatch,
    InvariantViolation,
    NotASubset,
    NotInKernel,
    ParseError,
)
from .freegroup import Alphabet, FreeWord, reduce_codes, substitute_codes

__all__ = [
    "ArtinAuto",
    "BraidWord",
    "CombedForm",
    "artin_auto",
    "comb",
    "comb_equal",
    "equal",
    "forget",
    "generator",
    "include",
    "kernel_alphabet",
    "kernel_coordinates",
    "uncomb",
]

Pair = tuple  # (i, j) with i before j in the index order


def _canonical_pair(index_set: Sequence, i, j) -> Pair:
    pos = {s: k for k, s in enumerate(index_set)}
    if i not in pos or j not in pos or i == j:
        raise BadIndex(f"A[{i},{j}] is not a generator over {list(index_set)}")
    return (i, j) if pos[i] < pos[j] else (j, i)


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators of ``P(I)``; not normalized on construction."""

    index_set: tuple
    factors: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "index_set", tuple(self.index_set))
        if len(set(self.index_set)) != len(self.index_set):
            raise BadIndex("index set has repeated labels")
        pos = {s: k for k, s in enumerate(self.index_set)}
        fixed = []
        for (i, j), e in self.factors:
            if i not in pos or j not in pos or i == j:
                raise BadIndex(f"A[{i},{j}] is not a generator over {list(self.index_set)}")
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            fixed.append(((i, j) if pos[i] < pos[j] else (j, i), e))
        object.__setattr__(self, "factors", tuple(fixed))

    @classmethod
    def identity(cls, index_set) -> BraidWord:
        return cls(tuple(index_set), ())

    def __len__(self):
        return len(self.factors)

    def _check(self, other: BraidWord):
        if self.index_set != other.index_set:
            raise IndexSetMismatch(f"{self.index_set} vs {other.index_set}")

    def __mul__(self, other: BraidWord) -> BraidWord:
        self._check(other)
        return BraidWord(self.index_set, self.factors + other.factors)

    def inverse(self) -> BraidWord:
        return BraidWord(self.index_set, tuple((p, -e) for p, e in reversed(self.factors)))

    def __pow__(self, n: int) -> BraidWord:
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.index_set, base.factors * abs(n))

    def freely_reduced(self) -> BraidWord:
        out: list = []
        for p, e in self.factors:
            if out and out[-1] == (p, -e):
                out.pop()
            else:
                out.append((p, e))
        return BraidWord(self.index_set, tuple(out))

    def exponent_sums(self) -> dict:
        sums = {}
        for p, e in self.factors:
            sums[p] = sums.get(p, 0) + e
        return {p: s for p, s in sums.items() if s}

    def __str__(self):
        if not self.factors:
            return "1"
        return " ".join(
            f"A[{i},{j}]" if e == 1 else f"A[{i},{j}]^-1" for (i, j), e in self.factors
        )

    # -- serialization ------------------------------------------------------
    @classmethod
    def parse(cls, index_set, text: str) -> BraidWord:
        """Parse ``A[i,j]`` / ``A[i,j]^-1`` tokens; labels are matched by ``str``."""
        index_set = tuple(index_set)
        by_name = {str(s): s for s in index_set}
        factors = []
        rest = text.strip()
        if rest == "1":
            return cls(index_set, ())
        pos = 0
        for m in _BRAID_TOKEN.finditer(rest):
            if rest[pos:m.start()].strip():
                raise ParseError(f"cannot parse {rest[pos:m.start()]!r} in {text!r}")
            pos = m.end()
            a, b = m.group(1).strip(), m.group(2).strip()
            if a not in by_name or b not in by_name:
                raise BadIndex(f"A[{a},{b}] uses a label outside {list(index_set)}")
            exp = int(m.group(3)) if m.group(3) else 1
            factors.extend([((by_name[a], by_name[b]), 1 if exp > 0 else -1)] * abs(exp))
        if rest[pos:].strip():
            raise ParseError(f"cannot parse {rest[pos:]!r} in {text!r}")
        return cls(index_set, tuple(factors))

    def to_json(self) -> list:
        return [[i, j, e] for (i, j), e in self.factors]

    @classmethod
    def from_json(cls, index_set, data) -> BraidWord:
        index_set = tuple(index_set)
        by_name = {str(s): s for s in index_set}

        def label(x):
            if x in index_set:
                return x
            if str(x) in by_name:
                return by_name[str(x)]
            raise BadIndex(f"label {x!r} outside {list(index_set)}")

        return cls(index_set, tuple(((label(i), label(j)), int(e)) for i, j, e in data))


_BRAID_TOKEN = re.compile(r"A\[([^,\]]+),([^\]]+)\](?:\^([+-]?\d+))?")


def generator(index_set, i, j, exp: int = 1) -> BraidWord:
    """The Artin generator ``A[i,j]`` (symmetric in ``i``, ``j``)."""
    index_set = tuple(index_set)
    return BraidWord(index_set, (( _canonical_pair(index_set, i, j), exp),))


# ---------------------------------------------------------------------------
# Artin action
# ---------------------------------------------------------------------------

def _half_twist(p: int, sign: int) -> dict:
    """Substitution table (positive codes only) of sigma_p^sign on positions p, p+1."""
    a, b = p + 1, p + 2
    if sign > 0:
        return {a: (a, b, -a), b: (a,)}
    return {a: (b,), b: (-b, a, b)}


def _compose(n: int, tables: Iterable[dict]) -> dict:
    """Images of the composite phi_1 o phi_2 o ... (leftmost applied last)."""
    phi = {k: (k,) for k in range(1, n + 1)}
    for t in tables:
        full = _full_table(phi)
        for k, img in t.items():
            phi[k] = substitute_codes(img, full)
    return {k: v for k, v in phi.items() if v != (k,)}


def _full_table(phi: dict) -> dict:
    full = {}
    for k, img in phi.items():
        full[k] = img
        full[-k] = tuple(-c for c in reversed(img))
    return full


@lru_cache(maxsize=None)
def _generator_table(n: int, p: int, q: int, sign: int) -> dict:
    """Artin substitution for ``A[p,q]^sign`` (0-based positions p < q) on F_n.

    ``A[p,q] = s_{q-1} ... s_{p+1} s_p^2 s_{p+1}^-1 ... s_{q-1}^-1`` in half twists.
    """
    up = [_half_twist(k, 1) for k in range(q - 1, p, -1)]
    down = [_half_twist(k, -1) for k in range(p + 1, q)]
    core = [_half_twist(p, sign)] * 2
    return _compose(n, up + core + down)


def _artin_images(index_set: tuple, factors: Iterable) -> tuple:
    """Images of x_1..x_n (as code tuples) under the action of a factor list."""
    n = len(index_set)
    pos = {s: k for k, s in enumerate(index_set)}
    phi = [(k,) for k in range(1, n + 1)]
    inv: list = list((-k,) for k in range(1, n + 1))
    for (i, j), e in factors:
        p, q = pos[i], pos[j]
        table = _generator_table(n, p, q, e)
        full = {}
        for k in range(p + 1, q + 2):
            full[k] = phi[k - 1]
            if inv[k - 1] is None:
                inv[k - 1] = tuple(-c for c in reversed(phi[k - 1]))
            full[-k] = inv[k - 1]
        for k, img in table.items():
            phi[k - 1] = substitute_codes(img, full)
            inv[k - 1] = None
    return tuple(phi)


def strand_alphabet(index_set) -> Alphabet:
    index_set = tuple(index_set)
    return Alphabet(index_set, [f"x{s}" for s in index_set])


@dataclass(frozen=True)
class ArtinAuto:
    """Automorphism of the free group on strands ``x_i``, stored by its images."""

    index_set: tuple
    images: tuple  # code tuples, one per strand in index order

    @property
    def alphabet(self) -> Alphabet:
        return strand_alphabet(self.index_set)

    def image(self, label) -> FreeWord:
        k = self.index_set.index(label)
        return FreeWord(self.alphabet, self.images[k])

    def as_dict(self) -> dict:
        return {s: self.image(s) for s in self.index_set}

    def __call__(self, word: FreeWord) -> FreeWord:
        return word.substitute(self.as_dict())

    def compose(self, other: ArtinAuto) -> ArtinAuto:
        """``self o other``: apply ``other`` first."""
        if self.index_set != other.index_set:
            raise IndexSetMismatch(f"{self.index_set} vs {other.index_set}")
        full = _full_table({k + 1: img for k, img in enumerate(self.images)})
        return ArtinAuto(self.index_set, tuple(substitute_codes(img, full) for img in other.images))

    def is_identity(self) -> bool:
        return all(img == (k + 1,) for k, img in enumerate(self.images))

    def boundary_word(self) -> FreeWord:
        """Image of the ordered product x_{i1} ... x_{in}."""
        code = reduce_codes(c for img in self.images for c in img)
        return FreeWord(self.alphabet, code)

    def fixes_boundary(self) -> bool:
        return self.boundary_word().code == tuple(range(1, len(self.index_set) + 1))

    def __str__(self):
        return ", ".join(f"x{s} -> {self.image(s)}" for s in self.index_set)


def artin_auto(w: BraidWord) -> ArtinAuto:
    """Artin action of ``w``; satisfies ``artin_auto(u*v) == artin_auto(u).compose(artin_auto(v))``."""
    return ArtinAuto(w.index_set, _artin_images(w.index_set, w.factors))


def equal(u: BraidWord, v: BraidWord) -> bool:
    """Word problem in ``P(I)`` decided by the Artin action."""
    u._check(v)
    if u.factors == v.factors:
        return True
    return _artin_images(u.index_set, u.factors) == _artin_images(v.index_set, v.factors)


def is_trivial(w: BraidWord) -> bool:
    if not w.freely_reduced().factors:
        return True
    return all(img == (k + 1,) for k, img in enumerate(_artin_images(w.index_set, w.factors)))


# ---------------------------------------------------------------------------
# strand forgetting and inclusion
# ---------------------------------------------------------------------------

def _subset(sub, index_set) -> tuple:
    sub = set(sub)
    if not sub <= set(index_set):
        raise NotASubset(f"{sorted(map(str, sub))} is not contained in {list(index_set)}")
    return tuple(s for s in index_set if s in sub)


def forget(w: BraidWord, keep) -> BraidWord:
    """Delete the strands outside ``keep``: ``A[i,j]`` survives iff both ends are kept."""
    J = _subset(keep, w.index_set)
    Jset = set(J)
    return BraidWord(J, tuple((p, e) for p, e in w.factors if p[0] in Jset and p[1] in Jset))


def include(w: BraidWord, index_set) -> BraidWord:
    """Read ``w`` in the larger index set (a section of :func:`forget`).

    The order of the larger set must restrict to the order of ``w.index_set``.
    """
    index_set = tuple(index_set)
    J = _subset(w.index_set, index_set)
    if J != w.index_set:
        raise IndexSetMismatch("index orders are incompatible")
    return BraidWord(index_set, w.factors)


# ---------------------------------------------------------------------------
# kernel rewriting
# ---------------------------------------------------------------------------

def kernel_alphabet(index_set, m) -> Alphabet:
    """Free basis ``{A[u,m] : u != m}`` of the kernel of forgetting strand ``m``."""
    index_set = tuple(index_set)
    pairs = [_canonical_pair(index_set, u, m) for u in index_set if u != m]
    return Alphabet(pairs, [f"A[{i},{j}]" for i, j in pairs])


_RULE_SEARCH_DEPTH = 6


@lru_cache(maxsize=None)
def _pattern_rule(k: int, i: int, j: int, sign: int, t: int, m: int) -> tuple:
    """Find ``W`` with ``A[i,j]^sign A[t,m] A[i,j]^-sign = W`` in ``P(range(k))``.

    ``W`` is searched as ``C A[t,m] C^-1`` with ``C`` a reduced word in the
    kernel generators on the strands ``{i, j, t}``; each candidate is tested
    with the Artin action.  Returns ``W`` as a tuple of ``((a, b), e)`` letters.
    """
    I = tuple(range(k))
    y = (min(t, m), max(t, m))
    g = (i, j)
    target = _artin_images(I, [(g, sign), (y, 1), (g, -sign)])
    letters = sorted({(min(u, m), max(u, m)) for u in (i, j, t) if u != m})
    alph = [(p, 1) for p in letters] + [(p, -1) for p in letters]
    for length in range(_RULE_SEARCH_DEPTH + 1):
        for C in itertools.product(alph, repeat=length):
            if any(C[a] == (C[a + 1][0], -C[a + 1][1]) for a in range(length - 1)):
                continue
            W = _free_reduce(list(C) + [(y, 1)] + [(p, -e) for p, e in reversed(C)])
            if _artin_images(I, W) == target:
                return tuple(W)
    raise InvariantViolation(
        f"no conjugation rule found for A[{i},{j}]^{sign} acting on A[{t},{m}] in P_{k}"
    )


def _free_reduce(letters: list) -> list:
    out: list = []
    for p, e in letters:
        if out and out[-1] == (p, -e):
            out.pop()
        else:
            out.append((p, e))
    return out


class _KernelRewriter:
    """Conjugation action of ``P(I minus m)`` on the free kernel at strand ``m``."""

    def __init__(self, index_set: tuple, m):
        self.index_set = index_set
        self.m = m
        self.alphabet = kernel_alphabet(index_set, m)
        self.rest = tuple(s for s in index_set if s != m)
        self._tables: dict = {}

    def code(self, pair, e: int) -> int:
        return (self.alphabet.index(pair) + 1) * e

    def table(self, pair, e: int) -> dict:
        """Images (positive kernel codes only) of conjugation by ``A[pair]^e``."""
        key = (pair, e)
        if key not in self._tables:
            self._tables[key] = self._build_table(pair, e)
        return self._tables[key]

    def _build_table(self, pair, e: int) -> dict:
        pos = {s: k for k, s in enumerate(self.index_set)}
        i, j = pair
        table = {}
        for y in self.alphabet.symbols:
            t = y[0] if y[1] == self.m else y[1]
            sub = sorted({i, j, t, self.m}, key=pos.__getitem__)
            r = {s: n for n, s in enumerate(sub)}
            W = _pattern_rule(len(sub), r[i], r[j], e, r[t], r[self.m])
            letters = [((sub[a], sub[b]), s) for (a, b), s in W]
            # confirm the transplanted rule in the full group
            lhs = [(pair, e), (y, 1), (pair, -e)]
            if _artin_images(self.index_set, lhs) != _artin_images(self.index_set, letters):
                raise InvariantViolation(f"conjugation rule fails in P({list(self.index_set)})")
            table[self.code(y, 1)] = tuple(self.code(p, s) for p, s in letters)
        return table


@lru_cache(maxsize=256)
def _rewriter(index_set: tuple, m) -> _KernelRewriter:
    return _KernelRewriter(index_set, m)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, n: int):
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"step budget of {self.limit} exhausted")


def _kernel_codes(w: BraidWord, m, budget: _Budget) -> tuple:
    """Write ``w`` as ``kappa * r`` with ``kappa`` in the kernel and ``r`` free of ``m``.

    Returns the kernel codes and the residual ``r`` as a factor list.
    """
    R = _rewriter(w.index_set, m)
    kappa: list[int] = []
    stack: list = []  # (letter, phi before the letter)
    phi: dict | None = None  # conjugation by the residual, None = identity
    for pair, e in w.factors:
        budget.spend(1)
        if m in pair:
            y = R.code(pair, e)
            if phi is None:
                img = (y,)
            else:
                img = phi[y] if y > 0 else tuple(-c for c in reversed(phi[-y]))
            budget.spend(len(img))
            for d in img:
                if kappa and kappa[-1] == -d:
                    kappa.pop()
                else:
                    kappa.append(d)
            continue
        if stack and stack[-1][0] == (pair, -e):
            phi = stack.pop()[1]
            continue
        stack.append(((pair, e), phi))
        table = R.table(pair, e)
        if phi is None:
            phi = dict(table)
            for k in range(1, len(R.alphabet) + 1):
                phi.setdefault(k, (k,))
        else:
            full = _full_table(phi)
            phi = {k: substitute_codes(table.get(k, (k,)), full) for k in range(1, len(R.alphabet) + 1)}
            budget.spend(sum(len(v) for v in phi.values()))
    residual = tuple(s[0] for s in stack)
    return tuple(kappa), residual


def kernel_coordinates(w: BraidWord, m=None, *, max_steps: int | None = None) -> FreeWord:
    """Coordinates of ``w`` in the free kernel of forgetting strand ``m``.

    ``m`` defaults to the last strand.  Raises :class:`NotInKernel` when
    forgetting ``m`` does not kill ``w``.
    """
    if m is None:
        m = w.index_set[-1]
    if m not in w.index_set:
        raise BadIndex(f"{m!r} is not a strand of {list(w.index_set)}")
    kappa, residual = _kernel_codes(w, m, _Budget(max_steps))
    if residual:
        rest = tuple(s for s in w.index_set if s != m)
        if not is_trivial(BraidWord(rest, residual)):
            raise NotInKernel(f"{w} does not die when strand {m} is forgotten")
    return FreeWord(kernel_alphabet(w.index_set, m), kappa)


def lift_kernel_word(word: FreeWord, index_set) -> BraidWord:
    """Read a kernel free word letter by letter as a braid word."""
    return BraidWord(tuple(index_set), word.letters)


# ---------------------------------------------------------------------------
# combing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CombedForm:
    """Layers ``u_2, ..., u_n`` with ``w = u_2 u_3 ... u_n``.

    ``layers[k]`` is the layer of strand ``index_set[k + 1]``, a reduced word
    over ``{A[s, index_set[k + 1]] : s earlier}``.
    """

    index_set: tuple
    layers: tuple

    def layer(self, label) -> FreeWord:
        k = self.index_set.index(label)
        if k == 0:
            raise BadIndex("the first strand carries no layer")
        return self.layers[k - 1]

    def is_identity(self) -> bool:
        return all(u.is_identity() for u in self.layers)

    def __str__(self):
        return "; ".join(f"{s}: {u}" for s, u in zip(self.index_set[1:], self.layers))

    def to_json(self) -> dict:
        return {
            "strands": list(self.index_set),
            "layers": {str(s): [[i, j, e] for (i, j), e in u.letters]
                       for s, u in zip(self.index_set[1:], self.layers)},
        }


def comb(w: BraidWord, *, max_steps: int | None = None) -> CombedForm:
    """Artin combing: peel the last strand, rewrite its kernel part, recurse."""
    budget = _Budget(max_steps)
    layers = []
    cur = w
    I = w.index_set
    for k in range(len(I) - 1, 0, -1):
        m = I[k]
        rest = I[:k]
        r = forget(cur, rest)
        kappa_word = include(r, I[: k + 1]).inverse() * cur
        kappa, residual = _kernel_codes(kappa_word, m, budget)
        if residual and not is_trivial(BraidWord(rest, residual)):
            raise InvariantViolation("combing residual is not trivial")
        layers.append(FreeWord(kernel_alphabet(I[: k + 1], m), kappa))
        cur = r
    return CombedForm(I, tuple(reversed(layers)))


def uncomb(c: CombedForm) -> BraidWord:
    factors = []
    for u in c.layers:
        factors.extend(u.letters)
    return BraidWord(c.index_set, tuple(factors))


def comb_equal(u: BraidWord, v: BraidWord) -> bool:
    """Equality decided by comparing combed normal forms."""
    u._check(v)
    return comb(u).layers == comb(v).layers
