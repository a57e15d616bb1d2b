"""Reduced words in a free group over an explicit finite alphabet.

Words are stored as tuples of signed integer codes: the letter ``s^+1`` is
``k + 1`` and ``s^-1`` is ``-(k + 1)`` where ``k`` is the position of ``s`` in
the alphabet.  The observable contract is the sequence of ``(symbol, +-1)``
pairs returned by :attr:`FreeWord.letters`.

>>> F = Alphabet(["x", "y"])
>>> w = FreeWord.parse(F, "x y y^-1 x")
>>> str(w)
'x x'
>>> str(w.inverse() * FreeWord.parse(F, "x y"))
'x^-1 y'
"""

from __future__ import annotations

import re
from collections.abc import Hashable, Iterable, Mapping, Sequence

from .errors import AlphabetMismatch, MissingImage, ParseError, UnknownSymbol

__all__ = ["Alphabet", "FreeWord", "reduce_codes"]


class Alphabet:
    """Ordered finite set of generator symbols, compared by content.

    ``names`` optionally gives the printed form of each symbol; it defaults to
    ``str(symbol)``.
    """

    __slots__ = ("symbols", "names", "_index", "_by_name")

    def __init__(self, symbols: Iterable[Hashable], names: Sequence[str] | None = None):
        self.symbols = tuple(symbols)
        self._index = {s: k for k, s in enumerate(self.symbols)}
        if len(self._index) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")
        if names is None:
            names = [str(s) for s in self.symbols]
        self.names = tuple(names)
        self._by_name = {n: s for n, s in zip(self.names, self.symbols)}

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, symbol):
        return symbol in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def index(self, symbol) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownSymbol(f"{symbol!r} is not in {self!r}") from None

    def name(self, symbol) -> str:
        return self.names[self.index(symbol)]

    def lookup(self, name: str):
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownSymbol(f"no symbol named {name!r} in {self!r}") from None


def reduce_codes(codes: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a sequence of signed letter codes."""
    out: list[int] = []
    for c in codes:
        if out and out[-1] == -c:
            out.pop()
        else:
            out.append(c)
    return tuple(out)


_TOKEN = re.compile(r"^(?P<name>.+?)(?:\^(?P<exp>[+-]?\d+))?$")


class FreeWord:
    """A freely reduced word; immutable and hashable."""

    __slots__ = ("alphabet", "code")

    def __init__(self, alphabet: Alphabet, code: Iterable[int] = ()):
        # trusted constructor: callers pass reduced codes or go through reduce()
        self.alphabet = alphabet
        self.code = tuple(code)

    # -- construction -------------------------------------------------------
    @classmethod
    def reduce(cls, alphabet: Alphabet, letters: Iterable[tuple[Hashable, int]]) -> FreeWord:
        """Build the reduced word equal to a raw ``(symbol, exponent)`` sequence.

        Exponents may be any integer; ``(s, 3)`` means ``s s s``.
        """
        codes = []
        for symbol, exp in letters:
            k = alphabet.index(symbol) + 1
            codes.extend([k if exp > 0 else -k] * abs(exp))
        return cls(alphabet, reduce_codes(codes))

    @classmethod
    def identity(cls, alphabet: Alphabet) -> FreeWord:
        return cls(alphabet, ())

    @classmethod
    def generator(cls, alphabet: Alphabet, symbol, exp: int = 1) -> FreeWord:
        return cls.reduce(alphabet, [(symbol, exp)])

    @classmethod
    def from_codes(cls, alphabet: Alphabet, codes: Iterable[int]) -> FreeWord:
        n = len(alphabet)
        codes = list(codes)
        for c in codes:
            if c == 0 or abs(c) > n:
                raise UnknownSymbol(f"letter code {c} out of range for {alphabet!r}")
        return cls(alphabet, reduce_codes(codes))

    # -- views --------------------------------------------------------------
    @property
    def letters(self) -> tuple[tuple[Hashable, int], ...]:
        syms = self.alphabet.symbols
        return tuple((syms[abs(c) - 1], 1 if c > 0 else -1) for c in self.code)

    def __len__(self):
        return len(self.code)

    def is_identity(self) -> bool:
        return not self.code

    def exponent_sum(self, symbol) -> int:
        k = self.alphabet.index(symbol) + 1
        return sum(1 if c == k else -1 for c in self.code if abs(c) == k)

    def support(self) -> set:
        syms = self.alphabet.symbols
        return {syms[abs(c) - 1] for c in self.code}

    # -- group operations ---------------------------------------------------
    def _check(self, other: FreeWord):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"{self.alphabet!r} vs {other.alphabet!r}")

    def __mul__(self, other: FreeWord) -> FreeWord:
        self._check(other)
        a, b = self.code, other.code
        i, j = len(a), 0
        while i > 0 and j < len(b) and a[i - 1] == -b[j]:
            i -= 1
            j += 1
        return FreeWord(self.alphabet, a[:i] + b[j:])

    def inverse(self) -> FreeWord:
        return FreeWord(self.alphabet, tuple(-c for c in reversed(self.code)))

    def __pow__(self, n: int) -> FreeWord:
        base = self if n >= 0 else self.inverse()
        out = FreeWord.identity(self.alphabet)
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self, by: FreeWord) -> FreeWord:
        """Return ``by * self * by^-1``."""
        return by * self * by.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, FreeWord)
            and self.alphabet == other.alphabet
            and self.code == other.code
        )

    def equal(self, other: FreeWord) -> bool:
        """Group equality; raises when the alphabets differ."""
        self._check(other)
        return self.code == other.code

    def __hash__(self):
        return hash((self.alphabet, self.code))

    def substitute(self, images: Mapping[Hashable, FreeWord], target: Alphabet | None = None) -> FreeWord:
        """Apply the homomorphism sending each symbol to ``images[symbol]``."""
        table = {}
        for k in sorted({abs(c) for c in self.code}):
            sym = self.alphabet.symbols[k - 1]
            if sym not in images:
                raise MissingImage(f"no image for {sym!r}")
            img = images[sym]
            if target is None:
                target = img.alphabet
            elif img.alphabet != target:
                raise AlphabetMismatch("images must share one target alphabet")
            table[k] = img.code
            table[-k] = tuple(-c for c in reversed(img.code))
        if target is None:
            # empty word: any image alphabet will do
            target = next((w.alphabet for w in images.values()), self.alphabet)
        return FreeWord(target, substitute_codes(self.code, table))

    # -- text ---------------------------------------------------------------
    def __str__(self):
        if not self.code:
            return "1"
        names = self.alphabet.names
        return " ".join(names[c - 1] if c > 0 else f"{names[-c - 1]}^-1" for c in self.code)

    def __repr__(self):
        return f"FreeWord({str(self)!r})"

    @classmethod
    def parse(cls, alphabet: Alphabet, text: str) -> FreeWord:
        """Parse whitespace-separated ``name`` / ``name^k`` tokens."""
        letters = []
        for tok in text.split():
            if tok == "1" and "1" not in alphabet._by_name:
                continue
            m = _TOKEN.fullmatch(tok)
            if not m:
                raise ParseError(f"bad token {tok!r} in {text!r}")
            name, exp = m.group("name"), m.group("exp")
            if name not in alphabet._by_name:
                raise ParseError(f"unknown symbol {name!r} in {text!r}")
            letters.append((alphabet._by_name[name], int(exp) if exp is not None else 1))
        return cls.reduce(alphabet, letters)


def substitute_codes(code: Sequence[int], table: Mapping[int, Sequence[int]]) -> tuple[int, ...]:
    """Concatenate ``table[c]`` for each code and freely reduce.

    Every ``table[c]`` must itself be reduced, so cancellation only happens
    where a new segment meets the output.
    """
    out: list[int] = []
    for c in code:
        seg = table[c]
        k, n = 0, len(seg)
        while k < n and out and out[-1] == -seg[k]:
            out.pop()
            k += 1
        if k < n:
            out.extend(seg[k:] if k else seg)
    return tuple(out)
