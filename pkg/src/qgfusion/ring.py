"""The Grothendieck ring Z[A_R] in its two bases.

Elements are finitely supported integer combinations of words, tagged with
the basis they are written in:

* ``"f"`` -- tensor powers ``f_r = f_{r_1} ... f_{r_k}`` of the fundamental
  comodule and its duals; the product is concatenation of words.
* ``"u"`` -- the simple comodules ``u_r``; the product is the fusion product
  `odot`, which cancels a suffix of the left word against a prefix of the
  right word whenever the two can be fully nested-bracketed.

Over ``Z/2`` (the universal cosovereign case ``d = 1``) the ``u`` words are
simple labels only when the Hopf algebra is cosemisimple.  The arithmetic is
the same either way.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping

from .configurations import enumerate_configurations, residual
from .words import IndexSet, IndexSetError, Word, cancellable

__all__ = [
    "RingElement",
    "f_product",
    "odot",
    "odot_words",
    "star_element",
    "expand_f",
    "to_u_basis",
    "to_f_basis",
    "dim",
    "dim_brute_force",
    "dim_element",
]

BASES = ("f", "u")


class RingElement:
    """Immutable integer combination of words in the ``f`` or ``u`` basis."""

    __slots__ = ("_terms", "index_set", "basis", "_hash")

    def __init__(self, terms: Mapping[Word, int] | Iterable[tuple[Word, int]], index_set: IndexSet, basis: str):
        if basis not in BASES:
            raise ValueError(f"basis must be 'f' or 'u', got {basis!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, int] = defaultdict(int)
        for w, c in items:
            if w.index_set != index_set:
                raise IndexSetError(f"word {w.letters} is over {w.index_set}, expected {index_set}")
            acc[w] += int(c)
        self._terms = {w: acc[w] for w in sorted(acc, key=Word.sort_key) if acc[w]}
        self.index_set = index_set
        self.basis = basis
        self._hash = None

    @classmethod
    def word(cls, w: Word | Iterable[int], basis: str, index_set: IndexSet | None = None) -> "RingElement":
        if not isinstance(w, Word):
            w = Word(w, index_set)
        return cls({w: 1}, w.index_set, basis)

    @classmethod
    def zero(cls, index_set: IndexSet, basis: str) -> "RingElement":
        return cls({}, index_set, basis)

    @classmethod
    def one(cls, index_set: IndexSet, basis: str) -> "RingElement":
        return cls({Word((), index_set): 1}, index_set, basis)

    @property
    def terms(self) -> Mapping[Word, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, w: Word) -> int:
        return self._terms.get(w, 0)

    def support(self) -> list[Word]:
        return list(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "RingElement") -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected a RingElement, got {type(other).__name__}")
        if other.index_set != self.index_set:
            raise IndexSetError(f"index sets differ: {self.index_set} vs {other.index_set}")
        if other.basis != self.basis:
            raise ValueError(f"bases differ: {self.basis} vs {other.basis}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(itertools.chain(self.items(), other.items()), self.index_set, self.basis)

    def __neg__(self) -> "RingElement":
        return RingElement(((w, -c) for w, c in self.items()), self.index_set, self.basis)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(((w, c * other) for w, c in self.items()), self.index_set, self.basis)
        self._check(other)
        return f_product(self, other) if self.basis == "f" else odot(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "RingElement":
        out = RingElement.one(self.index_set, self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return (self.index_set, self.basis, self._terms) == (other.index_set, other.basis, other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.index_set, self.basis, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return f"0[{self.basis}]"
        parts = [f"{c}*{self.basis}{w.letters}" for w, c in self.items()]
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "index_set": self.index_set.to_json(),
            "basis": self.basis,
            "terms": [{"word": w.to_json(), "coeff": str(c)} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RingElement":
        R = IndexSet.from_json(obj["index_set"])
        terms = [(Word(t["word"], R), int(t["coeff"])) for t in obj["terms"]]
        return cls(terms, R, obj["basis"])


def _require(a: RingElement, basis: str) -> None:
    if a.basis != basis:
        raise ValueError(f"expected an element in the {basis!r} basis, got {a.basis!r}")


def f_product(a: RingElement, b: RingElement) -> RingElement:
    _require(a, "f")
    a._check(b)
    terms = ((r + s, x * y) for r, x in a.items() for s, y in b.items())
    return RingElement(terms, a.index_set, "f")


@lru_cache(maxsize=65536)
def odot_words(r: Word, s: Word) -> tuple[tuple[Word, int], ...]:
    """Fusion product of two basis words, as ``(word, multiplicity)`` pairs.

    Sums ``a + b`` over all splittings ``r = a t``, ``s = t' b`` with ``t t'``
    fully nested-bracketable (see `cancellable`); the empty splitting gives
    ``r + s`` itself.
    """
    out: dict[Word, int] = defaultdict(int)
    for m in range(min(len(r), len(s)) + 1):
        a, t = r[: len(r) - m], r[len(r) - m :]
        t2, b = s[:m], s[m:]
        if cancellable(t, t2):
            out[a + b] += 1
    return tuple(out.items())


def odot(a: RingElement, b: RingElement) -> RingElement:
    _require(a, "u")
    a._check(b)
    terms = ((w, x * y * m) for r, x in a.items() for s, y in b.items() for w, m in odot_words(r, s))
    return RingElement(terms, a.index_set, "u")


def star_element(a: RingElement) -> RingElement:
    return RingElement(((w.star(), c) for w, c in a.items()), a.index_set, a.basis)


@lru_cache(maxsize=65536)
def _expansion(w: Word) -> tuple[tuple[Word, int], ...]:
    counts: dict[Word, int] = defaultdict(int)
    for c in enumerate_configurations(w):
        counts[residual(w, c)] += 1
    return tuple(counts.items())


def expand_f(w: Word) -> RingElement:
    """Decompose ``f_w`` into simples: one ``u`` term per configuration of `w`."""
    return RingElement(_expansion(w), w.index_set, "u")


def to_u_basis(a: RingElement) -> RingElement:
    _require(a, "f")
    terms = ((v, c * m) for w, c in a.items() for v, m in _expansion(w))
    return RingElement(terms, a.index_set, "u")


def to_f_basis(a: RingElement) -> RingElement:
    """Invert `to_u_basis` by back-substitution from the longest words down.

    ``expand_f(w)`` is ``u_w`` plus strictly shorter words, so peeling off the
    longest remaining term always terminates.
    """
    _require(a, "u")
    remaining: dict[Word, int] = dict(a.items())
    out: dict[Word, int] = {}
    while remaining:
        w = max(remaining, key=Word.sort_key)
        c = remaining[w]
        out[w] = c
        for v, m in _expansion(w):
            left = remaining.get(v, 0) - c * m
            if left:
                remaining[v] = left
            else:
                remaining.pop(v, None)
    return RingElement(out, a.index_set, "f")


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"matrix size n must be at least 2, got {n}")


def dim(w: Word, n: int) -> int:
    """Dimension of the simple ``u_w`` for the n x n quantum groups.

    Counts sequences in ``{1..n}^len(w)`` avoiding ``(n, n)`` across a +-1 step
    out of an even letter and ``(1, 1)`` across a +-1 step out of an odd one.
    """
    _check_n(n)
    if not len(w):
        return 1
    R = w.index_set
    counts = [1] * n  # counts[v]: sequences so far ending in value v + 1
    for a, b in zip(w.letters, w.letters[1:]):
        total = sum(counts)
        nxt = [total] * n
        if R.is_step(a, b):
            forbidden = n - 1 if R.is_even(a) else 0
            nxt[forbidden] -= counts[forbidden]
        counts = nxt
    return sum(counts)


def dim_brute_force(w: Word, n: int) -> int:
    """Enumerate ``{1..n}^len(w)`` directly.  Test oracle for `dim`."""
    _check_n(n)
    R = w.index_set
    total = 0
    for seq in itertools.product(range(1, n + 1), repeat=len(w)):
        ok = True
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if not R.is_step(a, b):
                continue
            bad = n if R.is_even(a) else 1
            if seq[k] == seq[k + 1] == bad:
                ok = False
                break
        total += ok
    return total


def dim_element(a: RingElement, n: int) -> int:
    _check_n(n)
    if a.basis == "f":
        return sum(c * n ** len(w) for w, c in a.items())
    return sum(c * dim(w, n) for w, c in a.items())
