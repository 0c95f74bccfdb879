"""Index sets and words over them.

A word is a finite vector of letters drawn from one of the index sets
``N`` (non-negative integers), ``Z`` or ``Z/2d``.  Words label simple
comodules; the involution ``*`` reverses a word and shifts every letter by
one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "IndexSetError",
    "IndexSet",
    "NAT",
    "INT",
    "Word",
    "concat",
    "star",
    "linked",
    "cancellable",
    "is_one_step",
    "words_in_window",
]


class IndexSetError(ValueError):
    """Raised when words over different index sets are combined, or a letter
    does not belong to its index set."""


@dataclass(frozen=True)
class IndexSet:
    kind: str  # "nat", "int" or "mod"
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("nat", "int", "mod"):
            raise IndexSetError(f"unknown index set kind {self.kind!r}")
        if self.kind == "mod":
            if self.modulus is None or self.modulus < 2 or self.modulus % 2:
                raise IndexSetError(f"modulus must be an even integer >= 2, got {self.modulus!r}")
        elif self.modulus is not None:
            raise IndexSetError(f"modulus only makes sense for kind 'mod'")

    @classmethod
    def mod(cls, modulus: int) -> "IndexSet":
        return cls("mod", modulus)

    def canonical(self, letter: int) -> int:
        """Return the canonical representative of `letter`, or raise if it is not in the set."""
        letter = int(letter)
        if self.kind == "mod":
            return letter % self.modulus
        if self.kind == "nat" and letter < 0:
            raise IndexSetError(f"letter {letter} is not a non-negative integer")
        return letter

    def shift(self, letter: int, by: int = 1) -> int:
        if self.kind == "mod":
            return (letter + by) % self.modulus
        return letter + by

    def is_step(self, a: int, b: int) -> bool:
        """True iff ``b = a + 1`` or ``b = a - 1`` in this index set."""
        return b == self.shift(a, 1) or b == self.shift(a, -1)

    @staticmethod
    def is_even(letter: int) -> bool:
        return letter % 2 == 0

    def letters(self, window: tuple[int, int] | None = None) -> list[int]:
        """All letters in the inclusive `window`; the window may be omitted only for ``Z/2d``."""
        if window is None:
            if self.kind != "mod":
                raise IndexSetError("an explicit letter window is required for infinite index sets")
            return list(range(self.modulus))
        lo, hi = window
        if lo > hi:
            raise IndexSetError(f"empty letter window {window!r}")
        if self.kind == "nat" and lo < 0:
            raise IndexSetError("letter window for N must be non-negative")
        out = sorted({self.canonical(x) for x in range(lo, hi + 1)})
        return out

    def to_json(self) -> dict:
        if self.kind == "mod":
            return {"kind": "mod", "modulus": self.modulus}
        return {"kind": self.kind}

    @classmethod
    def from_json(cls, obj: dict) -> "IndexSet":
        return cls(obj["kind"], obj.get("modulus"))

    @classmethod
    def parse(cls, text: str) -> "IndexSet":
        """Parse the command-line forms ``nat``, ``int`` and ``mod:<2d>``."""
        if text in ("nat", "int"):
            return cls(text)
        if text.startswith("mod:"):
            try:
                modulus = int(text[4:])
            except ValueError:
                raise IndexSetError(f"bad modulus in {text!r}") from None
            return cls.mod(modulus)
        raise IndexSetError(f"unknown index set {text!r}")

    def __str__(self):
        if self.kind == "mod":
            return f"Z/{self.modulus}"
        return "N" if self.kind == "nat" else "Z"


NAT = IndexSet("nat")
INT = IndexSet("int")


@dataclass(frozen=True, init=False)
class Word:
    letters: tuple[int, ...]
    index_set: IndexSet

    def __init__(self, letters: Iterable[int] = (), index_set: IndexSet = NAT):
        object.__setattr__(self, "letters", tuple(index_set.canonical(x) for x in letters))
        object.__setattr__(self, "index_set", index_set)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.index_set)
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        return concat(self, other)

    def sort_key(self) -> tuple:
        """Length first, then lexicographic on letters."""
        return (len(self.letters), self.letters)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def star(self) -> "Word":
        return star(self)

    def to_json(self) -> list[int]:
        return list(self.letters)

    def __repr__(self):
        return f"Word({self.letters!r}, {self.index_set})"


def _check_same(a: Word, b: Word) -> None:
    if a.index_set != b.index_set:
        raise IndexSetError(f"index sets differ: {a.index_set} vs {b.index_set}")


def concat(a: Word, b: Word) -> Word:
    _check_same(a, b)
    return Word(a.letters + b.letters, a.index_set)


def star(w: Word) -> Word:
    """Reverse `w` and add one to every letter."""
    R = w.index_set
    return Word((R.shift(x) for x in reversed(w.letters)), R)


def linked(t: Word, u: Word) -> bool:
    """True iff ``t* = u`` or ``u* = t``."""
    _check_same(t, u)
    return star(t) == u or star(u) == t


def cancellable(t: Word, u: Word) -> bool:
    """True iff `t` followed by `u` can be fully nested-bracketed.

    That is, ``|t| = |u|`` and the last letter of `t` differs by one from the
    first letter of `u`, the second-to-last from the second, and so on, each
    pair independently by +1 or -1.  This is the cancellation used by the
    fusion product; it coincides with `linked` over ``Z/2``.
    """
    _check_same(t, u)
    if len(t) != len(u):
        return False
    R = t.index_set
    return all(R.is_step(a, b) for a, b in zip(reversed(t.letters), u.letters))


def is_one_step(w: Word) -> bool:
    R = w.index_set
    return all(R.is_step(a, b) for a, b in zip(w.letters, w.letters[1:]))


def words_in_window(
    index_set: IndexSet,
    max_length: int,
    window: tuple[int, int] | None = None,
    min_length: int = 0,
) -> Iterator[Word]:
    """All words of length in ``[min_length, max_length]`` with letters in `window`,
    in canonical (length, lexicographic) order."""
    alphabet: Sequence[int] = index_set.letters(window)
    for length in range(min_length, max_length + 1):
        for letters in itertools.product(alphabet, repeat=length):
            yield Word(letters, index_set)
