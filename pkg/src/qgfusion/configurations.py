"""Bracket configurations on words.

A configuration of a word ``r`` marks some positions with matched
parentheses.  A pair ``(`` at ``i`` and ``)`` at ``j`` is allowed only when
``r[j] = r[i] +- 1`` and every position strictly between them is itself
bracketed.  Deleting the bracketed positions leaves the residual word.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .words import Word

__all__ = [
    "Symbol",
    "Configuration",
    "is_valid",
    "enumerate_configurations",
    "residual",
    "brute_force_configurations",
]


class Symbol(enum.Enum):
    BLANK = "."
    OPEN = "("
    CLOSE = ")"


@dataclass(frozen=True)
class Configuration:
    symbols: tuple[Symbol, ...]

    @classmethod
    def from_string(cls, text: str) -> "Configuration":
        try:
            return cls(tuple(Symbol(ch) for ch in text))
        except ValueError:
            raise ValueError(f"configuration strings use only '.', '(' and ')': {text!r}") from None

    @classmethod
    def blank(cls, length: int) -> "Configuration":
        return cls((Symbol.BLANK,) * length)

    def __len__(self):
        return len(self.symbols)

    def __str__(self):
        return "".join(s.value for s in self.symbols)

    def bracketed(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.symbols) if s is not Symbol.BLANK)

    def pairs(self) -> list[tuple[int, int]] | None:
        """Matched ``(i, j)`` positions, or None if the brackets are unbalanced."""
        stack: list[int] = []
        out = []
        for k, s in enumerate(self.symbols):
            if s is Symbol.OPEN:
                stack.append(k)
            elif s is Symbol.CLOSE:
                if not stack:
                    return None
                out.append((stack.pop(), k))
        if stack:
            return None
        return sorted(out)

    def sort_key(self) -> tuple:
        return (self.bracketed(), str(self))


def is_valid(w: Word, c: Configuration) -> bool:
    if len(w) != len(c):
        raise ValueError(f"configuration of length {len(c)} does not fit a word of length {len(w)}")
    pairs = c.pairs()
    if pairs is None:
        return False
    R = w.index_set
    for i, j in pairs:
        if not R.is_step(w[i], w[j]):
            return False
        if any(c.symbols[k] is Symbol.BLANK for k in range(i + 1, j)):
            return False
    return True


@lru_cache(maxsize=4096)
def enumerate_configurations(w: Word) -> tuple[Configuration, ...]:
    """Every valid configuration of `w`, sorted by bracketed positions.

    Brackets form contiguous blocks, so the search recurses on the leftmost
    position: either leave it blank, or open a block there whose interior is
    bracketed completely.
    """
    R = w.index_set
    n = len(w)

    @lru_cache(maxsize=None)
    def full(start: int, stop: int) -> tuple[tuple[Symbol, ...], ...]:
        # every position of w[start:stop] bracketed
        if start == stop:
            return ((),)
        out = []
        for close in range(start + 1, stop, 2):
            if not R.is_step(w[start], w[close]):
                continue
            for inner in full(start + 1, close):
                for rest in full(close + 1, stop):
                    out.append((Symbol.OPEN,) + inner + (Symbol.CLOSE,) + rest)
        return tuple(out)

    @lru_cache(maxsize=None)
    def from_pos(start: int) -> tuple[tuple[Symbol, ...], ...]:
        if start == n:
            return ((),)
        out = [(Symbol.BLANK,) + rest for rest in from_pos(start + 1)]
        for close in range(start + 1, n, 2):
            if not R.is_step(w[start], w[close]):
                continue
            for inner in full(start + 1, close):
                block = (Symbol.OPEN,) + inner + (Symbol.CLOSE,)
                out.extend(block + rest for rest in from_pos(close + 1))
        return tuple(out)

    found = (Configuration(s) for s in from_pos(0))
    return tuple(sorted(found, key=Configuration.sort_key))


def brute_force_configurations(w: Word) -> list[Configuration]:
    """Filter all ``3**len(w)`` symbol strings through `is_valid`.  Test oracle only."""
    candidates: Iterable[tuple[Symbol, ...]] = itertools.product(Symbol, repeat=len(w))
    found = [Configuration(s) for s in candidates if is_valid(w, Configuration(s))]
    return sorted(found, key=Configuration.sort_key)


def residual(w: Word, c: Configuration) -> Word:
    if not is_valid(w, c):
        raise ValueError(f"{c} is not a configuration of {w.letters}")
    return Word((x for x, s in zip(w.letters, c.symbols) if s is Symbol.BLANK), w.index_set)
