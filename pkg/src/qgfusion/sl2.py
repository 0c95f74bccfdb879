"""Clebsch-Gordan fusion for SL_q(2), at generic q.

``m_t`` is the simple comodule of dimension ``t + 1``; ``m_1`` is the
fundamental one and ``m_t * m_1 = m_{t+1} + m_{t-1}``.  The map `psi` sends the
fundamental comodule of H(2) to ``m_1`` and is used to cross-check the H(2)
fusion rules computed in :mod:`qgfusion.ring`.

Only the generic ring is modelled.  When q is a root of unity the labels
must stay below roughly half its order for these rules to hold.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Mapping

from .ring import RingElement
from .words import IndexSetError, Word, is_one_step

__all__ = ["SL2Element", "cg_multiply", "sl2_dim", "psi", "one_step_blocks"]


class SL2Element:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = defaultdict(int)
        for t, c in items:
            if t < 0:
                raise ValueError(f"SL2 labels are non-negative, got {t}")
            acc[int(t)] += int(c)
        self._terms = {t: acc[t] for t in sorted(acc) if acc[t]}

    @classmethod
    def simple(cls, t: int) -> "SL2Element":
        return cls({t: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __add__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(list(self.items()) + list(other.items()))

    def __sub__(self, other: "SL2Element") -> "SL2Element":
        return SL2Element(list(self.items()) + [(t, -c) for t, c in other.items()])

    def __mul__(self, other):
        if isinstance(other, int):
            return SL2Element((t, c * other) for t, c in self.items())
        return cg_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SL2Element":
        out = SL2Element.simple(0)
        for _ in range(k):
            out = cg_multiply(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, SL2Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*m{t}" for t, c in self.items())

    def to_json(self) -> dict:
        return {"terms": [{"t": t, "coeff": str(c)} for t, c in self.items()]}

    @classmethod
    def from_json(cls, obj: dict) -> "SL2Element":
        return cls((int(x["t"]), int(x["coeff"])) for x in obj["terms"])


@lru_cache(maxsize=None)
def _simple_product(s: int, t: int) -> tuple[tuple[int, int], ...]:
    # Recurse on the right factor: m_t = m_{t-1} m_1 - m_{t-2}.
    if t == 0:
        return ((s, 1),)
    if t == 1:
        return ((s + 1, 1), (s - 1, 1)) if s else ((1, 1),)
    acc: dict[int, int] = defaultdict(int)
    for k, c in _simple_product(s, t - 1):
        for j, e in _simple_product(k, 1):
            acc[j] += c * e
    for k, c in _simple_product(s, t - 2):
        acc[k] -= c
    return tuple((k, c) for k, c in sorted(acc.items()) if c)


def cg_multiply(a: SL2Element, b: SL2Element) -> SL2Element:
    return SL2Element(
        (k, x * y * c) for s, x in a.items() for t, y in b.items() for k, c in _simple_product(s, t)
    )


def sl2_dim(a: SL2Element) -> int:
    return sum(c * (t + 1) for t, c in a.items())


def one_step_blocks(w: Word) -> list[Word]:
    """Cut `w` between consecutive letters that do not differ by one."""
    if not len(w):
        return []
    R = w.index_set
    blocks, start = [], 0
    for k in range(1, len(w)):
        if not R.is_step(w[k - 1], w[k]):
            blocks.append(w[start:k])
            start = k
    blocks.append(w[start:])
    assert all(is_one_step(b) for b in blocks)
    return blocks


def _psi_word(w: Word, basis: str) -> SL2Element:
    out = SL2Element.simple(0)
    if basis == "f":
        return out * SL2Element.simple(1) ** len(w)
    for block in one_step_blocks(w):
        out = cg_multiply(out, SL2Element.simple(len(block)))
    return out


def psi(a: RingElement) -> SL2Element:
    """Image of an H(2) Grothendieck-ring element in the SL_q(2) ring."""
    if a.index_set.kind != "nat":
        raise IndexSetError(f"psi is defined on words over N, got {a.index_set}")
    out = SL2Element()
    for w, c in a.items():
        out = out + _psi_word(w, a.basis) * c
    return out
