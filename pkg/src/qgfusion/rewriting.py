"""Diamond-lemma rewriting for the presented Hopf algebras H(n), H_inf(n), H_d(F).

The algebra is generated by the entries ``x^r_ij`` of multiplicative
matrices ``X^r``.  Consecutive matrices are inverse to each other's
transposes, so every relation has the shape ``sum_k (pair of generators) =
delta``.  Solving each relation for one distinguished pair gives the six
reductions below; words containing none of those pairs form a basis.

    red1  x^r_in x^{r+1}_jn  (r even)       red2  x^r_i1 x^{r+1}_j1   (r odd)
    red3  x^{r+1}_ni x^r_nj  (r odd)        red4  x^{r+1}_1i x^r_1j   (r even)
    red5  x^{2d-1}_i1 x^0_j1                red6  x^0_ni x^{2d-1}_nj

red5 and red6 exist only for H_d(F), where the last relation is
``(X^{2d-1})^{-1} = F (X^0)^t F^{-1}``.  F is restricted to diagonal
matrices, and for H_d(F) red1-red4 are used only with ``r <= 2d - 2``.

Termination is enforced by a fuel budget rather than a proof: every
normal-form computation counts single-word rewrites and raises
`FuelExhausted` when the budget runs out.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .words import INT, NAT, IndexSet

__all__ = [
    "FuelExhausted",
    "Presentation",
    "Gen",
    "GenWord",
    "AlgebraElement",
    "TensorElement",
    "applicable_reductions",
    "apply_reduction",
    "reduce_once",
    "normal_form",
    "is_irreducible",
    "enumerate_irreducible",
    "count_irreducible",
    "one_step_reducts",
    "resolve_ambiguity",
    "Ambiguity",
    "ConfluenceReport",
    "check_confluence",
    "comultiply",
    "comultiply_element",
    "counit",
    "truncate",
    "DEFAULT_FUEL",
]

DEFAULT_FUEL = 10**6
Number = Fraction | int


class FuelExhausted(RuntimeError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Presentation:
    variant: str  # "free" (H(n)), "free_bij" (H_inf(n)) or "cyclic" (H_d(F))
    n: int
    d: int | None = None
    F: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.variant not in ("free", "free_bij", "cyclic"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 2:
            raise ValueError(f"matrix size n must be at least 2, got {self.n}")
        if self.variant == "cyclic":
            if self.d is None or self.d < 1:
                raise ValueError(f"d must be a positive integer, got {self.d!r}")
            F = tuple(_frac(x) for x in (self.F if self.F is not None else [1] * self.n))
            if len(F) != self.n:
                raise ValueError(f"F needs {self.n} diagonal entries, got {len(F)}")
            if any(x == 0 for x in F):
                raise ValueError("diagonal entries of F must be nonzero")
            object.__setattr__(self, "F", F)
        elif self.d is not None or self.F is not None:
            raise ValueError("d and F apply only to the cyclic variant")

    @classmethod
    def free(cls, n: int) -> "Presentation":
        return cls("free", n)

    @classmethod
    def free_bijective(cls, n: int) -> "Presentation":
        return cls("free_bij", n)

    @classmethod
    def cyclic(cls, n: int, d: int, F: Sequence[Number] | None = None) -> "Presentation":
        return cls("cyclic", n, d, None if F is None else tuple(_frac(x) for x in F))

    @property
    def index_set(self) -> IndexSet:
        if self.variant == "free":
            return NAT
        if self.variant == "free_bij":
            return INT
        return IndexSet.mod(2 * self.d)

    @property
    def top(self) -> int | None:
        """The letter ``2d - 1`` whose relation with ``X^0`` is twisted by F."""
        return 2 * self.d - 1 if self.variant == "cyclic" else None

    def untwisted(self, r: int) -> bool:
        """True if ``X^r`` and ``X^{r+1}`` satisfy the plain inverse-transpose relation."""
        return self.variant != "cyclic" or 0 <= r <= 2 * self.d - 2

    def gen(self, r: int, i: int, j: int) -> "Gen":
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"indices ({i}, {j}) out of range 1..{self.n}")
        return Gen(self.index_set.canonical(r), i, j)

    def word(self, factors: Iterable[tuple[int, int, int]]) -> "GenWord":
        return tuple(self.gen(*g) for g in factors)

    def generators(self, window: tuple[int, int] | None = None) -> list["Gen"]:
        rng = range(1, self.n + 1)
        return [Gen(r, i, j) for r in self.index_set.letters(window) for i in rng for j in rng]

    def to_json(self) -> dict:
        obj = {"variant": self.variant, "n": self.n}
        if self.variant == "cyclic":
            obj["d"] = self.d
            obj["F"] = [str(x) for x in self.F]
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "Presentation":
        F = obj.get("F")
        return cls(obj["variant"], obj["n"], obj.get("d"), None if F is None else tuple(Fraction(x) for x in F))

    def __str__(self):
        if self.variant == "free":
            return f"H({self.n})"
        if self.variant == "free_bij":
            return f"H_inf({self.n})"
        return f"H_{self.d}(diag({', '.join(map(str, self.F))}))"


class Gen(NamedTuple):
    r: int
    i: int
    j: int

    def __str__(self):
        return f"x^{self.r}_{self.i}{self.j}"

    def to_json(self) -> dict:
        return {"r": self.r, "i": self.i, "j": self.j}


GenWord = tuple  # tuple[Gen, ...]


def _word_key(w: GenWord) -> tuple:
    return (len(w), w)


def word_str(w: GenWord) -> str:
    return " ".join(str(g) for g in w) if w else "1"


class AlgebraElement:
    """Immutable rational combination of generator words."""

    __slots__ = ("_terms", "presentation")

    def __init__(self, terms: Mapping[GenWord, Number] | Iterable[tuple[GenWord, Number]], presentation: Presentation):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[GenWord, Fraction] = defaultdict(Fraction)
        for w, c in items:
            acc[tuple(w)] += c
        self._terms = {w: acc[w] for w in sorted(acc, key=_word_key) if acc[w]}
        self.presentation = presentation

    @classmethod
    def word(cls, w: GenWord | Iterable[tuple[int, int, int]], presentation: Presentation) -> "AlgebraElement":
        return cls({presentation.word(w): 1}, presentation)

    @classmethod
    def scalar(cls, c: Number, presentation: Presentation) -> "AlgebraElement":
        return cls({(): c}, presentation)

    @property
    def terms(self) -> dict[GenWord, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, w: GenWord) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "AlgebraElement") -> None:
        if other.presentation != self.presentation:
            raise ValueError(f"elements of different algebras: {self.presentation} vs {other.presentation}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(itertools.chain(self.items(), other.items()), self.presentation)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(((w, -c) for w, c in self.items()), self.presentation)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(((w, c * other) for w, c in self.items()), self.presentation)
        self._check(other)
        return AlgebraElement(
            ((u + v, x * y) for u, x in self.items() for v, y in other.items()), self.presentation
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.presentation == other.presentation and self._terms == other._terms

    def __hash__(self):
        return hash((self.presentation, tuple(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*{word_str(w)}" for w, c in self.items())

    def to_json(self) -> dict:
        return {
            "presentation": self.presentation.to_json(),
            "terms": [
                {"word": [g.to_json() for g in w], "coeff": format_fraction(c)} for w, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraElement":
        p = Presentation.from_json(obj["presentation"])
        terms = [(p.word((g["r"], g["i"], g["j"]) for g in t["word"]), Fraction(t["coeff"])) for t in obj["terms"]]
        return cls(terms, p)


class TensorElement:
    """Rational combination of pairs of generator words, i.e. an element of H (x) H."""

    __slots__ = ("_terms", "presentation")

    def __init__(self, terms: Iterable[tuple[tuple[GenWord, GenWord], Number]], presentation: Presentation):
        acc: dict[tuple[GenWord, GenWord], Fraction] = defaultdict(Fraction)
        for (a, b), c in terms:
            acc[(tuple(a), tuple(b))] += c
        key = lambda ab: (_word_key(ab[0]), _word_key(ab[1]))
        self._terms = {ab: acc[ab] for ab in sorted(acc, key=key) if acc[ab]}
        self.presentation = presentation

    @property
    def terms(self) -> dict[tuple[GenWord, GenWord], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.presentation == other.presentation and self._terms == other._terms

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(
            (((a1 + a2, b1 + b2), x * y) for (a1, b1), x in self.items() for (a2, b2), y in other.items()),
            self.presentation,
        )

    def counit_left(self) -> AlgebraElement:
        """Apply ``counit (x) id``."""
        return AlgebraElement(((b, c * counit(a)) for (a, b), c in self.items()), self.presentation)

    def counit_right(self) -> AlgebraElement:
        """Apply ``id (x) counit``."""
        return AlgebraElement(((a, c * counit(b)) for (a, b), c in self.items()), self.presentation)

    def normal_form(self, fuel: int = DEFAULT_FUEL) -> "TensorElement":
        """Standard form: both tensor factors written in the irreducible basis."""
        p = self.presentation
        out = []
        for (a, b), c in self.items():
            na = normal_form(AlgebraElement({a: 1}, p), p, fuel)
            nb = normal_form(AlgebraElement({b: 1}, p), p, fuel)
            out.extend(((u, v), c * x * y) for u, x in na.items() for v, y in nb.items())
        return TensorElement(out, p)

    def __repr__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*[{word_str(a)} (x) {word_str(b)}]" for (a, b), c in self.items())


# -- reductions ---------------------------------------------------------------


def applicable_reductions(g1: Gen, g2: Gen, p: Presentation) -> list[int]:
    """Numbers of the reductions whose left-hand side is the pair ``g1 g2``."""
    R = p.index_set
    n = p.n
    out = []
    # x^r x^{r+1} with r = g1.r, and x^{r+1} x^r with r = g2.r
    up = g2.r == R.shift(g1.r) and p.untwisted(g1.r)
    down = g1.r == R.shift(g2.r) and p.untwisted(g2.r)
    if up and g1.r % 2 == 0 and g1.j == g2.j == n:
        out.append(1)
    if up and g1.r % 2 == 1 and g1.j == g2.j == 1:
        out.append(2)
    if down and g2.r % 2 == 1 and g1.i == g2.i == n:
        out.append(3)
    if down and g2.r % 2 == 0 and g1.i == g2.i == 1:
        out.append(4)
    if p.variant == "cyclic":
        top = p.top
        if g1.r == top and g2.r == 0 and g1.j == g2.j == 1:
            out.append(5)
        if g1.r == 0 and g2.r == top and g1.i == g2.i == n:
            out.append(6)
    return out


def apply_reduction(rule: int, g1: Gen, g2: Gen, p: Presentation) -> list[tuple[GenWord, Fraction]]:
    """Right-hand side of reduction `rule` applied to the pair ``g1 g2``."""
    if rule not in applicable_reductions(g1, g2, p):
        raise ValueError(f"red{rule} does not apply to {g1} {g2}")
    n = p.n
    one = Fraction(1)
    out: list[tuple[GenWord, Fraction]] = []
    if rule in (1, 2):
        i, j = g1.i, g2.i
        others = range(1, n) if rule == 1 else range(2, n + 1)
        if i == j:
            out.append(((), one))
        out.extend(((Gen(g1.r, i, a), Gen(g2.r, j, a)), -one) for a in others)
    elif rule in (3, 4):
        i, j = g1.j, g2.j
        others = range(1, n) if rule == 3 else range(2, n + 1)
        if i == j:
            out.append(((), one))
        out.extend(((Gen(g1.r, a, i), Gen(g2.r, a, j)), -one) for a in others)
    elif rule == 5:
        # sum_l F_l x^{top}_il x^0_jl = F_j delta_ij, solved for l = 1
        F = p.F
        i, j = g1.i, g2.i
        if i == j:
            out.append(((), F[j - 1] / F[0]))
        out.extend(((Gen(g1.r, i, l), Gen(g2.r, j, l)), -F[l - 1] / F[0]) for l in range(2, n + 1))
    else:
        # sum_u F_u^{-1} x^0_ui x^{top}_uj = F_i^{-1} delta_ij, solved for u = n
        F = p.F
        i, j = g1.j, g2.j
        if i == j:
            out.append(((), F[n - 1] / F[i - 1]))
        out.extend(((Gen(g1.r, u, i), Gen(g2.r, u, j)), -F[n - 1] / F[u - 1]) for u in range(1, n))
    return out


def _redexes(w: GenWord, p: Presentation) -> Iterator[tuple[int, list[int]]]:
    for k in range(len(w) - 1):
        rules = applicable_reductions(w[k], w[k + 1], p)
        if rules:
            yield k, rules


def _first_redex(w: GenWord, p: Presentation, strategy: str) -> tuple[int, int] | None:
    positions = range(len(w) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for k in positions:
        rules = applicable_reductions(w[k], w[k + 1], p)
        if rules:
            return k, rules[0]
    return None


def _rewrite(w: GenWord, pos: int, rule: int, p: Presentation) -> list[tuple[GenWord, Fraction]]:
    head, tail = w[:pos], w[pos + 2 :]
    return [(head + mid + tail, c) for mid, c in apply_reduction(rule, w[pos], w[pos + 1], p)]


def is_irreducible(w: GenWord, p: Presentation) -> bool:
    return next(_redexes(w, p), None) is None


def reduce_once(a: AlgebraElement, p: Presentation, strategy: str = "leftmost") -> AlgebraElement:
    """Rewrite every reducible word of `a` once, at its leftmost (or rightmost) redex."""
    out: list[tuple[GenWord, Fraction]] = []
    for w, c in a.items():
        hit = _first_redex(w, p, strategy)
        if hit is None:
            out.append((w, c))
        else:
            out.extend((v, c * e) for v, e in _rewrite(w, hit[0], hit[1], p))
    return AlgebraElement(out, p)


def normal_form(
    a: AlgebraElement, p: Presentation, fuel: int = DEFAULT_FUEL, strategy: str = "leftmost"
) -> AlgebraElement:
    """Iterate `reduce_once` to a fixed point; the result is in standard form."""
    current: dict[GenWord, Fraction] = dict(a.items())
    steps = 0
    while True:
        nxt: dict[GenWord, Fraction] = defaultdict(Fraction)
        changed = False
        for w, c in current.items():
            hit = _first_redex(w, p, strategy)
            if hit is None:
                nxt[w] += c
                continue
            steps += 1
            if steps > fuel:
                raise FuelExhausted(f"normal form not reached within {fuel} rewrites")
            changed = True
            for v, e in _rewrite(w, hit[0], hit[1], p):
                nxt[v] += c * e
        current = {w: c for w, c in nxt.items() if c}
        if not changed:
            return AlgebraElement(current, p)


# -- irreducible words ----------------------------------------------------------


def enumerate_irreducible(r: Sequence[int], p: Presentation) -> list[GenWord]:
    """All irreducible words of type `r`, in lexicographic order of their indices."""
    letters = [p.index_set.canonical(x) for x in r]
    rng = range(1, p.n + 1)
    out: list[GenWord] = []

    def extend(prefix: GenWord) -> None:
        k = len(prefix)
        if k == len(letters):
            out.append(prefix)
            return
        for i in rng:
            for j in rng:
                g = Gen(letters[k], i, j)
                if k == 0 or not applicable_reductions(prefix[-1], g, p):
                    extend(prefix + (g,))

    extend(())
    return out


def count_irreducible(r: Sequence[int], p: Presentation) -> int:
    return len(enumerate_irreducible(r, p))


# -- ambiguities ----------------------------------------------------------------


def one_step_reducts(w: GenWord, p: Presentation) -> list[tuple[tuple[int, int], AlgebraElement]]:
    """Every single rewrite of `w`, keyed by ``(position, reduction number)``."""
    return [
        ((k, rule), AlgebraElement(_rewrite(w, k, rule, p), p))
        for k, rules in _redexes(w, p)
        for rule in rules
    ]


def resolve_ambiguity(
    w: GenWord, p: Presentation, fuel: int = DEFAULT_FUEL
) -> tuple[AlgebraElement, AlgebraElement, bool]:
    """Normal forms of `w` along two competing first rewrites.

    For a length-3 word the two routes start at the left and at the right
    pair; for a length-2 word matched by several reductions they start with
    the two lowest-numbered ones.
    """
    w = tuple(w)
    if len(w) == 3:
        left = applicable_reductions(w[0], w[1], p)
        right = applicable_reductions(w[1], w[2], p)
        if not (left and right):
            raise ValueError(f"{word_str(w)} is not an overlap ambiguity")
        first = AlgebraElement(_rewrite(w, 0, left[0], p), p)
        second = AlgebraElement(_rewrite(w, 1, right[0], p), p)
    elif len(w) == 2:
        rules = applicable_reductions(w[0], w[1], p)
        if len(rules) < 2:
            raise ValueError(f"{word_str(w)} is not an inclusion ambiguity")
        first = AlgebraElement(_rewrite(w, 0, rules[0], p), p)
        second = AlgebraElement(_rewrite(w, 0, rules[1], p), p)
    else:
        raise ValueError("ambiguities are words of length 2 or 3")
    a = normal_form(first, p, fuel)
    b = normal_form(second, p, fuel)
    return a, b, a == b


@dataclass
class Ambiguity:
    kind: str  # "overlap" or "inclusion"
    word: GenWord
    normal_forms: list[tuple[tuple[int, int], AlgebraElement]]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "word": [g.to_json() for g in self.word],
            "routes": [
                {"position": k, "reduction": rule, "normal_form": nf.to_json()["terms"]}
                for (k, rule), nf in self.normal_forms
            ],
        }


@dataclass
class ConfluenceReport:
    presentation: Presentation
    letters: list[int]
    overlaps: int = 0
    inclusions: int = 0
    failures: list[Ambiguity] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "presentation": self.presentation.to_json(),
            "letters": self.letters,
            "overlaps_checked": self.overlaps,
            "inclusions_checked": self.inclusions,
            "failures": [f.to_json() for f in self.failures],
            "ok": self.ok,
        }


def check_confluence(
    p: Presentation, window: tuple[int, int] | None = None, fuel: int = DEFAULT_FUEL
) -> ConfluenceReport:
    """Resolve every overlap and inclusion ambiguity with letters in `window`.

    All single rewrites of each ambiguous word must reach the same normal
    form.  `window` may be omitted for H_d(F), whose index set is finite.
    """
    letters = p.index_set.letters(window)
    gens = p.generators(window)
    report = ConfluenceReport(p, letters)
    followers: dict[Gen, list[Gen]] = defaultdict(list)
    for g1 in gens:
        for g2 in gens:
            if applicable_reductions(g1, g2, p):
                followers[g1].append(g2)

    def resolve(kind: str, w: GenWord) -> None:
        routes = [(key, normal_form(e, p, fuel)) for key, e in one_step_reducts(w, p)]
        if any(nf != routes[0][1] for _, nf in routes[1:]):
            report.failures.append(Ambiguity(kind, w, routes))

    for g1 in gens:
        for g2 in followers[g1]:
            if len(applicable_reductions(g1, g2, p)) > 1:
                report.inclusions += 1
                resolve("inclusion", (g1, g2))
            for g3 in followers[g2]:
                report.overlaps += 1
                resolve("overlap", (g1, g2, g3))
    return report


# -- coalgebra structure -----------------------------------------------------------


def comultiply(w: GenWord, p: Presentation) -> TensorElement:
    """``Delta`` of a word: the product over its factors of ``sum_k x_ik (x) x_kj``."""
    out = TensorElement([(((), ()), 1)], p)
    for g in w:
        step = TensorElement(
            [(((Gen(g.r, g.i, k),), (Gen(g.r, k, g.j),)), 1) for k in range(1, p.n + 1)], p
        )
        out = out * step
    return out


def comultiply_element(a: AlgebraElement) -> TensorElement:
    p = a.presentation
    out = []
    for w, c in a.items():
        out.extend((ab, c * e) for ab, e in comultiply(w, p).items())
    return TensorElement(out, p)


def counit(w: GenWord | AlgebraElement) -> Fraction:
    """``epsilon``: a word maps to the product of Kronecker deltas of its factors."""
    if isinstance(w, AlgebraElement):
        return sum((c * counit(v) for v, c in w.items()), Fraction(0))
    return Fraction(int(all(g.i == g.j for g in w)))


def truncate(a: AlgebraElement, t: int) -> AlgebraElement:
    """Keep only the terms of length exactly `t`."""
    if t < 0:
        raise ValueError("truncation length must be non-negative")
    return AlgebraElement(((w, c) for w, c in a.items() if len(w) == t), a.presentation)
