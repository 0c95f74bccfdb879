import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from qgfusion.configurations import Configuration, is_valid
from qgfusion.ring import (
    RingElement,
    dim,
    dim_brute_force,
    dim_element,
    expand_f,
    f_product,
    odot,
    star_element,
    to_f_basis,
    to_u_basis,
)
from qgfusion.words import INT, NAT, IndexSet, IndexSetError, Word

from conftest import Z2, all_words, w


def U(terms, R=NAT):
    return RingElement({Word(k, R): v for k, v in terms.items()}, R, "u")


def F(terms, R=NAT):
    return RingElement({Word(k, R): v for k, v in terms.items()}, R, "f")


def odot_oracle(r, s):
    """Split r = a t and s = t' b in every way; keep splits where t t' is a valid
    fully nested configuration."""
    out = Counter()
    for m in range(min(len(r), len(s)) + 1):
        t, t2 = r[len(r) - m :], s[:m]
        nested = Configuration.from_string("(" * m + ")" * m)
        if is_valid(t + t2, nested):
            out[r[: len(r) - m] + s[m:]] += 1
    return RingElement(out, r.index_set, "u")


def test_add():
    assert U({(0,): 1}) + U({(0,): -1}) == RingElement.zero(NAT, "u")
    assert (U({(0,): 2}) + U({(1,): 3})).terms == {w(0): 2, w(1): 3}
    assert (U({(): 1}) + U({(): 1})).terms == {w(): 2}


def test_add_rejects_mismatch():
    with pytest.raises(ValueError):
        U({(0,): 1}) + F({(0,): 1})
    with pytest.raises(IndexSetError):
        U({(0,): 1}) + U({(0,): 1}, INT)


def test_no_zero_coefficients_stored():
    e = RingElement([(w(0), 2), (w(0), -2), (w(1), 0)], NAT, "u")
    assert not e and len(e) == 0


def test_f_product():
    assert f_product(F({(0,): 1}), F({(1,): 1})) == F({(0, 1): 1})
    x = F({(2, 0): 3})
    assert f_product(RingElement.one(NAT, "f"), x) == x
    assert f_product(F({(0,): 1, (1,): 1}), F({(0,): 1})) == F({(0, 0): 1, (1, 0): 1})
    with pytest.raises(ValueError):
        f_product(U({(0,): 1}), U({(0,): 1}))


def test_odot_examples():
    assert odot(U({(0,): 1}), U({(1,): 1})).terms == {w(0, 1): 1, w(): 1}
    assert odot(U({(0,): 1}), U({(0,): 1})).terms == {w(0, 0): 1}
    x = U({(0, 1): 1}, Z2)
    assert odot(x, x).terms == {Word((0, 1, 0, 1), Z2): 1, Word((0, 1), Z2): 1, Word((), Z2): 1}
    with pytest.raises(ValueError):
        odot(F({(0,): 1}), F({(0,): 1}))


def test_odot_cancels_per_letter():
    # (1,1)(0,2): both inner pairs step by one, in opposite directions
    assert odot(U({(1, 1): 1}), U({(0, 2): 1})).terms == {w(1, 2): 1, w(): 1, w(1, 1, 0, 2): 1}


@pytest.mark.parametrize("R,alphabet", [(NAT, range(4)), (INT, range(-1, 2)), (Z2, [0, 1]), (IndexSet.mod(4), range(4))])
def test_odot_matches_splitting_oracle(R, alphabet):
    words = list(all_words(R, 3, alphabet))
    for r in words:
        for s in words:
            assert odot(RingElement.word(r, "u"), RingElement.word(s, "u")) == odot_oracle(r, s)


def test_odot_unit():
    one = RingElement.one(NAT, "u")
    for r in all_words(NAT, 3, range(3)):
        e = RingElement.word(r, "u")
        assert odot(one, e) == e == odot(e, one)


def test_star_element():
    assert star_element(U({(0,): 1})).terms == {w(1): 1}
    assert star_element(U({(): 5})).terms == {w(): 5}
    assert star_element(U({(0, 1): 1})).terms == {w(2, 1): 1}


@pytest.mark.parametrize("R,alphabet", [(NAT, range(3)), (Z2, [0, 1])])
def test_star_is_anti_multiplicative(R, alphabet):
    words = list(all_words(R, 3, alphabet))
    for r in words:
        for s in words:
            for basis in "fu":
                a, b = RingElement.word(r, basis), RingElement.word(s, basis)
                assert star_element(a * b) == star_element(b) * star_element(a)


def test_expand_f_examples():
    assert expand_f(w(0, 1)).terms == {w(0, 1): 1, w(): 1}
    assert expand_f(w(0, 1, 0)).terms == {w(0, 1, 0): 1, w(0): 2}
    assert expand_f(w(0)).terms == {w(0): 1}


def test_change_of_basis_examples():
    assert to_u_basis(F({(0, 1): 1})) == U({(0, 1): 1, (): 1})
    assert to_f_basis(U({(0, 1): 1})) == F({(0, 1): 1, (): -1})
    assert to_u_basis(F({(): 1})) == U({(): 1})


@pytest.mark.parametrize("R,alphabet", [(NAT, range(3)), (Z2, [0, 1])])
def test_round_trip_on_basis_words(R, alphabet):
    for r in all_words(R, 6, alphabet):
        f = RingElement.word(r, "f")
        u = RingElement.word(r, "u")
        assert to_f_basis(to_u_basis(f)) == f
        assert to_u_basis(to_f_basis(u)) == u


def test_dim_examples():
    assert dim(w(0, 1, 0), 2) == 4
    for n in (2, 3, 5):
        assert dim(w(0), n) == n
    assert dim(w(0, 0), 2) == 4
    assert dim(w(0, 1), 2) == 3
    assert dim(w(), 3) == 1
    with pytest.raises(ValueError):
        dim(w(0), 1)


@pytest.mark.parametrize("R,alphabet", [(NAT, range(4)), (INT, range(-2, 2)), (Z2, [0, 1]), (IndexSet.mod(4), range(4))])
@pytest.mark.parametrize("n", [2, 3])
def test_dim_matches_brute_force(R, alphabet, n):
    for r in all_words(R, 4, alphabet):
        assert dim(r, n) == dim_brute_force(r, n)


def test_dim_element_examples():
    assert dim_element(F({(0, 1): 1}), 2) == 4
    assert dim_element(expand_f(w(0, 1)), 2) == 4
    assert dim_element(U({(): 1}), 7) == 1
    with pytest.raises(ValueError):
        dim_element(U({(): 1}), 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dim_is_odot_homomorphism(n):
    words = list(all_words(NAT, 3, range(3)))
    for r in words:
        for s in words:
            prod = odot(RingElement.word(r, "u"), RingElement.word(s, "u"))
            assert dim_element(prod, n) == dim(r, n) * dim(s, n)


def test_json_round_trip():
    e = U({(0, 1): 3, (): -2, (2,): 1}, IndexSet.mod(4))
    data = e.to_json()
    assert data["basis"] == "u"
    assert data["index_set"] == {"kind": "mod", "modulus": 4}
    assert [t["word"] for t in data["terms"]] == [[], [2], [0, 1]]
    assert data["terms"][0]["coeff"] == "-2"
    assert RingElement.from_json(data) == e


def test_big_coefficients_are_exact():
    e = U({(0,): 1}) + U({(1,): 1})
    big = e ** 12
    assert dim_element(big, 3) == dim_element(e, 3) ** 12


words_nat = st.lists(st.integers(0, 3), max_size=5).map(lambda xs: Word(xs, NAT))


@settings(max_examples=200, deadline=None)
@given(words_nat, words_nat, words_nat)
def test_odot_associative_random(a, b, c):
    A, B, C = (RingElement.word(x, "u") for x in (a, b, c))
    assert odot(odot(A, B), C) == odot(A, odot(B, C))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(words_nat, st.integers(-5, 5)), max_size=6))
def test_round_trip_random(terms):
    e = RingElement(terms, NAT, "f")
    assert to_f_basis(to_u_basis(e)) == e
