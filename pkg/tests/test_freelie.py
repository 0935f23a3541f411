import random
from fractions import Fraction

import pytest

from onsagerkit.exact_math import span_rank
from onsagerkit.freelie import (
    BracketExpr,
    FreeLieElement,
    ParseError,
    UnbalancedBracketError,
    ad_power,
    is_lyndon,
    lie_bracket,
    lyndon_bracketing,
    lyndon_words,
    parse_bracket,
    standard_factorization,
    to_lyndon,
    witt_dimension,
)


def test_parse_examples():
    e = parse_bracket("[B1,[B1,B2]]")
    assert e == BracketExpr.node(
        BracketExpr.leaf(1), BracketExpr.node(BracketExpr.leaf(1), BracketExpr.leaf(2))
    )
    assert parse_bracket("B3") == BracketExpr.leaf(3)
    assert parse_bracket(" [ B1 , B2 ] ") == BracketExpr.node(BracketExpr.leaf(1), BracketExpr.leaf(2))


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_bracket("[B1 B2]")
    assert err.value.pos == 4
    with pytest.raises(UnbalancedBracketError):
        parse_bracket("[B1,B2")
    with pytest.raises(UnbalancedBracketError):
        parse_bracket("[B1,B2]]")
    with pytest.raises(ParseError):
        parse_bracket("B")
    with pytest.raises(ParseError):
        parse_bracket("")


def test_lyndon_predicates():
    assert is_lyndon((1, 2))
    assert is_lyndon((1, 1, 2))
    assert not is_lyndon((2, 1))
    assert not is_lyndon((1, 2, 1, 2))
    assert standard_factorization((1, 1, 2, 1, 2)) == ((1, 1, 2), (1, 2))


def test_to_lyndon_examples():
    assert to_lyndon(parse_bracket("[B1,B2]")).terms == {(1, 2): Fraction(1)}
    assert to_lyndon(parse_bracket("[B2,B1]")).terms == {(1, 2): Fraction(-1)}


def test_jacobi_all_triples_of_generators():
    for x in range(1, 4):
        for y in range(1, 4):
            for z in range(1, 4):
                total = (
                    to_lyndon(parse_bracket("[B%d,[B%d,B%d]]" % (x, y, z)))
                    + to_lyndon(parse_bracket("[B%d,[B%d,B%d]]" % (y, z, x)))
                    + to_lyndon(parse_bracket("[B%d,[B%d,B%d]]" % (z, x, y)))
                )
                assert total.is_zero()


def _random_expr(rng, degree, ngens):
    if degree == 1:
        return BracketExpr.leaf(rng.randint(1, ngens))
    k = rng.randint(1, degree - 1)
    return BracketExpr.node(_random_expr(rng, k, ngens), _random_expr(rng, degree - k, ngens))


def test_antisymmetry_random():
    rng = random.Random(3)
    for _ in range(60):
        d = rng.randint(1, 5)
        x = _random_expr(rng, d, 3)
        y = _random_expr(rng, rng.randint(1, 5 - 0), 3)
        s = to_lyndon(BracketExpr.node(x, y)) + to_lyndon(BracketExpr.node(y, x))
        assert s.is_zero()


def test_jacobi_random():
    rng = random.Random(4)
    for _ in range(40):
        x = _random_expr(rng, rng.randint(1, 2), 3)
        y = _random_expr(rng, rng.randint(1, 2), 3)
        z = _random_expr(rng, rng.randint(1, 2), 3)
        total = (
            to_lyndon(BracketExpr.node(x, BracketExpr.node(y, z)))
            + to_lyndon(BracketExpr.node(y, BracketExpr.node(z, x)))
            + to_lyndon(BracketExpr.node(z, BracketExpr.node(x, y)))
        )
        assert total.is_zero()


def test_degree_preservation():
    rng = random.Random(9)
    for _ in range(40):
        d = rng.randint(1, 6)
        e = _random_expr(rng, d, 3)
        img = to_lyndon(e)
        assert all(len(w) == d for w in img.terms)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_lyndon_counts_are_witt_numbers(n):
    for d in range(1, 7):
        words = lyndon_words(range(1, n + 1), d)
        assert len(words) == witt_dimension(n, d)
        assert all(is_lyndon(w) for w in words)


def test_witt_examples():
    assert witt_dimension(2, 1) == 2
    assert witt_dimension(2, 3) == 2
    assert witt_dimension(3, 2) == 3
    assert witt_dimension(2, 2) == 1
    assert witt_dimension(2, 5) == 6


def test_lie_bracket_basic():
    b1 = FreeLieElement.generator(1)
    b2 = FreeLieElement.generator(2)
    assert lie_bracket(b1, b1).is_zero()
    assert lie_bracket(b1, b2).terms == {(1, 2): Fraction(1)}
    x = lie_bracket(b1, b2) + 2 * b1
    assert lie_bracket(x, x).is_zero()


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_bracketings_span_witt_dimension(d):
    # all full bracketings of all words of degree d over 2 generators span
    # exactly the Witt number of independent elements
    from onsagerkit.onsager import all_bracket_words

    vecs = [to_lyndon(e).terms for e in all_bracket_words((1, 2), d)]
    assert span_rank(vecs) == witt_dimension(2, d)


def test_lyndon_bracketing_roundtrip():
    # the normal form of the standard bracketing of a Lyndon word is the word
    for w in lyndon_words((1, 2), 5):
        img = to_lyndon(lyndon_bracketing(w))
        assert img.terms == {w: Fraction(1)}


def test_ad_power():
    e = ad_power(1, 2, 2)
    assert e == parse_bracket("[B1,[B1,B2]]")
    assert ad_power(1, 2, 0) == BracketExpr.leaf(2)
