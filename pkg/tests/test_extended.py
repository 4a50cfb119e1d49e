import random
from fractions import Fraction

import pytest

import oracles
from shelfbraid.engine import ONE, Braid, equal
from shelfbraid.errors import BraidParseError
from shelfbraid.extended import (
    EB_ONE,
    TAU,
    ExtBraid,
    braid_distance,
    eb_distance,
    eb_equal,
    eb_mul,
    eb_shelf,
    parse_ext,
    truncate,
)
from shelfbraid.shelf import shelf_op
from shelfbraid.words import BraidWord, concat, invert, parse, shift_word, tau_word


def B(text):
    return Braid(parse(text))


def rand_word(rng, max_len=5, max_index=4):
    return BraidWord(oracles.random_word(rng, max_len, max_index))


def rand_ext(rng, max_p=3):
    return ExtBraid(Braid(rand_word(rng)), rng.randint(0, max_p))


class TestDistance:
    def test_examples(self):
        assert braid_distance(parse("1 2"), parse("1 2")) == 0
        assert braid_distance(parse("1"), parse("2")) == 1
        assert braid_distance(parse("2"), parse("3")) == Fraction(1, 2)
        assert braid_distance(parse("1 2 1"), parse("2 1 2")) == 0

    def test_ultrametric(self):
        rng = random.Random(1)
        for _ in range(200):
            x, y, z = (rand_word(rng) for _ in range(3))
            assert braid_distance(x, z) <= max(braid_distance(x, y), braid_distance(y, z))
            assert (braid_distance(x, y) == 0) == equal(x, y)
            assert braid_distance(x, y) == braid_distance(y, x)

    def test_extended_distance(self):
        assert eb_distance(TAU, TAU) == 0
        assert eb_distance(ExtBraid(B("1"), 2), ExtBraid(ONE, 2)) == 0
        assert eb_distance(ExtBraid(B("3"), 0), ExtBraid(B("4"), 0)) == Fraction(1, 4)


class TestEquality:
    def test_examples(self):
        assert eb_equal(ExtBraid(B("2"), 2), ExtBraid(B("2 1"), 2))
        assert not eb_equal(ExtBraid(ONE, 1), ExtBraid(B("1"), 1))
        assert not eb_equal(ExtBraid(B("1"), 1), ExtBraid(B("1"), 2))

    def test_equivalence_relation(self):
        rng = random.Random(2)
        for _ in range(60):
            x = rand_ext(rng)
            # same class, different representative
            junk = Braid(BraidWord(oracles.random_word(rng, 4, max(x.p - 1, 0)))) if x.p > 1 else ONE
            y = ExtBraid(x.beta * junk, x.p)
            assert eb_equal(x, x) and eb_equal(x, y) and eb_equal(y, x)

    def test_congruence(self):
        rng = random.Random(3)
        for _ in range(60):
            x, z = rand_ext(rng), rand_ext(rng)
            if x.p < 2:
                continue
            y = ExtBraid(x.beta * Braid(BraidWord(oracles.random_word(rng, 4, x.p - 1))), x.p)
            assert eb_equal(eb_mul(x, z), eb_mul(y, z))
            assert eb_equal(eb_mul(z, x), eb_mul(z, y))
            assert eb_equal(eb_shelf(x, z), eb_shelf(y, z))
            assert eb_equal(eb_shelf(z, x), eb_shelf(z, y))


class TestMonoid:
    def test_examples(self):
        assert eb_equal(eb_mul(ExtBraid(B("1 2"), 0), ExtBraid(B("-1"), 0)), ExtBraid(B("1 2 -1"), 0))
        assert eb_equal(eb_mul(TAU, TAU), ExtBraid(ONE, 2))
        assert eb_equal(eb_mul(ExtBraid(B("1"), 0), eb_mul(TAU, TAU)), eb_mul(TAU, TAU))

    def test_relations(self):
        for i in range(2, 6):
            lhs = eb_mul(ExtBraid(B(str(i)), 0), TAU)
            assert eb_equal(lhs, eb_mul(TAU, ExtBraid(B(str(i - 1)), 0)))

    def test_laws(self):
        rng = random.Random(4)
        for _ in range(100):
            x, y, z = rand_ext(rng), rand_ext(rng), rand_ext(rng)
            assert eb_equal(eb_mul(eb_mul(x, y), z), eb_mul(x, eb_mul(y, z)))
            assert eb_equal(eb_mul(EB_ONE, x), x) and eb_equal(eb_mul(x, EB_ONE), x)


class TestConjugation:
    @pytest.mark.parametrize("p", range(0, 5))
    @pytest.mark.parametrize("n", range(0, 5))
    def test_tau_conjugates_to_shift(self, p, n):
        rng = random.Random(100 * p + n)
        t = tau_word(p, n)
        for _ in range(20):
            beta = BraidWord(oracles.random_word(rng, 6, p - 1)) if p >= 2 else BraidWord()
            lhs = concat(invert(t), beta, t)
            assert equal(lhs, shift_word(beta, n))

    def test_truncation(self):
        x = ExtBraid(B("1"), 2)
        assert truncate(x, 0) == B("1")


class TestShelf:
    def test_examples(self):
        b, c = B("1 -2"), B("2 3")
        assert eb_equal(eb_shelf(ExtBraid(b, 0), ExtBraid(c, 0)), ExtBraid(b * c * b.inverse(), 0))
        assert eb_equal(eb_shelf(ExtBraid(b, 1), ExtBraid(c, 1)), ExtBraid(shelf_op(b, c), 1))
        y = ExtBraid(c, 2)
        assert eb_equal(eb_shelf(EB_ONE, y), y)
        assert eb_equal(eb_shelf(y, EB_ONE), EB_ONE)

    def test_laws(self):
        rng = random.Random(5)
        for _ in range(300):
            x, y, z = rand_ext(rng), rand_ext(rng), rand_ext(rng)
            sh, mul = eb_shelf, eb_mul
            assert eb_equal(sh(x, sh(y, z)), sh(sh(x, y), sh(x, z)))
            assert eb_equal(sh(mul(x, y), z), sh(x, sh(y, z)))
            assert eb_equal(sh(x, mul(y, z)), mul(sh(x, y), sh(x, z)))
            assert eb_equal(mul(x, y), mul(sh(x, y), x))
            assert eb_equal(sh(EB_ONE, x), x) and eb_equal(sh(x, EB_ONE), EB_ONE)
            assert sh(x, y).p == y.p


class TestText:
    def test_round_trip(self):
        rng = random.Random(6)
        for _ in range(50):
            x = rand_ext(rng)
            y = parse_ext(str(x))
            assert y.p == x.p and y.beta.word == x.beta.word
        assert parse_ext("[ | 1]") == TAU
        assert str(parse_ext("[1 -2 | 3]")) == "[1 -2 | 3]"

    def test_bad(self):
        for text in ["[1 2]", "1 | 2", "[1 | -1]", "[x | 1]"]:
            with pytest.raises(BraidParseError):
                parse_ext(text)
