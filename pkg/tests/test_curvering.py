"""Tests for canonical Witt class arithmetic on a curve.

The r = 0 degeneration is checked against the four-element base ring as an
independent oracle; ring axioms are exhaustive at small rank and randomized
at large rank per the stated bounds.
"""

import itertools
import random

import pytest

from wittcurve.curve import (
    WittClass,
    enumerate_classes,
    reduce_word,
    signed_discriminant_class,
    wc_add,
    wc_mul,
    wc_neg,
)
from wittcurve.fields import SquareClass, minus_one_class
from wittcurve.pic2 import Pic2Group
from wittcurve.wittk import WittK

ONE, NS = SquareClass.ONE, SquareClass.NONSQUARE


def test_construction_validation():
    g = Pic2Group(2)
    L = g.element("10")
    with pytest.raises(ValueError):
        WittClass("flat", ONE, L, 1)
    with pytest.raises(TypeError):
        WittClass("odd", "1", L, 1)
    with pytest.raises(TypeError):
        WittClass("odd", ONE, "10", 1)
    with pytest.raises(ValueError):
        WittClass("odd", ONE, L, 5)
    with pytest.raises(ValueError):
        WittClass.odd(ONE, L, 1) + WittClass.odd(ONE, L, 3)
    with pytest.raises(ValueError):
        WittClass.odd(ONE, L, 1) + WittClass.one(1, Pic2Group(3))
    with pytest.raises(TypeError):
        WittClass.odd(ONE, L, 1) + 7


def test_zero_and_one():
    for ctx in (1, 3):
        g = Pic2Group(2)
        zero, one = WittClass.zero(ctx, g), WittClass.one(ctx, g)
        assert zero.is_zero()
        assert zero == WittClass.even(ONE, g.identity, ctx)
        for c in enumerate_classes(ctx, g):
            assert c + zero == c
            assert wc_add(zero, c) == c
            assert one * c == c
            assert wc_mul(c, one) == c
            assert zero * c == zero


def test_addition_table_entries():
    for ctx in (1, 3):
        sigma = minus_one_class(ctx)
        g = Pic2Group(2)
        O = g.identity
        for u in (ONE, NS):
            for L in g:
                a = WittClass.odd(u, L, ctx)
                # a rank-1 class doubled is the class of <1,1>
                assert a + a == WittClass.even(sigma, O, ctx)
                # twisting one copy by s gives the class of <1,s>
                assert a + WittClass.odd(NS * u, L, ctx) == WittClass.even(sigma * NS, O, ctx)
        v, w = g.element("01"), g.element("11")
        assert WittClass.odd(ONE, v, ctx) + WittClass.odd(NS, w, ctx) == WittClass.even(
            sigma * NS, g.element("10"), ctx
        )
        assert WittClass.odd(NS, v, ctx) + WittClass.even(NS, w, ctx) == WittClass.odd(
            ONE, g.element("10"), ctx
        )
        assert WittClass.even(ONE, v, ctx) + WittClass.even(NS, w, ctx) == WittClass.even(
            NS, g.element("10"), ctx
        )


def test_multiplication_table_entries():
    for ctx in (1, 3):
        g = Pic2Group(2)
        O = g.identity
        one = WittClass.one(ctx, g)
        for u in (ONE, NS):
            for L in g:
                a = WittClass.odd(u, L, ctx)
                assert a * a == one
                assert a * WittClass.odd(NS * u, L, ctx) == WittClass.odd(NS, O, ctx)
        v, w = g.element("01"), g.element("11")
        e = WittClass.even(NS, w, ctx)
        assert WittClass.odd(NS, v, ctx) * e == e
        assert e * WittClass.even(ONE, v, ctx) == WittClass.zero(ctx, g)


def test_negation():
    g = Pic2Group(2)
    for ctx in (1, 3):
        zero = WittClass.zero(ctx, g)
        assert -zero == zero
        for c in enumerate_classes(ctx, g):
            assert c + (-c) == zero
            assert wc_neg(wc_neg(c)) == c
            assert c - c == zero
            if c.parity == "even":
                assert -c == c
    L = g.element("10")
    assert -WittClass.odd(ONE, L, 3) == WittClass.odd(NS, L, 3)
    assert -WittClass.odd(ONE, L, 1) == WittClass.odd(ONE, L, 1)


def test_signed_discriminant_class():
    g = Pic2Group(2)
    O = g.identity
    L = g.element("01")
    for ctx in (1, 3):
        assert signed_discriminant_class(WittClass.zero(ctx, g)) == (ONE, O)
        for w in (ONE, NS):
            assert signed_discriminant_class(WittClass.even(w, L, ctx)) == (w, L)
    assert signed_discriminant_class(WittClass.odd(NS, L, 1)) == (NS, L)
    assert signed_discriminant_class(WittClass.odd(NS, L, 3)) == (ONE, L)


def test_invariant_pair_is_injective():
    for ctx in (1, 3):
        for r in range(4):
            classes = enumerate_classes(ctx, Pic2Group(r))
            keys = {(c.parity, signed_discriminant_class(c)) for c in classes}
            assert len(keys) == len(classes) == 4 * 2**r


def test_enumerate_classes_counts():
    for ctx in (1, 3):
        for r, total in [(0, 4), (1, 8), (2, 16)]:
            classes = enumerate_classes(ctx, Pic2Group(r))
            assert len(classes) == total
            assert len(set(classes)) == total
            assert sum(1 for c in classes if c.parity == "odd") == total // 2
    with pytest.raises(ValueError):
        enumerate_classes(1, Pic2Group(21))


def test_ring_axioms_exhaustive_small_rank():
    for ctx in (1, 3):
        for r in (0, 1, 2):
            classes = enumerate_classes(ctx, Pic2Group(r))
            for a, b, c in itertools.product(classes, repeat=3):
                assert (a + b) + c == a + (b + c)
                assert a + b == b + a
                assert (a * b) * c == a * (b * c)
                assert a * b == b * a
                assert a * (b + c) == a * b + a * c


def test_ring_axioms_randomized_large_rank():
    rng = random.Random(271)
    for ctx in (1, 3):
        for r in (3, 5, 8):
            g = Pic2Group(r)

            def rand_class():
                return WittClass(
                    rng.choice(("odd", "even")),
                    rng.choice((ONE, NS)),
                    g.element(rng.randrange(g.n)),
                    ctx,
                )

            for _ in range(20000):
                a, b, c = rand_class(), rand_class(), rand_class()
                assert (a + b) + c == a + (b + c)
                assert a + b == b + a
                assert (a * b) * c == a * (b * c)
                assert a * b == b * a
                assert a * (b + c) == a * b + a * c


def test_odd_classes_are_units_and_evens_are_square_zero_ideal():
    for ctx in (1, 3):
        g = Pic2Group(3)
        one = WittClass.one(ctx, g)
        zero = WittClass.zero(ctx, g)
        classes = enumerate_classes(ctx, g)
        odds = [c for c in classes if c.parity == "odd"]
        evens = [c for c in classes if c.parity == "even"]
        for c in odds:
            assert c * c == one
        for x in evens:
            for y in evens:
                assert x * y == zero
                assert (x + y).parity == "even"


def test_r0_degeneration_is_base_ring():
    # the four r = 0 classes with their tables match the four-element ring
    g = Pic2Group(0)
    for ctx in (1, 3):

        def phi(c):
            if c.parity == "odd":
                return WittK.of_unit(c.u, ctx)
            return WittK.zero(ctx) if c.u is ONE else WittK.even(ctx)

        classes = enumerate_classes(ctx, g)
        assert len({phi(c) for c in classes}) == 4
        for a, b in itertools.product(classes, repeat=2):
            assert phi(a + b) == phi(a) + phi(b)
            assert phi(a * b) == phi(a) * phi(b)
        assert phi(WittClass.zero(ctx, g)).is_zero()


def test_reduce_word_basics():
    g = Pic2Group(2)
    for ctx in (1, 3):
        assert reduce_word([], ctx, g) == WittClass.zero(ctx, g)
        L = g.element("10")
        assert reduce_word([(NS, L)], ctx, g) == WittClass.odd(NS, L, ctx)
        word = [(ONE, g.element("10")), (NS, g.element("11")), (ONE, g.element("01"))]
        result = reduce_word(word, ctx, g)
        assert result.parity == "odd"
        assert result.L == g.element("00")
    with pytest.raises(ValueError):
        reduce_word([(ONE, Pic2Group(3).identity)], 1, g)


def test_reduce_word_parity_and_pic_part():
    rng = random.Random(41)
    for ctx in (1, 3):
        g = Pic2Group(3)
        for _ in range(200):
            n = rng.randrange(7)
            word = [(rng.choice((ONE, NS)), g.element(rng.randrange(g.n))) for _ in range(n)]
            result = reduce_word(word, ctx, g)
            assert (result.parity == "odd") == (n % 2 == 1)
            prod = g.identity
            for _, L in word:
                prod = prod * L
            assert result.L == prod


def test_reduce_word_order_independent():
    rng = random.Random(42)
    for ctx in (1, 3):
        g = Pic2Group(2)
        for _ in range(300):
            word = [
                (rng.choice((ONE, NS)), g.element(rng.randrange(g.n)))
                for _ in range(rng.randrange(6))
            ]
            shuffled = word[:]
            rng.shuffle(shuffled)
            assert reduce_word(word, ctx, g) == reduce_word(shuffled, ctx, g)


def test_every_class_is_a_short_word():
    for ctx in (1, 3):
        for r in (0, 1, 2):
            g = Pic2Group(r)
            letters = [(u, L) for u in (ONE, NS) for L in g]
            images = {reduce_word([], ctx, g)}
            images |= {reduce_word([a], ctx, g) for a in letters}
            images |= {reduce_word([a, b], ctx, g) for a in letters for b in letters}
            assert images == set(enumerate_classes(ctx, g))


def test_labels():
    g = Pic2Group(3)
    assert str(WittClass.zero(1, g)) == "0"
    assert str(WittClass.one(3, g)) == "<1>"
    assert str(WittClass.odd(NS, g.identity, 1)) == "<s>"
    assert str(WittClass.odd(ONE, g.element("101"), 1)) == "<1.101>"
    assert str(WittClass.odd(NS, g.element("101"), 1)) == "<s.101>"
    assert str(WittClass.even(NS, g.identity, 3)) == "<1,-s>"
    assert str(WittClass.even(ONE, g.element("011"), 3)) == "<1,-1.011>"
    assert str(WittClass.even(NS, g.element("011"), 3)) == "<1,-s.011>"
    assert str(WittClass.zero(1, Pic2Group(0))) == "0"
    # the r = 1 classes carry eight distinct labels
    g1 = Pic2Group(1)
    labels = {str(c) for c in enumerate_classes(1, g1)}
    assert len(labels) == 8


def test_json_roundtrip():
    for ctx in (1, 3):
        for r in (0, 1, 2):
            g = Pic2Group(r)
            for c in enumerate_classes(ctx, g):
                data = c.to_json()
                assert set(data) == {"parity", "u", "L"}
                assert WittClass.from_json(data, ctx, g) == c
    data = WittClass.odd(NS, Pic2Group(2).element("01"), 1).to_json()
    assert data == {"parity": "odd", "u": "s", "L": "01"}
