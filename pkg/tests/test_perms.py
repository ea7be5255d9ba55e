"""Permutation primitives: composition, cycles, notation round-trips."""

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from almostconj.perms import (
    CycleNotationError,
    Permutation,
    compose,
    conjugate,
    format_cycles,
    parse_cycles,
)


def P(text, n):
    return parse_cycles(text, n)


def random_perm(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


class TestCompose:
    def test_identity_neutral(self):
        p = P("(1 2)(3 4)", 5)
        e = Permutation.identity(5)
        assert p * e == p
        assert e * p == p

    def test_right_factor_acts_first(self):
        # oracle: evaluate pointwise, x -> p(q(x))
        p = P("(1 2)", 3)
        q = P("(2 3)", 3)
        r = p * q
        for x in range(3):
            assert r(x) == p(q(x))
        assert r == P("(1 2 3)", 3)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError, match="degree mismatch"):
            P("(1 2)", 3) * P("(1 2)", 5)

    def test_compose_alias(self):
        p = P("(1 3 2)", 4)
        q = P("(2 4)", 4)
        assert compose(p, q) == p * q


class TestInversePower:
    def test_inverse_of_three_cycle(self):
        assert P("(1 2 3)", 3).inverse() == P("(1 3 2)", 3)

    def test_power_wraps_order(self):
        p = P("(1 2 3)", 5)
        assert p ** 3 == Permutation.identity(5)
        assert p ** 0 == Permutation.identity(5)
        assert p ** -1 == p.inverse()
        assert p ** -2 == p

    def test_power_matches_repeated_product(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randrange(1, 12)
            p = random_perm(rng, n)
            acc = Permutation.identity(n)
            for m in range(5):
                assert p ** m == acc
                acc = p * acc

    def test_mixed_type_power_splits_long_cycle(self):
        # the length-4 cycle squares to two 2-cycles
        p = P("(1)(2 3)(4 5 6 7)", 7)
        assert p.cycle_type() == (1, 2, 4)
        assert (p ** 2).cycle_type() == (1, 1, 1, 2, 2)

    def test_coprime_tail_survives_lcm_power(self):
        # type (2, 2, 3, 5): lcm of the 2s and 3 is 6, coprime to 5
        p = Permutation.from_cycles(
            12, [(0, 1), (2, 3), (4, 5, 6), (7, 8, 9, 10, 11)]
        )
        q = p ** 6
        assert q.cycle_type() == (1,) * 7 + (5,)


class TestCycleStructure:
    def test_cycle_type_sorted_with_fixed_points(self):
        assert P("(1 2)(3 4 5)", 6).cycle_type() == (1, 2, 3)
        assert Permutation.identity(4).cycle_type() == (1, 1, 1, 1)

    def test_fixed_points(self):
        assert P("(1 2 3)", 5).fixed_points() == {3, 4}
        assert Permutation.identity(3).fixed_points() == {0, 1, 2}

    def test_support_complements_fixed_points(self):
        p = P("(2 5)(3 4)", 6)
        assert p.support() | p.fixed_points() == set(range(6))
        assert p.support() & p.fixed_points() == set()

    def test_order_is_lcm(self):
        p = P("(1 2)(3 4 5)", 5)
        assert p.order() == 6

    def test_is_cycle(self):
        assert P("(2 4 5)", 6).is_cycle()
        assert not P("(1 2)(3 4)", 4).is_cycle()
        assert not Permutation.identity(3).is_cycle()


class TestNotation:
    def test_parse_basic(self):
        p = P("(1 2)(3 4)", 5)
        assert p.images == (1, 0, 3, 2, 4)

    def test_parse_identity(self):
        assert P("()", 4) == Permutation.identity(4)

    def test_parse_whitespace_and_commas(self):
        assert P(" ( 1 2 ) ( 4 , 5 ) ", 5) == P("(1 2)(4 5)", 5)

    def test_parse_repeated_point(self):
        with pytest.raises(CycleNotationError, match="repeated point 2"):
            P("(1 2)(2 3)", 3)

    def test_parse_out_of_range(self):
        with pytest.raises(CycleNotationError, match="out of range"):
            P("(1 8)", 7)

    def test_parse_malformed(self):
        with pytest.raises(CycleNotationError):
            P("(1 2", 3)
        with pytest.raises(CycleNotationError):
            P("1 2)", 3)
        with pytest.raises(CycleNotationError):
            P("(1 b)", 3)
        with pytest.raises(CycleNotationError):
            P("", 3)

    def test_format_sorts_by_least_moved_point(self):
        p = Permutation.from_cycles(6, [(3, 4), (0, 2)])
        assert format_cycles(p) == "(1 3)(4 5)"

    def test_format_omits_fixed_points_and_identity(self):
        assert format_cycles(P("(2 3)", 5)) == "(2 3)"
        assert format_cycles(Permutation.identity(5)) == "()"

    @given(st.integers(1, 10), st.randoms(use_true_random=False))
    def test_round_trip(self, n, rnd):
        images = list(range(n))
        rnd.shuffle(images)
        p = Permutation(images)
        assert parse_cycles(format_cycles(p), n) == p

    def test_not_a_bijection(self):
        with pytest.raises(ValueError, match="not a bijection"):
            Permutation([0, 0, 1])
        with pytest.raises(ValueError, match="not a bijection"):
            Permutation([0, 3])


class TestGroupAxioms:
    def test_axioms_on_random_triples(self):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randrange(1, 13)
            p, q, r = (random_perm(rng, n) for _ in range(3))
            assert (p * q) * r == p * (q * r)
            e = Permutation.identity(n)
            assert p * p.inverse() == e
            assert p.inverse() * p == e
            assert p * e == e * p == p

    def test_cycle_type_invariants(self):
        rng = random.Random(99)
        for _ in range(300):
            n = rng.randrange(1, 13)
            p = random_perm(rng, n)
            g = random_perm(rng, n)
            t = p.cycle_type()
            assert sum(t) == n
            assert t.count(1) == len(p.fixed_points())
            assert conjugate(p, g).cycle_type() == t
            assert p.order() == math.lcm(*t)

    def test_conjugate_moves_fixed_points(self):
        rng = random.Random(5)
        for _ in range(100):
            n = rng.randrange(2, 11)
            p, g = random_perm(rng, n), random_perm(rng, n)
            gi = g.inverse()
            assert conjugate(p, g).fixed_points() == {
                gi(x) for x in p.fixed_points()
            }
