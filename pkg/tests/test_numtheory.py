import math

import pytest
from hypothesis import given, strategies as st

from seqlab.numtheory import (
    MersenneGcdSplit,
    PrimePair,
    common_primitive_root,
    crt_pair,
    factorize,
    is_prime,
    is_primitive_root,
    legendre_symbol,
    mersenne_gcd_split,
    multiplicative_order,
    whiteman_x,
)


def trial_division_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def order_by_powering(a: int, n: int) -> int:
    t, x = 1, a % n
    while x != 1:
        x = x * a % n
        t += 1
    return t


class TestIsPrime:
    def test_smallest_prime(self):
        assert is_prime(2)

    def test_composite(self):
        assert not is_prime(15)

    def test_mersenne_composite(self):
        # 32767 = 7 * 31 * 151 by trial division
        assert trial_division_prime(32767) is False
        assert not is_prime(32767)

    def test_agrees_with_trial_division_below_2000(self):
        for n in range(2000):
            assert is_prime(n) == trial_division_prime(n), n

    def test_large_mersenne(self):
        assert is_prime((1 << 61) - 1)
        assert not is_prime((1 << 67) - 1)

    @given(st.integers(min_value=0, max_value=10**6))
    def test_matches_oracle(self, n):
        assert is_prime(n) == trial_division_prime(n)


class TestFactorize:
    def test_small(self):
        assert factorize(360) == {2: 3, 3: 2, 5: 1}

    def test_one(self):
        assert factorize(1) == {}

    @given(st.integers(min_value=1, max_value=10**6))
    def test_product_reconstructs(self, n):
        assert math.prod(p ** e for p, e in factorize(n).items()) == n


class TestMultiplicativeOrder:
    def test_examples(self):
        assert multiplicative_order(2, 15) == 4
        assert multiplicative_order(1, 7) == 1
        assert multiplicative_order(3, 7) == 6

    def test_rejects_non_unit(self):
        with pytest.raises(ValueError):
            multiplicative_order(6, 15)

    @given(st.integers(min_value=2, max_value=500), st.integers(min_value=1, max_value=500))
    def test_matches_direct_powering(self, n, a):
        if math.gcd(a, n) != 1:
            with pytest.raises(ValueError):
                multiplicative_order(a, n)
        else:
            assert multiplicative_order(a, n) == order_by_powering(a, n)


class TestCommonPrimitiveRoot:
    @pytest.mark.parametrize("p,q,expected", [(3, 5, 2), (5, 7, 3), (3, 7, 5)])
    def test_examples(self, p, q, expected):
        # oracle: exhaustive order check for every smaller candidate
        pair = PrimePair(p, q)
        g = common_primitive_root(pair)
        assert g == expected
        assert order_by_powering(g, p) == p - 1
        assert order_by_powering(g, q) == q - 1
        for c in range(2, g):
            assert not (c % p and c % q
                        and order_by_powering(c, p) == p - 1
                        and order_by_powering(c, q) == q - 1)

    def test_order_modulo_pq(self):
        # the common root has order (p-1)(q-1)/gcd(p-1,q-1) modulo pq
        for p, q in [(3, 5), (5, 7), (13, 17), (7, 13)]:
            g = common_primitive_root(PrimePair(p, q))
            d = math.gcd(p - 1, q - 1)
            assert multiplicative_order(g, p * q) == (p - 1) * (q - 1) // d


class TestWhitemanX:
    @pytest.mark.parametrize("p,q,g,expected", [(3, 5, 2, 11), (5, 7, 3, 8), (3, 7, 5, 8)])
    def test_examples(self, p, q, g, expected):
        x = whiteman_x(PrimePair(p, q), g)
        assert x == expected
        assert x % p == g % p and x % q == 1

    def test_unique_in_range(self):
        pair = PrimePair(3, 5)
        x = whiteman_x(pair, 2)
        matches = [v for v in range(15) if v % 3 == 2 and v % 5 == 1]
        assert matches == [x]

    def test_crt_rejects_common_factor(self):
        with pytest.raises(ValueError):
            crt_pair(1, 6, 2, 4)


class TestLegendreSymbol:
    def test_examples(self):
        assert legendre_symbol(1, 3) == 1
        assert legendre_symbol(2, 5) == -1
        assert legendre_symbol(10, 5) == 0

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 31, 97])
    def test_euler_criterion(self, p):
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            s = legendre_symbol(a, p)
            if a == 0:
                assert s == 0
            elif a in squares:
                assert s == 1
            else:
                assert s == -1
            assert pow(a, (p - 1) // 2, p) == s % p

    def test_multiplicative(self):
        p = 23
        for a in range(1, p):
            for b in range(1, p):
                assert (legendre_symbol(a, p) * legendre_symbol(b, p)
                        == legendre_symbol(a * b, p))


class TestMersenneGcdSplit:
    def test_three_five(self):
        # gcd(7, (2^15-1)/7) = gcd(7, 4681) = 1
        assert (1 << 15) - 1 == 7 * 4681
        assert mersenne_gcd_split(PrimePair(3, 5)) == MersenneGcdSplit(1, 1)

    def test_five_seven(self):
        assert mersenne_gcd_split(PrimePair(5, 7)) == MersenneGcdSplit(1, 1)

    def test_nontrivial_witness(self):
        # 2^11 - 1 = 2047 = 23 * 89, so the p side catches q = 23
        assert 2047 == 23 * 89
        assert mersenne_gcd_split(PrimePair(11, 23)) == MersenneGcdSplit(23, 1)

    @pytest.mark.parametrize("p,q", [(3, 5), (3, 7), (5, 11), (11, 23), (13, 53)])
    def test_closed_form(self, p, q):
        split = mersenne_gcd_split(PrimePair(p, q))
        assert split.gp == math.gcd((1 << p) - 1, q)
        assert split.gq == math.gcd((1 << q) - 1, p) == 1


class TestPrimePair:
    def test_valid(self):
        PrimePair(3, 5)

    @pytest.mark.parametrize("p,q", [(4, 5), (3, 9), (5, 3), (3, 3), (2, 5), (3, 4)])
    def test_invalid(self, p, q):
        with pytest.raises(ValueError):
            PrimePair(p, q)


def test_primitive_root_detector():
    for p in (3, 5, 7, 11, 13):
        for g in range(1, p):
            assert is_primitive_root(g, p) == (order_by_powering(g, p) == p - 1)
