"""Exact arithmetic helpers against sympy oracles and direct identities."""

from __future__ import annotations

import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from thue1728.arith import (
    divisors,
    factorize,
    is_probable_prime,
    is_square,
    is_squarefree,
    legendre,
    omega,
    squarefree_part,
)


class TestIsSquare:
    def test_small_values(self):
        squares = {n * n for n in range(100)}
        for n in range(10_000):
            assert is_square(n) == (n in squares)

    def test_negative(self):
        assert not is_square(-1)
        assert not is_square(-4)

    @given(st.integers(min_value=0, max_value=10**30))
    def test_square_of_anything_is_square(self, n):
        assert is_square(n * n)

    @given(st.integers(min_value=2, max_value=10**15))
    def test_between_consecutive_squares(self, n):
        assert not is_square(n * n + 1)
        assert not is_square(n * n - 1)


class TestPrimality:
    def test_matches_sympy_small(self):
        for n in range(-5, 5000):
            assert is_probable_prime(n) == sympy.isprime(n), n

    def test_matches_sympy_random_large(self):
        rng = random.Random(12345)
        for _ in range(200):
            n = rng.randrange(2, 2**64)
            assert is_probable_prime(n) == sympy.isprime(n), n

    def test_carmichael_numbers(self):
        for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265):
            assert not is_probable_prime(n)


class TestFactorize:
    def test_reconstructs_value(self):
        rng = random.Random(999)
        for _ in range(300):
            n = rng.randrange(2, 2**48)
            f = factorize(n)
            prod = 1
            for p, e in f.items():
                assert is_probable_prime(p), (n, p)
                prod *= p**e
            assert prod == n

    def test_matches_sympy(self):
        rng = random.Random(77)
        cases = [rng.randrange(2, 2**40) for _ in range(100)]
        # hard semiprimes: products of two random 40-bit primes
        for _ in range(10):
            p = sympy.nextprime(rng.randrange(2**39, 2**40))
            q = sympy.nextprime(rng.randrange(2**39, 2**40))
            cases.append(int(p * q))
        for n in cases:
            assert factorize(n) == {int(p): int(e) for p, e in sympy.factorint(n).items()}

    def test_edges(self):
        assert factorize(1) == {}
        assert factorize(-12) == {2: 2, 3: 1}
        with pytest.raises(ValueError):
            factorize(0)

    def test_memoized(self):
        from thue1728.arith import _factorize_cached

        before = _factorize_cached.cache_info().hits
        n = 87178291199 * 2305843009213693951  # two large primes
        factorize(n)
        factorize(n)
        assert _factorize_cached.cache_info().hits > before

    def test_perfect_power_of_large_prime(self):
        p = 1_000_000_007
        assert factorize(p**3) == {p: 3}


class TestOmegaSquarefree:
    def test_omega_small(self):
        for n in range(1, 2000):
            assert omega(n) == len(sympy.factorint(n))

    def test_omega_sign_and_edges(self):
        assert omega(1) == 0
        assert omega(-1) == 0
        assert omega(-30) == 3
        with pytest.raises(ValueError):
            omega(0)

    def test_squarefree_part_identity(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randrange(1, 2**40)
            d = squarefree_part(n)
            assert is_squarefree(d)
            q, r = divmod(n, d)
            assert r == 0 and is_square(q)

    def test_squarefree_part_matches_sympy_core(self):
        from sympy.ntheory.factor_ import core

        for n in range(1, 3000):
            assert squarefree_part(n) == int(core(n))

    def test_squarefree_part_sign(self):
        assert squarefree_part(-8) == -2
        assert squarefree_part(-9) == -1

    def test_is_squarefree_matches_sympy(self):
        for n in range(1, 5000):
            expected = all(e == 1 for e in sympy.factorint(n).values())
            assert is_squarefree(n) == expected
        assert not is_squarefree(0)
        assert is_squarefree(-1) and is_squarefree(-2)
        assert not is_squarefree(-4)


class TestDivisors:
    def test_matches_sympy(self):
        rng = random.Random(31)
        for _ in range(100):
            n = rng.randrange(1, 10**9)
            assert divisors(n) == list(sympy.divisors(n))

    def test_abs_and_zero(self):
        assert divisors(-6) == [1, 2, 3, 6]
        with pytest.raises(ValueError):
            divisors(0)


class TestLegendre:
    def test_matches_sympy(self):
        primes = [p for p in range(3, 500) if sympy.isprime(p)]
        rng = random.Random(8)
        for p in primes:
            for _ in range(10):
                a = rng.randrange(-1000, 1000)
                assert legendre(a, p) == int(sympy.legendre_symbol(a, p)), (a, p)

    def test_euler_criterion_consistency(self):
        # (a|p) = 1 exactly when a is a nonzero square mod p
        for p in (3, 5, 7, 11, 13, 97, 101):
            sq = {(x * x) % p for x in range(1, p)}
            for a in range(p):
                expected = 0 if a == 0 else (1 if a in sq else -1)
                assert legendre(a, p) == expected

    def test_rejects_non_odd_prime_modulus(self):
        with pytest.raises(ValueError):
            legendre(3, 2)
        with pytest.raises(ValueError):
            legendre(3, 1)

    @given(st.integers(), st.sampled_from([3, 5, 7, 11, 13, 10007]))
    @settings(max_examples=100)
    def test_multiplicative(self, a, p):
        b = a + 1
        assert legendre(a * b, p) == legendre(a, p) * legendre(b, p)
