"""Exact integer arithmetic: factorization, squarefree parts, divisors.

Factoring is short trial division, then deterministic Miller-Rabin plus
Brent's variant of Pollard rho.  Results are memoized: the reduction
pipeline factors the same handful of large coefficients over and over.
Everything returns plain Python ints.
"""

from __future__ import annotations

import math
from functools import lru_cache

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic witness set for n < 3.3 * 10^24 (Sorenson-Webster).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 20_000


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3e24."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        y, c, m = seed % n, (2 * seed + 1) % n, 128
        if c == 0:
            c = 1
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        seed += 1  # cycle degenerated; retry with a new polynomial


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.

    factorize(1) == {} and factorize(0) raises ValueError.  The sign is the
    caller's business; every consumer here works with |n|.
    """
    if n == 0:
        raise ValueError("0 has no prime factorization")
    return dict(_factorize_cached(abs(n)))


@lru_cache(maxsize=65536)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # wheel over 30 avoids multiples of 2,3,5
    p = 7
    increments = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while p * p <= n and p < _TRIAL_LIMIT:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += increments[i]
        i = (i + 1) % 8
    if n == 1:
        return tuple(sorted(out.items()))
    if p * p > n:
        out[n] = out.get(n, 0) + 1
        return tuple(sorted(out.items()))
    # big leftover cofactor: recurse with rho
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))
    return tuple(sorted(out.items()))


def omega(n: int) -> int:
    """Number of distinct prime factors of |n|; omega(+-1) == 0."""
    if n == 0:
        raise ValueError("omega(0) undefined")
    if abs(n) == 1:
        return 0
    return len(factorize(n))


def squarefree_part(n: int) -> int:
    """The squarefree D with |n| = D * m^2; sign of n is preserved."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    d = 1
    for p, e in factorize(n).items():
        if e % 2:
            d *= p
    return sign * d


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    if abs(n) == 1:
        return True
    return all(e == 1 for e in factorize(n).values())


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of |n|."""
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for odd prime p: 0, 1 or -1."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"odd prime required, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1
