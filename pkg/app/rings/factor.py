"""
Exact integer factorization.

Trial division up to a configurable bound, then Brent's variant of Pollard's
rho seeded deterministically so repeated runs split composites identically.
Primality of cofactors is decided by ``sympy.isprime``.
"""

import random
from functools import lru_cache
from math import gcd, isqrt
from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger
from sympy import isprime

from app.config import settings


def _pollard_rho(n: int, rng: random.Random, max_iterations: int = 1 << 20) -> int:
    """Return a nontrivial factor of the odd composite ``n``."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        iterations = 0
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
                g = gcd(q, n)
                k += m
            r *= 2
            iterations += r
            if iterations > max_iterations:
                break
        if g == n:
            # Backtrack one step at a time from the last saved point.
            while True:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
                if g > 1:
                    break
        if 1 < g < n:
            return g
        logger.debug(f"Pollard rho retry on {n} with a new polynomial")


def _split(n: int, rng: random.Random, out: Dict[int, int]) -> None:
    if n == 1:
        return
    if isprime(n):
        out[n] = out.get(n, 0) + 1
        return
    root = isqrt(n)
    if root * root == n:
        _split(root, rng, out)
        _split(root, rng, out)
        return
    d = _pollard_rho(n, rng)
    _split(d, rng, out)
    _split(n // d, rng, out)


@lru_cache(maxsize=65536)
def _factorize_positive(n: int) -> Tuple[Tuple[int, int], ...]:
    factors: Dict[int, int] = {}
    bound = settings.TRIAL_DIVISION_BOUND
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    d = 3
    while d * d <= n and d <= bound:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        if d * d > n:
            factors[n] = factors.get(n, 0) + 1
        else:
            _split(n, random.Random(settings.RHO_SEED), factors)
    return tuple(sorted(factors.items()))


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization of ``|n|`` as an ordered ``{prime: exponent}`` dict.

    Raises:
        ValueError: if ``n`` is zero
    """
    if n == 0:
        raise ValueError("cannot factorize 0")
    return dict(_factorize_positive(abs(n)))


def prime_factors(n: int) -> List[int]:
    """Distinct primes dividing ``n`` in ascending order (empty for 0 and ±1)."""
    if n == 0:
        return []
    return list(factorize(n))


def is_prime(n: int) -> bool:
    return n > 1 and isprime(n)


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """Return ``(p, k)`` when ``n = p**k`` with ``k >= 1``, else None."""
    if n < 2:
        return None
    factors = factorize(n)
    if len(factors) != 1:
        return None
    ((p, k),) = factors.items()
    return p, k


def squarefree_kernel(n: int) -> int:
    """Product of the distinct primes dividing ``n``; the kernel of 0 is 0."""
    if n == 0:
        return 0
    kernel = 1
    for p in factorize(n):
        kernel *= p
    return kernel


def valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    k = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        k += 1
    return k


def strip_primes(n: int, primes: Iterable[int]) -> int:
    """Remove every factor of the given primes from ``n`` (sign kept, 0 kept)."""
    if n == 0:
        return 0
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def is_smooth(n: int, primes: Iterable[int]) -> bool:
    """True when ``|n|`` is a product of the given primes (1 included)."""
    return n != 0 and abs(strip_primes(n, primes)) == 1


def divisors(n: int) -> List[int]:
    """Positive divisors of ``n >= 1`` in ascending order."""
    result = [1]
    for p, k in factorize(n).items():
        result = [d * p**e for d in result for e in range(k + 1)]
    return sorted(result)
