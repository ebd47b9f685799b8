"""Integer number theory by trial division.

Everything here works on Python ints, so there is no overflow, but the
factoring is only meant for desk-sized inputs.
"""

from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=4096)
def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n):
    """Return the prime factorization of ``|n|`` as a dict ``{prime: exponent}``.

    ``factorize(1) == {}``. Zero has no factorization and raises ``ValueError``.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    factors = {}
    while n % 2 == 0:
        factors[2] = factors.get(2, 0) + 1
        n //= 2
    f = 3
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n):
    """Euler's totient, computed from the factorization of ``n``."""
    if n < 1:
        raise ValueError(f"euler_phi needs a positive integer, got {n}")
    result = n
    for prime in factorize(n):
        result = result // prime * (prime - 1)
    return result


def divisors(n):
    """Sorted list of the positive divisors of ``n >= 1``."""
    divs = [1]
    for prime, exp in factorize(n).items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


def squarefree_part(n):
    """Signed squarefree integer ``s`` with ``n = s * k**2`` for some integer k."""
    if n == 0:
        raise ValueError("0 has no squarefree part")
    s = -1 if n < 0 else 1
    for prime, exp in factorize(n).items():
        if exp % 2:
            s *= prime
    return s


def exact_isqrt(n):
    """Integer square root of ``n`` if ``n`` is a perfect square, else None."""
    if n < 0:
        return None
    root = isqrt(n)
    return root if root * root == n else None


def lcm(a, b):
    return a // gcd(a, b) * b
