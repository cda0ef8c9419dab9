"""Small exact number-theory helpers shared across the package."""

from __future__ import annotations

from functools import lru_cache


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n (n != 0)."""
    if n == 0:
        raise ValueError("p_part of 0 is undefined")
    n = abs(n)
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ValueError("not a unit mod p")
    k, x = 1, a
    while x != 1:
        x = x * a % p
        k += 1
    return k


@lru_cache(maxsize=None)
def smallest_primitive_root(p: int) -> int:
    """Least generator of the cyclic group of units mod an odd prime p."""
    if not is_odd_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise AssertionError("unreachable: every odd prime has a primitive root")
