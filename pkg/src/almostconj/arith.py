"""Small integer-arithmetic helpers shared across modules."""

from __future__ import annotations


def primes_below(bound: int) -> list[int]:
    """All primes p < bound, by sieve."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for p in range(2, int(bound ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [p for p in range(bound) if sieve[p]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_base(n: int) -> int | None:
    """The prime p with n = p^k (k >= 1), or None if n is not a prime power."""
    if n < 2:
        return None
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            return d if m == 1 else None
        d += 1
    return n  # n itself is prime


def is_prime_power(n: int) -> bool:
    return prime_power_base(n) is not None
