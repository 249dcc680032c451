"""Prime generation for sweeps: simple sieve plus a segmented range sieve."""

from __future__ import annotations

from math import isqrt


def primes_upto(n: int) -> list[int]:
    """All primes <= n by Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            step = len(range(i * i, n + 1, i))
            sieve[i * i :: i] = bytearray(step)
    return [i for i in range(2, n + 1) if sieve[i]]


def primes_in_range(lo: int, hi: int, segment: int = 1 << 16) -> list[int]:
    """Primes in [lo, hi] by a segmented sieve over base primes <= sqrt(hi).

    Composites are marked from p*p upward, so base primes falling inside a
    segment are never marked by themselves.
    """
    if hi < 2 or hi < lo:
        return []
    lo = max(lo, 2)
    base = primes_upto(isqrt(hi))
    out: list[int] = []
    start = lo
    while start <= hi:
        end = min(start + segment - 1, hi)
        size = end - start + 1
        block = bytearray([1]) * size
        for p in base:
            first = max(p * p, ((start + p - 1) // p) * p)
            if first > end:
                continue
            block[first - start :: p] = bytearray(len(range(first - start, size, p)))
        out.extend(start + i for i in range(size) if block[i])
        start = end + 1
    return out


def is_prime(n: int) -> bool:
    """Deterministic primality by trial division (CLI validation scale)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True
