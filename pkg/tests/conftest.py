"""Shared brute-force oracles, kept independent of the package internals."""

from __future__ import annotations


def sieve_flags(limit: int) -> bytearray:
    """flags[n] == 1 iff n is prime, for 0 <= n < limit."""
    flags = bytearray(b"\x01") * limit
    flags[0:2] = b"\x00\x00"
    n = 2
    while n * n < limit:
        if flags[n]:
            flags[n * n :: n] = bytes(len(range(n * n, limit, n)))
        n += 1
    return flags


def primes_upto(limit: int) -> list[int]:
    flags = sieve_flags(limit)
    return [n for n in range(limit) if flags[n]]


def odd_primes_upto(limit: int) -> list[int]:
    return [p for p in primes_upto(limit) if p > 2]


def naive_order(a: int, p: int) -> int:
    """Incremental multiplicative order: multiply until 1 appears."""
    x = a % p
    d = 1
    while x != 1:
        x = x * a % p
        d += 1
    return d


def halve(p: int, x: int) -> int:
    """Reference halving map, restated independently of the package."""
    return x // 2 if x % 2 == 0 else (p - x) // 2


def powers_of_two(p: int) -> set[int]:
    """The subgroup generated by 2 mod p, by direct enumeration."""
    out = {1}
    x = 2 % p
    while x not in out:
        out.add(x)
        x = x * 2 % p
    return out
