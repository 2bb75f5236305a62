"""Exact modular arithmetic for moduli below 2**62.

Residues are plain Python ints (exact, arbitrary precision); every
operation validates its inputs at the boundary and never overflows.
Primality is deterministic over the whole supported range, so results
are reproducible with no probabilistic error bound to tune.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

MODULUS_CEILING = 1 << 62

# Deterministic Miller-Rabin witnesses, sound for all n < 2**64
# (Sinclair's 7-base set).
_MR_WITNESSES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97,
)

_TRIAL_BOUND = 10**6


def _check_modulus(m: int, floor: int = 1) -> None:
    if m < floor:
        raise ValueError(f"invalid modulus {m}: must be >= {floor}")
    if m >= MODULUS_CEILING:
        raise ValueError(f"invalid modulus {m}: must be < 2**62")


def _check_residue(x: int, m: int, name: str = "value") -> None:
    if not 0 <= x < m:
        raise ValueError(f"{name} {x} is not a residue modulo {m}")


def mulmod(a: int, b: int, m: int) -> int:
    """Return (a * b) mod m exactly."""
    _check_modulus(m)
    _check_residue(a, m, "a")
    _check_residue(b, m, "b")
    return (a * b) % m


def powmod(base: int, exp: int, m: int) -> int:
    """Return base**exp mod m by square-and-multiply."""
    _check_modulus(m, floor=2)
    _check_residue(base, m, "base")
    if exp < 0:
        raise ValueError(f"exponent {exp} must be non-negative")
    result = 1
    b = base
    e = exp
    while e:
        if e & 1:
            result = (result * b) % m
        b = (b * b) % m
        e >>= 1
    return result


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2**64."""
    if n < 0:
        raise ValueError(f"primality is defined for non-negative n, got {n}")
    if n >= 1 << 64:
        raise ValueError(f"{n} exceeds the deterministic witness range (2**64)")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _SMALL_PRIMES[-1] ** 2:
        return True
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a <= 1:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Find a non-trivial factor of composite n (Brent's cycle variant).

    Deterministic: walks x -> x^2 + c with c = 1, 2, 3, ... until a
    factor splits off.  Callers guarantee n is odd, composite and has
    no factor below the trial-division bound.
    """
    for c in range(1, n):
        x = 2
        y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise RuntimeError(f"failed to split {n}")  # unreachable for composite n


def factorize(n: int) -> list[tuple[int, int]]:
    """Complete prime factorization as a sorted list of (prime, exponent).

    Trial division up to 10**6, then Pollard-rho splitting with each
    factor certified prime by is_prime.
    """
    if n < 2:
        raise ValueError(f"cannot factor {n}: need n >= 2")
    if n >= MODULUS_CEILING:
        raise ValueError(f"{n} exceeds the supported range (2**62)")
    counts: dict[int, int] = {}
    while n % 2 == 0:
        counts[2] = counts.get(2, 0) + 1
        n //= 2
    d = 3
    while d * d <= n and d <= _TRIAL_BOUND:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += 2
    if d * d > n and n > 1:
        counts[n] = counts.get(n, 0) + 1
        n = 1
    # Anything left is a composite with all factors above the trial bound.
    pending = [n] if n > 1 else []
    while pending:
        m = pending.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        f = _pollard_brent(m)
        pending.append(f)
        pending.append(m // f)
    return sorted(counts.items())


def mult_order(a: int, p: int) -> int:
    """Smallest d >= 1 with a**d = 1 mod p, for an odd prime p.

    Factors p - 1 and strips prime factors from the group order.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    _check_modulus(p)
    a %= p
    if a == 0:
        raise ValueError(f"{a} is not a unit modulo {p}")
    if a == 1:
        return 1
    d = p - 1
    for r, e in factorize(p - 1):
        for _ in range(e):
            if powmod(a, d // r, p) == 1:
                d //= r
            else:
                break
    return d


def is_primitive_root(a: int, p: int) -> bool:
    """True iff a generates the full multiplicative group mod p."""
    if not 1 <= a < p:
        raise ValueError(f"a={a} out of range for modulus {p}")
    return mult_order(a, p) == p - 1


def is_safe_prime(p: int) -> bool:
    """True iff p and q = (p - 1) / 2 are both odd primes."""
    if p < 7 or p % 2 == 0:
        return False
    q = (p - 1) // 2
    return q % 2 == 1 and is_prime(p) and is_prime(q)


@dataclass(frozen=True)
class CongruenceSolution:
    """All x with a*x = c (mod m): x = base + k*period for 0 <= k < count."""

    base: int
    period: int
    count: int

    def solutions(self) -> list[int]:
        return [self.base + k * self.period for k in range(self.count)]


def _invmod(a: int, m: int) -> int:
    """Inverse of a modulo m via extended Euclid; requires gcd(a, m) = 1."""
    g, x = _ext_gcd(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return x % m


def _ext_gcd(a: int, b: int) -> tuple[int, int]:
    """Return (g, x) with g = gcd(a, b) and a*x = g (mod b)."""
    old_r, r = a, b
    old_x, x = 1, 0
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_x, x = x, old_x - quot * x
    return old_r, old_x


def solve_linear_congruence(a: int, c: int, m: int) -> CongruenceSolution | None:
    """Describe all x with a*x = c (mod m), or None when unsolvable.

    Solvable iff g = gcd(a, m) divides c; then there are exactly g
    solutions modulo m, spaced m/g apart.
    """
    _check_modulus(m)
    a %= m
    c %= m
    g = gcd(a, m)
    if g == 0:
        # a = 0 mod m = 1: x = 0 is the single solution
        return CongruenceSolution(base=0, period=1, count=1)
    if c % g != 0:
        return None
    period = m // g
    if period == 1:
        return CongruenceSolution(base=0, period=1, count=g)
    base = ((c // g) * _invmod(a // g, period)) % period
    return CongruenceSolution(base=base, period=period, count=g)


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi (inclusive bounds)."""
    if lo > hi:
        return []
    out = []
    if lo <= 2 <= hi:
        out.append(2)
    start = max(lo, 3)
    if start % 2 == 0:
        start += 1
    # Sieving pays off only when the base primes up to sqrt(hi) are cheap.
    if hi - start > 10**5 and hi <= 10**14:
        base = primes_in_range(3, isqrt(hi))
        seg = 1 << 18
        for seg_lo in range(start, hi + 1, seg):
            seg_hi = min(seg_lo + seg - 1, hi)
            width = seg_hi - seg_lo + 1
            marks = bytearray(b"\x01") * width
            for p in base:
                first = max(p * p, ((seg_lo + p - 1) // p) * p)
                if first <= seg_hi:
                    n_hits = (seg_hi - first) // p + 1
                    marks[first - seg_lo :: p] = bytes(n_hits)
            out.extend(
                n for n in range(seg_lo, seg_hi + 1, 2) if marks[n - seg_lo]
            )
        return out
    out.extend(n for n in range(start, hi + 1, 2) if is_prime(n))
    return out
