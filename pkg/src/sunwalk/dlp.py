"""Walk-based discrete logarithms to base 2, with a BSGS cross-check.

Iterating the halving map from b while accumulating exponent
increments (+1 on even steps, +1+q on odd steps, mod p-1) reaches 1
exactly when b is, up to sign, a power of 2; the accumulated exponent
then recovers log_2(b) after an optional sign correction.  Baby-step
giant-step is provided as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .halving import PrimeContext, _check_vertex
from .modarith import (
    _invmod,
    is_prime,
    mult_order,
    powmod,
    solve_linear_congruence,
)

OK = "ok"
NOT_REACHABLE = "not-reachable"
NO_SOLUTION = "no-solution"


@dataclass(frozen=True)
class WalkTrace:
    """Trajectory (n, u_n, x_n) of the exponent-accumulating walk.

    u_0 is the start value b, x_0 = 0; exponents are kept reduced
    mod p-1.  hit_index is the first n with u_n = 1, or None.
    """

    start_b: int
    entries: tuple[tuple[int, int, int], ...]
    hit_index: int | None


@dataclass(frozen=True)
class DlpResult:
    exponent: int | None
    status: str  # OK, NOT_REACHABLE or NO_SOLUTION
    verified: bool
    trace: WalkTrace | None

    @property
    def ok(self) -> bool:
        return self.status == OK


def walk(ctx: PrimeContext, b: int, max_steps: int) -> WalkTrace:
    """Run the walk from b, stopping at the first 1 or after max_steps."""
    _check_vertex(ctx, b, "b")
    if max_steps < 1:
        raise ValueError(f"max_steps={max_steps} must be positive")
    p, q = ctx.p, ctx.q
    mod = p - 1
    u = b
    x = 0
    entries = [(0, u, x)]
    hit = 0 if u == 1 else None
    n = 0
    while hit is None and n < max_steps:
        n += 1
        if u % 2 == 0:
            u //= 2
            x = (x + 1) % mod
        else:
            u = (p - u) // 2
            x = (x + 1 + q) % mod
        entries.append((n, u, x))
        if u == 1:
            hit = n
    return WalkTrace(start_b=b, entries=tuple(entries), hit_index=hit)


def solve_dlp2(ctx: PrimeContext, b: int) -> DlpResult:
    """Solve 2**x = b (mod p) by walking, never returning unverified answers.

    The walk is bounded by cycle_length + 1 steps: one step enters the
    lower half (already on a cycle), and one lap decides whether 1 is
    in reach.  No hit means b sits in a component away from 1
    (not-reachable).  A hit yields 2**x = +/-b; the minus case is
    corrected through -1 = 2**(ord_p(2)/2) when that power exists,
    otherwise b is not a power of 2 at all (no-solution).
    """
    trace = walk(ctx, b, ctx.cycle_length + 1)
    if trace.hit_index is None:
        return DlpResult(exponent=None, status=NOT_REACHABLE, verified=False, trace=trace)
    p = ctx.p
    base = 2 % p
    x = trace.entries[trace.hit_index][2]
    got = powmod(base, x, p)
    if got == b:
        return DlpResult(exponent=x, status=OK, verified=True, trace=trace)
    if p - got == b:
        d = mult_order(base, p)
        if d % 2 == 1:
            return DlpResult(exponent=None, status=NO_SOLUTION, verified=False, trace=trace)
        x = (x + d // 2) % (p - 1)
        if powmod(base, x, p) != b:
            raise RuntimeError(
                f"p={p}, b={b}: sign correction by ord/2 failed; implementation bug"
            )
        return DlpResult(exponent=x, status=OK, verified=True, trace=trace)
    raise RuntimeError(
        f"p={p}, b={b}: walk hit 1 with 2**{x} = {got} != +/-{b}; implementation bug"
    )


def solve_dlp_general(ctx: PrimeContext, a: int, b: int) -> DlpResult:
    """Solve a**x = b (mod p) by reducing both sides to base 2.

    With y = log_2(a) and z = log_2(b), solves y*x = z (mod p-1) and
    returns the smallest candidate that verifies.  The attached trace
    is the walk for b.
    """
    _check_vertex(ctx, a, "a")
    _check_vertex(ctx, b, "b")
    log_a = solve_dlp2(ctx, a)
    if not log_a.ok:
        return DlpResult(exponent=None, status=log_a.status, verified=False, trace=log_a.trace)
    log_b = solve_dlp2(ctx, b)
    if not log_b.ok:
        return DlpResult(exponent=None, status=log_b.status, verified=False, trace=log_b.trace)
    sol = solve_linear_congruence(log_a.exponent, log_b.exponent, ctx.p - 1)
    if sol is not None:
        for x in sol.solutions():
            if powmod(a, x, ctx.p) == b:
                return DlpResult(exponent=x, status=OK, verified=True, trace=log_b.trace)
    return DlpResult(exponent=None, status=NO_SOLUTION, verified=False, trace=log_b.trace)


def bsgs(p: int, a: int, b: int) -> int | None:
    """Baby-step/giant-step: least x >= 0 with a**x = b (mod p), else None.

    The step count m is ceil(sqrt(ord_p(a))), not sqrt(p), so values of
    b outside the subgroup generated by a are detected exactly.
    """
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if not 1 <= a <= p - 1 or not 1 <= b <= p - 1:
        raise ValueError(f"a={a}, b={b} must lie in [1, {p - 1}]")
    d = mult_order(a, p)
    m = isqrt(d - 1) + 1
    table: dict[int, int] = {}
    aj = 1
    for j in range(m):
        table.setdefault(aj, j)
        aj = aj * a % p
    shrink = _invmod(aj, p)  # a**-m
    gamma = b
    for i in range((d + m - 1) // m):
        j = table.get(gamma)
        if j is not None:
            x = (i * m + j) % d
            if powmod(a, x, p) == b:
                return x
        gamma = gamma * shrink % p
    return None
