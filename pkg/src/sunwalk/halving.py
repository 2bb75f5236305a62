"""The halving map on S_p = {1, ..., p-1} for an odd prime p.

The map sends even x to x/2 and odd x to (p-x)/2.  Its image always
lands in the lower half {1, ..., q}, q = (p-1)/2, which splits S_p
into cycle vertices (lower half) and ray vertices (upper half).
"""

from __future__ import annotations

from dataclasses import dataclass

from .modarith import MODULUS_CEILING, is_prime, mult_order


@dataclass(frozen=True)
class PrimeContext:
    """Validated odd prime with the derived cycle/component parameters.

    cycle_length is the multiplicative order of 4 mod p; the identity
    2 * cycle_length * component_count == p - 1 holds exactly.
    """

    p: int
    q: int
    cycle_length: int
    component_count: int


def make_context(p: int) -> PrimeContext:
    """Build a PrimeContext, rejecting anything but an odd prime < 2**62."""
    if not isinstance(p, int):
        raise ValueError(f"{p!r} is not an integer")
    if p >= MODULUS_CEILING:
        raise ValueError(f"{p} is not supported: must be < 2**62")
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    q = (p - 1) // 2
    cycle_length = mult_order(4 % p, p)
    component_count, rem = divmod(p - 1, 2 * cycle_length)
    if rem:
        raise RuntimeError(
            f"p={p}: 2*ord_p(4) does not divide p-1; this cannot happen"
        )
    return PrimeContext(
        p=p, q=q, cycle_length=cycle_length, component_count=component_count
    )


def _check_vertex(ctx: PrimeContext, x: int, name: str = "x") -> None:
    if not 1 <= x <= ctx.p - 1:
        raise ValueError(f"{name}={x} is outside S_{ctx.p} = [1, {ctx.p - 1}]")


def step(ctx: PrimeContext, x: int) -> int:
    """Apply the map once: x/2 if x is even, (p-x)/2 if x is odd."""
    _check_vertex(ctx, x)
    return x // 2 if x % 2 == 0 else (ctx.p - x) // 2


def preimages(ctx: PrimeContext, a: int) -> set[int]:
    """The vertices mapping to a: {2a, p-2a} when a <= q, empty otherwise.

    When non-empty, exactly one preimage lies in the lower half and the
    two preimages sum to p.
    """
    _check_vertex(ctx, a, "a")
    if a > ctx.q:
        return set()
    return {2 * a, ctx.p - 2 * a}


def is_lower(ctx: PrimeContext, x: int) -> bool:
    """True iff x belongs to the lower half {1, ..., q} (a cycle vertex)."""
    _check_vertex(ctx, x)
    return x <= ctx.q


def lemma1_holds(ctx: PrimeContext, x: int, y: int) -> bool:
    """Check a*y = (-1)**(y-x) * b*x (mod p) with a, b the images of x, y.

    Holds for every pair in S_p; exposed so sweeps can confirm it.
    """
    _check_vertex(ctx, x)
    _check_vertex(ctx, y, "y")
    p = ctx.p
    a = x // 2 if x % 2 == 0 else (p - x) // 2
    b = y // 2 if y % 2 == 0 else (p - y) // 2
    # (-1)**(y-x) from integer parity, no modular exponentiation
    if (y - x) % 2 == 0:
        return (a * y - b * x) % p == 0
    return (a * y + b * x) % p == 0
