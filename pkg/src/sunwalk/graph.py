"""Decompose the halving-map digraph into sunlet components.

Each component is a directed cycle (lower-half vertices) with one
pendant ray vertex (upper half) attached to every cycle vertex.  The
decomposition is canonical: components sorted by minimum cycle
element, cycles rotated to start at their minimum, rays ordered by
their target's cycle position.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .halving import (
    PrimeContext,
    _check_vertex,
    lemma1_holds,
    make_context,
    preimages,
    step,
)
from .modarith import mult_order


@dataclass(frozen=True)
class SunletComponent:
    cycle: tuple[int, ...]
    rays: tuple[tuple[int, int], ...]  # (outer, target), target = cycle[i]


@dataclass(frozen=True)
class Decomposition:
    context: PrimeContext
    components: tuple[SunletComponent, ...]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def decompose(ctx: PrimeContext) -> Decomposition:
    """Partition S_p into sunlet components in O(p) time and space.

    Marks visited lower vertices while tracing cycles (the map
    restricted to the lower half is a permutation), then attaches each
    upper vertex to its image.
    """
    p, q = ctx.p, ctx.q
    visited = bytearray(q + 1)
    comp_of = [0] * (q + 1)
    pos_of = [0] * (q + 1)
    cycles: list[list[int]] = []
    for v in range(1, q + 1):
        if visited[v]:
            continue
        # v is the minimum of its cycle: smaller cycle members would
        # already have been visited.
        cyc: list[int] = []
        idx = len(cycles)
        x = v
        while not visited[x]:
            visited[x] = 1
            comp_of[x] = idx
            pos_of[x] = len(cyc)
            cyc.append(x)
            x = x // 2 if x % 2 == 0 else (p - x) // 2
        if x != v:
            raise RuntimeError(f"p={p}: lower half is not a disjoint cycle union")
        cycles.append(cyc)
    rays: list[list[tuple[int, int] | None]] = [[None] * len(c) for c in cycles]
    for outer in range(q + 1, p):
        t = outer // 2 if outer % 2 == 0 else (p - outer) // 2
        rays[comp_of[t]][pos_of[t]] = (outer, t)
    components = []
    for cyc, ray_row in zip(cycles, rays):
        if any(r is None for r in ray_row):
            raise RuntimeError(f"p={p}: some cycle vertex lacks a ray")
        components.append(SunletComponent(cycle=tuple(cyc), rays=tuple(ray_row)))
    return Decomposition(context=ctx, components=tuple(components))


def cycle_of(ctx: PrimeContext, x: int) -> tuple[int, ...]:
    """The cycle reached from x, rotated to start at its minimum element.

    At most one step precedes cycle entry: the image of any vertex lies
    in the lower half, and every lower vertex is on a cycle.
    """
    _check_vertex(ctx, x)
    p, q = ctx.p, ctx.q
    if x > q:
        x = x // 2 if x % 2 == 0 else (p - x) // 2
    cyc = [x]
    y = x // 2 if x % 2 == 0 else (p - x) // 2
    while y != x:
        cyc.append(y)
        y = y // 2 if y % 2 == 0 else (p - y) // 2
    k = cyc.index(min(cyc))
    return tuple(cyc[k:] + cyc[:k])


def verify_theorem(d: Decomposition) -> VerificationReport:
    """Mechanically check the structure theorem on a decomposition.

    Six checks: component count, uniform cycle length equal to
    ord_p(4), ord_p(4) divides (p-1)/2, cycles partition the lower
    half, rays biject the upper half onto cycle vertices, and every
    cycle vertex has in-degree exactly 2.
    """
    ctx = d.context
    p, q, L = ctx.p, ctx.q, ctx.cycle_length
    checks: list[CheckResult] = []

    n_comp = len(d.components)
    checks.append(
        CheckResult(
            "component_count",
            n_comp == ctx.component_count,
            None if n_comp == ctx.component_count else f"got {n_comp}, expected {ctx.component_count}",
        )
    )

    order4 = mult_order(4 % p, p)
    bad_len = [len(c.cycle) for c in d.components if len(c.cycle) != order4]
    ok = not bad_len and L == order4
    checks.append(
        CheckResult(
            "cycle_length_is_order_of_4",
            ok,
            None if ok else f"ord_p(4)={order4}, cycle lengths {sorted(set(bad_len)) or [L]}",
        )
    )

    ok = q % order4 == 0
    checks.append(
        CheckResult(
            "order_of_4_divides_half_group",
            ok,
            None if ok else f"{order4} does not divide q={q}",
        )
    )

    seen = bytearray(q + 1)
    bad: str | None = None
    for comp in d.components:
        cyc = comp.cycle
        n = len(cyc)
        for i, v in enumerate(cyc):
            if not 1 <= v <= q:
                bad = f"cycle vertex {v} outside lower half"
                break
            if seen[v]:
                bad = f"cycle vertex {v} repeated"
                break
            seen[v] = 1
            nxt = v // 2 if v % 2 == 0 else (p - v) // 2
            if nxt != cyc[(i + 1) % n]:
                bad = f"cycle edge {v}->{cyc[(i + 1) % n]} disagrees with map ({v}->{nxt})"
                break
        if bad:
            break
    if bad is None and not all(seen[1:]):
        missing = next(v for v in range(1, q + 1) if not seen[v])
        bad = f"lower vertex {missing} is on no cycle"
    checks.append(CheckResult("cycles_partition_lower_half", bad is None, bad))

    bad = None
    seen_outer = bytearray(p)
    for comp in d.components:
        if len(comp.rays) != len(comp.cycle):
            bad = f"component with cycle min {comp.cycle[0]} has {len(comp.rays)} rays"
            break
        for (outer, target), v in zip(comp.rays, comp.cycle):
            img = outer // 2 if outer % 2 == 0 else (p - outer) // 2
            if not q < outer <= p - 1:
                bad = f"ray vertex {outer} not in upper half"
            elif seen_outer[outer]:
                bad = f"ray vertex {outer} used twice"
            elif target != v or img != v:
                bad = f"ray {outer}->{target} misaligned with cycle vertex {v} (map gives {img})"
            if bad:
                break
            seen_outer[outer] = 1
        if bad:
            break
    if bad is None and not all(seen_outer[q + 1 : p]):
        missing = next(v for v in range(q + 1, p) if not seen_outer[v])
        bad = f"upper vertex {missing} is on no ray"
    checks.append(CheckResult("rays_biject_upper_half", bad is None, bad))

    indeg = [0] * (q + 1)
    for x in range(1, p):
        indeg[x // 2 if x % 2 == 0 else (p - x) // 2] += 1
    bad = next(
        (f"vertex {v} has in-degree {indeg[v]}" for v in range(1, q + 1) if indeg[v] != 2),
        None,
    )
    checks.append(CheckResult("cycle_vertices_have_indegree_2", bad is None, bad))

    return VerificationReport(checks=tuple(checks))


def verify_map_properties(ctx: PrimeContext) -> VerificationReport:
    """Sweep the pointwise map properties over all of S_p.

    Checks: the image lies in the lower half, no fixed points (p > 3),
    preimage pairs sum to p with exactly one lower member, and the
    two-sided congruence of the image relation on a seeded sample.
    """
    p, q = ctx.p, ctx.q
    checks: list[CheckResult] = []

    bad = None
    for x in range(1, p):
        y = step(ctx, x)
        if not 1 <= y <= q:
            bad = f"step({x}) = {y} escapes the lower half"
            break
        if y == x and p > 3:
            bad = f"step({x}) = {x} is a fixed point"
            break
    checks.append(CheckResult("image_in_lower_half_no_fixed_points", bad is None, bad))

    bad = None
    for a in range(1, p):
        pre = preimages(ctx, a)
        if a > q:
            if pre:
                bad = f"upper vertex {a} has preimages {sorted(pre)}"
                break
            continue
        if len(pre) != 2 or sum(pre) != p:
            bad = f"preimages({a}) = {sorted(pre)}"
            break
        if sum(1 for v in pre if v <= q) != 1 or any(step(ctx, v) != a for v in pre):
            bad = f"preimages({a}) = {sorted(pre)} inconsistent with the map"
            break
    checks.append(CheckResult("preimage_pairs", bad is None, bad))

    rng = random.Random(p)
    n_pairs = min(500, (p - 1) * (p - 1))
    bad = None
    for _ in range(n_pairs):
        x = rng.randrange(1, p)
        y = rng.randrange(1, p)
        if not lemma1_holds(ctx, x, y):
            bad = f"(x={x}, y={y})"
            break
    checks.append(CheckResult("image_congruence_sample", bad is None, bad))

    return VerificationReport(checks=tuple(checks))


def export_dot(d: Decomposition) -> str:
    """Render the decomposition as DOT text, byte-stable across runs.

    One subgraph cluster per component; cycle edges first, then ray
    edges, each group in canonical order.
    """
    lines = [f"digraph halving_{d.context.p} {{"]
    for i, comp in enumerate(d.components):
        lines.append(f"  subgraph cluster_{i} {{")
        n = len(comp.cycle)
        for j, v in enumerate(comp.cycle):
            lines.append(f"    {v} -> {comp.cycle[(j + 1) % n]};")
        for outer, target in comp.rays:
            lines.append(f"    {outer} -> {target};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(d: Decomposition) -> str:
    """Serialize the decomposition as canonical JSON (integers only)."""
    doc = {
        "p": d.context.p,
        "q": d.context.q,
        "cycle_length": d.context.cycle_length,
        "component_count": d.context.component_count,
        "components": [
            {"cycle": list(c.cycle), "rays": [[o, t] for o, t in c.rays]}
            for c in d.components
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def decomposition_from_json(text: str) -> Decomposition:
    """Inverse of export_json; revalidates the prime context."""
    doc = json.loads(text)
    ctx = make_context(doc["p"])
    if (ctx.q, ctx.cycle_length, ctx.component_count) != (
        doc["q"],
        doc["cycle_length"],
        doc["component_count"],
    ):
        raise ValueError(f"document parameters disagree with p={doc['p']}")
    components = tuple(
        SunletComponent(
            cycle=tuple(c["cycle"]),
            rays=tuple((o, t) for o, t in c["rays"]),
        )
        for c in doc["components"]
    )
    return Decomposition(context=ctx, components=components)
