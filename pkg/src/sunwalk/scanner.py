"""Audit prime ranges for short-cycle weakness.

A prime whose cycle length ord_p(4) is small admits trivially short
exponent-walks, so its discrete logs to base 2 fall to enumeration.
The scanner computes the cycle length arithmetically (no O(p)
decomposition) and flags primes at or below a configurable threshold.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .modarith import (
    MODULUS_CEILING,
    is_primitive_root,
    is_safe_prime,
    mult_order,
    primes_in_range,
)

DEFAULT_THRESHOLD = 64
DEFAULT_RANGE_CAP = 10**7


@dataclass(frozen=True)
class ScanRecord:
    p: int
    q: int
    cycle_length: int
    component_count: int
    safe_prime: bool
    two_is_primitive_root: bool
    weak: bool


@dataclass(frozen=True)
class ScanReport:
    lo: int
    hi: int
    threshold: int
    records: tuple[ScanRecord, ...]

    @property
    def total_primes(self) -> int:
        return len(self.records)

    @property
    def weak_primes(self) -> int:
        return sum(1 for r in self.records if r.weak)


def _audit_prime(p: int, threshold: int) -> ScanRecord:
    cycle_length = mult_order(4 % p, p)
    return ScanRecord(
        p=p,
        q=(p - 1) // 2,
        cycle_length=cycle_length,
        component_count=(p - 1) // (2 * cycle_length),
        safe_prime=is_safe_prime(p),
        two_is_primitive_root=is_primitive_root(2, p),
        weak=cycle_length <= threshold,
    )


def _scan_chunk(args: tuple[int, int, int]) -> list[ScanRecord]:
    lo, hi, threshold = args
    return [_audit_prime(p, threshold) for p in primes_in_range(lo, hi)]


def scan_range(
    lo: int,
    hi: int,
    threshold: int = DEFAULT_THRESHOLD,
    jobs: int = 1,
    range_cap: int = DEFAULT_RANGE_CAP,
) -> ScanReport:
    """Audit every prime in [lo, hi]; records come back in ascending order.

    With jobs > 1 the range is split into chunks scanned by worker
    processes; each record is a pure function of its prime, so the
    merged output is byte-identical for any worker count.
    """
    if lo < 3:
        raise ValueError(f"range start {lo} must be >= 3")
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if hi >= MODULUS_CEILING:
        raise ValueError(f"range end {hi} must be < 2**62")
    if hi - lo > range_cap:
        raise ValueError(f"range width {hi - lo} exceeds cap {range_cap}")
    if threshold < 1:
        raise ValueError(f"threshold {threshold} must be positive")
    if jobs < 1:
        raise ValueError(f"jobs {jobs} must be positive")
    if jobs == 1:
        records = _scan_chunk((lo, hi, threshold))
    else:
        n_chunks = jobs * 4
        width = (hi - lo) // n_chunks + 1
        chunks = []
        a = lo
        while a <= hi:
            b = min(a + width - 1, hi)
            chunks.append((a, b, threshold))
            a = b + 1
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = [r for part in pool.map(_scan_chunk, chunks) for r in part]
    records.sort(key=lambda r: r.p)
    return ScanReport(lo=lo, hi=hi, threshold=threshold, records=tuple(records))


def ideal_for_walk(record: ScanRecord) -> bool:
    """True iff the walk solver is total for this prime.

    Requires a safe prime with 2 a primitive root; equivalently a
    single component together with ord_p(2) = p - 1.
    """
    return record.safe_prime and record.two_is_primitive_root


CSV_HEADER = "p,q,L,c,safe,two_prim,weak"


def export_csv(report: ScanReport) -> str:
    """Render the report as CSV with booleans as 0/1; byte-deterministic."""
    lines = [CSV_HEADER]
    for r in report.records:
        lines.append(
            f"{r.p},{r.q},{r.cycle_length},{r.component_count},"
            f"{int(r.safe_prime)},{int(r.two_is_primitive_root)},{int(r.weak)}"
        )
    return "\n".join(lines) + "\n"


def parse_csv(text: str) -> list[ScanRecord]:
    """Inverse of export_csv (weak flags are taken as stored)."""
    lines = text.strip().split("\n")
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {lines[0] if lines else ''!r}")
    records = []
    for line in lines[1:]:
        p, q, cyc, comp, safe, two_prim, weak = (int(f) for f in line.split(","))
        records.append(
            ScanRecord(
                p=p,
                q=q,
                cycle_length=cyc,
                component_count=comp,
                safe_prime=bool(safe),
                two_is_primitive_root=bool(two_prim),
                weak=bool(weak),
            )
        )
    return records


def export_json(report: ScanReport) -> str:
    """Render the report as JSON using the CSV field names."""
    doc = {
        "lo": report.lo,
        "hi": report.hi,
        "threshold": report.threshold,
        "total_primes": report.total_primes,
        "weak_primes": report.weak_primes,
        "records": [
            {
                "p": r.p,
                "q": r.q,
                "L": r.cycle_length,
                "c": r.component_count,
                "safe": int(r.safe_prime),
                "two_prim": int(r.two_is_primitive_root),
                "weak": int(r.weak),
            }
            for r in report.records
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
