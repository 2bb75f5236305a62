"""Sunlet structure of the mod-p halving map and walk-based discrete logs."""

from .dlp import NO_SOLUTION, NOT_REACHABLE, OK, DlpResult, WalkTrace, bsgs, solve_dlp2, solve_dlp_general, walk
from .graph import (
    CheckResult,
    Decomposition,
    SunletComponent,
    VerificationReport,
    cycle_of,
    decompose,
    decomposition_from_json,
    verify_map_properties,
    verify_theorem,
)
from .halving import PrimeContext, is_lower, lemma1_holds, make_context, preimages, step
from .modarith import (
    CongruenceSolution,
    factorize,
    is_prime,
    is_primitive_root,
    is_safe_prime,
    mulmod,
    mult_order,
    powmod,
    primes_in_range,
    solve_linear_congruence,
)
from .scanner import ScanRecord, ScanReport, ideal_for_walk, scan_range

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CongruenceSolution",
    "Decomposition",
    "DlpResult",
    "NO_SOLUTION",
    "NOT_REACHABLE",
    "OK",
    "PrimeContext",
    "ScanRecord",
    "ScanReport",
    "SunletComponent",
    "VerificationReport",
    "WalkTrace",
    "bsgs",
    "cycle_of",
    "decompose",
    "decomposition_from_json",
    "factorize",
    "ideal_for_walk",
    "is_lower",
    "is_prime",
    "is_primitive_root",
    "is_safe_prime",
    "lemma1_holds",
    "make_context",
    "mulmod",
    "mult_order",
    "powmod",
    "preimages",
    "primes_in_range",
    "scan_range",
    "solve_dlp2",
    "solve_dlp_general",
    "solve_linear_congruence",
    "step",
    "verify_map_properties",
    "verify_theorem",
    "walk",
]
