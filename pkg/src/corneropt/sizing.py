"""Closed-form size counts for inverse formulations.

Compares the vertex-indexed inverse LP built here against the general
inverse-IP LP derived from superadditive duality (which needs the
constraints in inequality form), as a variables/constraints benchmark.
The counts grow far too quickly to ever build the benchmark LP itself,
hence the log10 renderings for table output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError


def log10_to_one_decimal(n: int) -> str:
    """log10 of a positive (possibly astronomically large) integer, 1 decimal."""
    if n <= 0:
        raise DomainError("log10 rendering needs a positive count")
    digits = str(n)
    if len(digits) <= 15:
        value = math.log10(n)
    else:
        value = (len(digits) - 15) + math.log10(int(digits[:15]))
    return f"{value:.1f}"


@dataclass(frozen=True)
class SizeReport:
    ours_vars: int
    ours_cons: int
    benchmark_vars: int
    benchmark_cons: int

    def log10_table(self) -> dict[str, str]:
        return {
            "ours_vars": log10_to_one_decimal(self.ours_vars),
            "ours_cons": log10_to_one_decimal(self.ours_cons),
            "benchmark_vars": log10_to_one_decimal(self.benchmark_vars),
            "benchmark_cons": log10_to_one_decimal(self.benchmark_cons),
        }


def formulation_size_report(n: int, m: int, det_abs: int, b: Sequence[int]) -> SizeReport:
    """Exact variable/constraint counts for both inverse formulations.

    Ours: 2n + |det A_B| variables, 2 + (n-m)|det A_B| constraints.
    Benchmark: 2n + prod(|b_i|+1) variables and
    3 + n + 2 prod (|b_i|+1)(|b_i|+2)/2 - 2 prod(|b_i|+1) constraints.
    """
    if m < 1 or n < m:
        raise DomainError(f"need n >= m >= 1, got n={n}, m={m}")
    if det_abs < 1:
        raise DomainError(f"need |det| >= 1, got {det_abs}")
    if len(b) != m:
        raise DomainError(f"b has length {len(b)}, expected m={m}")

    ours_vars = 2 * n + det_abs
    ours_cons = 2 + (n - m) * det_abs

    prod_linear = 1
    prod_pairs = 1
    for v in b:
        k = abs(int(v))
        prod_linear *= k + 1
        prod_pairs *= (k + 1) * (k + 2) // 2
    benchmark_vars = 2 * n + prod_linear
    benchmark_cons = 3 + n + 2 * prod_pairs - 2 * prod_linear
    return SizeReport(ours_vars, ours_cons, benchmark_vars, benchmark_cons)
