"""Closed-form worst-case distance-computation estimates for the k-way solver.

The model splits the count into a strip term, 2 * ((a-1) * n / a) * log_a(n),
and a local term, a * C(ceil(n/a), 2), the cost of brute-forcing each region
once.  At a = n every region is a single point, the local term vanishes, and
the total collapses to 2 * (n - 1).  The model predicts counts; it never
touches an OpCounter.
"""

import math
from dataclasses import dataclass

from .errors import InvalidPartition


@dataclass(frozen=True, slots=True)
class CostBreakdown:
    n: int
    a: int
    strip_cost: float
    local_cost: float
    total: float


def _check_args(n: int, a: int) -> None:
    if n < 2:
        raise InvalidPartition(f"need n >= 2, got {n}")
    if not 2 <= a <= n:
        raise InvalidPartition(f"need 2 <= a <= n, got a={a} with n={n}")


def analytic_strip_cost(n: int, a: int) -> float:
    """Worst-case strip-scan count: 2 * ((a-1) * n / a) * log_a(n)."""
    _check_args(n, a)
    return 2.0 * ((a - 1) * n / a) * (math.log(n) / math.log(a))


def analytic_local_cost(n: int, a: int) -> float:
    """Worst-case intra-region count: each of a regions brute-forced at ceil(n/a) points."""
    _check_args(n, a)
    m = -(-n // a)
    return float(a * (m * (m - 1) // 2))


def analytic_total_cost(n: int, a: int) -> CostBreakdown:
    """Strip and local terms with their sum; local is exactly 0 at a = n."""
    strip = analytic_strip_cost(n, a)
    local = analytic_local_cost(n, a)
    return CostBreakdown(n, a, strip, local, strip + local)
