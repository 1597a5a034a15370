"""Dimension spectrum: fixed-n sweeps, density search and the Fibonacci lift."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dimension import DEFAULT_ITERS, check_params, fib, similarity_dimension
from .errors import InvalidRange


@dataclass(frozen=True)
class SpectrumRow:
    n: int
    a: int
    b: int
    removed: int
    total: int
    fraction: float
    root: float
    dimension: float


def sweep_params(n: int, t: int) -> tuple[int, int]:
    """(a, b) after removing t tiles, small tiles first, then big ones."""
    small = fib(n - 1)
    if t <= small:
        return t, 0
    return small, t - small


def sweep_row(n: int, t: int, iters: int = DEFAULT_ITERS) -> SpectrumRow:
    a, b = sweep_params(n, t)
    res = similarity_dimension(n, a, b, iters)
    total = fib(n - 1) + fib(n)
    return SpectrumRow(n, a, b, t, total, t / total, res.x, res.d)


def sweep(n: int, iters: int = DEFAULT_ITERS) -> list[SpectrumRow]:
    if n < 1:
        raise InvalidRange("n must be >= 1")
    total = fib(n - 1) + fib(n)
    return [sweep_row(n, t, iters) for t in range(total)]


def second_differences(rows: list[SpectrumRow]) -> list[float]:
    d = [r.dimension for r in rows]
    return [d[i + 1] - 2 * d[i] + d[i - 1] for i in range(1, len(d) - 1)]


def convexity_report(rows: list[SpectrumRow], tol: float = 1e-12) -> dict:
    """Where the sweep fails to be concave (second difference above ``tol``).

    The shape is a finding to report, not a contract.
    """
    dd = second_differences(rows)
    violations = [i + 1 for i, v in enumerate(dd) if v > tol]
    return {
        "n": rows[0].n if rows else None,
        "max_second_difference": max(dd) if dd else 0.0,
        "violations": violations,
        "concave": not violations,
    }


def max_gap(n: int, lo: float = 0.5, hi: float = 1.9) -> float:
    """Largest gap between consecutive sweep dimensions that both lie in [lo, hi]."""
    dims = [r.dimension for r in sweep(n)]
    gaps = [abs(x - y) for x, y in zip(dims, dims[1:])
            if lo <= x <= hi and lo <= y <= hi]
    return max(gaps) if gaps else math.inf


@dataclass(frozen=True)
class ApproxResult:
    target: float
    eps: float
    n: int
    a: int
    b: int
    d: float
    reached: bool

    @property
    def error(self) -> float:
        return abs(self.d - self.target)


def approx_dimension(target: float, eps: float, n_max: int = 60,
                     iters: int = DEFAULT_ITERS) -> ApproxResult:
    """First (n, a, b) with n <= n_max whose dimension is within eps of target.

    Each sweep is strictly decreasing, so the closest row for a given n is
    found by binary search.  When nothing qualifies the best candidate is
    returned with ``reached=False``.
    """
    if not (0.0 <= target <= 2.0):
        raise InvalidRange(f"target must lie in [0, 2], got {target}")
    if not eps > 0.0:
        raise InvalidRange(f"eps must be positive, got {eps}")
    if n_max < 2:
        raise InvalidRange("n_max must be >= 2")

    best = None
    for n in range(2, n_max + 1):
        cache: dict[int, float] = {}

        def dim(t):
            if t not in cache:
                a, b = sweep_params(n, t)
                cache[t] = similarity_dimension(n, a, b, iters).d
            return cache[t]

        last = fib(n - 1) + fib(n) - 1
        if dim(last) >= target:
            t = last
        else:
            lo, hi = 0, last  # dim(lo) >= target > dim(hi)
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if dim(mid) >= target:
                    lo = mid
                else:
                    hi = mid
            t = lo if dim(lo) - target <= target - dim(hi) else hi
        a, b = sweep_params(n, t)
        cand = ApproxResult(target, eps, n, a, b, dim(t), False)
        if cand.error <= eps:
            return ApproxResult(target, eps, n, a, b, cand.d, True)
        if best is None or cand.error < best.error:
            best = cand
    return best


def lift(n: int, a: int, b: int, k: int) -> tuple[int, int, int]:
    """Apply [[0, 1], [1, 1]]^k to (a, b) and raise the order by k."""
    if k < 0:
        raise InvalidRange("k must be >= 0")
    return n + k, fib(k - 1) * a + fib(k) * b, fib(k) * a + fib(k + 1) * b


@dataclass(frozen=True)
class LiftResult:
    source: tuple[int, int, int]
    d: float
    k: int
    lifted: tuple[int, int, int]
    d_lifted: float

    @property
    def drift(self) -> float:
        return abs(self.d_lifted - self.d)


def lift_drift_report(n: int, a: int, b: int, k_max: int,
                      iters: int = DEFAULT_ITERS) -> list[LiftResult]:
    """Compare d(n, a, b) with the dimension of each lift k = 0..k_max.

    The lifted fractal is not dimension-preserving in general: the residual
    of the source root in the lifted polynomial is (F(n) - b)(x^2 - x - 1),
    which vanishes only at x = phi or b = F(n).
    """
    check_params(n, a, b)
    d = similarity_dimension(n, a, b, iters).d
    out = []
    for k in range(k_max + 1):
        lifted = lift(n, a, b, k)
        check_params(*lifted)
        out.append(LiftResult((n, a, b), d, k, lifted,
                              similarity_dimension(*lifted, iters).d))
    return out
