"""Similarity dimension of (n, a, b)-Ammann chair fractals.

The n-step rule has F(n-1) small children (ratio phi^-n/2) and F(n) big
children (ratio phi^-(n-1)/2).  Removing a small and b big children leaves
the Moran equation

    x^n = (F(n) - b) x + (F(n-1) - a),    x = phi^(d/2),

whose unique positive root is found by exact dyadic bisection on [1, 2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import EmptyFractal, InvalidRange

LOG_PHI = math.log((1 + math.sqrt(5)) / 2)
DEFAULT_ITERS = 80


def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: (F(n), F(n+1))
    if n == 0:
        return 0, 1
    f, g = _fib_pair(n >> 1)
    c = f * (2 * g - f)
    d = f * f + g * g
    if n & 1:
        return d, c + d
    return c, d


def fib(n: int) -> int:
    """Fibonacci numbers with F(0) = 0, F(1) = 1, extended to negative n by
    F(-n) = (-1)^(n+1) F(n) (so F(-1) = 1)."""
    if n < 0:
        f = _fib_pair(-n)[0]
        return f if n % 2 else -f
    return _fib_pair(n)[0]


def check_params(n: int, a: int, b: int) -> None:
    """Raise InvalidRange or EmptyFractal unless (n, a, b) is admissible."""
    if n < 1:
        raise InvalidRange("n must be >= 1")
    small, big = fib(n - 1), fib(n)
    if not 0 <= a <= small:
        raise InvalidRange(f"a must be in [0, {small}] for n={n}, got {a}")
    if not 0 <= b <= big:
        raise InvalidRange(f"b must be in [0, {big}] for n={n}, got {b}")
    if a == small and b == big:
        raise EmptyFractal(f"(n,a,b)=({n},{a},{b}) removes every tile")


@dataclass(frozen=True)
class DimensionPoly:
    """``x^n - c_lin*x - c_const``."""

    n: int
    c_lin: int
    c_const: int

    def __call__(self, x):
        return x ** self.n - self.c_lin * x - self.c_const

    def sign_at_dyadic(self, m: int, k: int) -> int:
        """Exact sign of p(m / 2^k)."""
        n = self.n
        v = m ** n - ((self.c_lin * m) << (k * (n - 1))) - (self.c_const << (k * n))
        return (v > 0) - (v < 0)

    @property
    def degenerate(self) -> bool:
        # n = 1, nothing removed: p(x) = x - x vanishes identically
        return self.n == 1 and self.c_lin == 1 and self.c_const == 0

    def __str__(self):
        return f"x^{self.n} - {self.c_lin}x - {self.c_const}"


def build_poly(n: int, a: int, b: int) -> DimensionPoly:
    check_params(n, a, b)
    return DimensionPoly(n, fib(n) - b, fib(n - 1) - a)


def solve_root(poly: DimensionPoly, iters: int = DEFAULT_ITERS) -> tuple[Fraction, Fraction]:
    """Bracket the unique positive root of ``poly`` to width 2^-iters.

    Every midpoint is a dyadic rational and its sign is decided with integer
    arithmetic.  A root at exactly 1 (one surviving copy) is returned as the
    degenerate interval [1, 1]; no other rational root can occur in [1, 2]
    because the polynomial is monic with integer coefficients.

    The identically-zero polynomial of (1, 0, 0) is replaced by its
    Fibonacci lift x^2 - x - 1, whose root phi gives dimension 2.
    """
    if poly.degenerate:
        poly = DimensionPoly(2, 1, 1)
    if poly.sign_at_dyadic(1, 0) == 0:
        return Fraction(1), Fraction(1)
    lo, hi = 1, 2  # numerators over 2^k
    for k in range(iters):
        lo, hi = 2 * lo, 2 * hi
        mid = lo + 1
        if poly.sign_at_dyadic(mid, k + 1) <= 0:
            lo = mid
        else:
            hi = mid
    den = 1 << iters
    return Fraction(lo, den), Fraction(hi, den)


@dataclass(frozen=True)
class DimensionResult:
    n: int
    a: int
    b: int
    poly: DimensionPoly
    root_lo: Fraction
    root_hi: Fraction
    x: float
    d: float
    uncertainty: float

    @property
    def exact(self) -> bool:
        return self.root_lo == self.root_hi


def dimension_from_root(x: float) -> float:
    return 2.0 * math.log(x) / LOG_PHI


def similarity_dimension(n: int, a: int, b: int, iters: int = DEFAULT_ITERS) -> DimensionResult:
    poly = build_poly(n, a, b)
    lo, hi = solve_root(poly, iters)
    x = float((lo + hi) / 2)
    d = dimension_from_root(x)
    # d' = 2 / (x ln phi); the width is far below double resolution of x
    unc = 2.0 * float(hi - lo) / (x * LOG_PHI)
    return DimensionResult(n, a, b, poly, lo, hi, x, max(d, 0.0), unc)


def moran_dimension(copies: Iterable[tuple[int, float]], iters: int = 200) -> float:
    """Solve ``sum(count * ratio**d) = 1`` for d in [0, 64] by bisection."""
    copies = [(c, r) for c, r in copies]
    if not copies:
        raise ValueError("moran_dimension needs at least one map")
    for c, r in copies:
        if c < 1 or not 0.0 < r < 1.0:
            raise ValueError(f"need count >= 1 and ratio in (0, 1), got ({c}, {r})")

    def excess(d):
        return math.fsum(c * r ** d for c, r in copies) - 1.0

    lo, hi = 0.0, 64.0
    if excess(lo) <= 0.0:
        return 0.0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if excess(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def moran_copies(n: int, a: int, b: int) -> list[tuple[int, float]]:
    """The (count, ratio) list of the masked n-step rule, empty groups dropped."""
    check_params(n, a, b)
    groups = [(fib(n - 1) - a, math.exp(-n * LOG_PHI / 2)),
              (fib(n) - b, math.exp(-(n - 1) * LOG_PHI / 2))]
    return [(c, r) for c, r in groups if c > 0]
