"""Exact arithmetic in Z[sqrt(phi)].

Elements are ``p + q*phi + (r + s*phi)*sqrt(phi)`` with integer coefficients,
phi = (1 + sqrt 5)/2.  The ring contains every half-integer power of phi, so
all tile coordinates, scales and areas of the chair tiling live here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt


def _zphi_mul(u1: int, v1: int, u2: int, v2: int) -> tuple[int, int]:
    # (u1 + v1 phi)(u2 + v2 phi), phi^2 = phi + 1
    vv = v1 * v2
    return u1 * u2 + vv, u1 * v2 + u2 * v1 + vv


def zphi_sign(u: int, v: int) -> int:
    """Exact sign of ``u + v*phi``.

    ``2(u + v phi) = m + v sqrt5`` with ``m = 2u + v``; when m and v disagree
    in sign, compare ``m^2`` with ``5 v^2``.
    """
    m = 2 * u + v
    if m >= 0 and v >= 0:
        return 0 if m == 0 and v == 0 else 1
    if m <= 0 and v <= 0:
        return -1
    diff = m * m - 5 * v * v
    if m > 0:
        return (diff > 0) - (diff < 0)
    return (diff < 0) - (diff > 0)


class GoldenNumber:
    __slots__ = ("p", "q", "r", "s")

    def __init__(self, p: int = 0, q: int = 0, r: int = 0, s: int = 0):
        self.p = p
        self.q = q
        self.r = r
        self.s = s

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    def __repr__(self):
        return f"GoldenNumber({self.p}, {self.q}, {self.r}, {self.s})"

    def __eq__(self, other):
        if isinstance(other, int):
            other = GoldenNumber(other)
        if not isinstance(other, GoldenNumber):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = GoldenNumber(other)
        return GoldenNumber(self.p + other.p, self.q + other.q,
                            self.r + other.r, self.s + other.s)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.p, -self.q, -self.r, -self.s)

    def __sub__(self, other):
        if isinstance(other, int):
            other = GoldenNumber(other)
        return GoldenNumber(self.p - other.p, self.q - other.q,
                            self.r - other.r, self.s - other.s)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GoldenNumber(self.p * other, self.q * other,
                                self.r * other, self.s * other)
        # (A + B w)(C + D w) = AC + BD phi + (AD + BC) w,  w = sqrt(phi)
        a0, a1 = self.p, self.q
        b0, b1 = self.r, self.s
        c0, c1 = other.p, other.q
        d0, d1 = other.r, other.s
        ac = _zphi_mul(a0, a1, c0, c1)
        bd = _zphi_mul(b0, b1, d0, d1)
        bd_phi = (bd[1], bd[0] + bd[1])
        ad = _zphi_mul(a0, a1, d0, d1)
        bc = _zphi_mul(b0, b1, c0, c1)
        return GoldenNumber(ac[0] + bd_phi[0], ac[1] + bd_phi[1],
                            ad[0] + bc[0], ad[1] + bc[1])

    __rmul__ = __mul__

    def sign(self) -> int:
        return sign(self)

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        return to_float(self)


ZERO = GoldenNumber()
ONE = GoldenNumber(1)
PHI = GoldenNumber(0, 1)
SQRT_PHI = GoldenNumber(0, 0, 1)
INV_SQRT_PHI = GoldenNumber(0, 0, -1, 1)


def add(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x + y


def mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return x * y


def neg(x: GoldenNumber) -> GoldenNumber:
    return -x


@lru_cache(maxsize=None)
def half_power_of_phi(k: int) -> GoldenNumber:
    """Exact ``phi**(k/2)`` for any integer k."""
    if k == 0:
        return ONE
    if k > 0:
        return half_power_of_phi(k - 1) * SQRT_PHI
    return half_power_of_phi(k + 1) * INV_SQRT_PHI


def sign(x: GoldenNumber) -> int:
    """Exact sign of x; never touches floating point.

    Split x = A + B*sqrt(phi) with A, B in Z[phi].  Opposite signs are
    resolved by comparing A^2 against B^2*phi.
    """
    sa = zphi_sign(x.p, x.q)
    sb = zphi_sign(x.r, x.s)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    a2 = _zphi_mul(x.p, x.q, x.p, x.q)
    b2 = _zphi_mul(x.r, x.s, x.r, x.s)
    b2_phi = (b2[1], b2[0] + b2[1])
    diff = zphi_sign(a2[0] - b2_phi[0], a2[1] - b2_phi[1])
    return diff if sa > 0 else -diff


@lru_cache(maxsize=16)
def _scaled_constants(bits: int) -> tuple[int, int]:
    """floor(phi * 2^bits) and floor(sqrt(phi) * 2^bits), each within 2 ulp."""
    one = 1 << bits
    phi_k = (one + isqrt(5 << (2 * bits))) // 2
    w_k = isqrt(phi_k << bits)
    return phi_k, w_k


def to_float(x: GoldenNumber) -> float:
    """Nearest double to x.

    Fixed-point evaluation with a rigorous error bound; the working precision
    doubles until the bound is negligible against the value, so cancellation
    between large coefficients cannot leak into the result.  Raises
    OverflowError when the value does not fit in a double.
    """
    if sign(x) == 0:
        return 0.0
    mag = max(abs(c) for c in x.coeffs)
    bits = 128 + mag.bit_length()
    while True:
        phi_k, w_k = _scaled_constants(bits)
        pw_k = (phi_k * w_k) >> bits
        approx = (x.p << bits) + x.q * phi_k + x.r * w_k + x.s * pw_k
        err = 8 * (abs(x.q) + abs(x.r) + abs(x.s)) + 8
        if abs(approx) > err << 60:
            return float(Fraction(approx, 1 << bits))
        bits *= 2
