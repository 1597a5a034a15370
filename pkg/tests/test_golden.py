import random

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ammann.golden import (
    GoldenNumber, add, half_power_of_phi, mul, neg, sign, to_float, zphi_sign,
)
from ammann.dimension import fib

PREC = 256
with mpmath.workprec(PREC):
    MP_PHI = (1 + mpmath.sqrt(5)) / 2
    MP_W = mpmath.sqrt(MP_PHI)


@pytest.fixture(autouse=True)
def _mp_precision():
    with mpmath.workprec(PREC):
        yield


def mp_value(x: GoldenNumber):
    return x.p + x.q * MP_PHI + (x.r + x.s * MP_PHI) * MP_W


coeff = st.integers(-10**6, 10**6)
golden = st.builds(GoldenNumber, coeff, coeff, coeff, coeff)


def test_add():
    assert add(GoldenNumber(1), GoldenNumber(-1)) == GoldenNumber(0, 0, 0, 0)
    assert add(GoldenNumber(0, 1), GoldenNumber(1)) == GoldenNumber(1, 1, 0, 0)
    assert add(GoldenNumber(0, 0, 1), GoldenNumber(0, 0, 0, 1)) == GoldenNumber(0, 0, 1, 1)


def test_mul():
    phi = GoldenNumber(0, 1)
    w = GoldenNumber(0, 0, 1)
    assert mul(phi, phi) == GoldenNumber(1, 1, 0, 0)
    assert mul(w, w) == GoldenNumber(0, 1, 0, 0)
    assert mul(GoldenNumber(0, 0, -1, 1), w) == GoldenNumber(1, 0, 0, 0)


def test_mul_matches_symbolic_expansion():
    sphi = (1 + sympy.sqrt(5)) / 2
    sw = sympy.sqrt(sphi)

    def sym(x):
        return x.p + x.q * sphi + (x.r + x.s * sphi) * sw

    assert sympy.simplify(sym(GoldenNumber(0, 0, -1, 1)) * sw - 1) == 0
    rng = random.Random(5)
    for _ in range(5):
        x = GoldenNumber(*(rng.randint(-9, 9) for _ in range(4)))
        y = GoldenNumber(*(rng.randint(-9, 9) for _ in range(4)))
        assert sympy.simplify(sym(x) * sym(y) - sym(x * y)) == 0


def test_half_power_of_phi():
    assert half_power_of_phi(1) == GoldenNumber(0, 0, 1, 0)
    assert half_power_of_phi(-2) == GoldenNumber(-1, 1, 0, 0)
    assert half_power_of_phi(-3) == GoldenNumber(0, 0, 2, -1)
    assert abs(to_float(half_power_of_phi(-3)) - 0.48586827175664568) < 1e-15
    assert half_power_of_phi(0) == GoldenNumber(1)


def test_half_powers_multiply():
    for j in range(-20, 21):
        for k in range(-20, 21):
            assert half_power_of_phi(j) * half_power_of_phi(k) == half_power_of_phi(j + k)


def test_sign_examples():
    assert sign(GoldenNumber(0, 0, 0, 0)) == 0
    assert sign(GoldenNumber(-2, 1, 0, 0)) == -1
    assert sign(GoldenNumber(0, -1, 0, 1)) == 1
    assert mp_value(GoldenNumber(0, -1, 0, 1)) > 0


def test_zphi_sign_near_fibonacci_ratios():
    # F(k+1) - F(k) phi alternates in sign and shrinks like phi^-k
    for k in range(1, 120):
        expected = 1 if k % 2 == 0 else -1
        assert zphi_sign(fib(k + 1), -fib(k)) == expected


def _random_elements(rng, count):
    out = []
    for i in range(count):
        kind = i % 4
        if kind == 0:
            c = [rng.randint(-10**6, 10**6) for _ in range(4)]
            out.append(GoldenNumber(*c))
        elif kind == 1:
            c = [rng.randint(-50, 50) for _ in range(4)]
            out.append(GoldenNumber(*c))
        elif kind == 2:
            # nearly cancelling: u*phi^(k/2) rounded in the other basis
            k = rng.randint(-30, 30)
            x = half_power_of_phi(k) - half_power_of_phi(k + rng.choice([-2, 2]))
            out.append(x * rng.choice([1, -1]))
        else:
            k = rng.randint(5, 60)
            out.append(GoldenNumber(fib(k + 1), -fib(k), rng.randint(-3, 3), 0))
    return out


def test_sign_agrees_with_high_precision_evaluation():
    rng = random.Random(20240101)
    checked = 0
    for x in _random_elements(rng, 10_000):
        v = mp_value(x)
        if abs(v) > mpmath.mpf(2) ** -200:
            assert sign(x) == (1 if v > 0 else -1), x
            checked += 1
        elif not x:
            assert sign(x) == 0
    assert checked > 9_000


@given(golden)
def test_sign_antisymmetric(x):
    assert sign(neg(x)) == -sign(x)


@given(golden, golden, golden)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x + y == y + x
    assert x * (y + z) == x * y + x * z


def test_to_float_examples():
    assert to_float(GoldenNumber(0, 1, 0, 0)) == pytest.approx(1.6180339887, abs=1e-9)
    assert to_float(GoldenNumber(0, 0, 1, 0)) == pytest.approx(1.2720196495, abs=1e-9)
    assert to_float(GoldenNumber(0, 0, -1, 2)) == pytest.approx(
        float(mpmath.sqrt(5) * MP_W), abs=1e-12)
    assert to_float(GoldenNumber()) == 0.0


def test_to_float_relative_error():
    rng = random.Random(7)
    bound = 2.0 ** -50
    elements = [GoldenNumber(*(rng.randint(-2**40 + 1, 2**40 - 1) for _ in range(4)))
                for _ in range(2000)]
    # heavy cancellation
    elements += [GoldenNumber(fib(k + 1), -fib(k)) for k in range(2, 58)]
    elements += [half_power_of_phi(k) for k in range(-60, 60)]
    for x in elements:
        exact = mp_value(x)
        if exact == 0:
            continue
        assert abs((to_float(x) - exact) / exact) <= bound, x


def test_to_float_overflow():
    with pytest.raises(OverflowError):
        to_float(GoldenNumber(10**400))
