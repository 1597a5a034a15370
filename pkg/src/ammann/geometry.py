"""Golden-bee prototile, axis-aligned similarities and exact partition checks.

The prototile is the L-shaped hexagon

    (0,0) (phi,0) (phi,sqrt phi) (1,sqrt phi) (1,phi sqrt phi) (0,phi sqrt phi)

which splits into a copy scaled by phi^-1/2 (the big child) and a mirrored
copy scaled by phi^-1 (the small child).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .golden import (
    ONE, PHI, SQRT_PHI, ZERO, GoldenNumber, half_power_of_phi, sign,
)


class Label(enum.Enum):
    SMALL = "S"
    BIG = "B"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class D4Element:
    """Symmetry of the square: ``rot`` quarter turns applied after an
    optional reflection (x, y) -> (x, -y)."""

    rot: int = 0
    flip: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rot", self.rot % 4)

    def __matmul__(self, other: D4Element) -> D4Element:
        # R^a F^f R^b F^g = R^(a + (-1)^f b) F^(f xor g)
        r = self.rot - other.rot if self.flip else self.rot + other.rot
        return D4Element(r, self.flip != other.flip)

    def inverse(self) -> D4Element:
        if self.flip:
            return self
        return D4Element(-self.rot, False)

    def apply(self, x, y):
        if self.flip:
            y = -y
        r = self.rot
        if r == 1:
            return -y, x
        if r == 2:
            return -x, -y
        if r == 3:
            return y, -x
        return x, y


IDENTITY = D4Element(0, False)
ROT90 = D4Element(1, False)
ROT180 = D4Element(2, False)
ROT270 = D4Element(3, False)
MIRROR_X = D4Element(0, True)   # (x, y) -> (x, -y)
MIRROR_Y = D4Element(2, True)   # (x, y) -> (-x, y)
DIAGONAL = D4Element(1, True)   # (x, y) -> (y, x)
ANTIDIAGONAL = D4Element(3, True)  # (x, y) -> (-y, -x)
D4 = (IDENTITY, ROT90, ROT180, ROT270, MIRROR_X, MIRROR_Y, DIAGONAL, ANTIDIAGONAL)


class GoldenPoint(NamedTuple):
    x: GoldenNumber
    y: GoldenNumber

    def to_float(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


ORIGIN = GoldenPoint(ZERO, ZERO)


@dataclass(frozen=True)
class Similarity:
    """``p -> phi**(half_exp/2) * d4(p) + t``."""

    d4: D4Element = IDENTITY
    half_exp: int = 0
    t: GoldenPoint = ORIGIN

    @property
    def scale(self) -> GoldenNumber:
        return half_power_of_phi(self.half_exp)

    def __call__(self, point: GoldenPoint) -> GoldenPoint:
        x, y = self.d4.apply(point[0], point[1])
        k = self.scale
        return GoldenPoint(k * x + self.t.x, k * y + self.t.y)

    def __matmul__(self, other: Similarity) -> Similarity:
        """Composition ``self o other`` (other is applied first)."""
        tx, ty = self.d4.apply(other.t.x, other.t.y)
        k = self.scale
        return Similarity(self.d4 @ other.d4, self.half_exp + other.half_exp,
                          GoldenPoint(k * tx + self.t.x, k * ty + self.t.y))

    def inverse(self) -> Similarity:
        g = self.d4.inverse()
        k = half_power_of_phi(-self.half_exp)
        tx, ty = g.apply(-self.t.x, -self.t.y)
        return Similarity(g, -self.half_exp, GoldenPoint(k * tx, k * ty))


IDENTITY_SIM = Similarity()

_PHI_SQRT_PHI = PHI * SQRT_PHI

PROTOTILE_VERTICES = (
    GoldenPoint(ZERO, ZERO),
    GoldenPoint(PHI, ZERO),
    GoldenPoint(PHI, SQRT_PHI),
    GoldenPoint(ONE, SQRT_PHI),
    GoldenPoint(ONE, _PHI_SQRT_PHI),
    GoldenPoint(ZERO, _PHI_SQRT_PHI),
)

# (x0, x1, y0, y1)
PROTOTILE_RECTANGLES = (
    (ZERO, PHI, ZERO, SQRT_PHI),
    (ZERO, ONE, SQRT_PHI, _PHI_SQRT_PHI),
)

PROTOTILE_AREA = GoldenNumber(0, 0, -1, 2)  # sqrt(5) * sqrt(phi)

BIG_CHILD = Similarity(ROT90, -1, GoldenPoint(PHI, ZERO))
SMALL_CHILD = Similarity(MIRROR_X, -2, GoldenPoint(ZERO, _PHI_SQRT_PHI))


def elementary_children() -> tuple[tuple[Similarity, Label], tuple[Similarity, Label]]:
    """Big child first, then small child; together they tile the prototile."""
    return (BIG_CHILD, Label.BIG), (SMALL_CHILD, Label.SMALL)


def _placement(tile) -> Similarity:
    return getattr(tile, "sim", tile)


def apply(sim: Similarity, vertices: Sequence[GoldenPoint] = PROTOTILE_VERTICES) -> list[GoldenPoint]:
    return [sim(v) for v in vertices]


def area(sim) -> GoldenNumber:
    return half_power_of_phi(2 * _placement(sim).half_exp) * PROTOTILE_AREA


def bounding_box(sim) -> tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]:
    """Exact (xmin, xmax, ymin, ymax) of a placed tile."""
    pts = apply(_placement(sim))
    xs = sorted((p.x for p in pts), key=_golden_key)
    ys = sorted((p.y for p in pts), key=_golden_key)
    return xs[0], xs[-1], ys[0], ys[-1]


def rectangles(sim) -> list[tuple[GoldenNumber, GoldenNumber, GoldenNumber, GoldenNumber]]:
    """The two rectangles of a placed tile as (x0, x1, y0, y1), x0 < x1, y0 < y1."""
    sim = _placement(sim)
    out = []
    for x0, x1, y0, y1 in PROTOTILE_RECTANGLES:
        a = sim(GoldenPoint(x0, y0))
        b = sim(GoldenPoint(x1, y1))
        xa, xb = (a.x, b.x) if sign(b.x - a.x) > 0 else (b.x, a.x)
        ya, yb = (a.y, b.y) if sign(b.y - a.y) > 0 else (b.y, a.y)
        out.append((xa, xb, ya, yb))
    return out


_golden_key = cmp_to_key(lambda u, v: sign(u - v))


@dataclass
class PartitionReport:
    ok: bool
    kind: str = ""
    cell: tuple | None = None
    coverage: int = 0
    cells_checked: int = 0

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return f"partition OK ({self.cells_checked} cells)"
        x0, x1, y0, y1 = self.cell
        return (f"{self.kind} cell [{x0!r}, {x1!r}] x [{y0!r}, {y1!r}] "
                f"covered {self.coverage} times")


def verify_partition(parent, children: Iterable) -> PartitionReport:
    """Check that ``children`` tile ``parent`` exactly, up to shared edges.

    All rectangles are cut along every distinct x and y coordinate (sorted by
    exact sign).  Each cell of the refinement grid must be covered by exactly
    one child rectangle if it lies in the parent and by none otherwise.
    """
    parent_rects = rectangles(parent)
    child_rects = [r for c in children for r in rectangles(c)]
    all_rects = parent_rects + child_rects

    xs = sorted({v for r in all_rects for v in r[:2]}, key=_golden_key)
    ys = sorted({v for r in all_rects for v in r[2:]}, key=_golden_key)
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}

    expected = np.zeros((len(ys) - 1, len(xs) - 1), dtype=np.int64)
    for x0, x1, y0, y1 in parent_rects:
        expected[yi[y0]:yi[y1], xi[x0]:xi[x1]] += 1
    covered = np.zeros_like(expected)
    for x0, x1, y0, y1 in child_rects:
        covered[yi[y0]:yi[y1], xi[x0]:xi[x1]] += 1

    bad = np.argwhere(covered != expected)
    if len(bad) == 0:
        return PartitionReport(True, cells_checked=expected.size)
    j, i = (int(v) for v in bad[0])
    count = int(covered[j, i])
    if expected[j, i] == 0:
        kind = "outside"
    elif count == 0:
        kind = "uncovered"
    else:
        kind = "overlap"
    return PartitionReport(False, kind, (xs[i], xs[i + 1], ys[j], ys[j + 1]),
                           count, expected.size)
