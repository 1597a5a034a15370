"""n-step rule expansion, removal masks and masked iteration.

One elementary step relabels a small tile as big (geometric identity) and
splits a big tile into its big child U and small child V.  Children are
always listed depth-first with U before V; mask indices refer to this order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .dimension import check_params, fib
from .errors import EmptyFractal, InvalidRange, TooManyTiles
from .geometry import IDENTITY_SIM, Label, Similarity, area, elementary_children
from .golden import ZERO, GoldenNumber

DEFAULT_MAX_TILES = 5_000_000
STRATEGIES = ("first", "last", "random", "explicit")


@dataclass(frozen=True)
class PlacedTile:
    sim: Similarity
    label: Label


@dataclass(frozen=True)
class RuleExpansion:
    n: int
    children: tuple[PlacedTile, ...]

    def __len__(self):
        return len(self.children)

    def indices(self, label: Label) -> list[int]:
        return [i for i, c in enumerate(self.children) if c.label is label]


def deflate(tiles: Iterable[PlacedTile], steps: int = 1) -> list[PlacedTile]:
    """Apply ``steps`` elementary substitution steps to labeled tiles."""
    (u, _), (v, _) = elementary_children()
    tiles = list(tiles)
    for _ in range(steps):
        out = []
        for t in tiles:
            if t.label is Label.SMALL:
                out.append(PlacedTile(t.sim, Label.BIG))
            else:
                out.append(PlacedTile(t.sim @ u, Label.BIG))
                out.append(PlacedTile(t.sim @ v, Label.SMALL))
        tiles = out
    return tiles


@lru_cache(maxsize=64)
def expand(n: int) -> RuleExpansion:
    """Children of a small tile after n elementary steps, relative to it."""
    if n < 1:
        raise InvalidRange("n must be >= 1")
    return RuleExpansion(n, tuple(deflate([PlacedTile(IDENTITY_SIM, Label.SMALL)], n)))


def counts(n: int, s0: int, b0: int) -> tuple[int, int]:
    """(small, big) tile counts after n steps from s0 small and b0 big tiles."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return fib(n - 1) * s0 + fib(n) * b0, fib(n) * s0 + fib(n + 1) * b0


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014)."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in [0, m) by rejection of the biased tail."""
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            r = self.next()
            if r < limit:
                return r % m


def _sample(rng: SplitMix64, pool: list[int], k: int) -> list[int]:
    # partial Fisher-Yates over the canonical-order pool
    pool = list(pool)
    for i in range(k):
        j = i + rng.below(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


@dataclass(frozen=True)
class RemovalMask:
    n: int
    a: int
    b: int
    removed: tuple[int, ...]
    strategy: str = "first"
    seed: int = 0

    def kept(self, exp: RuleExpansion) -> list[PlacedTile]:
        gone = set(self.removed)
        return [c for i, c in enumerate(exp.children) if i not in gone]


def make_mask(exp: RuleExpansion, a: int, b: int, strategy: str = "first",
              seed: int = 0, indices: Sequence[int] | None = None) -> RemovalMask:
    """Choose which a small and b big children of ``exp`` are removed.

    ``random`` draws the small indices first, then the big ones, from one
    SplitMix64 stream seeded with ``seed``; each draw is a partial
    Fisher-Yates shuffle of the label's indices in canonical order.
    ``explicit`` takes ``indices`` verbatim and checks the label counts.
    """
    check_params(exp.n, a, b)
    small = exp.indices(Label.SMALL)
    big = exp.indices(Label.BIG)
    if strategy == "first":
        removed = small[:a] + big[:b]
    elif strategy == "last":
        removed = small[len(small) - a:] + big[len(big) - b:]
    elif strategy == "random":
        rng = SplitMix64(seed)
        removed = _sample(rng, small, a) + _sample(rng, big, b)
    elif strategy == "explicit":
        if indices is None:
            raise InvalidRange("explicit strategy needs indices")
        removed = list(indices)
        if len(set(removed)) != len(removed):
            raise InvalidRange("duplicate mask indices")
        if any(not 0 <= i < len(exp) for i in removed):
            raise InvalidRange(f"mask indices must lie in [0, {len(exp)})")
        na = sum(1 for i in removed if exp.children[i].label is Label.SMALL)
        if (na, len(removed) - na) != (a, b):
            raise InvalidRange(f"indices remove {na} small and {len(removed) - na} big "
                               f"tiles, expected {a} and {b}")
    else:
        raise InvalidRange(f"unknown strategy {strategy!r}")
    return RemovalMask(exp.n, a, b, tuple(sorted(removed)), strategy, seed)


@dataclass
class TileCollection:
    tiles: list[PlacedTile]
    provenance: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def total_area(self) -> GoldenNumber:
        total = ZERO
        for t in self.tiles:
            total = total + area(t.sim)
        return total


def from_expansion(exp: RuleExpansion) -> TileCollection:
    return TileCollection(list(exp.children), {"n": exp.n, "a": 0, "b": 0, "steps": 1})


def iterate(n: int, a: int, b: int, steps: int, strategy: str = "first", seed: int = 0,
            indices: Sequence[int] | None = None,
            max_tiles: int = DEFAULT_MAX_TILES) -> TileCollection:
    """Apply the masked n-step rule ``steps`` times to one small root tile.

    Every tile, whatever its label, is replaced by the same masked child set
    taken in its own frame.
    """
    check_params(n, a, b)
    if steps < 0:
        raise InvalidRange("steps must be >= 0")
    branching = fib(n + 1) - a - b
    projected = branching ** steps
    if projected > max_tiles:
        raise TooManyTiles(projected, max_tiles)
    exp = expand(n)
    mask = make_mask(exp, a, b, strategy, seed, indices)
    kept = mask.kept(exp)
    tiles = [PlacedTile(IDENTITY_SIM, Label.SMALL)]
    for _ in range(steps):
        tiles = [PlacedTile(t.sim @ c.sim, c.label) for t in tiles for c in kept]
    prov = {"n": n, "a": a, "b": b, "steps": steps, "strategy": strategy,
            "seed": seed, "removed": list(mask.removed)}
    return TileCollection(tiles, prov)


__all__ = [
    "EmptyFractal", "InvalidRange", "Label", "PlacedTile", "RemovalMask",
    "RuleExpansion", "SplitMix64", "TileCollection", "TooManyTiles",
    "counts", "deflate", "expand", "from_expansion", "iterate", "make_mask",
]
