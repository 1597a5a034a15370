"""Deterministic SVG output for tilings, fractal iterates and rule diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import AmmannError
from .geometry import (
    IDENTITY_SIM, PROTOTILE_VERTICES, GoldenPoint, Label, Similarity, apply,
)
from .golden import PHI, SQRT_PHI, GoldenNumber, half_power_of_phi, to_float
from .substitution import PlacedTile, TileCollection, expand, make_mask

ROOT_WIDTH = PHI
ROOT_HEIGHT = PHI * SQRT_PHI
# style.scale is measured per prototile width phi
_PER_WIDTH = half_power_of_phi(-2)

HATCH_ID = "removed-hatch"


@dataclass(frozen=True)
class RenderStyle:
    small_fill: str = "#F4C95D"
    big_fill: str = "#E8762C"
    stroke: str = "#3A2A1A"
    stroke_width: float = 0.5
    scale: float = 400.0  # output units per prototile width
    precision: int = 6
    color_by: str = "label"  # or "none"
    plain_fill: str = "#E8762C"

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if not self.scale > 0:
            raise ValueError("scale must be > 0")
        if self.color_by not in ("label", "none"):
            raise ValueError(f"color_by must be 'label' or 'none', got {self.color_by!r}")

    def fill(self, label: Label) -> str:
        if self.color_by == "none":
            return self.plain_fill
        return self.small_fill if label is Label.SMALL else self.big_fill

    def fmt(self, v: float) -> str:
        s = f"{v:.{self.precision}f}"
        if s.lstrip("-").strip("0.") == "":
            s = s.lstrip("-")
        return s


def _points(verts: Sequence[GoldenPoint], style: RenderStyle, height: GoldenNumber,
            dx: float = 0.0, dy: float = 0.0) -> str:
    # y axis flipped: exact (height - y) before conversion
    out = []
    for v in verts:
        x = to_float(v.x * _PER_WIDTH) * style.scale + dx
        y = to_float((height - v.y) * _PER_WIDTH) * style.scale + dy
        out.append(f"{style.fmt(x)},{style.fmt(y)}")
    return " ".join(out)


def _header(width: float, height: float, style: RenderStyle, defs: str = "") -> list[str]:
    w, h = style.fmt(width), style.fmt(height)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
    ]
    if defs:
        lines.append(defs)
    return lines


def render_svg(tiles: TileCollection | Iterable[PlacedTile],
               style: RenderStyle | None = None) -> str:
    """One polygon per tile inside the root tile's bounding box."""
    style = style or RenderStyle()
    tiles = list(tiles)
    if not tiles:
        raise AmmannError("nothing to render: empty tile collection")
    width = style.scale
    height = to_float(ROOT_HEIGHT * _PER_WIDTH) * style.scale
    lines = _header(width, height, style)
    lines.append(f'<g stroke="{style.stroke}" stroke-width="{style.fmt(style.stroke_width)}" '
                 'stroke-linejoin="miter">')
    for t in tiles:
        pts = _points(apply(t.sim), style, ROOT_HEIGHT)
        cls = "small" if t.label is Label.SMALL else "big"
        lines.append(f'<polygon class="tile {cls}" fill="{style.fill(t.label)}" points="{pts}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


_HATCH_DEFS = (
    "<defs>\n"
    f'<pattern id="{HATCH_ID}" patternUnits="userSpaceOnUse" width="8" height="8">\n'
    '<path d="M0,0 L8,8 M8,0 L0,8" stroke="#555555" stroke-width="0.8"/>\n'
    "</pattern>\n"
    "</defs>"
)


def render_rule_diagram(n: int, a: int, b: int, strategy: str = "first", seed: int = 0,
                        style: RenderStyle | None = None,
                        indices: Sequence[int] | None = None) -> str:
    """Rule picture: a small and a big parent, each with its masked children.

    Removed children are drawn ghosted (25% opacity, cross-hatched).
    """
    style = style or RenderStyle()
    exp = expand(n)
    mask = make_mask(exp, a, b, strategy, seed, indices)
    removed = set(mask.removed)

    s = style.scale
    margin = 0.25 * s
    caption = 0.2 * s
    parents = [("small", IDENTITY_SIM), ("big", Similarity(half_exp=1))]
    widths = [to_float(ROOT_WIDTH * p.scale * _PER_WIDTH) * s for _, p in parents]
    heights = [to_float(ROOT_HEIGHT * p.scale * _PER_WIDTH) * s for _, p in parents]
    total_w = margin * (len(parents) + 1) + sum(widths)
    total_h = max(heights) + 2 * margin + caption

    lines = _header(total_w, total_h, style, _HATCH_DEFS)
    x_off = margin
    for (name, parent), w, h in zip(parents, widths, heights):
        height = ROOT_HEIGHT * parent.scale
        y_off = total_h - margin - caption - h
        lines.append(f'<g id="rule-{name}" stroke="{style.stroke}" '
                     f'stroke-width="{style.fmt(style.stroke_width)}">')
        for i, c in enumerate(exp.children):
            pts = _points(apply(parent @ c.sim), style, height, x_off, y_off)
            cls = "small" if c.label is Label.SMALL else "big"
            if i in removed:
                lines.append(f'<polygon class="child removed {cls}" data-index="{i}" '
                             f'fill="{style.fill(c.label)}" fill-opacity="0.25" points="{pts}"/>')
                lines.append(f'<polygon class="hatch" fill="url(#{HATCH_ID})" '
                             f'fill-opacity="0.25" stroke="none" points="{pts}"/>')
            else:
                lines.append(f'<polygon class="child {cls}" data-index="{i}" '
                             f'fill="{style.fill(c.label)}" points="{pts}"/>')
        outline = _points(apply(parent, PROTOTILE_VERTICES), style, height, x_off, y_off)
        lines.append(f'<polygon class="parent" fill="none" '
                     f'stroke-width="{style.fmt(3 * style.stroke_width)}" points="{outline}"/>')
        lines.append(f'<text x="{style.fmt(x_off)}" y="{style.fmt(total_h - margin)}" '
                     f'font-family="sans-serif" font-size="{style.fmt(0.08 * s)}" stroke="none">'
                     f'{name} tile: ({n},{a},{b})-substitution</text>')
        lines.append("</g>")
        x_off += w + margin
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
