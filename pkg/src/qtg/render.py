"""SVG musical-clock diagrams.

Pitch class ``i`` sits at angle ``90 - 15 i`` degrees (clockwise from
12 o'clock). Chords are triangles on their tones, inversion axes are dotted
diameters through positions ``n/2`` and ``n/2 + 12``. Output depends only on
the scene, so identical scenes give identical bytes.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .notation import clock_label
from .pitch import MODULUS
from .triad import (Quality, Triad, apply_ti, format_chord, leading_tone, make_triad, parallel,
                    relative)
from .transform import I, T

__all__ = [
    "InvalidAxis",
    "ClockScene",
    "CANVAS",
    "RADIUS",
    "NODE_RADIUS",
    "LABEL_RADIUS",
    "TRIANGLE_RADIUS",
    "PALETTE",
    "LABEL_MODES",
    "position_angle",
    "position_xy",
    "axis_endpoints",
    "reflect_node",
    "render_clock",
    "FIGURES",
]

CANVAS = 600
CENTER = CANVAS / 2
RADIUS = 250
NODE_RADIUS = 15
LABEL_RADIUS = 290
TRIANGLE_RADIUS = 232
AXIS_OVERHANG = 20
PALETTE = ("black", "blue", "red", "darkgreen", "darkorange", "purple")
LABEL_MODES = ("numbers", "names", "both")


class InvalidAxis(ValueError):
    pass


@dataclass(frozen=True)
class ClockScene:
    """Chords are ``(triad, stroke)`` pairs; a ``None`` stroke takes the palette colour."""

    chords: tuple[tuple[Triad, str | None], ...] = ()
    axes: tuple[int, ...] = ()
    labels: str = "both"

    def __post_init__(self):
        chords = tuple(c if isinstance(c, tuple) else (c, None) for c in self.chords)
        object.__setattr__(self, "chords", chords)
        object.__setattr__(self, "axes", tuple(self.axes))
        if self.labels not in LABEL_MODES:
            raise ValueError(f"label mode must be one of {LABEL_MODES}, got {self.labels!r}")

    @classmethod
    def of(cls, *triads: Triad, axes: Iterable[int] = (), labels: str = "both") -> "ClockScene":
        return cls(tuple((t, None) for t in triads), tuple(axes), labels)


def position_angle(pos: float) -> float:
    return 90.0 - 360.0 * pos / MODULUS


def position_xy(pos: float, radius: float) -> tuple[float, float]:
    a = math.radians(position_angle(pos))
    # SVG y grows downward
    return CENTER + radius * math.cos(a), CENTER - radius * math.sin(a)


def _check_axis(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or not 0 <= n < MODULUS:
        raise InvalidAxis(f"axis index must be an integer in [0, {MODULUS - 1}], got {n!r}")
    return n


def axis_endpoints(n: int) -> tuple[float, float]:
    """Clock positions ``n/2`` and ``n/2 + 12`` spanning the axis of ``I_n``."""
    _check_axis(n)
    return n / 2, n / 2 + MODULUS / 2


def reflect_node(i: int, n: int) -> int:
    """Mirror of node ``i`` across the axis of ``I_n``."""
    return (n - i) % MODULUS


def _num(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def _stroke(k: int, style: str | None) -> str:
    return style if style else PALETTE[k % len(PALETTE)]


def render_clock(scene: ClockScene) -> str:
    for n in scene.axes:
        _check_axis(n)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" '
        f'height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}" font-family="sans-serif">',
        f'<rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>',
        f'<circle cx="{_num(CENTER)}" cy="{_num(CENTER)}" r="{RADIUS}" fill="none" '
        'stroke="gray" stroke-width="2"/>',
        '<g id="axes">',
    ]
    for n in scene.axes:
        a, b = axis_endpoints(n)
        x1, y1 = position_xy(a, RADIUS + AXIS_OVERHANG)
        x2, y2 = position_xy(b, RADIUS + AXIS_OVERHANG)
        out.append(f'<line class="axis" data-axis="{n}" x1="{_num(x1)}" y1="{_num(y1)}" '
                   f'x2="{_num(x2)}" y2="{_num(y2)}" stroke="black" stroke-width="2" '
                   'stroke-dasharray="2,6"/>')
    out.append("</g>")

    out.append('<g id="nodes">')
    for i in range(MODULUS):
        x, y = position_xy(i, RADIUS)
        out.append(f'<circle class="node" data-pc="{i}" cx="{_num(x)}" cy="{_num(y)}" '
                   f'r="{NODE_RADIUS}" fill="white" stroke="black"/>')
        if scene.labels in ("numbers", "both"):
            out.append(f'<text x="{_num(x)}" y="{_num(y)}" font-size="12" text-anchor="middle" '
                       f'dominant-baseline="central">{i}</text>')
    out.append("</g>")

    if scene.labels in ("names", "both"):
        out.append('<g id="labels">')
        for i in range(MODULUS):
            x, y = position_xy(i, LABEL_RADIUS)
            out.append(f'<text class="label" data-pc="{i}" x="{_num(x)}" y="{_num(y)}" '
                       f'font-size="11" text-anchor="middle" dominant-baseline="central">'
                       f'{escape(clock_label(i))}</text>')
        out.append("</g>")

    out.append('<g id="chords">')
    for k, (t, style) in enumerate(scene.chords):
        nodes = [int(p) for p in t.voicing]
        pts = " ".join(f"{_num(x)},{_num(y)}" for x, y in
                       (position_xy(p, TRIANGLE_RADIUS) for p in nodes))
        out.append(f'<polygon class="chord" data-chord={quoteattr(format_chord(t))} '
                   f'data-nodes="{" ".join(map(str, nodes))}" points="{pts}" fill="none" '
                   f'stroke={quoteattr(_stroke(k, style))} stroke-width="4" '
                   'stroke-linejoin="round"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _figures() -> dict[str, ClockScene]:
    c = make_triad(0, Quality.MAJOR)
    cn = make_triad(0, Quality.NEUTRAL)
    return {
        "clock": ClockScene(),
        "c-major": ClockScene.of(c),
        "i0-c-major": ClockScene.of(c, apply_ti(I(0), c), axes=[0]),
        "c-neutral": ClockScene.of(cn),
        "i0-c-neutral": ClockScene.of(cn, apply_ti(I(0), cn), axes=[0]),
        "parallel-c": ClockScene.of(c, parallel(c), axes=[14]),
        "leading-tone-c": ClockScene.of(c, leading_tone(c), axes=[22]),
        "relative-c": ClockScene.of(c, relative(c), axes=[8]),
        "t7-c-neutral": ClockScene.of(cn, apply_ti(T(7), cn)),
    }


FIGURES: dict[str, ClockScene] = _figures()
