"""Major, minor and neutral triads, their TI action, and P/L/R.

A triad is stored as ``(root, quality)``. For the contextual inversions the
tones are read in a fixed order, ``VOICINGS``: major and neutral triads in
root position ``<x, x+8, x+14>`` / ``<x, x+7, x+14>``, minor triads as the
inversion image of a major triad, ``<x+14, x+6, x>`` (so F minor is
``<0, 16, 10>``). With that ordering

    P<y1, y2, y3> = I_{y1+y3}<y1, y2, y3>
    L<y1, y2, y3> = I_{y2+y3}<y1, y2, y3>
    R<y1, y2, y3> = I_{y1+y2}<y1, y2, y3>

are involutions on the consonant triads and commute with every
transposition.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable
from dataclasses import dataclass

from . import transform
from .notation import MalformedSpelling, canonical_name, format_spelling, parse_spelling
from .pitch import MODULUS, PitchClass
from .transform import TiElement

__all__ = [
    "Quality",
    "Triad",
    "NotATriad",
    "VOICINGS",
    "make_triad",
    "decompose",
    "apply_ti",
    "parallel",
    "leading_tone",
    "relative",
    "OPERATIONS",
    "apply_word",
    "neutral_inversion_index",
    "consonant_triads",
    "neutral_triads",
    "all_triads",
    "parse_chord",
    "format_chord",
]


class Quality(enum.Enum):
    MAJOR = "maj"
    MINOR = "min"
    NEUTRAL = "neu"


_QUALITY_RANK = {Quality.MAJOR: 0, Quality.MINOR: 1, Quality.NEUTRAL: 2}

# offsets from the root, in the order P/L/R index them
VOICINGS = {
    Quality.MAJOR: (0, 8, 14),
    Quality.MINOR: (14, 6, 0),
    Quality.NEUTRAL: (0, 7, 14),
}


class NotATriad(ValueError):
    pass


@dataclass(frozen=True)
class Triad:
    root: PitchClass
    quality: Quality

    def __post_init__(self):
        object.__setattr__(self, "root", PitchClass(self.root))
        object.__setattr__(self, "quality", Quality(self.quality))

    @property
    def voicing(self) -> tuple[PitchClass, PitchClass, PitchClass]:
        r = int(self.root)
        a, b, c = VOICINGS[self.quality]
        return PitchClass(r + a), PitchClass(r + b), PitchClass(r + c)

    @property
    def tones(self) -> frozenset[PitchClass]:
        return frozenset(self.voicing)

    @property
    def is_consonant(self) -> bool:
        return self.quality is not Quality.NEUTRAL

    def sort_key(self) -> tuple[int, int]:
        return int(self.root), _QUALITY_RANK[self.quality]

    def __str__(self) -> str:
        return format_chord(self)


def make_triad(root: int, quality: Quality | str) -> Triad:
    return Triad(PitchClass(root), Quality(quality))


def decompose(tones: Iterable[int]) -> Triad:
    """Recover ``(root, quality)`` from an unordered set of three tones."""
    pcs = frozenset(PitchClass(t) for t in tones)
    if len(pcs) == 3:
        for quality in Quality:
            for root in pcs:
                # every voicing contains the root itself at offset 0
                if frozenset(PitchClass(root + k) for k in VOICINGS[quality]) == pcs:
                    return Triad(root, quality)
    raise NotATriad(f"{sorted(int(p) for p in pcs)} is not a major, minor or neutral triad")


def apply_ti(e: TiElement, t: Triad) -> Triad:
    return decompose(transform.apply_pc(e, y) for y in t.voicing)


def _contextual(t: Triad, i: int, j: int) -> Triad:
    y = t.voicing
    return apply_ti(transform.I(y[i] + y[j]), t)


def parallel(t: Triad) -> Triad:
    return _contextual(t, 0, 2)


def leading_tone(t: Triad) -> Triad:
    return _contextual(t, 1, 2)


def relative(t: Triad) -> Triad:
    return _contextual(t, 0, 1)


OPERATIONS = {"P": parallel, "L": leading_tone, "R": relative}


def apply_word(word: str, t: Triad) -> Triad:
    """Apply a word over ``P``, ``L``, ``R`` left to right: ``"RL"`` is R first.

    This is application order, the reverse of how ``L∘R`` is written.
    """
    for symbol in word.upper():
        try:
            op = OPERATIONS[symbol]
        except KeyError:
            raise ValueError(f"unknown transformation {symbol!r}; expected P, L or R") from None
        t = op(t)
    return t


def neutral_inversion_index(x: int, n: int) -> int:
    """``k`` with ``I_n(neutral x) == T_k(neutral x)``, namely ``-2x + n + 10``."""
    return (-2 * int(x) + int(n) + 10) % MODULUS


def consonant_triads() -> list[Triad]:
    """The 48 consonant triads, by ascending root, major before minor."""
    return [Triad(r, q) for r in range(MODULUS) for q in (Quality.MAJOR, Quality.MINOR)]


def neutral_triads() -> list[Triad]:
    return [Triad(r, Quality.NEUTRAL) for r in range(MODULUS)]


def all_triads() -> list[Triad]:
    return sorted(consonant_triads() + neutral_triads(), key=Triad.sort_key)


_CHORD_RE = re.compile(r"^\s*([^:\s]+)\s*:\s*(maj|min|neu)\s*$", re.IGNORECASE)


def parse_chord(text: str) -> Triad:
    """Parse ``<spelling>:<quality>``, e.g. ``"C:maj"``, ``"Gq#:neu"``."""
    m = _CHORD_RE.match(text)
    if m is None:
        raise MalformedSpelling(f"cannot parse chord {text!r}; expected <note>:<maj|min|neu>")
    spelling = parse_spelling(m.group(1))
    return Triad(spelling.pc, Quality(m.group(2).lower()))


def format_chord(t: Triad) -> str:
    """Root's canonical name, lower-cased letter for minor triads, then the quality."""
    name = format_spelling(canonical_name(t.root))
    if t.quality is Quality.MINOR:
        name = name[0].lower() + name[1:]
    return f"{name}:{t.quality.value}"
