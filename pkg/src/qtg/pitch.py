"""Pitch classes and intervals in the 24-tone equal-tempered system.

Pitch classes are residues mod 24 with C = 0; one step is a quarter-tone.
Even residues are the familiar 12-EDO pitches ("original tones"), odd
residues are the interleaved quarter-tone pitches ("new tones").
"""

from __future__ import annotations

__all__ = [
    "MODULUS",
    "PitchClass",
    "Interval",
    "make_pc",
    "interval_between",
    "is_original_tone",
    "all_pitch_classes",
]

MODULUS = 24


class PitchClass(int):
    """An integer reduced into ``[0, 23]``.

    Subclassing ``int`` keeps comparison, hashing and indexing free;
    arithmetic returns plain ints, so wrap results with ``PitchClass`` again
    when the reduction matters.
    """

    __slots__ = ()

    def __new__(cls, value: int) -> "PitchClass":
        return super().__new__(cls, int(value) % MODULUS)

    def __repr__(self) -> str:
        return f"PitchClass({int(self)})"

    @property
    def value(self) -> int:
        return int(self)

    def transpose(self, n: int) -> "PitchClass":
        return PitchClass(int(self) + n)


class Interval(int):
    """Directed distance between two pitch classes, in quarter-steps mod 24."""

    __slots__ = ()

    def __new__(cls, quarter_steps: int) -> "Interval":
        return super().__new__(cls, int(quarter_steps) % MODULUS)

    def __repr__(self) -> str:
        return f"Interval({int(self)})"

    @property
    def quarter_steps(self) -> int:
        return int(self)


def make_pc(n: int) -> PitchClass:
    return PitchClass(n)


def interval_between(a: int, b: int) -> Interval:
    """Quarter-steps needed to go up from ``a`` to ``b``, i.e. ``(b - a) mod 24``."""
    return Interval(int(b) - int(a))


def is_original_tone(a: int) -> bool:
    return int(a) % 2 == 0


def all_pitch_classes() -> list[PitchClass]:
    return [PitchClass(i) for i in range(MODULUS)]
