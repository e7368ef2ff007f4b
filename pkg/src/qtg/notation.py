"""ASCII spelling of quarter-tone note names.

Accidental tokens, in quarter-steps::

    ""  / "n"   natural               0
    "q#"        quarter-sharp        +1
    "#"         sharp                +2
    "t#"        three-quarter-sharp  +3
    "qb"        quarter-flat         -1
    "b"         flat                 -2
    "tb"        three-quarter-flat   -3

Any letter/accidental combination parses (``Fqb`` is pc 9 even though the
clock labels that position ``Eq#``); ``names_of`` returns only the clock labels.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .pitch import MODULUS, PitchClass

__all__ = [
    "MalformedSpelling",
    "Spelling",
    "NATURAL_VALUES",
    "ACCIDENTAL_TOKENS",
    "parse_spelling",
    "format_spelling",
    "names_of",
    "canonical_name",
    "clock_label",
]

NATURAL_VALUES = {"C": 0, "D": 4, "E": 8, "F": 10, "G": 14, "A": 18, "B": 22}

ACCIDENTAL_TOKENS = {"": 0, "n": 0, "q#": 1, "#": 2, "t#": 3, "qb": -1, "b": -2, "tb": -3}

# canonical token per offset; "n" is accepted on input only
_TOKEN_FOR_OFFSET = {0: "", 1: "q#", 2: "#", 3: "t#", -1: "qb", -2: "b", -3: "tb"}

_SPELLING_RE = re.compile(r"^\s*([A-Ga-g])(n|q#|t#|#|qb|tb|b)?\s*$")


class MalformedSpelling(ValueError):
    pass


@dataclass(frozen=True)
class Spelling:
    letter: str
    accidental: int = 0

    def __post_init__(self):
        if self.letter not in NATURAL_VALUES:
            raise MalformedSpelling(f"unknown note letter {self.letter!r}")
        if self.accidental not in _TOKEN_FOR_OFFSET:
            raise MalformedSpelling(f"accidental {self.accidental} outside [-3, 3]")

    @property
    def pc(self) -> PitchClass:
        return PitchClass(NATURAL_VALUES[self.letter] + self.accidental)

    def __str__(self) -> str:
        return format_spelling(self)


def parse_spelling(text: str) -> Spelling:
    m = _SPELLING_RE.match(text)
    if m is None:
        raise MalformedSpelling(f"cannot parse note spelling {text!r}")
    letter, token = m.group(1).upper(), m.group(2) or ""
    return Spelling(letter, ACCIDENTAL_TOKENS[token])


def format_spelling(s: Spelling) -> str:
    return s.letter + _TOKEN_FOR_OFFSET[s.accidental]


# Clock labels, sharp-family name first where a position has two.
_CLOCK_LABELS = [
    "C", "Cq#/Dtb", "C#/Db", "Ct#/Dqb", "D", "Dq#/Etb", "D#/Eb", "Dt#/Eqb",
    "E", "Eq#/Fqb", "F", "Fq#/Gtb", "F#/Gb", "Ft#/Gqb", "G", "Gq#/Atb",
    "G#/Ab", "Gt#/Aqb", "A", "Aq#/Btb", "A#/Bb", "At#/Bqb", "B", "Bq#/Cqb",
]

_NAMES = [tuple(parse_spelling(s) for s in label.split("/")) for label in _CLOCK_LABELS]
assert len(_NAMES) == MODULUS


def names_of(pc: int) -> list[Spelling]:
    return list(_NAMES[PitchClass(pc)])


def canonical_name(pc: int) -> Spelling:
    return _NAMES[PitchClass(pc)][0]


def clock_label(pc: int) -> str:
    """All clock names of ``pc`` joined with ``/``, e.g. ``"Cq#/Dtb"``."""
    return "/".join(format_spelling(s) for s in _NAMES[PitchClass(pc)])
