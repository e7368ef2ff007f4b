"""Quarter-tone (24-EDO) transposition/inversion and PLR algebra."""

from .pitch import MODULUS, Interval, PitchClass, interval_between, is_original_tone, make_pc
from .notation import Spelling, canonical_name, format_spelling, names_of, parse_spelling
from .transform import I, T, TiElement, apply_pc, compose, inverse, power
from .triad import (Quality, Triad, apply_ti, decompose, leading_tone, make_triad, parallel,
                    relative)

__version__ = "0.1.0"
