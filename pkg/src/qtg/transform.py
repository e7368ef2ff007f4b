"""The TI group: transpositions ``T_n`` and inversions ``I_n`` mod 24.

Elements are kept symbolic as ``(kind, index)``. ``compose(a, b)`` means
"apply ``b`` first, then ``a``", the usual ``a ∘ b``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .pitch import MODULUS, PitchClass

__all__ = [
    "Kind",
    "TiElement",
    "T",
    "I",
    "IDENTITY",
    "apply_pc",
    "compose",
    "inverse",
    "power",
    "all_elements",
    "parse_ti",
]


class Kind(enum.Enum):
    TRANSPOSITION = "T"
    INVERSION = "I"


@dataclass(frozen=True)
class TiElement:
    kind: Kind
    index: int

    def __post_init__(self):
        object.__setattr__(self, "index", int(self.index) % MODULUS)

    @property
    def is_inversion(self) -> bool:
        return self.kind is Kind.INVERSION

    def __call__(self, x: int) -> PitchClass:
        return apply_pc(self, x)

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


def T(n: int) -> TiElement:
    return TiElement(Kind.TRANSPOSITION, n)


def I(n: int) -> TiElement:  # noqa: E743
    return TiElement(Kind.INVERSION, n)


IDENTITY = T(0)

_TI_RE = re.compile(r"^\s*([TtIi])\s*(-?\d+)\s*$")


def parse_ti(text: str) -> TiElement:
    """Parse ``"T5"`` / ``"I14"``; the index is reduced mod 24."""
    m = _TI_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse TI element {text!r}; expected T<n> or I<n>")
    kind = Kind(m.group(1).upper())
    return TiElement(kind, int(m.group(2)))


def apply_pc(e: TiElement, x: int) -> PitchClass:
    if e.kind is Kind.TRANSPOSITION:
        return PitchClass(int(x) + e.index)
    return PitchClass(-int(x) + e.index)


# (kind of a, kind of b) -> (kind of a∘b, sign applied to b's index)
#   T_m∘T_n = T_{m+n}   T_m∘I_n = I_{m+n}   I_m∘T_n = I_{m-n}   I_m∘I_n = T_{m-n}
COMPOSITION_RULES = {
    (Kind.TRANSPOSITION, Kind.TRANSPOSITION): (Kind.TRANSPOSITION, +1),
    (Kind.TRANSPOSITION, Kind.INVERSION): (Kind.INVERSION, +1),
    (Kind.INVERSION, Kind.TRANSPOSITION): (Kind.INVERSION, -1),
    (Kind.INVERSION, Kind.INVERSION): (Kind.TRANSPOSITION, -1),
}


def compose(a: TiElement, b: TiElement) -> TiElement:
    kind, sign = COMPOSITION_RULES[a.kind, b.kind]
    return TiElement(kind, a.index + sign * b.index)


def inverse(e: TiElement) -> TiElement:
    if e.kind is Kind.TRANSPOSITION:
        return T(-e.index)
    return e


def power(e: TiElement, k: int) -> TiElement:
    """``e`` composed with itself ``k`` times; negative ``k`` uses the inverse."""
    if k < 0:
        e, k = inverse(e), -k
    # every element's order divides 24
    result = IDENTITY
    for _ in range(k % MODULUS):
        result = compose(e, result)
    return result


def all_elements() -> list[TiElement]:
    """The 48 elements, ``T0..T23`` then ``I0..I23``."""
    return [T(n) for n in range(MODULUS)] + [I(n) for n in range(MODULUS)]
