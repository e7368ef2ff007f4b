"""Exhaustive checks of the quarter-tone TI and PLR group structure.

Every ``verify_*`` function walks its whole (finite) domain and returns a
``TheoremVerdict`` that carries the number of checks made and the first
counterexample met, iterating triads by ascending root with major before
minor. Domain errors raised mid-check (a transform leaving the triad
classes, say) are reported as a failed verdict rather than propagated.
"""

from __future__ import annotations

import functools
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from . import transform, triad
from .group import FiniteGroup, close_generators, permutation_from_action
from .pitch import MODULUS, all_pitch_classes
from .transform import I, T, TiElement
from .triad import Quality, Triad

__all__ = [
    "NotConsonant",
    "NotNeutral",
    "ChainReport",
    "TheoremVerdict",
    "chain",
    "rl_chain",
    "l_chain_neutral",
    "ti_group",
    "plr_group",
    "verify_ti_is_d24",
    "verify_composition_table",
    "verify_simply_transitive_on_S",
    "verify_neutral_lemma",
    "verify_plr_structure_on_S",
    "verify_two_d12",
    "verify_z24_on_neutral",
    "verify_parity_lemmas",
    "VERIFIERS",
    "run_all",
]


class NotConsonant(ValueError):
    pass


class NotNeutral(ValueError):
    pass


@dataclass(frozen=True)
class ChainReport:
    start: Triad
    pattern: str
    steps: int
    sequence: tuple[Triad, ...]
    period: int

    def to_dict(self) -> dict:
        return {
            "start": str(self.start),
            "pattern": self.pattern,
            "steps": self.steps,
            "period": self.period,
            "sequence": [str(t) for t in self.sequence],
        }


def chain(start: Triad, pattern: str, steps: int | None = None) -> ChainReport:
    """Apply the letters of ``pattern`` cyclically, starting from ``start``.

    ``period`` is the smallest positive number of applications, a multiple of
    ``len(pattern)``, that brings the chain back to ``start``. Without
    ``steps`` the sequence is one full period with the start counted once;
    otherwise it holds ``steps + 1`` triads.
    """
    pattern = pattern.upper()
    if not pattern or set(pattern) - set(triad.OPERATIONS):
        raise ValueError(f"pattern must be a non-empty word over P, L, R, got {pattern!r}")
    ops = [triad.OPERATIONS[c] for c in pattern]

    # all maps are bijections on a finite set, so the start recurs
    limit = len(ops) * len(triad.all_triads())
    seq = [start]
    period = None
    t = start
    for i in range(limit):
        t = ops[i % len(ops)](t)
        if (i + 1) % len(ops) == 0 and t == start:
            period = i + 1
            break
        seq.append(t)
    if period is None:
        raise RuntimeError(f"chain from {start} did not close within {limit} steps")

    if steps is None:
        steps = period - 1
    full = [seq[i % period] for i in range(steps + 1)]
    return ChainReport(start, pattern, steps, tuple(full), period)


def rl_chain(start: Triad) -> ChainReport:
    """Alternate R and L (R first) from a consonant triad until it returns."""
    if not start.is_consonant:
        raise NotConsonant(f"{start} is not a consonant triad")
    return chain(start, "RL")


def l_chain_neutral(start: Triad) -> ChainReport:
    if start.quality is not Quality.NEUTRAL:
        raise NotNeutral(f"{start} is not a neutral triad")
    return chain(start, "L")


@dataclass
class TheoremVerdict:
    id: str
    passed: bool
    checked_count: int
    counterexample: Any = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"id": self.id, "passed": self.passed, "checked_count": self.checked_count}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        if self.details:
            d["details"] = self.details
        return d


class _Tally:
    """Counts checks and keeps the first failure."""

    def __init__(self):
        self.count = 0
        self.failure = None

    def check(self, ok: bool, witness: Callable[[], Any] | Any) -> bool:
        self.count += 1
        if not ok and self.failure is None:
            self.failure = witness() if callable(witness) else witness
        return ok

    def verdict(self, theorem_id: str, **details) -> TheoremVerdict:
        return TheoremVerdict(theorem_id, self.failure is None, self.count,
                              self.failure, details)


def _verdict(theorem_id: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs) -> TheoremVerdict:
            try:
                return fn(*args, **kwargs)
            except (ValueError, KeyError) as exc:
                return TheoremVerdict(theorem_id, False, 0, f"{type(exc).__name__}: {exc}")
        run.theorem_id = theorem_id
        return run
    return wrap


def ti_group(points: Sequence[Any], act: Callable[[TiElement, Any], Any],
             generators: Sequence[TiElement] = (T(1), I(0))) -> FiniteGroup:
    gens = [permutation_from_action(functools.partial(act, g), points) for g in generators]
    return close_generators(gens, names=[str(g) for g in generators], labels=points)


def ti_name_table(g: FiniteGroup, act: Callable[[TiElement, Any], Any]) -> dict[int, str]:
    """Element index -> symbolic ``T<n>``/``I<n>`` name, matched by action."""
    names = {}
    for e in transform.all_elements():
        p = permutation_from_action(functools.partial(act, e), g.labels)
        if p in g:
            names.setdefault(g.index_of(p), str(e))
    return names


def plr_group(points: Sequence[Triad], generators: str = "LR") -> FiniteGroup:
    gens = [permutation_from_action(triad.OPERATIONS[c], points) for c in generators]
    return close_generators(gens, names=list(generators), labels=points)


def _triad_label(t: Triad) -> str:
    return str(t)


@_verdict("ti-d24")
def verify_ti_is_d24(generators: Sequence[TiElement] = (T(1), I(0))) -> TheoremVerdict:
    """``<T_1, I_0>`` on Z24 has 48 elements and is dihedral of the 24-gon."""
    g = ti_group(all_pitch_classes(), transform.apply_pc, generators)
    tally = _Tally()
    cls = g.classify()
    tally.check(len(g) == 48, lambda: {"order": len(g)})
    tally.check(cls.kind == "dihedral" and cls.n == 24, lambda: {"classification": str(cls)})
    names = ti_name_table(g, transform.apply_pc)
    return tally.verdict(
        "ti-d24",
        generators=[str(e) for e in generators],
        order=len(g),
        classification=str(cls),
        group=g.to_dict(element_label=lambda a: names.get(a, g.label_of(a))),
    )


@_verdict("composition-table")
def verify_composition_table() -> TheoremVerdict:
    """Symbolic ``compose`` agrees with function composition on Z24.

    Also checks that the permutations of the 48 symbolic elements are
    exactly the closure of ``{T_1, I_0}``.
    """
    elements = transform.all_elements()
    tally = _Tally()
    for a in elements:
        for b in elements:
            ab = transform.compose(a, b)
            for x in range(MODULUS):
                got = transform.apply_pc(ab, x)
                want = transform.apply_pc(a, transform.apply_pc(b, x))
                tally.check(got == want, lambda: {"a": str(a), "b": str(b), "x": x,
                                                  "compose": str(ab), "got": int(got),
                                                  "want": int(want)})
    g = ti_group(all_pitch_classes(), transform.apply_pc)
    symbolic = {permutation_from_action(functools.partial(transform.apply_pc, e), g.labels)
                for e in elements}
    tally.check(symbolic == set(g.elements),
                lambda: {"symbolic_distinct": len(symbolic), "closure_order": len(g)})
    return tally.verdict("composition-table", pairs=len(elements) ** 2)


@_verdict("simply-transitive-S")
def verify_simply_transitive_on_S() -> TheoremVerdict:
    """Exactly one TI element maps any consonant triad to any other.

    The unique element is also rebuilt from the row/column construction:
    with ``h1 C = X`` and ``h2 C = Y`` (C major), ``h = h2 ∘ h1^-1``.
    """
    S = triad.consonant_triads()
    c_major = Triad(0, Quality.MAJOR)
    elements = transform.all_elements()
    images = {e: {x: triad.apply_ti(e, x) for x in S} for e in elements}
    from_c = {}
    for e in elements:
        from_c.setdefault(images[e][c_major], []).append(e)

    tally = _Tally()
    for x in S:
        tally.check(len(from_c.get(x, [])) == 1, lambda: {"from": str(c_major), "to": str(x),
                                                         "elements": [str(e) for e in from_c.get(x, [])]})
    for x in S:
        for y in S:
            hits = [e for e in elements if images[e][x] == y]
            ok = len(hits) == 1
            if ok and len(from_c.get(x, [])) == 1 and len(from_c.get(y, [])) == 1:
                h = transform.compose(from_c[y][0], transform.inverse(from_c[x][0]))
                ok = hits[0] == h
            tally.check(ok, lambda: {"from": str(x), "to": str(y),
                                     "elements": [str(e) for e in hits]})

    g = ti_group(S, triad.apply_ti)
    N = triad.neutral_triads()
    g_n = ti_group(N, triad.apply_ti)
    tally.check(g.is_simply_transitive(), "permutation group on S is not simply transitive")
    return tally.verdict(
        "simply-transitive-S",
        pairs=len(S) ** 2,
        group_order=len(g),
        neutral_simply_transitive=g_n.is_simply_transitive(),
    )


@_verdict("neutral-lemma")
def verify_neutral_lemma() -> TheoremVerdict:
    """Each inversion on a neutral triad equals a transposition.

    ``I_n(neutral x) == T_k(neutral x)`` with ``k = -2x + n + 10``; and TI
    acts on the neutral triads transitively but not simply transitively,
    every stabilizer having two elements.
    """
    tally = _Tally()
    for x in range(MODULUS):
        z = Triad(x, Quality.NEUTRAL)
        for n in range(MODULUS):
            k = triad.neutral_inversion_index(x, n)
            got = triad.apply_ti(I(n), z)
            want = triad.apply_ti(T(k), z)
            tally.check(got == want, lambda: {"x": x, "n": n, "k": k,
                                              "inversion": str(got), "transposition": str(want)})
    N = triad.neutral_triads()
    g = ti_group(N, triad.apply_ti)
    tally.check(len(g) == 48, lambda: {"order": len(g)})
    tally.check(g.is_transitive(), lambda: {"orbits": len(g.orbits())})
    tally.check(not g.is_simply_transitive(), "TI acts simply transitively on N")
    stab_sizes = []
    for z in N:
        size = len(g.stabilizer(z))
        stab_sizes.append(size)
        tally.check(size == 2, lambda: {"triad": str(z), "stabilizer_size": size})
    names = ti_name_table(g, triad.apply_ti)
    c_neutral = Triad(0, Quality.NEUTRAL)
    return tally.verdict(
        "neutral-lemma",
        pairs=MODULUS * MODULUS,
        stabilizer_sizes=sorted(set(stab_sizes)),
        stabilizer_of_c_neutral=[names[a] for a in g.stabilizer(c_neutral)],
    )


@_verdict("plr-structure-S")
def verify_plr_structure_on_S() -> TheoremVerdict:
    """On S: P, L, R are involutions sharing two tones with their input,
    ``P = R(LR)^3``, ``LR`` has order 12 and the 24 maps ``(LR)^k``,
    ``R(LR)^k`` (k < 12) are distinct.

    Words passed to ``apply_word`` are in application order, so the
    composite ``R(LR)^3`` is the word ``"RLRLRLR"`` and ``LR`` is ``"RL"``.
    """
    S = triad.consonant_triads()
    tally = _Tally()
    for t in S:
        for name, op in triad.OPERATIONS.items():
            u = op(t)
            tally.check(op(u) == t, lambda: {"op": name, "triad": str(t), "image": str(u),
                                             "twice": str(op(u))})
            tally.check(len(t.tones & u.tones) == 2 and u.is_consonant and u != t,
                        lambda: {"op": name, "triad": str(t), "image": str(u),
                                 "common_tones": len(t.tones & u.tones)})
    for t in S:
        p, w = triad.parallel(t), triad.apply_word("RLRLRLR", t)
        tally.check(p == w, lambda: {"triad": str(t), "P": str(p), "R(LR)^3": str(w)})

    lr = permutation_from_action(functools.partial(triad.apply_word, "RL"), S)
    r = permutation_from_action(triad.relative, S)
    tally.check(lr.order() == 12, lambda: {"LR_order": lr.order()})
    maps = []
    rot = lr.identity(len(S))
    for _ in range(12):
        maps.append(rot)  # (LR)^k
        maps.append(r * rot)  # R(LR)^k
        rot = lr * rot
    tally.check(len(set(maps)) == 24, lambda: {"distinct_maps": len(set(maps))})
    tally.check(rot.is_identity, "(LR)^12 is not the identity")
    return tally.verdict("plr-structure-S", triads=len(S), lr_order=lr.order())


def _parity_subset(parity: int) -> list[Triad]:
    return [t for t in triad.consonant_triads() if int(t.root) % 2 == parity]


@_verdict("two-d12")
def verify_two_d12() -> TheoremVerdict:
    """``<L, R>`` on the even-root and odd-root consonant triads gives two
    dihedral groups of order 24, whose RL chains differ by a quarter-step."""
    tally = _Tally()
    details: dict = {}
    chains = {}
    for parity, label in ((0, "even"), (1, "odd")):
        subset = _parity_subset(parity)
        g = plr_group(subset)
        cls = g.classify()
        tally.check(len(subset) == 24, lambda: {"subset": label, "size": len(subset)})
        tally.check(len(g) == 24, lambda: {"subset": label, "order": len(g)})
        tally.check(cls.kind == "dihedral" and cls.n == 12,
                    lambda: {"subset": label, "classification": str(cls)})
        tally.check(g.is_transitive(), lambda: {"subset": label, "orbits": len(g.orbits())})

        # t = L, s = LR: t^2 = 1, s^12 = 1, t s t = s^-1
        lr = permutation_from_action(functools.partial(triad.apply_word, "RL"), subset)
        ell = permutation_from_action(triad.leading_tone, subset)
        tally.check((ell * ell).is_identity, lambda: {"subset": label, "relation": "L^2 = 1"})
        tally.check(lr.order() == 12, lambda: {"subset": label, "relation": "(LR)^12 = 1",
                                               "order": lr.order()})
        tally.check(ell * lr * ell == lr.inverse(),
                    lambda: {"subset": label, "relation": "L(LR)L = (LR)^-1"})

        start = Triad(parity, Quality.MAJOR)
        report = rl_chain(start)
        chains[label] = report
        tally.check(report.period == 24 and set(report.sequence) == set(subset),
                    lambda: {"subset": label, "period": report.period,
                             "visited": len(set(report.sequence))})
        details[label] = {
            "order": len(g),
            "classification": str(cls),
            "group": g.to_dict(point_label=_triad_label),
            "chain": [str(t) for t in report.sequence],
        }
    even, odd = chains["even"].sequence, chains["odd"].sequence
    for a, b in zip(even, odd):
        tally.check(triad.apply_ti(T(1), a) == b, lambda: {"even": str(a), "odd": str(b)})

    full = plr_group(triad.consonant_triads())
    details["full_S"] = {
        "order": len(full),
        "classification": str(full.classify()),
        "orbit_sizes": [len(o) for o in full.orbits()],
    }
    return tally.verdict("two-d12", **details)


@_verdict("z24-neutral")
def verify_z24_on_neutral() -> TheoremVerdict:
    """``<L>`` on the neutral triads is cyclic of order 24, L acts as ``T_7``,
    R as ``T_17`` and ``R = L^23``."""
    N = triad.neutral_triads()
    g = plr_group(N, "L")
    cls = g.classify()
    tally = _Tally()
    tally.check(len(g) == 24, lambda: {"order": len(g)})
    tally.check(cls.kind == "cyclic" and cls.n == 24, lambda: {"classification": str(cls)})
    for z in N:
        l23 = triad.apply_word("L" * 23, z)
        tally.check(triad.relative(z) == l23, lambda: {"triad": str(z), "R": str(triad.relative(z)),
                                                       "L^23": str(l23)})
        tally.check(triad.leading_tone(z) == triad.apply_ti(T(7), z),
                    lambda: {"triad": str(z), "L": str(triad.leading_tone(z))})
        tally.check(triad.relative(z) == triad.apply_ti(T(17), z),
                    lambda: {"triad": str(z), "R": str(triad.relative(z))})
    report = l_chain_neutral(Triad(0, Quality.NEUTRAL))
    roots = [int(t.root) for t in report.sequence]
    tally.check(roots == [7 * k % MODULUS for k in range(MODULUS)] and report.period == 24,
                lambda: {"roots": roots, "period": report.period})
    return tally.verdict("z24-neutral", order=len(g), classification=str(cls), roots=roots)


@_verdict("parity-lemmas")
def verify_parity_lemmas() -> TheoremVerdict:
    """P/L/R keep root parity on S; on N, P is the identity and L, R flip parity."""
    tally = _Tally()
    for t in triad.consonant_triads():
        for name, op in triad.OPERATIONS.items():
            u = op(t)
            tally.check(int(u.root) % 2 == int(t.root) % 2,
                        lambda: {"op": name, "triad": str(t), "image": str(u)})
    for z in triad.neutral_triads():
        p = triad.parallel(z)
        tally.check(p == z, lambda: {"op": "P", "triad": str(z), "image": str(p)})
        for name in ("L", "R"):
            u = triad.OPERATIONS[name](z)
            tally.check(u.quality is Quality.NEUTRAL and int(u.root) % 2 != int(z.root) % 2,
                        lambda: {"op": name, "triad": str(z), "image": str(u)})
    return tally.verdict("parity-lemmas")


VERIFIERS: dict[str, Callable[[], TheoremVerdict]] = {
    f.theorem_id: f
    for f in (
        verify_ti_is_d24,
        verify_composition_table,
        verify_simply_transitive_on_S,
        verify_neutral_lemma,
        verify_plr_structure_on_S,
        verify_two_d12,
        verify_z24_on_neutral,
        verify_parity_lemmas,
    )
}


def run_all(ids: Sequence[str] | None = None, workers: int = 1) -> list[TheoremVerdict]:
    """Run the selected verifiers; results come back in registry order."""
    ids = list(VERIFIERS) if ids is None else list(ids)
    unknown = [i for i in ids if i not in VERIFIERS]
    if unknown:
        raise KeyError(f"unknown theorem id(s): {', '.join(unknown)}")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda i: VERIFIERS[i](), ids))
    return [VERIFIERS[i]() for i in ids]
