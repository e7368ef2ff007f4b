"""Exit criteria. Every check is exact (no tolerances) and exhaustive.

Run with ``pytest tests/test_acceptance.py``; one PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import contextlib
import functools
import itertools
import re

import pytest

from qtg import analysis, transform
from qtg.group import close_generators, permutation_from_action
from qtg.notation import format_spelling, names_of, parse_spelling
from qtg.pitch import interval_between
from qtg.render import FIGURES, ClockScene, axis_endpoints, reflect_node, render_clock
from qtg.transform import I, T, all_elements, apply_pc, compose
from qtg.triad import (Quality, Triad, apply_ti, apply_word, consonant_triads, leading_tone,
                       make_triad, neutral_triads, parallel, relative)

from conftest import ACCEPTANCE_LINES, L_CHAIN_ROOTS, RL_CHAIN_FROM_C, as_triads

MAJ, MIN, NEU = Quality.MAJOR, Quality.MINOR, Quality.NEUTRAL
S = consonant_triads()
N = neutral_triads()


@contextlib.contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL  {number:>2}. {title}")
        raise
    ACCEPTANCE_LINES.append(f"PASS  {number:>2}. {title}")


def ti_perms(points, act):
    return [permutation_from_action(functools.partial(act, g), points) for g in (T(1), I(0))]


def test_01_ti_group_is_d24():
    with criterion(1, "closure of {T1, I0} has 48 elements, Dihedral(24)"):
        g = close_generators(ti_perms(list(range(24)), apply_pc))
        assert len(g) == 48
        cls = g.classify()
        assert (cls.kind, cls.n) == ("dihedral", 24)
        assert analysis.verify_ti_is_d24().passed


def test_02_composition_table():
    with criterion(2, "48x48 symbolic compositions agree with permutation composition"):
        table = {e: permutation_from_action(functools.partial(apply_pc, e), list(range(24)))
                 for e in all_elements()}
        checked = 0
        for a, b in itertools.product(all_elements(), repeat=2):
            assert table[compose(a, b)] == table[a] * table[b]
            checked += 1
        assert checked == 2304
        assert analysis.verify_composition_table().passed


def test_03_simply_transitive_on_s():
    with criterion(3, "exactly one TI element maps each consonant triad to each other (2304 pairs)"):
        images = {e: {t: apply_ti(e, t) for t in S} for e in all_elements()}
        pairs = 0
        for x, y in itertools.product(S, repeat=2):
            assert sum(images[e][x] == y for e in images) == 1
            pairs += 1
        assert pairs == 2304
        assert analysis.verify_simply_transitive_on_S().passed


def test_04_neutral_lemma():
    with criterion(4, "I_n(neutral x) = T_{-2x+n+10}(neutral x) for 576 pairs; I0(Cn) = T10(Cn) = Fn"):
        count = 0
        for x, n in itertools.product(range(24), repeat=2):
            z = make_triad(x, NEU)
            assert apply_ti(I(n), z) == apply_ti(T((-2 * x + n + 10) % 24), z)
            count += 1
        assert count == 576
        cn = make_triad(0, NEU)
        assert apply_ti(I(0), cn) == apply_ti(T(10), cn) == make_triad(10, NEU)
        assert analysis.verify_neutral_lemma().passed


def test_05_ti_on_n_not_simply_transitive():
    with criterion(5, "TI on N transitive, not simply transitive, every stabilizer has 2 elements"):
        g = close_generators(ti_perms(N, apply_ti), labels=N)
        assert len(g) == 48
        assert g.is_transitive() and not g.is_simply_transitive()
        assert [len(g.stabilizer(z)) for z in N] == [2] * 24


def test_06_worked_examples():
    with criterion(6, "I0(C) = f, P(C) = c, L(C) = e, R(C) = a"):
        c = make_triad(0, MAJ)
        assert apply_ti(I(0), c) == make_triad(10, MIN)
        assert apply_ti(I(0), c).tones == {0, 16, 10}
        assert parallel(c) == make_triad(0, MIN) and parallel(c).tones == {14, 6, 0}
        assert leading_tone(c) == make_triad(8, MIN) and leading_tone(c).tones == {22, 14, 8}
        assert relative(c) == make_triad(18, MIN) and relative(c).tones == {8, 0, 18}


def test_07_plr_structure():
    with criterion(7, "P, L, R involutions; P = R(LR)^3; LR order 12; two common tones"):
        for t in S:
            for op in (parallel, leading_tone, relative):
                assert op(op(t)) == t
                assert len(op(t).tones & t.tones) == 2
            assert parallel(t) == apply_word("RLRLRLR", t)
        lr = permutation_from_action(functools.partial(apply_word, "RL"), S)
        assert lr.order() == 12
        assert analysis.verify_plr_structure_on_S().passed


def test_08_rl_chain_golden():
    with criterion(8, "RL chain from C reproduces the 24-triad sequence; odd chain is +1 shift"):
        assert list(analysis.rl_chain(make_triad(0, MAJ)).sequence) == as_triads(RL_CHAIN_FROM_C)
        odd = analysis.rl_chain(make_triad(1, MAJ))
        assert list(odd.sequence) == as_triads(RL_CHAIN_FROM_C, shift=1)
        assert odd.period == 24


def test_09_two_d12():
    with criterion(9, "<L, R> on even-root and odd-root consonant triads: order 24, Dihedral(12)"):
        for parity in (0, 1):
            subset = [t for t in S if int(t.root) % 2 == parity]
            g = analysis.plr_group(subset)
            assert len(subset) == 24 and len(g) == 24
            cls = g.classify()
            assert (cls.kind, cls.n) == ("dihedral", 12)
        assert analysis.verify_two_d12().passed


def test_10_z24_on_neutral():
    with criterion(10, "<L> on N is Cyclic(24); R = L^23; L-chain roots 0, 7, 14, ..., 17"):
        g = analysis.plr_group(N, "L")
        cls = g.classify()
        assert len(g) == 24 and (cls.kind, cls.n) == ("cyclic", 24)
        for z in N:
            assert relative(z) == apply_word("L" * 23, z)
        roots = [int(t.root) for t in analysis.l_chain_neutral(make_triad(0, NEU)).sequence]
        assert roots == L_CHAIN_ROOTS
        assert analysis.verify_z24_on_neutral().passed


def test_11_parity_lemmas():
    with criterion(11, "P/L/R keep root parity on S; L/R flip it on N; P fixes N"):
        for t in S:
            for op in (parallel, leading_tone, relative):
                assert int(op(t).root) % 2 == int(t.root) % 2
        for z in N:
            assert parallel(z) == z
            assert int(leading_tone(z).root) % 2 != int(z.root) % 2
            assert int(relative(z).root) % 2 != int(z.root) % 2
        assert analysis.verify_parity_lemmas().passed


def test_12_notation_round_trip():
    with criterion(12, "clock labels round-trip losslessly; interval B -> Dt# = 9"):
        for pc in range(24):
            for s in names_of(pc):
                again = parse_spelling(format_spelling(s))
                assert again == s and again.pc == pc
        assert parse_spelling("B").pc == 22 and parse_spelling("Dt#").pc == 7
        assert interval_between(parse_spelling("B").pc, parse_spelling("Dt#").pc) == 9


def test_13_render_determinism_and_reflection():
    with criterion(13, "same scene gives identical SVG bytes; mirror law i -> (n - i) mod 24"):
        for scene in FIGURES.values():
            assert render_clock(scene).encode() == render_clock(scene).encode()
        for n in range(24):
            for t in S + N:
                svg = render_clock(ClockScene.of(t, apply_ti(I(n), t), axes=[n]))
                first, second = [set(map(int, m.split()))
                                 for m in re.findall(r'data-nodes="([^"]+)"', svg)]
                assert {reflect_node(i, n) for i in first} == second
                assert axis_endpoints(n) == (n / 2, n / 2 + 12)


def test_14_mutation_sanity(monkeypatch):
    with criterion(14, "mutated minor pattern or composition rule makes a verdict fail"):
        with monkeypatch.context() as m:
            from qtg import triad
            m.setitem(triad.VOICINGS, MIN, (14, 5, 0))
            assert not all(v.passed for v in analysis.run_all())
        with monkeypatch.context() as m:
            K = transform.Kind
            m.setitem(transform.COMPOSITION_RULES, (K.INVERSION, K.TRANSPOSITION), (K.INVERSION, +1))
            assert not all(v.passed for v in analysis.run_all())
        assert all(v.passed for v in analysis.run_all())
