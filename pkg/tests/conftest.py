import pytest

from qtg import transform, triad
from qtg.triad import Quality, Triad

# Root and quality of the RL chain from C major, copied from the printed
# sequence C, a, F, d, Bb, g, Eb, c, Ab, f, Db, bb, Gb, eb, B, g#, E, c#, A, f#, D, b, G, e.
RL_CHAIN_FROM_C = [
    (0, "maj"), (18, "min"), (10, "maj"), (4, "min"), (20, "maj"), (14, "min"),
    (6, "maj"), (0, "min"), (16, "maj"), (10, "min"), (2, "maj"), (20, "min"),
    (12, "maj"), (6, "min"), (22, "maj"), (16, "min"), (8, "maj"), (2, "min"),
    (18, "maj"), (12, "min"), (4, "maj"), (22, "min"), (14, "maj"), (8, "min"),
]

# Roots of the L chain on C neutral: C, Dt#, G, At#, D, Fq#, A, Cq#, E, Gq#, B, Dq#,
# F#, Aq#, C#, Eq#, G#, Bq#, D#, Ft#, A#, Ct#, F, Gt#.
L_CHAIN_ROOTS = [0, 7, 14, 21, 4, 11, 18, 1, 8, 15, 22, 5, 12, 19, 2, 9, 16, 23, 6, 13, 20, 3,
                 10, 17]


def as_triads(pairs, shift=0):
    return [Triad(r + shift, Quality(q)) for r, q in pairs]


@pytest.fixture
def mutate_minor(monkeypatch):
    """Minor triads become <x, x+5, x+14>."""
    monkeypatch.setitem(triad.VOICINGS, Quality.MINOR, (14, 5, 0))


@pytest.fixture
def mutate_composition(monkeypatch):
    """I_m ∘ T_n computed as I_{m+n} instead of I_{m-n}."""
    K = transform.Kind
    monkeypatch.setitem(transform.COMPOSITION_RULES, (K.INVERSION, K.TRANSPOSITION),
                        (K.INVERSION, +1))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
