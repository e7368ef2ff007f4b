"""Print the consonant and neutral triad tables and the P/L/R images of each triad.

    python scripts/triad_tables.py
"""

from qtg.triad import (Quality, consonant_triads, format_chord, leading_tone, neutral_triads,
                       parallel, relative)


def voicing(t):
    return "<" + ", ".join(str(int(p)) for p in t.voicing) + ">"


def main():
    print(f"{'triad':<10} {'tones':<14} {'P':<10} {'L':<10} {'R':<10}")
    for t in consonant_triads() + neutral_triads():
        print(f"{format_chord(t):<10} {voicing(t):<14} {format_chord(parallel(t)):<10} "
              f"{format_chord(leading_tone(t)):<10} {format_chord(relative(t)):<10}")
    majors = sum(t.quality is Quality.MAJOR for t in consonant_triads())
    print(f"\n|S| = {len(consonant_triads())} ({majors} major), |N| = {len(neutral_triads())}")


if __name__ == "__main__":
    main()
