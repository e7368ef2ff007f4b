"""Render the stock musical-clock figures to SVG files.

    python scripts/make_figures.py [outdir]
"""

import sys
from pathlib import Path

from qtg.render import FIGURES, render_clock


def main(outdir="figures"):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, scene in FIGURES.items():
        path = out / f"{name}.svg"
        path.write_text(render_clock(scene), encoding="utf-8")
        chords = ", ".join(str(t) for t, _ in scene.chords) or "-"
        print(f"{path}  chords: {chords}  axes: {list(scene.axes) or '-'}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
