"""``qtg`` command-line interface.

Exit codes: 0 success, 1 bad note/chord/operation, 2 usage error, 3 a
verification failed. Output is assembled in full before anything is written,
so a failing command leaves stdout empty.

Transformation words (``--seq``, ``--pattern``) are read left to right in
application order: ``RL`` applies R first, then L.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import TextIO

from . import analysis, triad
from .notation import MalformedSpelling, canonical_name, format_spelling, names_of, parse_spelling
from .pitch import MODULUS
from .render import ClockScene, InvalidAxis, render_clock
from .transform import parse_ti


class DomainError(Exception):
    """Bad user input that parses as arguments but not as music."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _use_color(stream: TextIO) -> bool:
    return os.environ.get("QTG_COLOR", "1") != "0" and stream.isatty()


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _chord(text: str) -> triad.Triad:
    try:
        return triad.parse_chord(text)
    except MalformedSpelling as exc:
        raise DomainError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_pc(args, color) -> tuple[str, int]:
    try:
        pc = parse_spelling(args.spelling).pc
    except MalformedSpelling as exc:
        raise DomainError(str(exc)) from None
    if args.json:
        return _dump({"spelling": args.spelling, "pc": int(pc)}), 0
    return f"{int(pc)}\n", 0


def cmd_name(args, color) -> tuple[str, int]:
    if not 0 <= args.number < MODULUS:
        raise DomainError(f"pitch class must be in 0..{MODULUS - 1}, got {args.number}")
    names = [format_spelling(s) for s in names_of(args.number)] if args.all else \
        [format_spelling(canonical_name(args.number))]
    if args.json:
        return _dump({"pc": args.number, "names": names}), 0
    return " ".join(names) + "\n", 0


def cmd_transform(args, color) -> tuple[str, int]:
    try:
        op = parse_ti(args.op)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    start = _chord(args.chord)
    result = triad.apply_ti(op, start)
    if args.json:
        return _dump({"op": str(op), "chord": str(start), "result": str(result)}), 0
    return f"{result}\n", 0


def cmd_plr(args, color) -> tuple[str, int]:
    start = _chord(args.chord)
    word = args.seq.upper()
    if set(word) - set(triad.OPERATIONS):
        raise DomainError(f"sequence must use only P, L, R, got {args.seq!r}")
    trace = [start]
    for symbol in word:
        trace.append(triad.OPERATIONS[symbol](trace[-1]))
    if args.json:
        out = {"chord": str(start), "seq": word, "result": str(trace[-1])}
        if args.trace:
            out["trace"] = [str(t) for t in trace]
        return _dump(out), 0
    if args.trace:
        lines = [str(start)] + [f"{s} -> {t}" for s, t in zip(word, trace[1:])]
        return "\n".join(lines) + "\n", 0
    return f"{trace[-1]}\n", 0


def cmd_chain(args, color) -> tuple[str, int]:
    start = _chord(args.start)
    if args.steps is not None and args.steps < 0:
        raise DomainError("--steps must be non-negative")
    try:
        report = analysis.chain(start, args.pattern, args.steps)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if args.json:
        return _dump(report.to_dict()), 0
    return (f"period {report.period}\n" + " ".join(str(t) for t in report.sequence) + "\n"), 0


def cmd_verify(args, color) -> tuple[str, int]:
    ids = None if args.all or not args.id else args.id
    try:
        verdicts = analysis.run_all(ids, workers=args.workers)
    except KeyError as exc:
        raise DomainError(exc.args[0]) from None
    code = 0 if all(v.passed for v in verdicts) else 3
    if args.json:
        return _dump([v.to_dict() for v in verdicts]), code
    lines = []
    for v in verdicts:
        status = _paint("PASS" if v.passed else "FAIL", v.passed, color)
        line = f"{status}  {v.id:<22} checked {v.checked_count}"
        if not v.passed:
            line += f"  counterexample: {json.dumps(v.counterexample)}"
        lines.append(line)
    return "\n".join(lines) + "\n", code


def cmd_clock(args, color) -> tuple[str, int]:
    chords = [_chord(c) for c in args.chords.split(",") if c.strip()] if args.chords else []
    try:
        scene = ClockScene.of(*chords, axes=args.axis or (), labels=args.labels)
        svg = render_clock(scene)
    except InvalidAxis as exc:
        raise DomainError(str(exc)) from None
    try:
        Path(args.out).write_text(svg, encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot write {args.out}: {exc.strerror}") from None
    if args.json:
        return _dump({"out": args.out, "chords": [str(c) for c in chords],
                      "axes": list(scene.axes), "bytes": len(svg.encode())}), 0
    return f"wrote {args.out}\n", 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qtg", description="Quarter-tone TI/PLR toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("pc", cmd_pc, "pitch-class number of a spelling")
    sp.add_argument("spelling")

    sp = add("name", cmd_name, "spelling(s) of a pitch-class number")
    sp.add_argument("number", type=int)
    sp.add_argument("--all", action="store_true", help="all clock names, not just the first")

    sp = add("transform", cmd_transform, "apply T<n> or I<n> to a chord")
    sp.add_argument("--op", required=True)
    sp.add_argument("--chord", required=True)

    sp = add("plr", cmd_plr, "apply a P/L/R word to a chord (left to right)")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--chord", required=True)
    sp.add_argument("--trace", action="store_true")

    sp = add("chain", cmd_chain, "iterate a P/L/R pattern until it returns")
    sp.add_argument("--start", required=True)
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--steps", type=int)

    sp = add("verify", cmd_verify, "run exhaustive theorem checks")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true")
    group.add_argument("--id", action="append", choices=list(analysis.VERIFIERS))
    sp.add_argument("--workers", type=int, default=1, help=argparse.SUPPRESS)

    sp = add("clock", cmd_clock, "render a musical-clock SVG")
    sp.add_argument("--chords", default="")
    sp.add_argument("--axis", type=int, action="append")
    sp.add_argument("--labels", choices=["numbers", "names", "both"], default="both")
    sp.add_argument("--out", required=True)
    return p


def run(argv: list[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        text, code = args.func(args, _use_color(stdout))
    except DomainError as exc:
        print(f"qtg: {exc}", file=stderr)
        return 1
    stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
