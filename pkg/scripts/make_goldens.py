#!/usr/bin/env python3
"""Regenerate the golden SVGs under tests/golden/.

Run after any deliberate change to layout or formatting, then review the
diff before committing; the test suite asserts byte equality against these
files.
"""

from __future__ import annotations

import sys
from pathlib import Path

from diamondplot.cli import run

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"

CASES = [
    ["demo", "--dataset", "anscombe1", "--mode", "diamond", "--out", "anscombe1_diamond.svg"],
    ["demo", "--dataset", "anscombe1", "--mode", "scatter", "--out", "anscombe1_scatter.svg"],
    ["demo", "--dataset", "anscombe1", "--mode", "scatter-swapped",
     "--out", "anscombe1_scatter_swapped.svg"],
] + [
    ["demo", "--dataset", f"fig5{panel}", "--mode", "diamond", "--seed", "42",
     "--n", "300", "--out", f"fig5{panel}_diamond.svg"]
    for panel in "abcde"
]


def main() -> int:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for case in CASES:
        argv = list(case)
        argv[argv.index("--out") + 1] = str(GOLDEN / argv[argv.index("--out") + 1])
        code = run(argv)
        if code != 0:
            print(f"failed: {' '.join(case)}", file=sys.stderr)
            return code
    print(f"wrote {len(CASES)} golden files to {GOLDEN}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
