#!/usr/bin/env python3
"""Render the full demo set: every builtin/generated dataset in every mode.

Writes scatter + diamond pairs for the Anscombe quartet and the five
bivariate-normal panels into an output directory (default ./figures), plus a
scene bundle per dataset for the interactive viewer.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from diamondplot.cli import run
from diamondplot.figures import DEMO_NAMES


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--n", type=int, default=300)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name in DEMO_NAMES:
        for mode in ("diamond", "scatter", "scatter-swapped"):
            out = out_dir / f"{name}_{mode.replace('-', '_')}.svg"
            code = run([
                "demo", "--dataset", name, "--mode", mode,
                "--seed", str(args.seed), "--n", str(args.n), "--out", str(out),
            ])
            if code != 0:
                return code
        code = run([
            "bundle", "--dataset", name, "--seed", str(args.seed),
            "--n", str(args.n), "--out", str(out_dir / f"{name}_bundle.json"),
        ])
        if code != 0:
            return code
    print(f"rendered {len(DEMO_NAMES)} datasets into {out_dir}/", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
