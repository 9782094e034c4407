#!/usr/bin/env python3
"""Reproduce the barrier-well squeezing scenario: transmission vs -b1.

Writes out/fig4.csv and out/fig4.json and prints the peak convergence table.
"""

import pathlib
import sys

from airystack.cli import main

HERE = pathlib.Path(__file__).resolve().parent.parent

if __name__ == "__main__":
    out = HERE / "out"
    out.mkdir(exist_ok=True)
    sys.exit(main(["sweep", str(HERE / "configs" / "fig4.json"), "--out", str(out / "fig4")]))
