"""Run the standard F_31 size sweep and write sweep.csv next to this script.

Equivalent to:  findist sweep --field 31 --seed 31 --out sweep.csv
with the default sizes 20,40,60,80,97.
"""

import pathlib
import sys

from findist.cli import main

if __name__ == "__main__":
    out = pathlib.Path(__file__).resolve().parent / "sweep.csv"
    rc = main(["sweep", "--seed", "31", "--out", str(out)])
    print(f"wrote {out} (exit {rc})", file=sys.stderr)
    raise SystemExit(rc)
