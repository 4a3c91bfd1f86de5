"""Write SVG pictures of a few crossing words into a directory."""

import argparse
from pathlib import Path

from rigidroots.coxeter import format_word
from rigidroots.lattice_words import crossing_word
from rigidroots.svg import render_svg

DEFAULT = [(1, 1), (2, 1), (4, 1), (3, 2), (5, 3), (13, 5)]

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for a, b in DEFAULT:
        path = args.outdir / f"segment_{a}_{b}.svg"
        path.write_text(render_svg((a, b)))
        print(f"{path}  {format_word(crossing_word((a, b)))}")
