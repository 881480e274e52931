"""Rank-pairing comparison of exhaustive TM(2,2) and ECA outputs.

    python scripts/tm_vs_eca.py --k 4 --steps 100 --out runs/fig

Writes both result sets plus comparison.json and pairing.svg.
"""
import argparse
from pathlib import Path

from algoprob.cli import main as cli


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--steps", type=int, default=100)
    ap.add_argument("--out", type=Path, default=Path("runs/fig"))
    args = ap.parse_args()
    common = ["--steps", str(args.steps), "--k", str(args.k)]
    cli(["run", "--system", "tm", "--states", "2", *common, "--out", str(args.out / "tm22")])
    cli(["run", "--system", "ca", "--left", "1", "--right", "1", *common, "--out", str(args.out / "eca")])
    cli(["compare", str(args.out / "tm22"), str(args.out / "eca"), "--out", str(args.out / "compare")])


if __name__ == "__main__":
    main()
