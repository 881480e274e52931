"""Sweep step budgets, inputs and sample sizes; print pairwise Spearman rho.

    python scripts/stability_grid.py --k 4 --out runs/grid

Covers exhaustive TM(2,2) and seeded TM(3,2) samples at 30/100/500 steps with
regular and random inputs. Pass --full for the 20000 and 100000 samples.
"""
import argparse
import itertools
from pathlib import Path

from algoprob.comparison import spearman
from algoprob.experiment import ExperimentConfig, run_experiment
from algoprob.symmetry import group_distribution


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--seed", type=int, default=20070405)
    ap.add_argument("--threads", type=int)
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--out", type=Path, default=Path("runs/grid"))
    args = ap.parse_args()

    sizes = [5000, 10000, 20000, 100000] if args.full else [5000, 10000]
    configs = []
    for steps, inp in itertools.product([30, 100, 500], ["regular", "random"]):
        configs.append(ExperimentConfig(states=2, steps=steps, k=args.k, input_mode=inp))
        for n in sizes:
            configs.append(ExperimentConfig(states=3, steps=steps, k=args.k, input_mode=inp,
                                            sample=n, seed=args.seed))

    dists = {}
    for cfg in configs:
        cfg.threads = args.threads
        cfg.out = str(args.out / cfg.label().replace(" ", "_").replace("=", "-"))
        res = run_experiment(cfg)
        dists[cfg.label()] = res.distribution
        top = group_distribution(res.distribution).ranked()[:3]
        print(f"{cfg.label():55s} top classes {[e.word for e in top]}")

    labels = list(dists)
    worst = min(
        ((spearman(dists[a], dists[b]), a, b) for a, b in itertools.combinations(labels, 2)),
        key=lambda t: t[0],
    )
    print(f"\nlowest pairwise rho {worst[0]:.4f}: {worst[1]} vs {worst[2]}")


if __name__ == "__main__":
    main()
