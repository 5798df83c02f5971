#!/usr/bin/env python3
"""Query-complexity scaling sweep.

Runs the sublinear tester and the classical baseline over a geometric ladder
of input sizes on certified far instances and random members, then prints the
charged-query means normalized by the two predicted growth laws. The CSV/JSON
output is plot-ready.
"""

import argparse
import math

from twopal.experiment import ExperimentConfig, emit_report, run_experiment

SIZES = (2**9, 2**12, 2**15, 2**18, 2**21)


def normalizer(mode: str, n: int, epsilon: float) -> float:
    if mode == "quantum":
        return (1.0 / epsilon) * n ** (1 / 3) * math.log2(n)
    return (1.0 / epsilon) * math.sqrt(n) * math.log2(n)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="scaling.csv")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--epsilon", type=float, default=0.1)
    parser.add_argument("--trials", type=int, default=6)
    parser.add_argument("--seed", type=int, default=1706)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    config = ExperimentConfig(
        sizes=SIZES,
        epsilons=(args.epsilon,),
        trials=args.trials,
        seed=args.seed,
        modes=("quantum", "classical"),
        member_fraction=0.5,
        workers=args.workers,
    )
    report = run_experiment(config)
    emit_report(report, args.out, args.format)

    print(f"{'n':>9} {'mode':>9} {'class':>7} {'mean queries':>13} {'normalized':>11}")
    for cell in report.cells:
        if cell.skipped is not None:
            print(f"{cell.n:>9} {cell.mode:>9} {cell.instance_class:>7}  skipped: {cell.skipped}")
            continue
        ratio = cell.mean_queries / normalizer(cell.mode, cell.n, cell.epsilon)
        print(
            f"{cell.n:>9} {cell.mode:>9} {cell.instance_class:>7} "
            f"{cell.mean_queries:>13.0f} {ratio:>11.3f}"
        )
    print(f"\nwrote {args.out}")


if __name__ == "__main__":
    main()
