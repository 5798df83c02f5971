#!/usr/bin/env python3
"""Acceptance/rejection rates of both testers at desk scale.

Members should be accepted at a rate limited only by the simulated search's
error (at most 0.1, in practice far smaller); certified far words should be
rejected essentially always. Prints Wilson 95% intervals per cell.
"""

import argparse

from twopal.experiment import ExperimentConfig, emit_report, run_experiment


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="error_rates.json")
    parser.add_argument("--format", choices=("csv", "json"), default="json")
    parser.add_argument("--n", type=int, default=1024)
    parser.add_argument("--trials", type=int, default=400)
    parser.add_argument("--seed", type=int, default=41)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    config = ExperimentConfig(
        sizes=(args.n,),
        epsilons=(0.05, 0.1, 0.2),
        trials=args.trials,
        seed=args.seed,
        modes=("quantum", "classical"),
        member_fraction=0.5,
        workers=args.workers,
    )
    report = run_experiment(config)
    emit_report(report, args.out, args.format)

    print(f"{'eps':>5} {'mode':>9} {'class':>7} {'accept':>7} {'wilson 95%':>17}")
    for cell in report.cells:
        if cell.skipped is not None:
            print(f"{cell.epsilon:>5} {cell.mode:>9} {cell.instance_class:>7}  skipped: {cell.skipped}")
            continue
        low, high = cell.wilson
        print(
            f"{cell.epsilon:>5} {cell.mode:>9} {cell.instance_class:>7} "
            f"{cell.accept_rate:>7.3f} [{low:.3f}, {high:.3f}]"
        )
    print(f"\nwrote {args.out}")


if __name__ == "__main__":
    main()
