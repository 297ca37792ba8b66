"""Run every property suite and print its summary.

    python scripts/run_suites.py [--trials 300] [--seed 0]
"""

import argparse

from compcalc.harness import DEFAULT, SMALL, SUITES, run_suite


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    for name in SUITES:
        cfg = (SMALL if name == "graph-oracle" else DEFAULT).replace(seed=args.seed)
        print(run_suite(name, args.trials, cfg).summary())


if __name__ == "__main__":
    main()
