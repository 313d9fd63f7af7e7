#!/usr/bin/env python3
"""Scaling experiment: pipeline cost and feature counts by input size.

Examples:
    python scripts/run_scaling.py --sizes 4,8,16,32,64 --family worstcase
    python scripts/run_scaling.py --sizes 100,200,400 --family random --seed 7
"""

from __future__ import annotations

import argparse

from confluent_hasse import scaling_report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,16,32,64,128,256,512")
    parser.add_argument(
        "--family",
        choices=("worstcase", "random", "both"),
        default="both",
        help="worst-case indices are family indices (4n+2 elements)",
    )
    parser.add_argument("--trials", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    families = ("worstcase", "random") if args.family == "both" else (args.family,)
    print(scaling_report(sizes, trials=args.trials, families=families, seed=args.seed), end="")


if __name__ == "__main__":
    main()
