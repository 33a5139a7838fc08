#!/usr/bin/env python3
"""Hunt for violations of the general linear-combination inequality.

Every candidate is rationalized and re-verified exactly before being
printed; a run with no hit is a valid (reproducible) outcome.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from symcert.search import find_counterexample_15


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=3, help="coefficient count")
    parser.add_argument("--n", type=int, default=4, help="point length")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=2000)
    args = parser.parse_args()

    witness = find_counterexample_15(args.m, args.n, args.seed, args.budget)
    if witness is None:
        print(json.dumps({"witness": None, "budget": args.budget, "seed": args.seed}))
        return 0
    print(json.dumps(witness.to_json_dict(), indent=2))
    return 1


if __name__ == "__main__":
    raise SystemExit(main())
