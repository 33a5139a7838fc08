#!/usr/bin/env python3
"""Exhaustive exact scan of the positivity lemmas and certified constants
over 4 <= n <= n_max, 1 <= k <= n-2, one line per failing pair (none
expected) and a summary.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from symcert.certificate import cert_constants, f_scan, lemma31_check, lemma32_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=64)
    args = parser.parse_args()

    pairs = 0
    failures = 0
    for n in range(4, args.n_max + 1):
        f_ok = all(row.all_positive for row in f_scan(n))
        for k in range(1, n - 1):
            pairs += 1
            constants = cert_constants(n, k)
            ok = (
                lemma31_check(n, k).all_positive
                and lemma32_check(n, k).all_positive
                and 0 < constants.theta1 < 1
                and constants.theta2 > 0
                and f_ok
            )
            if not ok:
                failures += 1
                print(f"FAIL (n={n}, k={k}): theta1={constants.theta1}")
    print(f"scanned {pairs} pairs up to n={args.n_max}: {pairs - failures} pass, {failures} fail")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
