#!/usr/bin/env python3
"""Generate the aggregate verification report (JSON to stdout or a file).

Identical arguments always produce a byte-identical document.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from symcert.cli import report_bundle


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--out", default=None)
    args = parser.parse_args()

    document = report_bundle(args.n_max, args.seed, args.samples)
    text = json.dumps(document, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0 if document["checks"]["all_pass"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
