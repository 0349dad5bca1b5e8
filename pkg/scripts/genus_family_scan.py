#!/usr/bin/env python3
"""Scan the symmetric nearly-colinear family over genus-g squares.

For each genus g the family K = [[k+1, k], [k, k+1]] over
Sigma_g x Sigma_g solves the constant-scalar-curvature equations at

    s = 2(k^2 + (3-2g)k + (1-g)) / (6k^2 + 6k + 1),

which is positive exactly above an integer threshold in k.  Below the
threshold s goes negative and the certificate quadratic has to carry
the proof; this scan prints where each regime starts and what the
solver actually certifies.

Usage: python scripts/genus_family_scan.py [--max-genus G] [--extra K]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fiberjoin.admissible import admissible_data, genus_threshold, solve_csc
from fiberjoin.model import BaseFactor, make_spec


def scan_genus(genus: int, extra: int) -> None:
    threshold = genus_threshold(genus)
    print(f"genus {genus}: threshold k = {threshold}")
    base = [BaseFactor.surface(genus), BaseFactor.surface(genus)]
    for k in range(1, threshold + extra + 1):
        rows = [[k + 1, k], [k, k + 1]]
        spec = make_spec(base, rows, (0, 0))
        result = solve_csc(admissible_data(spec))
        marker = ">" if k > threshold else " "
        print(
            f"  {marker} k={k:3d}  s={str(result.s):>12}  "
            f"verdict={result.verdict}  Q={result.certificate}"
        )
    print()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-genus", type=int, default=8)
    parser.add_argument(
        "--extra",
        type=int,
        default=3,
        help="how far above the threshold to keep scanning",
    )
    args = parser.parse_args()
    if args.max_genus < 2:
        parser.error("the family needs genus at least 2")
    for genus in range(2, args.max_genus + 1):
        scan_genus(genus, args.extra)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
