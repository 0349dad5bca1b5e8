#!/usr/bin/env python3
"""Tabulate homeomorphism keys of the antidiagonal family over the quadric.

The joins K = [[k, l], [l, k]] with k > l over CP^1 x CP^1 are cone
indecomposable and pairwise non-homeomorphic: the pair
(p1, e) = (-2(k-l)^2, k^2 + l^2) separates them.  The table prints the
key, the spin type, and the mod-4 congruence p1 = 2e that controls
finiteness of diffeomorphism types.

A second table shows the constant-p1 phenomenon: fixing one column of
the class matrix at 2 pins p1 = -8(d0 + dinf + 2) for every d > 1
member of the family, however the free column varies.

Usage: python scripts/homeo_key_table.py [--max-entry N]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fiberjoin.model import BaseFactor, make_spec
from fiberjoin.topology import homeo_key, p1, p1_congruence_holds, spin_status


def antidiagonal_table(max_entry: int) -> None:
    base = [BaseFactor.projective_space(1), BaseFactor.projective_space(1)]
    print(f"K = [[k, l], [l, k]], k > l, entries <= {max_entry}")
    print(f"{'k':>3} {'l':>3} {'p1':>6} {'e':>5}  spin      p1=2e mod 4")
    keys = set()
    for k in range(2, max_entry + 1):
        for l in range(1, k):
            spec = make_spec(base, [[k, l], [l, k]], (0, 0))
            key = homeo_key(spec)
            keys.add(key)
            print(
                f"{k:>3} {l:>3} {key.p1:>6} {key.euler:>5}  "
                f"{spin_status(spec):<8}  {p1_congruence_holds(spec)}"
            )
    pairs = max_entry * (max_entry - 1) // 2
    print(f"{len(keys)} distinct keys from {pairs} pairs\n")
    assert len(keys) == pairs, "keys must separate the family"


def constant_p1_table(max_entry: int) -> None:
    base = [BaseFactor.projective_space(1), BaseFactor.projective_space(1)]
    print("K = [[k0, 2], [kinf, 2]] blocks, d > 1")
    for d0, dinf in [(0, 1), (1, 1), (2, 1), (1, 3)]:
        expected = -8 * (d0 + dinf + 2)
        values = set()
        for k0 in range(1, max_entry + 1):
            for kinf in range(1, max_entry + 1):
                rows = [[k0, 2]] * (d0 + 1) + [[kinf, 2]] * (dinf + 1)
                values.add(p1(make_spec(base, rows, (d0, dinf))))
        print(f"  split ({d0},{dinf}): p1 constant at {sorted(values)} "
              f"(expected {expected})")
        assert values == {expected}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-entry", type=int, default=6)
    args = parser.parse_args()
    if args.max_entry < 2:
        parser.error("need entries up to at least 2")
    antidiagonal_table(args.max_entry)
    constant_p1_table(args.max_entry)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
