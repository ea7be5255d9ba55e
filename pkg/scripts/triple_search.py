#!/usr/bin/env python3
"""Sweep small groups for nontrivial Gassmann pairs at every divisor index.

Prints one line per (group, index) with a finding and a closing inventory.
The interesting outputs: the two catalog pairs (gl3_2 at index 7, psl2_11 at
index 11) and the classical pair of Klein four-groups inside sym:6 at index
180, the smallest symmetric group carrying any nontrivial pair.

Run from the repository root:  python3 scripts/triple_search.py [group ...]
"""

import sys
import time

sys.path.insert(0, "src")

from almostconj.catalog import builtin_group
from almostconj.gassmann import enumerate_gassmann_triples
from almostconj.groups import CapExceededError
from almostconj.perms import format_cycles

DEFAULT_SWEEP = (
    "sym:3",
    "sym:4",
    "sym:5",
    "sym:6",
    "alt:4",
    "alt:5",
    "dihedral:6",
    "frobenius20",
    "gl3_2",
    "psl2_11",
)


def sweep(name: str) -> int:
    g = builtin_group(name)
    start = time.perf_counter()
    total = 0
    for index in (d for d in range(2, g.order + 1) if g.order % d == 0):
        try:
            found = enumerate_gassmann_triples(g, index)
        except CapExceededError as exc:
            print(f"  {name} index {index}: skipped ({exc})")
            continue
        for rep in found:
            total += 1
            gens1 = " ".join(format_cycles(p) for p in rep.h1.generating_set())
            gens2 = " ".join(format_cycles(p) for p in rep.h2.generating_set())
            print(
                f"  {name} index {index}: order-{rep.h1.order} pair"
                f"  h1 = <{gens1}>  h2 = <{gens2}>"
            )
    elapsed = time.perf_counter() - start
    print(f"{name}: {total} nontrivial pair(s) across all indexes ({elapsed:.1f}s)")
    return total


def main() -> None:
    names = sys.argv[1:] or list(DEFAULT_SWEEP)
    grand = sum(sweep(name) for name in names)
    print(f"total: {grand} nontrivial pair(s) in {len(names)} group(s)")


if __name__ == "__main__":
    main()
