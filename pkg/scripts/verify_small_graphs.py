#!/usr/bin/env python3
"""Exhaustive audit of every labeled 3-connected graph on 6 vertices.

For each such graph the exact minimum color count must stay within
floor((3n + 3) / 5) = 4 and must never exceed what the constructive
colorer spends. Use --sample N for a random subset when iterating.
"""

import argparse
import random
import time
from collections import Counter

from rcbound.connectivity import vertex_connectivity
from rcbound.construct import color_bound, run_constructive
from rcbound.graphs import is_connected, iter_labeled_graphs, min_degree
from rcbound.rainbow import rc_exact


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6, help="vertex count (default 6)")
    parser.add_argument("--sample", type=int, default=0,
                        help="audit only this many randomly chosen graphs")
    parser.add_argument("--seed", type=int, default=20260811,
                        help="sampling seed (only with --sample)")
    args = parser.parse_args()

    t0 = time.perf_counter()
    survivors = []
    for g in iter_labeled_graphs(args.n):
        if min_degree(g) < 3 or not is_connected(g):
            continue
        if vertex_connectivity(g) >= 3:
            survivors.append(g)
    print(f"{len(survivors)} labeled 3-connected graphs on {args.n} vertices "
          f"(filter took {time.perf_counter() - t0:.1f}s)")
    if args.sample:
        survivors = random.Random(args.seed).sample(survivors, args.sample)
        print(f"auditing a random subset of {len(survivors)}")

    bound = color_bound(args.n)
    hist = Counter()
    violations = 0
    t0 = time.perf_counter()
    for g in survivors:
        k_exact, _ = rc_exact(g)
        res = run_constructive(g)
        hist[(k_exact, res.colors_used)] += 1
        if k_exact > bound or k_exact > res.colors_used:
            violations += 1
            print(f"VIOLATION: edges={g.edges} exact={k_exact} "
                  f"constructive={res.colors_used} bound={bound}")
    print(f"audit took {time.perf_counter() - t0:.1f}s")
    print("(exact, constructive) histogram:")
    for key in sorted(hist):
        print(f"  {key}: {hist[key]}")
    if violations:
        print(f"{violations} violations")
        return 1
    print(f"all graphs satisfy exact <= min(constructive, {bound})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
