"""Sweep random trees, posets, chordal graphs and point sets through the family identities.

Prints one row per family with instance counts and any failing instance.
"""

import argparse
import time

import numpy as np

from rankedtutte import tutte_expansion
from rankedtutte.antimatroid import (
    a_table,
    b01_by_points,
    chordal_simplicial,
    f_sum,
    family_beta,
    family_identities,
    point_set,
    poset_double_shelling,
    tree_pruning,
    tutte_via_convex,
)
from rankedtutte.generators import random_chordal, random_points, random_poset, random_tree_edges

BUILD = {
    "tree": (lambda rng: random_tree_edges(int(rng.integers(3, 10)), rng), tree_pruning),
    "poset": (lambda rng: random_poset(int(rng.integers(3, 8)), rng), poset_double_shelling),
    "chordal": (lambda rng: random_chordal(int(rng.integers(3, 9)), rng), chordal_simplicial),
    "points": (lambda rng: random_points(int(rng.integers(3, 9)), int(rng.integers(1, 4)), rng), point_set),
}


def check(src, G, CF):
    at = a_table(CF)
    t = tutte_expansion(G)
    fi = family_identities(at, CF.n)
    fb = family_beta(src)
    return {
        "convex": tutte_via_convex(CF) == t,
        "identities": fi["pass"],
        "f_sum": f_sum(at) == fb["f_sum"],
        "unique_interior": b01_by_points(CF) == fb["unique_interior_sum"],
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100, help="instances per family")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    for fam, (gen, build) in BUILD.items():
        t0 = time.perf_counter()
        bad = []
        for i in range(args.count):
            src = gen(rng)
            G, CF = build(src)
            res = check(src, G, CF)
            if not all(res.values()):
                bad.append((i, CF.n, [k for k, v in res.items() if not v]))
        print(f"{fam:<8} {args.count} instances, {len(bad)} failing  [{time.perf_counter() - t0:.2f}s]")
        for b in bad[:5]:
            print("   ", b)


if __name__ == "__main__":
    main()
