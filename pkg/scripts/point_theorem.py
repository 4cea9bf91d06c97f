"""Point-set theorem: the alternating unique-interior sum equals (-1)^d |int(S)|.

Here int(S) is the relative interior of conv(S) and d its affine dimension.
Exact rational arithmetic throughout; degenerate configurations are common
because coordinates come from a small integer box.  A single point is its
own relative interior while b01 = 0, so the identity needs n >= 2; n = 1
is reported on its own line.
"""

import argparse
from collections import Counter

import numpy as np

from rankedtutte import tutte_expansion
from rankedtutte.antimatroid import b01_by_points, family_beta, point_set
from rankedtutte.generators import random_points


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=2)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    dims, bad = Counter(), []
    for i in range(args.count):
        n = int(rng.integers(2, args.max_n + 1))
        d = int(rng.integers(1, 4))
        P = random_points(n, d, rng)
        G, CF = point_set(P)
        fb = family_beta(P)
        lhs = b01_by_points(CF)
        dims[fb["dimension"]] += 1
        if not (lhs == fb["unique_interior_sum"] == tutte_expansion(G)[0, 1]):
            bad.append((i, n, d, lhs, fb))
    one = family_beta(random_points(1, 2, rng))
    G1, CF1 = point_set(random_points(1, 2, rng))
    print(f"n=1: b01 = {tutte_expansion(G1)[0, 1]}, (-1)^d |int| = {one['unique_interior_sum']} (outside the identity)")
    print(f"{args.count} configurations, affine dimensions {dict(sorted(dims.items()))}")
    print(f"failures: {len(bad)}")
    for b in bad[:5]:
        print("   ", b)


if __name__ == "__main__":
    main()
