"""Where the free (co)extension rank formulas break on random ranked sets.

Tabulates, by n and r(S), how often r((G+p)/p) = r(G) - 1 and
r((G x p) - p) = r(G) + 1 fail.
"""

import argparse
from collections import Counter

from rankedtutte import random_ranked_set
from rankedtutte.constructions import contract, delete, free_coextension, free_extension


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-n", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    seen, bad_c, bad_d = Counter(), Counter(), Counter()
    for n in range(1, args.max_n + 1):
        for s in range(args.per_n):
            G = random_ranked_set(n, args.seed + 10_000 * n + s)
            key = (n, G.rS)
            seen[key] += 1
            if contract(free_extension(G, "p"), "p").rS != G.rS - 1:
                bad_c[key] += 1
            if delete(free_coextension(G, "p"), "p").rS != G.rS + 1:
                bad_d[key] += 1

    print(f"{'n':>3} {'r(S)':>5} {'count':>6} {'(c) fails':>10} {'(d) fails':>10}")
    for key in sorted(seen):
        print(f"{key[0]:>3} {key[1]:>5} {seen[key]:>6} {bad_c[key]:>10} {bad_d[key]:>10}")
    off_c = [k for k in bad_c if k[1] != 0]
    off_d = [k for k in bad_d if k[1] != k[0]]
    print(f"(c) failures outside r(S)=0: {off_c or 'none'}")
    print(f"(d) failures outside r(S)=n: {off_d or 'none'}")


if __name__ == "__main__":
    main()
