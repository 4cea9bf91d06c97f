"""Which Brylawski clauses fail on small matroids, split by loops/isthmuses/simplicity."""

import argparse
from collections import Counter, defaultdict

from rankedtutte.identities import brylawski_check, is_simple
from rankedtutte.realizability import enumerate_matroids


def cls(M, rep):
    if M.isthmuses():
        return "has isthmus"
    if rep["loops"]:
        return "loops, no isthmus"
    return "simple" if is_simple(M) else "parallel class"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    fails = defaultdict(Counter)
    totals = Counter()
    for n in range(args.max_n + 1):
        for M in enumerate_matroids(n):
            rep = brylawski_check(M)
            c = cls(M, rep)
            totals[c] += 1
            for k in "123456":
                fails[c][k] += not rep[k]["pass"]
    print(f"{'class':<20}{'count':>7}" + "".join(f"{'cl' + k:>6}" for k in "123456"))
    for c in sorted(totals):
        print(f"{c:<20}{totals[c]:>7}" + "".join(f"{fails[c][k]:>6}" for k in "123456"))


if __name__ == "__main__":
    main()
