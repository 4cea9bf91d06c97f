"""Count labeled matroids and isomorphism classes on n elements, with timing."""

import argparse
import time

from rankedtutte.realizability import enumerate_matroids, isomorphic


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    for n in range(args.max_n + 1):
        t0 = time.perf_counter()
        ms = list(enumerate_matroids(n))
        orbits = []
        for M in ms:
            if not any(R.rS == M.rS and isomorphic(M, R) for R in orbits):
                orbits.append(M)
        print(f"n={n}: {len(ms)} labeled, {len(orbits)} up to isomorphism  [{time.perf_counter() - t0:.2f}s]")


if __name__ == "__main__":
    main()
