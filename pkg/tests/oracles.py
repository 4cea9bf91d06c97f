"""Slow, independent reference computations used only by the tests."""

from itertools import combinations

import networkx as nx

from rankedtutte.bipoly import ONE, ZERO, X, Y


def brute_tutte(labels, rank_of):
    """Subset expansion with polynomial arithmetic; rank_of takes a frozenset of labels."""
    full = rank_of(frozenset(labels))
    total = ZERO
    for k in range(len(labels) + 1):
        for A in combinations(labels, k):
            r = rank_of(frozenset(A))
            total = total + (X - 1) ** (full - r) * (Y - 1) ** (k - r)
    return total


def graph_rank(edges):
    """Cycle-matroid rank via networkx spanning forests."""
    ends = {lab: (u, v) for u, v, lab in edges}

    def rank_of(A):
        g = nx.MultiGraph()
        for lab in A:
            g.add_edge(*ends[lab])
        return g.number_of_nodes() - nx.number_connected_components(g)

    return rank_of


def greedoid_rank(feasible):
    """max |F| over feasible F inside A; feasible is a list of frozensets."""
    fam = [frozenset(F) for F in feasible]

    def rank_of(A):
        return max(len(F) for F in fam if F <= A)

    return rank_of


def lp_hull_member(q, pts, tol=1e-9):
    """Float LP feasibility: q is a convex combination of pts."""
    import numpy as np
    from scipy.optimize import linprog

    P = np.array([[float(c) for c in p] for p in pts]).T
    m = P.shape[1]
    A = np.vstack([P, np.ones((1, m))])
    b = np.array([float(c) for c in q] + [1.0])
    res = linprog(np.zeros(m), A_eq=A, b_eq=b, bounds=[(0, None)] * m, method="highs")
    return res.status == 0


def lp_relative_interior(q, pts, tol=1e-7):
    """q is a strictly positive convex combination of all of pts (max-min weight LP)."""
    import numpy as np
    from scipy.optimize import linprog

    P = np.array([[float(c) for c in p] for p in pts]).T
    m = P.shape[1]
    # variables: lambda_1..lambda_m, t ; maximize t with lambda_i >= t
    A_eq = np.hstack([np.vstack([P, np.ones((1, m))]), np.zeros((P.shape[0] + 1, 1))])
    b_eq = np.array([float(c) for c in q] + [1.0])
    A_ub = np.hstack([-np.eye(m), np.ones((m, 1))])
    c = np.zeros(m + 1)
    c[-1] = -1.0
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(m), A_eq=A_eq, b_eq=b_eq,
                  bounds=[(0, None)] * m + [(None, 1)], method="highs")
    return res.status == 0 and -res.fun > tol


def closure_by_definition(convex, A, full):
    """Intersection of every convex superset of A."""
    out = full
    for C in convex:
        if C & A == A:
            out &= C
    return out
