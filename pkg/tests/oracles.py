"""Independent reference computations.

Nothing here imports the package.  Matrices are plain nested lists of
``(lo, hi)`` float pairs; scale-specific formulas are written out longhand.
"""

from __future__ import annotations

import itertools
import math


def fuzzy_op(a, b):
    return a * b / (a * b + (1 - a) * (1 - b))


def bisect_root(op, identity, a, n, lo, hi, iters=200):
    """Solve ``x op x op ... op x (n times) == a`` by bisection on ``]lo, hi[``.

    Relies only on ``op`` being increasing; ``hi`` may be infinite only if the
    caller passes a finite bracket instead.
    """

    def power(x):
        acc = identity
        for _ in range(n):
            acc = op(acc, x)
        return acc

    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if power(mid) < a:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def triples(n):
    return itertools.combinations(range(n), 3)


# -- closed-form consistency index per scale --------------------------------


def _mult_triad_distance(A, i, j, k):
    fwd = A[i][j][0] * A[j][k][0] * A[k][i][0]
    bwd = A[i][k][0] * A[k][j][0] * A[j][i][0]
    return max(fwd / bwd, bwd / fwd)


def consistency_index_multiplicative(A):
    n = len(A)
    prod = math.prod(_mult_triad_distance(A, i, j, k) for i, j, k in triples(n))
    return prod ** (6 / (n * (n - 1) * (n - 2)))


def consistency_index_additive(A):
    n = len(A)
    total = 0.0
    for i, j, k in triples(n):
        fwd = A[i][j][0] + A[j][k][0] + A[k][i][0]
        bwd = A[i][k][0] + A[k][j][0] + A[j][i][0]
        total += abs(fwd - bwd)
    return 6 / (n * (n - 1) * (n - 2)) * total


def _fuzzy_dist(a, b):
    return max(a * (1 - b) / (a * (1 - b) + (1 - a) * b), b * (1 - a) / (b * (1 - a) + (1 - b) * a))


def consistency_index_fuzzy(A):
    """Closed form on ]0, 1[: ratio of the products of d and of 1 - d."""
    n = len(A)
    ds = []
    for i, j, k in triples(n):
        fwd = fuzzy_op(fuzzy_op(A[i][j][0], A[j][k][0]), A[k][i][0])
        bwd = fuzzy_op(fuzzy_op(A[i][k][0], A[k][j][0]), A[j][i][0])
        ds.append(_fuzzy_dist(fwd, bwd))
    e = 6 / (n * (n - 1) * (n - 2))
    p = math.prod(ds) ** e
    q = math.prod(1 - d for d in ds) ** e
    return p / (p + q)


# -- closed-form indeterminacy index per scale ------------------------------


def indeterminacy_index_multiplicative(A):
    n = len(A)
    prod = math.prod(A[i][j][1] / A[i][j][0] for i in range(n) for j in range(i + 1, n))
    return prod ** (2 / (n * (n - 1)))


def indeterminacy_index_additive(A):
    n = len(A)
    return 2 / (n * (n - 1)) * sum(A[i][j][1] - A[i][j][0] for i in range(n) for j in range(i + 1, n))


def indeterminacy_index_fuzzy(A):
    n = len(A)
    vals = []
    for i in range(n):
        for j in range(i + 1, n):
            lo, hi = A[i][j]
            vals.append(hi * (1 - lo) / (hi * (1 - lo) + (1 - hi) * lo))
    e = 2 / (n * (n - 1))
    p = math.prod(vals) ** e
    q = math.prod(1 - v for v in vals) ** e
    return p / (p + q)


# -- brute-force structure checks in additive coordinates -------------------


def liu_consistent_additive(C, sigma, tol=1e-9):
    """Liu consistency of the relabelled matrix; ``C[i][j] = (lo, hi)`` in additive coordinates."""
    n = len(C)
    for i, j, k in triples(n):
        a, b, c = sigma[i], sigma[j], sigma[k]
        for end in (0, 1):
            if abs(C[a][c][end] - (C[a][b][end] + C[b][c][end])) > tol:
                return False
    return True


def approx_witness_additive(C, tol=1e-9):
    """Lexicographically first relabelling that is Liu consistent, or None."""
    for sigma in itertools.permutations(range(len(C))):
        if liu_consistent_additive(C, sigma, tol):
            return sigma
    return None


def full_consistent_additive(C, tol=1e-9):
    n = len(C)
    for i, j, k in itertools.product(range(n), repeat=3):
        for end in (0, 1):
            left = C[i][j][end] + C[j][k][end] + C[k][i][end]
            right = C[i][k][end] + C[k][j][end] + C[j][i][end]
            if abs(left - right) > tol:
                return False
    return True


def image_grid(op, a, b, to_add, from_add, points=21):
    """All ``x op y`` for ``x, y`` on grids uniform in additive coordinates.

    Grid endpoints are the interval endpoints themselves.
    """
    def grid(lo, hi):
        t0, t1 = to_add(lo), to_add(hi)
        inner = [from_add(t0 + (t1 - t0) * s / (points - 1)) for s in range(1, points - 1)]
        return [lo, *inner, hi]

    return [op(x, y) for x in grid(*a) for y in grid(*b)]


def _logit(x):
    return math.log(x / (1 - x))


def _logistic(t):
    return 1 / (1 + math.exp(-t))


# scale name -> (operation, to additive coordinates, from additive coordinates)
RAW = {
    "multiplicative": (lambda a, b: a * b, math.log, math.exp),
    "additive": (lambda a, b: a + b, lambda x: x, lambda t: t),
    "fuzzy": (fuzzy_op, _logit, _logistic),
}
