"""Random reciprocal PCMs and IPCMs for property testing.

Everything is drawn uniformly in additive coordinates and mapped onto the
requested scale, so the same seed produces structurally identical matrices
on every scale.
"""

from __future__ import annotations

import numpy as np

from .alo_group import AloGroup
from .interval import GInterval
from .ipcm import Ipcm, ipcm_permute
from .pcm import Pcm

KINDS = ("random", "full", "liu", "approx", "point", "point_consistent")


def _to_group(group: AloGroup, x: float):
    return group.element(group.from_additive(float(x)))


def random_pcm(group: AloGroup, n: int, rng: np.random.Generator, spread: float = 2.0) -> Pcm:
    """Reciprocal PCM with upper-triangle coordinates uniform on ``[-spread, spread]``."""
    coords = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    coords[iu] = rng.uniform(-spread, spread, size=len(iu[0]))
    coords -= coords.T
    return Pcm(group, [[_to_group(group, c) for c in row] for row in coords])


def consistent_pcm(group: AloGroup, n: int, rng: np.random.Generator, spread: float = 2.0) -> Pcm:
    """``a_ij = w_i ÷ w_j`` for random weights ``w``; consistent by construction."""
    w = rng.uniform(-spread / 2, spread / 2, size=n)
    return Pcm(group, [[_to_group(group, w[i] - w[j]) for j in range(n)] for i in range(n)])


def _from_bounds(group: AloGroup, lo: np.ndarray, hi: np.ndarray) -> Ipcm:
    # lo/hi hold upper-triangle coordinates; the lower triangle is filled by
    # interval reciprocity, [-hi, -lo] in additive coordinates.
    n = lo.shape[0]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                a, b = 0.0, 0.0
            elif i < j:
                a, b = lo[i, j], hi[i, j]
            else:
                a, b = -hi[j, i], -lo[j, i]
            row.append(GInterval(_to_group(group, a), _to_group(group, b)))
        rows.append(row)
    return Ipcm(group, rows)


def random_ipcm(
    group: AloGroup,
    n: int,
    rng: np.random.Generator,
    kind: str = "random",
    spread: float = 2.0,
    max_halfwidth: float = 1.0,
) -> Ipcm:
    """Reciprocal IPCM of the requested structure.

    ``random``           independent centres and half-widths
    ``full``             centres ``w_i - w_j`` (fully consistent), random widths
    ``liu``              lower and upper bound matrices both consistent
    ``approx``           a ``liu`` matrix with its alternatives shuffled
    ``point``            random point intervals
    ``point_consistent`` point intervals of a consistent PCM
    """
    iu = np.triu_indices(n, 1)
    lo = np.zeros((n, n))
    hi = np.zeros((n, n))
    if kind in ("random", "point"):
        centre = rng.uniform(-spread, spread, size=len(iu[0]))
        half = rng.uniform(0, max_halfwidth, size=len(iu[0])) if kind == "random" else 0.0
        lo[iu], hi[iu] = centre - half, centre + half
    elif kind in ("full", "point_consistent"):
        w = rng.uniform(-spread / 2, spread / 2, size=n)
        centre = (w[:, None] - w[None, :])[iu]
        half = rng.uniform(0, max_halfwidth, size=len(iu[0])) if kind == "full" else 0.0
        lo[iu], hi[iu] = centre - half, centre + half
    elif kind in ("liu", "approx"):
        # l_ij = u_i - u_j, r_ij = v_i - v_j; r_ij >= l_ij for i < j needs
        # the widths v_i - u_i to be non-increasing in i.
        u = rng.uniform(-spread / 2, spread / 2, size=n)
        widths = np.sort(rng.uniform(0, max_halfwidth, size=n))[::-1]
        v = u + widths
        lo[iu] = (u[:, None] - u[None, :])[iu]
        hi[iu] = (v[:, None] - v[None, :])[iu]
    else:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    A = _from_bounds(group, lo, hi)
    if kind == "approx":
        A = ipcm_permute(A, rng.permutation(n).tolist())
    return A
