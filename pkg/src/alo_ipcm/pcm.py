"""Pairwise comparison matrices with entries in an Alo-group.

Permutations are sequences of 0-based indices: ``sigma[i]`` is the original
row/column that lands at position ``i``.  The permutation written ``{1, 3, 2}``
in 1-based notation is ``(0, 2, 1)`` here.
"""

from __future__ import annotations

import operator
from itertools import combinations
from typing import Iterator, Sequence

from .alo_group import DEFAULT_TOL, AloGroup, GroupElement, IsoMap, Value
from .errors import InvalidArgument, InvalidMatrix, NotReciprocal, OrderTooSmall, ScaleMismatch

Permutation = tuple[int, ...]


def validate_permutation(sigma: Sequence[int], n: int) -> Permutation:
    """Return ``sigma`` as a tuple after checking it is a bijection on ``range(n)``."""
    try:
        perm = tuple(operator.index(s) for s in sigma)
    except TypeError:
        raise InvalidArgument(f"{list(sigma)} has non-integer entries") from None
    if sorted(perm) != list(range(n)):
        raise InvalidArgument(f"{list(sigma)} is not a permutation of 0..{n - 1}")
    return perm


def triads(n: int) -> Iterator[tuple[int, int, int]]:
    """All index triples ``i < j < k``; there are n(n-1)(n-2)/6 of them."""
    return combinations(range(n), 3)


class Pcm:
    """Square matrix of group elements with the identity on the diagonal.

    Diagonal entries within ``tol`` of the identity are snapped to it; any
    other diagonal value is rejected.  Reciprocity is *not* enforced at
    construction, it is checked by :func:`pcm_is_reciprocal`.
    """

    __slots__ = ("group", "_rows")

    def __init__(self, group: AloGroup, rows: Sequence[Sequence[Value]], *, tol: float = DEFAULT_TOL):
        n = len(rows)
        if n < 2:
            raise InvalidMatrix(f"a PCM needs order >= 2, got {n}")
        e = group.identity
        out = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidMatrix(f"row {i} has {len(row)} entries, expected {n}")
            cells = [group.element(x) for x in row]
            if not group.equal(cells[i], e, tol):
                raise InvalidMatrix(f"diagonal entry ({i}, {i}) = {float(cells[i])!r} is not the identity {float(e)!r}")
            cells[i] = e
            out.append(tuple(cells))
        self.group = group
        self._rows: tuple[tuple[GroupElement, ...], ...] = tuple(out)

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[GroupElement, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> GroupElement:
        i, j = ij
        return self._rows[i][j]

    def to_lists(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"Pcm({self.group.name!r}, {self.to_lists()!r})"


def pcm_is_reciprocal(A: Pcm, tol: float = DEFAULT_TOL) -> bool:
    g = A.group
    return all(g.equal(A[j, i], g.inv(A[i, j]), tol) for i in range(A.n) for j in range(i + 1, A.n))


def _require_reciprocal(A: Pcm, tol: float) -> None:
    if not pcm_is_reciprocal(A, tol):
        raise NotReciprocal("the PCM is not reciprocal")


def pcm_is_consistent(A: Pcm, tol: float = DEFAULT_TOL) -> bool:
    """``a_ik == a_ij * a_jk`` for every triad ``i < j < k``.

    The triad reduction is only valid for reciprocal matrices, so
    reciprocity is checked first.
    """
    _require_reciprocal(A, tol)
    g = A.group
    return all(g.equal(A[i, k], g.op(A[i, j], A[j, k]), tol) for i, j, k in triads(A.n))


def pcm_triad_distances(A: Pcm) -> list[GroupElement]:
    g = A.group
    return [g.distance(A[i, k], g.op(A[i, j], A[j, k])) for i, j, k in triads(A.n)]


def pcm_consistency_index(A: Pcm, tol: float = DEFAULT_TOL) -> GroupElement:
    """Group mean of the distances of every triad from consistency.

    Equals the identity exactly when ``A`` is consistent and never drops
    below it.
    """
    if A.n < 3:
        raise OrderTooSmall(f"the consistency index needs order >= 3, got {A.n}")
    _require_reciprocal(A, tol)
    return A.group.mean(pcm_triad_distances(A))


def pcm_permute(A: Pcm, sigma: Sequence[int]) -> Pcm:
    """Relabel alternatives: entry ``(i, j)`` of the result is ``a[sigma[i], sigma[j]]``."""
    s = validate_permutation(sigma, A.n)
    return Pcm(A.group, [[A[s[i], s[j]] for j in range(A.n)] for i in range(A.n)])


def pcm_transport(A: Pcm, iso: IsoMap) -> Pcm:
    """Map every entry through ``iso`` onto its target scale."""
    if A.group.name != iso.source.name:
        raise ScaleMismatch(f"map {iso.name} starts at {iso.source.name!r}, matrix is on {A.group.name!r}")
    return Pcm(iso.target, [[iso(x) for x in row] for row in A.rows])
