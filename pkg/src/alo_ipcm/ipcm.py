"""Interval pairwise comparison matrices (IPCMs) over an Alo-group.

Three consistency conditions are provided, from strongest to weakest:

* Liu consistency -- the lower-bound matrix ``L`` and the upper-bound matrix
  ``R`` are both consistent.  Depends on how the alternatives are labelled.
* approximate consistency -- *some* relabelling is Liu consistent.
* full consistency -- ``a_ij a_jk a_ki == a_ik a_kj a_ji`` as intervals for
  every triple; invariant under relabelling and the only one that does not
  presuppose reciprocity.

Violation of full consistency is measured by :func:`ipcm_consistency_index`;
the width of the judgements by :func:`ipcm_indeterminacy_index`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, NamedTuple, Sequence, Union

from .alo_group import DEFAULT_TOL, AloGroup, GroupElement, IsoMap, Value
from .errors import (
    InvalidArgument,
    InvalidMatrix,
    NotReciprocal,
    OrderTooLargeForSearch,
    OrderTooSmall,
    ScaleMismatch,
)
from .interval import (
    GInterval,
    idistance,
    identity_interval,
    imul,
    imul_all,
    interval_equal,
    is_point,
    make_interval,
    point,
    recip_interval,
)
from .pcm import Pcm, Permutation, pcm_is_consistent, triads, validate_permutation

DEFAULT_PERM_CAP = 8

Entry = Union[GInterval, Sequence[Value]]


class Ipcm:
    """Square matrix of intervals with ``[e, e]`` on the diagonal.

    Entries may be given as :class:`GInterval` or ``(lo, hi)`` pairs.
    Diagonal entries within ``tol`` of ``[e, e]`` are snapped to it; anything
    else on the diagonal is rejected.  Reciprocity is checked on demand, not
    enforced, because full consistency is meaningful without it.
    """

    __slots__ = ("group", "_rows")

    def __init__(self, group: AloGroup, rows: Sequence[Sequence[Entry]], *, tol: float = DEFAULT_TOL):
        n = len(rows)
        if n < 2:
            raise InvalidMatrix(f"an IPCM needs order >= 2, got {n}")
        eye = identity_interval(group)
        out = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidMatrix(f"row {i} has {len(row)} entries, expected {n}")
            cells = [_as_interval(group, x) for x in row]
            if not interval_equal(cells[i], eye, tol):
                raise InvalidMatrix(f"diagonal entry ({i}, {i}) = {cells[i]!r} is not [e, e]")
            cells[i] = eye
            out.append(tuple(cells))
        self.group = group
        self._rows: tuple[tuple[GInterval, ...], ...] = tuple(out)

    @classmethod
    def from_pcm(cls, A: Pcm) -> Ipcm:
        """Embed a PCM as the IPCM of its point intervals."""
        return cls(A.group, [[point(A.group, x) for x in row] for row in A.rows])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[GInterval, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> GInterval:
        i, j = ij
        return self._rows[i][j]

    def to_lists(self) -> list[list[list[float]]]:
        return [[iv.to_list() for iv in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"Ipcm({self.group.name!r}, {self._rows!r})"


def _as_interval(group: AloGroup, x: Entry) -> GInterval:
    if isinstance(x, GInterval):
        if x.group.name != group.name:
            raise ScaleMismatch(f"interval on scale {x.group.name!r} in a {group.name!r} matrix")
        return x
    try:
        lo, hi = x
    except (TypeError, ValueError):
        raise InvalidMatrix(f"entry {x!r} is not a [lo, hi] pair") from None
    return make_interval(lo, hi, group)


# -- reciprocity ------------------------------------------------------------


def ipcm_is_reciprocal(A: Ipcm, tol: float = DEFAULT_TOL) -> bool:
    """``a_ji`` is the reciprocal interval of ``a_ij`` for every pair."""
    return all(
        interval_equal(A[j, i], recip_interval(A[i, j]), tol) for i in range(A.n) for j in range(i + 1, A.n)
    )


def _require_reciprocal(A: Ipcm, tol: float) -> None:
    if not ipcm_is_reciprocal(A, tol):
        raise NotReciprocal("the IPCM is not reciprocal")


def ipcm_degenerates_to_pcm(A: Ipcm, tol: float = DEFAULT_TOL) -> Pcm | None:
    """The underlying PCM when every entry is a point, otherwise ``None``."""
    _require_reciprocal(A, tol)
    if not all(is_point(iv, tol) for row in A.rows for iv in row):
        return None
    return Pcm(A.group, [[iv.lo for iv in row] for row in A.rows], tol=tol)


def ipcm_permute(A: Ipcm, sigma: Sequence[int]) -> Ipcm:
    """Relabel alternatives: entry ``(i, j)`` of the result is ``a[sigma[i], sigma[j]]``."""
    s = validate_permutation(sigma, A.n)
    return Ipcm(A.group, [[A[s[i], s[j]] for j in range(A.n)] for i in range(A.n)])


# -- Liu and approximate consistency ----------------------------------------


class LrPair(NamedTuple):
    L: Pcm
    R: Pcm


def ipcm_lr(A: Ipcm, sigma: Sequence[int] | None = None, tol: float = DEFAULT_TOL) -> LrPair:
    """Bound matrices of the (optionally relabelled) IPCM.

    Above the diagonal ``L`` takes lower endpoints and ``R`` upper ones;
    below the diagonal the roles swap, so both stay reciprocal.
    """
    _require_reciprocal(A, tol)
    n = A.n
    s = tuple(range(n)) if sigma is None else validate_permutation(sigma, n)
    e = A.group.identity
    L = [[e] * n for _ in range(n)]
    R = [[e] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            iv = A[s[i], s[j]]
            if i < j:
                L[i][j], R[i][j] = iv.lo, iv.hi
            elif i > j:
                L[i][j], R[i][j] = iv.hi, iv.lo
    return LrPair(Pcm(A.group, L), Pcm(A.group, R))


def ipcm_is_liu_consistent(A: Ipcm, tol: float = DEFAULT_TOL, *, method: str = "lr") -> bool:
    """Liu consistency.

    ``method="lr"`` checks that ``L`` and ``R`` are consistent PCMs;
    ``method="triads"`` checks ``a_ik == a_ij * a_jk`` as intervals for
    ``i < j < k``.  The two are equivalent on reciprocal input.
    """
    _require_reciprocal(A, tol)
    if method == "lr":
        L, R = ipcm_lr(A, tol=tol)
        return pcm_is_consistent(L, tol) and pcm_is_consistent(R, tol)
    if method == "triads":
        return all(interval_equal(A[i, k], imul(A[i, j], A[j, k]), tol) for i, j, k in triads(A.n))
    raise InvalidArgument(f"unknown method {method!r}")


class ApproxConsistency(NamedTuple):
    consistent: bool
    witness: Permutation | None


def _backtrack_witness(A: Ipcm, tol: float) -> Permutation | None:
    # Positions are filled left to right trying original indices in increasing
    # order, so the first complete labelling found is the lexicographically
    # smallest one.  A new position r only adds the triads (p, q, r).
    n = A.n
    memo: dict[tuple[int, int, int], bool] = {}

    def ok(p: int, q: int, r: int) -> bool:
        key = (p, q, r)
        if key not in memo:
            memo[key] = interval_equal(A[p, r], imul(A[p, q], A[q, r]), tol)
        return memo[key]

    prefix: list[int] = []
    used = [False] * n

    def extend() -> bool:
        if len(prefix) == n:
            return True
        for c in range(n):
            if used[c]:
                continue
            if all(ok(prefix[a], prefix[b], c) for a, b in combinations(range(len(prefix)), 2)):
                prefix.append(c)
                used[c] = True
                if extend():
                    return True
                prefix.pop()
                used[c] = False
        return False

    return tuple(prefix) if extend() else None


def ipcm_is_approx_consistent(
    A: Ipcm,
    tol: float = DEFAULT_TOL,
    *,
    cap: int = DEFAULT_PERM_CAP,
    method: str = "backtrack",
) -> ApproxConsistency:
    """Search for a relabelling under which ``A`` is Liu consistent.

    The search is exact: every permutation is (implicitly) visited.  The
    witness returned is the lexicographically smallest successful one.
    ``method="exhaustive"`` walks ``itertools.permutations`` and tests each
    relabelled matrix in full; ``"backtrack"`` prunes partial labellings and
    returns the same answer much faster.
    """
    _require_reciprocal(A, tol)
    if A.n > cap:
        raise OrderTooLargeForSearch(f"order {A.n} exceeds the permutation-search cap {cap}")
    if method == "backtrack":
        witness = _backtrack_witness(A, tol)
        return ApproxConsistency(witness is not None, witness)
    if method == "exhaustive":
        for sigma in permutations(range(A.n)):
            if ipcm_is_liu_consistent(ipcm_permute(A, sigma), tol):
                return ApproxConsistency(True, sigma)
        return ApproxConsistency(False, None)
    raise InvalidArgument(f"unknown method {method!r}")


# -- full consistency -------------------------------------------------------


def full_consistency_by_definition(A: Ipcm, tol: float = DEFAULT_TOL) -> bool:
    """``a_ij a_jk a_ki == a_ik a_kj a_ji`` endpoint-wise over all ``(i, j, k)``.

    Valid for any IPCM, reciprocal or not.
    """
    g = A.group
    for i, j, k in product(range(A.n), repeat=3):
        for end in ("lo", "hi"):
            left = g.fold(getattr(A[a, b], end) for a, b in ((i, j), (j, k), (k, i)))
            right = g.fold(getattr(A[a, b], end) for a, b in ((i, k), (k, j), (j, i)))
            if not g.equal(left, right, tol):
                return False
    return True


def full_consistency_by_shortcut(A: Ipcm, tol: float = DEFAULT_TOL) -> bool:
    """``a_ik- a_ik+ == a_ij- a_ij+ a_jk- a_jk+`` for ``i < j < k``.

    Only equivalent to full consistency when ``A`` is reciprocal.
    """
    _require_reciprocal(A, tol)
    g = A.group
    for i, j, k in triads(A.n):
        ik, ij, jk = A[i, k], A[i, j], A[j, k]
        if not g.equal(g.op(ik.lo, ik.hi), g.fold((ij.lo, ij.hi, jk.lo, jk.hi)), tol):
            return False
    return True


def ipcm_is_full_consistent(A: Ipcm, tol: float = DEFAULT_TOL) -> bool:
    if ipcm_is_reciprocal(A, tol):
        return full_consistency_by_shortcut(A, tol)
    return full_consistency_by_definition(A, tol)


# -- consistency index ------------------------------------------------------


@dataclass(frozen=True)
class TriadRecord:
    """Local inconsistency of one triad ``i < j < k``.

    ``forward`` is ``a_ij a_jk a_ki`` and ``backward`` is ``a_ik a_kj a_ji``.
    ``distance`` is the interval distance between them; ``simplified`` is the
    same quantity computed from the lower endpoints alone, which reciprocity
    makes possible.
    """

    i: int
    j: int
    k: int
    forward: GInterval
    backward: GInterval
    distance: GroupElement
    simplified: GroupElement


@dataclass(frozen=True)
class TriadDistanceTable:
    group: AloGroup
    records: tuple[TriadRecord, ...]

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TriadRecord]:
        return iter(self.records)

    def __getitem__(self, ijk: tuple[int, int, int]) -> TriadRecord:
        for r in self.records:
            if (r.i, r.j, r.k) == tuple(ijk):
                return r
        raise KeyError(ijk)

    @property
    def distances(self) -> list[GroupElement]:
        return [r.distance for r in self.records]


def ipcm_triads(A: Ipcm, tol: float = DEFAULT_TOL) -> TriadDistanceTable:
    _require_reciprocal(A, tol)
    g = A.group
    records = []
    for i, j, k in triads(A.n):
        fwd = imul_all(A[i, j], A[j, k], A[k, i])
        bwd = imul_all(A[i, k], A[k, j], A[j, i])
        simplified = max(g.div(fwd.lo, bwd.lo), g.div(bwd.lo, fwd.lo))
        records.append(TriadRecord(i, j, k, fwd, bwd, idistance(fwd, bwd), simplified))
    return TriadDistanceTable(g, tuple(records))


def ipcm_consistency_index(A: Ipcm, tol: float = DEFAULT_TOL) -> GroupElement:
    """Group mean of the triad distances.

    Equal to the identity iff ``A`` is fully consistent, larger otherwise.
    """
    if A.n < 3:
        raise OrderTooSmall(f"the consistency index needs order >= 3, got {A.n}")
    return A.group.mean(ipcm_triads(A, tol).distances)


# -- indeterminacy ----------------------------------------------------------


def interval_indeterminacy(iv: GInterval) -> GroupElement:
    """Distance between the endpoints; equals ``hi ÷ lo``."""
    return iv.group.distance(iv.lo, iv.hi)


def ipcm_entry_indeterminacy(A: Ipcm, i: int, j: int) -> GroupElement:
    return interval_indeterminacy(A[i, j])


def ipcm_indeterminacy_index(A: Ipcm, tol: float = DEFAULT_TOL, *, method: str = "upper") -> GroupElement:
    """Group mean of the entry indeterminacies over all off-diagonal entries.

    ``method="all"`` averages the ``n(n-1)`` entries directly.  ``"upper"``
    uses the fact that reciprocal entries share their indeterminacy: it
    averages the squared upper-triangle values and takes the square root.
    """
    _require_reciprocal(A, tol)
    g, n = A.group, A.n
    if method == "all":
        return g.mean(interval_indeterminacy(A[i, j]) for i in range(n) for j in range(n) if i != j)
    if method == "upper":
        squares = [g.power(interval_indeterminacy(A[i, j]), 2) for i in range(n) for j in range(i + 1, n)]
        return g.root(g.mean(squares), 2)
    raise InvalidArgument(f"unknown method {method!r}")


def ipcm_transport(A: Ipcm, iso: IsoMap) -> Ipcm:
    """Map both endpoints of every entry through ``iso``."""
    if A.group.name != iso.source.name:
        raise ScaleMismatch(f"map {iso.name} starts at {iso.source.name!r}, matrix is on {A.group.name!r}")
    return Ipcm(iso.target, [[GInterval(iso(iv.lo), iso(iv.hi)) for iv in row] for row in A.rows])
