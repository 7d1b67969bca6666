"""Joint reading of the consistency and indeterminacy indices.

A matrix becomes a point ``(I, delta)`` on a chosen reference scale; matrices
from different scales are made comparable by transporting their indices
through the canonical isomorphisms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .alo_group import DEFAULT_TOL, FUZZY, AloGroup, GroupElement, Value, get_scale, isomorphism
from .errors import InvalidArgument, ScaleMismatch
from .ipcm import Ipcm, ipcm_consistency_index, ipcm_indeterminacy_index


class Verdict(str, enum.Enum):
    ACCEPT = "accept"
    REJECT = "reject"


class Dominance(str, enum.Enum):
    P_DOMINATES = "p_dominates"
    Q_DOMINATES = "q_dominates"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class IndexPoint:
    label: str
    consistency: GroupElement
    indeterminacy: GroupElement

    def __post_init__(self) -> None:
        if self.consistency.group.name != self.indeterminacy.group.name:
            raise ScaleMismatch("both coordinates of an IndexPoint must be on one scale")

    @property
    def group(self) -> AloGroup:
        return self.consistency.group


@dataclass(frozen=True)
class Thresholds:
    consistency: GroupElement
    indeterminacy: GroupElement

    def __post_init__(self) -> None:
        g = self.consistency.group
        if g.name != self.indeterminacy.group.name:
            raise ScaleMismatch("both thresholds must be on one scale")
        e = g.identity
        if self.consistency < e or self.indeterminacy < e:
            raise InvalidArgument("thresholds cannot lie below the identity")

    @classmethod
    def on(cls, group: AloGroup | str, consistency: Value, indeterminacy: Value) -> Thresholds:
        g = get_scale(group)
        return cls(g.element(consistency), g.element(indeterminacy))

    @property
    def group(self) -> AloGroup:
        return self.consistency.group


def evaluate(
    A: Ipcm, reference: AloGroup | str = FUZZY, label: str = "", tol: float = DEFAULT_TOL
) -> IndexPoint:
    """Both indices of ``A`` computed on its own scale, then mapped to ``reference``."""
    iso = isomorphism(A.group, reference)
    return IndexPoint(
        label,
        iso(ipcm_consistency_index(A, tol)),
        iso(ipcm_indeterminacy_index(A, tol)),
    )


def classify(p: IndexPoint, t: Thresholds, tol: float = DEFAULT_TOL) -> Verdict:
    """Accept iff both indices are at most their thresholds (boundary accepts).

    "At most" allows ``tol`` in additive coordinates, so a consistent matrix
    is accepted even when rounding nudges its index just above the identity.
    """
    if p.group.name != t.group.name:
        raise ScaleMismatch(f"point on {p.group.name!r}, thresholds on {t.group.name!r}")
    g = p.group
    ok = g.le(p.consistency, t.consistency, tol) and g.le(p.indeterminacy, t.indeterminacy, tol)
    return Verdict.ACCEPT if ok else Verdict.REJECT


def dominance(p: IndexPoint, q: IndexPoint, tol: float = DEFAULT_TOL) -> Dominance:
    """Compare two points coordinate-wise; lower is better on both axes.

    Differences within ``tol`` (additive coordinates) count as ties.
    """
    if p.group.name != q.group.name:
        raise ScaleMismatch(f"points on {p.group.name!r} and {q.group.name!r}")
    g = p.group
    signs = []
    for a, b in ((p.consistency, q.consistency), (p.indeterminacy, q.indeterminacy)):
        d = g.gap(a, b)
        signs.append(0 if abs(d) <= tol else (-1 if d < 0 else 1))
    if signs == [0, 0]:
        return Dominance.EQUAL
    if all(s <= 0 for s in signs):
        return Dominance.P_DOMINATES
    if all(s >= 0 for s in signs):
        return Dominance.Q_DOMINATES
    return Dominance.INCOMPARABLE


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def plot_data(
    points: Sequence[IndexPoint], thresholds: Thresholds | None = None, tol: float = DEFAULT_TOL
) -> str:
    """Tab-separated table of the points, sorted by label.

    Columns are ``label, I, delta`` plus ``verdict`` when thresholds are
    given.  Numbers carry six significant digits.
    """
    scales = {p.group.name for p in points}
    if thresholds is not None:
        scales.add(thresholds.group.name)
    if len(scales) > 1:
        raise ScaleMismatch(f"points span several scales: {sorted(scales)}")
    header = ["label", "I", "delta"] + (["verdict"] if thresholds is not None else [])
    lines = ["\t".join(header)]
    for p in sorted(points, key=lambda p: p.label):
        row = [p.label, _fmt(p.consistency), _fmt(p.indeterminacy)]
        if thresholds is not None:
            row.append(classify(p, thresholds, tol).value)
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"
