"""Closed intervals over an Alo-group and their arithmetic.

The group operation is increasing in both arguments, so the set image of two
intervals is obtained endpoint by endpoint::

    [a-, a+] * [b-, b+] = [a- * b-, a+ * b+]
    [a-, a+] / [b-, b+] = [a- / b+, a+ / b-]

Only point intervals have an inverse; for any other interval the reciprocal
``[1/a+, 1/a-]`` multiplied by the interval is wider than the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alo_group import DEFAULT_TOL, AloGroup, GroupElement, Value
from .errors import InvalidArgument, OrderViolation, ScaleMismatch


@dataclass(frozen=True)
class GInterval:
    """``[lo, hi]`` with both endpoints in the same group and ``lo <= hi``.

    Endpoints closer than the tolerance are stored as given; use
    :func:`is_point` to ask whether the interval is a singleton.
    """

    lo: GroupElement
    hi: GroupElement

    def __post_init__(self) -> None:
        if not (isinstance(self.lo, GroupElement) and isinstance(self.hi, GroupElement)):
            raise InvalidArgument("GInterval endpoints must be GroupElement; use make_interval()")
        if self.lo.group.name != self.hi.group.name:
            raise ScaleMismatch(f"interval endpoints on scales {self.lo.scale!r} and {self.hi.scale!r}")
        if self.lo.group.gap(self.lo, self.hi) > DEFAULT_TOL:
            raise OrderViolation(f"lower endpoint {float(self.lo)!r} exceeds upper endpoint {float(self.hi)!r}")

    @property
    def group(self) -> AloGroup:
        return self.lo.group

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self) -> str:
        return f"[{float(self.lo):g}, {float(self.hi):g}]"

    def to_list(self) -> list[float]:
        return [float(self.lo), float(self.hi)]


def make_interval(lo: Value, hi: Value, group: AloGroup | None = None) -> GInterval:
    """Validate two endpoints and build an interval.

    The group is taken from the endpoint tags when ``group`` is omitted.
    """
    if group is None:
        tagged = [x.group for x in (lo, hi) if isinstance(x, GroupElement)]
        if not tagged:
            raise InvalidArgument("untagged endpoints need an explicit group")
        group = tagged[0]
    return GInterval(group.element(lo), group.element(hi))


def point(group: AloGroup, x: Value) -> GInterval:
    """The singleton interval ``[x, x]``."""
    v = group.element(x)
    return GInterval(v, v)


def identity_interval(group: AloGroup) -> GInterval:
    e = group.identity
    return GInterval(e, e)


def _same_group(a: GInterval, b: GInterval) -> AloGroup:
    if a.group.name != b.group.name:
        raise ScaleMismatch(f"intervals on scales {a.group.name!r} and {b.group.name!r}")
    return a.group


def is_point(iv: GInterval, tol: float = DEFAULT_TOL) -> bool:
    return iv.group.equal(iv.lo, iv.hi, tol)


def interval_equal(a: GInterval, b: GInterval, tol: float = DEFAULT_TOL) -> bool:
    """Endpoint-wise equality within ``tol`` (in additive coordinates)."""
    g = _same_group(a, b)
    return g.equal(a.lo, b.lo, tol) and g.equal(a.hi, b.hi, tol)


def recip_interval(iv: GInterval) -> GInterval:
    """``[inv(hi), inv(lo)]``."""
    g = iv.group
    return GInterval(g.inv(iv.hi), g.inv(iv.lo))


def imul(a: GInterval, b: GInterval) -> GInterval:
    g = _same_group(a, b)
    return GInterval(g.op(a.lo, b.lo), g.op(a.hi, b.hi))


def imul_all(*intervals: GInterval) -> GInterval:
    """Left fold of :func:`imul` over one or more intervals."""
    if not intervals:
        raise InvalidArgument("imul_all needs at least one interval")
    acc = intervals[0]
    for iv in intervals[1:]:
        acc = imul(acc, iv)
    return acc


def idiv(a: GInterval, b: GInterval) -> GInterval:
    g = _same_group(a, b)
    return GInterval(g.div(a.lo, b.hi), g.div(a.hi, b.lo))


def ilt(a: GInterval, b: GInterval, tol: float = DEFAULT_TOL) -> bool:
    """Strict partial order: every point of ``a`` lies below every point of ``b``."""
    g = _same_group(a, b)
    return g.lt(a.hi, b.lo, tol)


def ile(a: GInterval, b: GInterval, tol: float = DEFAULT_TOL) -> bool:
    return interval_equal(a, b, tol) or ilt(a, b, tol)


def inorm(iv: GInterval) -> GroupElement:
    """Largest endpoint norm; an element of the group, not an interval."""
    g = iv.group
    return max(g.norm(iv.lo), g.norm(iv.hi))


def idistance(a: GInterval, b: GInterval) -> GroupElement:
    """Interval distance: the larger of the lower-endpoint and upper-endpoint
    distances.

    This is the norm of ``[a- / b-, a+ / b+]``; that pair need not be ordered,
    so it is evaluated directly rather than built as a :class:`GInterval`.
    """
    g = _same_group(a, b)
    return max(g.norm(g.div(a.lo, b.lo)), g.norm(g.div(a.hi, b.hi)))
