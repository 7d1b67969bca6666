"""Real continuous Abelian linearly ordered groups on open real intervals.

Each group carries a canonical order-preserving isomorphism onto the additive
reals (``to_additive`` / ``from_additive``).  Roots, tolerance comparisons and
custom scales all go through those coordinates, so a tolerance ``tol`` means
the same thing on every scale: a log-ratio on the multiplicative scale, a
log-odds difference on the fuzzy scale, a plain difference on the additive one.

Three scales are built in:

* ``MULTIPLICATIVE`` -- ``]0, +inf[`` under ordinary multiplication,
* ``ADDITIVE`` -- the real line under addition,
* ``FUZZY`` -- ``]0, 1[`` under ``ab / (ab + (1-a)(1-b))``.
"""

from __future__ import annotations

import math
import operator
import statistics
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .errors import DomainError, EmptyInput, InvalidArgument, ScaleMismatch

DEFAULT_TOL = 1e-9


class GroupElement(float):
    """A float tagged with the group it lives in.

    Behaves as a plain ``float`` in arithmetic and comparisons; the tag is
    only consulted by group operations, which reject elements of another
    scale with :class:`ScaleMismatch`.
    """

    __slots__ = ("group",)

    def __new__(cls, value: float, group: AloGroup) -> GroupElement:
        self = super().__new__(cls, value)
        self.group = group
        return self

    @property
    def scale(self) -> str:
        return self.group.name

    def __repr__(self) -> str:
        return f"GroupElement({float(self)!r}, {self.group.name!r})"


Value = Union[float, GroupElement]


def _logit(x: float) -> float:
    return math.log(x) - math.log1p(-x)


def _logistic(t: float) -> float:
    if t >= 0:
        return 1.0 / (1.0 + math.exp(-t))
    z = math.exp(t)
    return z / (1.0 + z)


def _safe_exp(t: float) -> float:
    try:
        return math.exp(t)
    except OverflowError:
        return math.inf


def _fuzzy_op(a: float, b: float) -> float:
    ab = a * b
    return ab / (ab + (1.0 - a) * (1.0 - b))


def _fuzzy_mean(values: Sequence[float]) -> float:
    # Ratio of the geometric means of a_i and 1 - a_i; geometric_mean works
    # in log space so long lists do not underflow.
    g = statistics.geometric_mean(values)
    g_c = statistics.geometric_mean([1.0 - v for v in values])
    return g / (g + g_c)


@dataclass(frozen=True, eq=False, repr=False)
class AloGroup:
    """An Alo-group ``(G, op, <=)`` whose carrier ``G`` is the open interval
    ``]lower, upper[``.

    ``op_impl``, ``inv_impl`` and ``mean_impl`` are optional closed forms.
    When absent, the operation is derived by transport through the additive
    coordinates, which is how custom scales are defined.
    """

    name: str
    lower: float
    upper: float
    to_additive: Callable[[float], float]
    from_additive: Callable[[float], float]
    op_impl: Callable[[float, float], float] | None = None
    inv_impl: Callable[[float], float] | None = None
    mean_impl: Callable[[Sequence[float]], float] | None = None
    _identity: float = field(init=False)

    def __post_init__(self) -> None:
        e = self.from_additive(0.0)
        if not self.lower < e < self.upper:
            raise InvalidArgument(f"identity {e!r} of {self.name} is not inside its domain")
        object.__setattr__(self, "_identity", e)

    def __repr__(self) -> str:
        return f"AloGroup({self.name!r}, ]{self.lower}, {self.upper}[)"

    # -- membership -------------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self._identity, self)

    def contains(self, x: float) -> bool:
        """True iff ``x`` lies strictly inside the domain (NaN never does)."""
        return self.lower < x < self.upper

    def value(self, x: Value) -> float:
        """Validate ``x`` as a member of this group and return it as a float."""
        if isinstance(x, GroupElement) and x.group.name != self.name:
            raise ScaleMismatch(f"element of scale {x.group.name!r} used in the {self.name!r} group")
        v = float(x)
        if not self.contains(v):
            raise DomainError(
                f"{v!r} is outside the open domain ]{self.lower}, {self.upper}[ of the {self.name} group"
            )
        return v

    def element(self, x: Value) -> GroupElement:
        return GroupElement(self.value(x), self)

    def _result(self, v: float) -> GroupElement:
        if not self.contains(v):
            raise DomainError(f"result {v!r} left the domain of the {self.name} group (floating-point saturation)")
        return GroupElement(v, self)

    # -- group structure --------------------------------------------------

    def _op(self, a: float, b: float) -> float:
        if self.op_impl is not None:
            return self.op_impl(a, b)
        return self.from_additive(self.to_additive(a) + self.to_additive(b))

    def _inv(self, a: float) -> float:
        if self.inv_impl is not None:
            return self.inv_impl(a)
        return self.from_additive(-self.to_additive(a))

    def op(self, a: Value, b: Value) -> GroupElement:
        return self._result(self._op(self.value(a), self.value(b)))

    def inv(self, a: Value) -> GroupElement:
        return self._result(self._inv(self.value(a)))

    def div(self, a: Value, b: Value) -> GroupElement:
        """``a`` combined with the inverse of ``b``."""
        return self._result(self._op(self.value(a), self._inv(self.value(b))))

    def fold(self, values: Iterable[Value]) -> GroupElement:
        """Combine all ``values`` with the group operation (identity if empty)."""
        acc = self._identity
        for v in values:
            acc = self._op(acc, self.value(v))
        return self._result(acc)

    def power(self, a: Value, z: int) -> GroupElement:
        """Integer power: ``a`` combined with itself ``z`` times; inverse for ``z < 0``."""
        try:
            z = operator.index(z)
        except TypeError:
            raise InvalidArgument(f"integer exponent expected, got {z!r}") from None
        base = self.value(a)
        k = abs(z)
        acc = self._identity
        while k:
            if k & 1:
                acc = self._op(acc, base)
            k >>= 1
            if k:
                base = self._op(base, base)
        if z < 0:
            acc = self._inv(acc)
        return self._result(acc)

    def root(self, a: Value, n: int) -> GroupElement:
        """The unique ``x`` with ``power(x, n) == a``."""
        try:
            n = operator.index(n)
        except TypeError:
            raise InvalidArgument(f"root order must be a positive integer, got {n!r}") from None
        if n < 1:
            raise InvalidArgument(f"root order must be >= 1, got {n}")
        v = self.value(a)
        if n == 1:
            return GroupElement(v, self)
        return self._result(self.from_additive(self.to_additive(v) / n))

    def rational_power(self, a: Value, m: int, n: int) -> GroupElement:
        """``a`` raised to ``m / n``: the n-th root of the m-th power."""
        return self.root(self.power(a, m), n)

    def mean(self, values: Iterable[Value]) -> GroupElement:
        """Group mean: the n-th root of the fold of n elements.

        Geometric mean on the multiplicative scale, arithmetic mean on the
        additive one.
        """
        vals = [self.value(v) for v in values]
        if not vals:
            raise EmptyInput(f"mean of no elements in the {self.name} group")
        if len(vals) == 1:
            return GroupElement(vals[0], self)
        if self.mean_impl is not None:
            return self._result(self.mean_impl(vals))
        return self._result(self.from_additive(math.fsum(self.to_additive(v) for v in vals) / len(vals)))

    # -- order, norm, distance -------------------------------------------

    def norm(self, a: Value) -> GroupElement:
        """``max(a, inverse(a))``; always ``>= identity``."""
        v = self.value(a)
        return self._result(max(v, self._inv(v)))

    def distance(self, a: Value, b: Value) -> GroupElement:
        """Group distance: the norm of ``a ÷ b``."""
        return self.norm(self.div(a, b))

    def coordinate(self, a: Value) -> float:
        """Position of ``a`` in additive coordinates."""
        return self.to_additive(self.value(a))

    def gap(self, a: Value, b: Value) -> float:
        """Signed additive-coordinate difference ``a - b``."""
        return self.coordinate(a) - self.coordinate(b)

    def equal(self, a: Value, b: Value, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.gap(a, b)) <= tol

    def le(self, a: Value, b: Value, tol: float = DEFAULT_TOL) -> bool:
        """``a <= b`` up to tolerance."""
        return self.gap(a, b) <= tol

    def lt(self, a: Value, b: Value, tol: float = DEFAULT_TOL) -> bool:
        """``a < b`` by more than the tolerance."""
        return self.gap(a, b) < -tol


def _identity_map(x: float) -> float:
    return x


MULTIPLICATIVE = AloGroup(
    "multiplicative",
    0.0,
    math.inf,
    to_additive=math.log,
    from_additive=_safe_exp,
    op_impl=operator.mul,
    inv_impl=lambda a: 1.0 / a,
    mean_impl=statistics.geometric_mean,
)

ADDITIVE = AloGroup(
    "additive",
    -math.inf,
    math.inf,
    to_additive=_identity_map,
    from_additive=_identity_map,
    op_impl=operator.add,
    inv_impl=operator.neg,
    mean_impl=statistics.fmean,
)

FUZZY = AloGroup(
    "fuzzy",
    0.0,
    1.0,
    to_additive=_logit,
    from_additive=_logistic,
    op_impl=_fuzzy_op,
    inv_impl=lambda a: 1.0 - a,
    mean_impl=_fuzzy_mean,
)

SCALES: dict[str, AloGroup] = {g.name: g for g in (MULTIPLICATIVE, ADDITIVE, FUZZY)}


def get_scale(name: str | AloGroup) -> AloGroup:
    """Look up a built-in scale by its serialized name."""
    if isinstance(name, AloGroup):
        return name
    try:
        return SCALES[name]
    except KeyError:
        raise InvalidArgument(f"unknown scale {name!r}; expected one of {sorted(SCALES)}") from None


def custom_group(
    name: str,
    lower: float,
    upper: float,
    to_additive: Callable[[float], float],
    from_additive: Callable[[float], float],
) -> AloGroup:
    """Build a scale from an increasing bijection onto the additive reals.

    Operation, inverse, roots, mean, norm and distance are all derived by
    transport through the supplied coordinates.
    """
    if name in SCALES:
        raise InvalidArgument(f"{name!r} is a built-in scale name")
    if not lower < upper:
        raise InvalidArgument("empty domain")
    return AloGroup(name, lower, upper, to_additive=to_additive, from_additive=from_additive)


@dataclass(frozen=True, eq=False)
class IsoMap:
    """Order- and operation-preserving bijection between two groups."""

    name: str
    source: AloGroup
    target: AloGroup
    forward: Callable[[float], float]
    backward: Callable[[float], float]

    def __call__(self, a: Value) -> GroupElement:
        return self.target._result(self.forward(self.source.value(a)))

    def apply(self, a: Value) -> GroupElement:
        return self(a)

    def unapply(self, b: Value) -> GroupElement:
        return self.source._result(self.backward(self.target.value(b)))

    def inverse(self) -> IsoMap:
        name = self.name[:-3] if self.name.endswith("^-1") else self.name + "^-1"
        return IsoMap(name, self.target, self.source, self.backward, self.forward)


def _h(x: float) -> float:
    return x / (1.0 + x)


def _h_inv(y: float) -> float:
    return y / (1.0 - y)


# multiplicative -> fuzzy, x / (1 + x)
H = IsoMap("h", MULTIPLICATIVE, FUZZY, _h, _h_inv)
# additive -> fuzzy, e^x / (1 + e^x)
G = IsoMap("g", ADDITIVE, FUZZY, _logistic, _logit)
# multiplicative -> additive
LN = IsoMap("ln", MULTIPLICATIVE, ADDITIVE, math.log, _safe_exp)

_BUILTIN_MAPS: dict[tuple[str, str], IsoMap] = {}
for _m in (H, G, LN):
    _BUILTIN_MAPS[_m.source.name, _m.target.name] = _m
    _BUILTIN_MAPS[_m.target.name, _m.source.name] = _m.inverse()
del _m


def isomorphism(source: str | AloGroup, target: str | AloGroup) -> IsoMap:
    """Canonical isomorphism between two scales.

    Built-in pairs use ``h``, ``g`` and ``ln`` (or their inverses); anything
    else is composed through the additive coordinates.
    """
    src, tgt = get_scale(source), get_scale(target)
    if src.name == tgt.name:
        return IsoMap("id", src, tgt, _identity_map, _identity_map)
    found = _BUILTIN_MAPS.get((src.name, tgt.name))
    if found is not None:
        return found
    return IsoMap(
        f"{src.name}->{tgt.name}",
        src,
        tgt,
        lambda x: tgt.from_additive(src.to_additive(x)),
        lambda y: src.from_additive(tgt.to_additive(y)),
    )
