"""Interval supports of indecomposable representations.

Text grammar: ``[a,b)``, ``(a,b]``, ``(-inf,+inf)`` and ``{a}`` for a single
point.  Endpoints are exact rationals (``1/2`` or ``0.5``) or ``-inf``/``+inf``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

from .errors import (
    ClosedInfinity,
    EmptyInterval,
    IntervalSyntaxError,
    InvalidVariant,
    PointInfinite,
)
from .quiver import ExtReal, QuiverSpec, ext


@dataclass(frozen=True)
class Interval:
    lo: ExtReal
    lo_closed: bool
    hi: ExtReal
    hi_closed: bool

    def __post_init__(self):
        if (not self.lo.finite and self.lo_closed) or (not self.hi.finite and self.hi_closed):
            raise ClosedInfinity("infinite endpoints are always open")
        if self.hi < self.lo:
            raise EmptyInterval("lower end exceeds upper end")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise EmptyInterval("degenerate interval must be closed on both sides")

    @classmethod
    def make(cls, lo, lo_closed, hi, hi_closed) -> "Interval":
        return cls(ext(lo), bool(lo_closed), ext(hi), bool(hi_closed))

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    @property
    def lower(self) -> Tuple[ExtReal, bool]:
        return (self.lo, self.lo_closed)

    @property
    def upper(self) -> Tuple[ExtReal, bool]:
        return (self.hi, self.hi_closed)

    def contains(self, x) -> bool:
        x = ext(x)
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self):
        return format_interval(self)

    def __repr__(self):
        return "Interval(%s)" % format_interval(self)


def try_interval(lo, lo_closed, hi, hi_closed) -> Optional[Interval]:
    """Build an interval, or return None when the data describe an empty set."""
    lo, hi = ext(lo), ext(hi)
    if not lo.finite:
        lo_closed = False
    if not hi.finite:
        hi_closed = False
    if hi < lo or (lo == hi and not (lo_closed and hi_closed)):
        return None
    return Interval(lo, lo_closed, hi, hi_closed)


def splice(lower: Tuple[ExtReal, bool], upper: Tuple[ExtReal, bool]) -> Optional[Interval]:
    """Interval with the given lower and upper endpoint data, or None if empty."""
    return try_interval(lower[0], lower[1], upper[0], upper[1])


def intersect(i: Interval, j: Interval) -> Optional[Interval]:
    if i.lo > j.lo or (i.lo == j.lo and not i.lo_closed):
        lower = i.lower
    else:
        lower = j.lower
    if i.hi < j.hi or (i.hi == j.hi and not i.hi_closed):
        upper = i.upper
    else:
        upper = j.upper
    return splice(lower, upper)


def difference(i: Interval, k: Interval) -> List[Interval]:
    """Pieces of ``i`` outside ``k`` (``k`` assumed to lie inside ``i``)."""
    out = []
    left = try_interval(i.lo, i.lo_closed, k.lo, not k.lo_closed)
    if left is not None:
        out.append(left)
    right = try_interval(k.hi, not k.hi_closed, i.hi, i.hi_closed)
    if right is not None:
        out.append(right)
    return out


def union_if_interval(i: Interval, j: Interval) -> Optional[Interval]:
    """The union of two disjoint intervals when it is itself an interval."""
    if j.lo < i.lo or (j.lo == i.lo and j.lo_closed and not i.lo_closed):
        i, j = j, i
    if i.hi == j.lo and (i.hi_closed != j.lo_closed):
        return Interval(i.lo, i.lo_closed, j.hi, j.hi_closed)
    return None


_INTERVAL_RE = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^,\s]+)\s*([\])])\s*$")
_POINT_RE = re.compile(r"^\s*\{\s*([^,\s{}]+)\s*\}\s*$")


def _endpoint(text: str) -> ExtReal:
    try:
        return ext(text)
    except (ValueError, ZeroDivisionError):
        raise IntervalSyntaxError("bad endpoint %r" % text) from None


def parse_interval(text: str) -> Interval:
    m = _POINT_RE.match(text)
    if m:
        a = _endpoint(m.group(1))
        if not a.finite:
            raise ClosedInfinity("a single point must be finite")
        return Interval(a, True, a, True)
    m = _INTERVAL_RE.match(text)
    if not m:
        raise IntervalSyntaxError("cannot parse interval %r" % text)
    lo = _endpoint(m.group(2))
    hi = _endpoint(m.group(3))
    return Interval(lo, m.group(1) == "[", hi, m.group(4) == "]")


def format_interval(i: Interval) -> str:
    if i.is_point:
        return "{%s}" % i.lo
    return "%s%s,%s%s" % ("[" if i.lo_closed else "(", i.lo, i.hi, "]" if i.hi_closed else ")")


class Kind(enum.Enum):
    DOWN_SET = "down"  # projective supports
    UP_SET = "up"  # injective supports


class Variant(enum.Enum):
    CLOSED = "closed"
    OPEN_BELOW = "open_below"  # points strictly below the vertex
    OPEN_ABOVE = "open_above"  # points strictly above the vertex


def canonical_support(q: QuiverSpec, a, kind: Kind, variant: Variant = Variant.CLOSED) -> Interval:
    """Support of the projective (down-set) or injective (up-set) at ``a``."""
    a = ext(a)
    if not a.finite:
        raise PointInfinite("no projectives or injectives at infinity")
    # For down-sets the minimal elements are sinks; for up-sets they are sources.
    def is_bottom(el):
        return el.is_sink if kind is Kind.DOWN_SET else el.is_source

    el = q.element_at(a)
    if el is not None:
        if is_bottom(el):
            if variant is Variant.CLOSED:
                return Interval(a, True, a, True)
            raise InvalidVariant("only the closed variant exists at %s" % a)
        prev = q.element(el.index - 1).value
        nxt = q.element(el.index + 1).value
        if variant is Variant.CLOSED:
            return try_interval(prev, True, nxt, True)
        if variant is Variant.OPEN_BELOW:
            return try_interval(prev, True, a, False)
        return try_interval(a, False, nxt, True)
    lo, hi = q.segment(a)
    if is_bottom(lo):
        if variant is Variant.CLOSED:
            return try_interval(lo.value, True, a, True)
        if variant is Variant.OPEN_BELOW:
            return try_interval(lo.value, True, a, False)
        raise InvalidVariant("nothing above %s flows down to it" % a)
    if variant is Variant.CLOSED:
        return try_interval(a, True, hi.value, True)
    if variant is Variant.OPEN_ABOVE:
        return try_interval(a, False, hi.value, True)
    raise InvalidVariant("nothing below %s flows down to it" % a)


@dataclass(frozen=True)
class ClassFlags:
    projective: Tuple[Tuple[ExtReal, Variant], ...] = ()
    injective: Tuple[Tuple[ExtReal, Variant], ...] = ()
    simple: bool = False
    bar: bool = False

    @property
    def generic(self) -> bool:
        return not (self.projective or self.injective or self.simple or self.bar)

    @property
    def in_ar_sequence(self) -> bool:
        return self.generic

    def labels(self) -> List[str]:
        out = ["Projective(%s, %s)" % (a, v.value) for a, v in self.projective]
        out += ["Injective(%s, %s)" % (a, v.value) for a, v in self.injective]
        if self.simple:
            out.append("Simple")
        if self.bar:
            out.append("Bar")
        if not out:
            out.append("Generic")
        return out


def _matches(q: QuiverSpec, i: Interval, kind: Kind):
    cands = set()
    for e in (i.lo, i.hi):
        if e.finite:
            cands.add(e)
    for p in q.points:
        x = ExtReal(0, p)
        if i.lo <= x <= i.hi:
            cands.add(x)
    found = []
    for a in sorted(cands):
        for v in Variant:
            try:
                if canonical_support(q, a, kind, v) == i:
                    found.append((a, v))
            except InvalidVariant:
                pass
    return tuple(found)


def is_bar(q: QuiverSpec, i: Interval) -> bool:
    """Support between consecutive indexed elements, closed at every finite end.

    An infinite end counts as an indexed element, so ``(-inf,s]`` is a bar
    when ``-inf`` and ``s`` are adjacent.
    """
    if i.is_point:
        return False
    if (i.lo.finite and not i.lo_closed) or (i.hi.finite and not i.hi_closed):
        return False
    a, b = q.element_at(i.lo), q.element_at(i.hi)
    return a is not None and b is not None and b.index == a.index + 1


@lru_cache(maxsize=65536)
def classify(q: QuiverSpec, i: Interval) -> ClassFlags:
    return ClassFlags(
        projective=_matches(q, i, Kind.DOWN_SET),
        injective=_matches(q, i, Kind.UP_SET),
        simple=i.is_point,
        bar=is_bar(q, i),
    )
