"""Continuous type-A quivers with finitely many sinks and sources.

A quiver is the real line together with a finite, strictly increasing list of
turning points.  Turning points alternate between sinks and sources; the
points at -inf and +inf are indexed too, so every real number lies in a
closed segment between two consecutive indexed elements.  Inside a segment
arrows flow toward the end that is a sink.

The partial order ``y <= x`` (written ``precedes(q, x, y)``) holds when ``y``
can be reached from ``x`` by following arrows.
"""

from __future__ import annotations

import bisect
import enum
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Optional, Sequence, Tuple, Union

from .errors import (
    EmptyIndexSet,
    NonAlternating,
    PointInfinite,
    PointIsIndexed,
    PointIsSinkOrSource,
    UnsortedPoints,
)

Number = Union[int, str, Fraction]

_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?$")


@total_ordering
@dataclass(frozen=True)
class ExtReal:
    """An element of the extended real line with an exact rational value.

    ``tag`` is -1 for -inf, 0 for finite values and +1 for +inf.
    """

    tag: int
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.tag not in (-1, 0, 1):
            raise ValueError("tag must be -1, 0 or 1")
        if (self.tag == 0) != (self.value is not None):
            raise ValueError("value is present iff the number is finite")

    @property
    def finite(self) -> bool:
        return self.tag == 0

    def _key(self):
        return (self.tag, self.value if self.value is not None else 0)

    def __lt__(self, other):
        if not isinstance(other, ExtReal):
            return NotImplemented
        if self.tag or other.tag:
            return self.tag < other.tag
        return self.value < other.value

    def __str__(self):
        if self.tag < 0:
            return "-inf"
        if self.tag > 0:
            return "+inf"
        return format_number(self.value)

    def __repr__(self):
        return "ExtReal(%s)" % self


NEG_INF = ExtReal(-1)
POS_INF = ExtReal(1)


def parse_number(text: str) -> Fraction:
    """Parse ``"3"``, ``"-0.25"`` or ``"7/2"`` into an exact fraction."""
    text = text.strip()
    if not _NUMBER_RE.match(text):
        raise ValueError("not a rational number: %r" % text)
    if "/" in text:
        num, den = text.split("/")
        return Fraction(num) / Fraction(den)
    return Fraction(text)


def format_number(value: Fraction) -> str:
    """Shortest exact text form: integers and terminating decimals stay decimal."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return "%d/%d" % (value.numerator, value.denominator)
    digits = max(twos, fives)
    scaled = abs(value.numerator) * (10 ** digits) // value.denominator
    sign = "-" if value < 0 else ""
    whole, frac = divmod(scaled, 10 ** digits)
    return "%s%d.%s" % (sign, whole, str(frac).rjust(digits, "0").rstrip("0"))


def ext(x) -> ExtReal:
    """Coerce ints, fractions, strings (including ``"-inf"``/``"+inf"``) to ExtReal."""
    if isinstance(x, ExtReal):
        return x
    if isinstance(x, str):
        s = x.strip().lower()
        if s in ("-inf", "-infinity", "-oo"):
            return NEG_INF
        if s in ("+inf", "inf", "+infinity", "infinity", "+oo", "oo"):
            return POS_INF
        return ExtReal(0, parse_number(s))
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    return ExtReal(0, Fraction(x))


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class Direction(enum.Enum):
    """Local orientation away from the turning points.

    ``ASCENDING`` means the order agrees with <= near the point, which happens
    when the sink of the enclosing segment is its lower end.
    """

    ASCENDING = "ascending"
    DESCENDING = "descending"


@dataclass(frozen=True)
class Element:
    """An indexed turning point (finite or infinite)."""

    index: int
    value: ExtReal

    @property
    def is_sink(self) -> bool:
        return self.index % 2 == 0

    @property
    def is_source(self) -> bool:
        return not self.is_sink

    def __str__(self):
        return "s_%d=%s" % (self.index, self.value)


@dataclass(frozen=True)
class QuiverSpec:
    points: Tuple[Fraction, ...]
    first_index_parity: Parity = Parity.EVEN
    includes_neg_inf: bool = True
    includes_pos_inf: bool = True

    @classmethod
    def of(cls, points: Iterable[Number], parity: Union[Parity, str] = Parity.EVEN) -> "QuiverSpec":
        pts = tuple(parse_number(p) if isinstance(p, str) else Fraction(p) for p in points)
        if not isinstance(parity, Parity):
            parity = Parity(str(parity).lower())
        return cls(pts, parity)

    @cached_property
    def first_index(self) -> int:
        return 0 if self.first_index_parity is Parity.EVEN else -1

    @cached_property
    def elements(self) -> Tuple[Element, ...]:
        f = self.first_index
        k = len(self.points)
        out = [Element(f - 1, NEG_INF)]
        out += [Element(f + i, ExtReal(0, p)) for i, p in enumerate(self.points)]
        out.append(Element(f + k, POS_INF))
        return tuple(out)

    @cached_property
    def _values(self) -> Tuple[ExtReal, ...]:
        return tuple(e.value for e in self.elements)

    @cached_property
    def _by_index(self):
        return {e.index: e for e in self.elements}

    @property
    def min_index(self) -> int:
        return self.elements[0].index

    @property
    def max_index(self) -> int:
        return self.elements[-1].index

    def element(self, n: int) -> Element:
        return self._by_index[n]

    def element_at(self, x) -> Optional[Element]:
        """The indexed element located at ``x``, if any."""
        x = ext(x)
        i = bisect.bisect_left(self._values, x)
        if i < len(self._values) and self._values[i] == x:
            return self.elements[i]
        return None

    def in_s(self, x) -> bool:
        """True for finite sinks and sources."""
        x = ext(x)
        return x.finite and self.element_at(x) is not None

    def in_sbar(self, x) -> bool:
        return self.element_at(x) is not None

    def segment(self, x) -> Tuple[Element, Element]:
        """Consecutive indexed elements strictly enclosing a non-indexed ``x``."""
        x = ext(x)
        i = bisect.bisect_left(self._values, x)
        return self.elements[i - 1], self.elements[i]

    def segments_containing(self, x) -> Tuple[Tuple[Element, Element], ...]:
        """Closed segments [s_n, s_{n+1}] containing ``x`` (one or two of them)."""
        x = ext(x)
        i = bisect.bisect_left(self._values, x)
        els = self.elements
        if i < len(els) and els[i].value == x:
            segs = []
            if i > 0:
                segs.append((els[i - 1], els[i]))
            if i + 1 < len(els):
                segs.append((els[i], els[i + 1]))
            return tuple(segs)
        return ((els[i - 1], els[i]),)

    def to_json(self) -> str:
        return json.dumps(
            {
                "points": [format_number(p) for p in self.points],
                "first_index_parity": self.first_index_parity.value,
            }
        )

    def __str__(self):
        return "Quiver(%s)" % ", ".join(str(e) for e in self.elements)


def quiver_from_json(data) -> QuiverSpec:
    """Build and validate a quiver from a JSON string or an already-decoded dict.

    An optional ``"kinds"`` list (``"sink"``/``"source"`` per point) is checked
    for alternation against the parity.
    """
    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    raw = data.get("points", [])
    points = []
    for p in raw:
        points.append(parse_number(p) if isinstance(p, str) else Fraction(p))
    parity = Parity(str(data.get("first_index_parity", "even")).lower())
    kinds = data.get("kinds")
    return validate_quiver(QuiverSpec(tuple(points), parity), kinds=kinds)


def validate_quiver(spec: QuiverSpec, kinds: Optional[Sequence[str]] = None) -> QuiverSpec:
    if not spec.points:
        raise EmptyIndexSet("a quiver needs at least one finite sink or source")
    for a, b in zip(spec.points, spec.points[1:]):
        if not a < b:
            raise UnsortedPoints("points must be strictly increasing: %s, %s" % (a, b))
    if kinds is not None:
        if len(kinds) != len(spec.points):
            raise NonAlternating("kinds must list one entry per point")
        for el, kind in zip(spec.elements[1:-1], kinds):
            want = "sink" if el.is_sink else "source"
            if str(kind).lower() != want:
                raise NonAlternating("point %s must be a %s, got %s" % (el.value, want, kind))
    if not spec.includes_neg_inf or not spec.includes_pos_inf:
        raise EmptyIndexSet("with finitely many turning points both infinities are indexed")
    return spec


def precedes(q: QuiverSpec, x, y) -> bool:
    """True iff ``y`` is reachable from ``x`` by following arrows."""
    x, y = ext(x), ext(y)
    if x == y:
        return True
    for lo, hi in q.segments_containing(x):
        if not (lo.value <= y <= hi.value):
            continue
        if lo.is_sink and y <= x:
            return True
        if hi.is_sink and y >= x:
            return True
    return False


def local_direction(q: QuiverSpec, a) -> Direction:
    a = ext(a)
    if not a.finite:
        raise PointInfinite("direction is only defined at finite points")
    if q.in_s(a):
        raise PointIsSinkOrSource("%s is a sink or source" % a)
    lo, _ = q.segment(a)
    return Direction.ASCENDING if lo.is_sink else Direction.DESCENDING


def enclosing(q: QuiverSpec, a) -> Tuple[Element, Element]:
    a = ext(a)
    if q.in_sbar(a):
        raise PointIsIndexed("%s is an indexed element" % a)
    return q.segment(a)
