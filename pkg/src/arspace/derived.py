"""Shifted indecomposables of the bounded derived category.

The category is hereditary, so every indecomposable object is an interval
module placed in a single degree.  Morphisms between two of them live in
degree difference 0 (Hom) or 1 (Ext^1) and vanish otherwise.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import IntervalSyntaxError
from .geometry import (
    COINCIDENT,
    HALF_PI,
    TOL,
    Position,
    RectangleKind,
    StripPoint,
    extension_rectangle,
    gamma,
    position,
)
from .homalg import ext_with_middle, hom_dim, kernel_cokernel
from .interval import Interval, format_interval, parse_interval
from .quiver import QuiverSpec


@dataclass(frozen=True)
class DObject:
    interval: Interval
    shift: int = 0

    def shifted(self, n: int) -> "DObject":
        return DObject(self.interval, self.shift + n)

    def __str__(self):
        return format_dobject(self)


_SHIFT_RE = re.compile(r"^(.*?)(?:@\s*([+-]?\d+))?\s*$")


def parse_dobject(text: str) -> DObject:
    """Parse ``INTERVAL[@SHIFT]``, e.g. ``[0,1)@-2``."""
    m = _SHIFT_RE.match(text)
    body, shift = m.group(1), m.group(2)
    if "@" in body:
        raise IntervalSyntaxError("bad shift in %r" % text)
    return DObject(parse_interval(body), int(shift) if shift else 0)


def format_dobject(x: DObject) -> str:
    return "%s@%d" % (format_interval(x.interval), x.shift)


def gamma_b(q: QuiverSpec, x: DObject) -> StripPoint:
    p = gamma(q, x.interval)
    return StripPoint(p.x + x.shift * math.pi, -p.y if x.shift % 2 else p.y)


_ODD_SHIFT = {Position.P2: Position.P3, Position.P3: Position.P2}


def derived_position(q: QuiverSpec, x: DObject) -> Position:
    p = position(q, x.interval)
    if x.shift % 2:
        return _ODD_SHIFT.get(p, p)
    return p


def derived_hom_dim(q: QuiverSpec, x: DObject, y: DObject) -> int:
    """dim Hom(X, Y): Hom in equal degrees, Ext^1(X, Y) when Y sits one higher."""
    gap = y.shift - x.shift
    if gap == 0:
        return hom_dim(q, x.interval, y.interval).dim
    if gap == 1:
        return ext_with_middle(q, x.interval, y.interval).dim
    return 0


@dataclass(frozen=True)
class TriangleResult:
    """A nontrivial triangle V -> U -> W -> V[1]; ``middle`` lists the summands of U."""

    kind: RectangleKind
    v: Optional[DObject] = None
    middle: Tuple[DObject, ...] = ()
    w: Optional[DObject] = None
    phantom: Optional[DObject] = None

    @property
    def objects(self) -> Tuple[DObject, ...]:
        if self.kind is RectangleKind.NONE:
            return ()
        return (self.v,) + self.middle + (self.w,)

    def __str__(self):
        if self.kind is RectangleKind.NONE:
            return "None"
        text = "%s{%s}" % (self.kind.value, ", ".join(str(o) for o in self.objects))
        if self.phantom is not None:
            text += " phantom %s" % self.phantom
        return text


def _boundary_candidates(q: QuiverSpec, intervals):
    """Simples at the endpoints in play and every bar of the quiver."""
    out = []
    for i in intervals:
        for e in (i.lo, i.hi):
            if e.finite:
                out.append(Interval(e, True, e, True))
    els = q.elements
    for lo, hi in zip(els, els[1:]):
        out.append(Interval(lo.value, lo.value.finite, hi.value, hi.value.finite))
    return out


def _derived_phantom(q: QuiverSpec, v: DObject, u: DObject, w: DObject) -> Optional[DObject]:
    gv, gu, gw = gamma_b(q, v), gamma_b(q, u), gamma_b(q, w)
    target = StripPoint(gv.x + gw.x - gu.x, gv.y + gw.y - gu.y)
    if abs(abs(target.y) - HALF_PI) > TOL:
        return None
    for cand in _boundary_candidates(q, (v.interval, u.interval, w.interval)):
        for shift in sorted({v.shift, w.shift}):
            x = DObject(cand, shift)
            if gamma_b(q, x).dist(target) < COINCIDENT:
                return x
    return None


def _kind(n: int) -> RectangleKind:
    return RectangleKind.COMPLETE if n == 2 else RectangleKind.ALMOST_COMPLETE


def triangle(q: QuiverSpec, v: DObject, w: DObject) -> TriangleResult:
    """The triangle whose connecting map W -> V[1] is the nonzero one, if any."""
    gap = w.shift - v.shift
    if gap == 0:
        rect = extension_rectangle(q, v.interval, w.interval)
        if rect.kind is RectangleKind.NONE:
            return TriangleResult(RectangleKind.NONE)
        mid = tuple(DObject(c, v.shift) for c in rect.corners[1:-1])
        phantom = DObject(rect.phantom, v.shift) if rect.phantom is not None else None
        return TriangleResult(rect.kind, v, mid, w, phantom)
    if gap == 1:
        if hom_dim(q, w.interval, v.interval).dim == 0:
            return TriangleResult(RectangleKind.NONE)
        # W[-1] -> V has cone coker(f) + ker(f)[1]
        ker, coker = kernel_cokernel(q, w.interval, v.interval)
        mid = tuple(DObject(c, v.shift) for c in coker) + tuple(DObject(k, w.shift) for k in ker)
        if not mid:
            return TriangleResult(RectangleKind.NONE)
        phantom = _derived_phantom(q, v, mid[0], w) if len(mid) == 1 else None
        return TriangleResult(_kind(len(mid)), v, mid, w, phantom)
    return TriangleResult(RectangleKind.NONE)
