"""Placement of indecomposables in the strip R x [-pi/2, pi/2].

Coordinates are floats and used only for display, distances and region tests.
Identity questions (same image, shared endpoint data) are answered
combinatorially and the float results are cross-checked against them.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from .errors import ApexObject, InvalidSign, PointInfinite, SamePoint
from .homalg import _lower_datum, _upper_datum, ar_sequence, ext_with_middle
from .interval import Interval, Variant, classify
from .quiver import ExtReal, QuiverSpec, ext

HALF_PI = math.pi / 2
TWO_PI = 2 * math.pi
TOL = 1e-9
COINCIDENT = 1e-7


@dataclass(frozen=True)
class StripPoint:
    x: float
    y: float

    def __iter__(self):
        return iter((self.x, self.y))

    def dist(self, other: "StripPoint") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def __str__(self):
        return "(%s, %s)" % (_fixed(self.x), _fixed(self.y))


def _fixed(v: float) -> str:
    text = "%.6f" % v
    return text[1:] if text == "-0.000000" else text


def _atan(a: ExtReal) -> float:
    if not a.finite:
        return HALF_PI * a.tag
    return math.atan(a.value)


@lru_cache(maxsize=256)
def anchor_points(q: QuiverSpec) -> Dict[int, Tuple[float, float]]:
    """Images of the projectives at indexed elements, keyed by index."""
    at = {e.index: _atan(e.value) for e in q.elements}
    out = {0: (0.0, at[0])}
    x = 0.0
    for n in range(1, q.max_index + 1):
        x += (-1) ** (n + 1) * (at[n] - at[n - 1])
        out[n] = (x, at[n])
    x = 0.0
    for j in range(1, -q.min_index + 1):
        x += (-1) ** j * (at[-j] - at[-j + 1])
        out[-j] = (x, at[-j])
    return out


def _point(q: QuiverSpec, a: ExtReal) -> Tuple[float, float]:
    """(x_a, y_a): the image of the projectives at ``a`` (anchors at indexed elements)."""
    el = q.element_at(a)
    if el is not None:
        return anchor_points(q)[el.index]
    lo, hi = q.segment(a)
    anchors = anchor_points(q)
    x0, y0 = anchors[lo.index]
    x1, y1 = anchors[hi.index]
    y = _atan(a)
    t = (y - y0) / (y1 - y0)
    return ((1 - t) * x0 + t * x1, y)


def gamma_projective(q: QuiverSpec, a) -> StripPoint:
    a = ext(a)
    if not a.finite:
        raise PointInfinite("no projective at infinity")
    return StripPoint(*_point(q, a))


class Sign(enum.Enum):
    MINUS = "-"
    PLUS = "+"
    UNDECORATED = ""


@dataclass(frozen=True)
class LambdaKey:
    base: ExtReal
    sign: Sign = Sign.UNDECORATED

    def __str__(self):
        return "lambda[%s%s]" % (self.base, self.sign.value)


def _default_sign(q: QuiverSpec, a: ExtReal) -> Sign:
    lo, _ = q.segment(a)
    return Sign.MINUS if lo.is_sink else Sign.PLUS


def _resolve(q: QuiverSpec, key: LambdaKey) -> Sign:
    """The kappa sign actually used by ``key``."""
    a = key.base
    if not a.finite:
        if key.sign is Sign.PLUS:
            raise InvalidSign("the functions at infinity are undecorated")
        return Sign.MINUS
    if q.in_s(a):
        if key.sign is Sign.UNDECORATED:
            raise InvalidSign("%s is a sink or source: choose + or -" % a)
        return key.sign
    want = _default_sign(q, a)
    if key.sign not in (Sign.UNDECORATED, want):
        raise InvalidSign("only the %s function exists at %s" % (want.value, a))
    return want


def kappa(q: QuiverSpec, key: LambdaKey) -> float:
    x, y = _point(q, key.base)
    if _resolve(q, key) is Sign.MINUS:
        return x + y + HALF_PI
    return x - y - HALF_PI


def phat(q: QuiverSpec, key: LambdaKey) -> float:
    """The abscissa where the function of ``key`` reaches pi/2."""
    a = key.base
    x, y = _point(q, a)
    el = q.element_at(a)
    if el is not None:
        if a.tag > 0:
            return x
        if a.tag < 0:
            return x - math.pi if el.is_sink else x + math.pi
        return x - (HALF_PI - y) if el.is_sink else x + (HALF_PI - y)
    if _resolve(q, key) is Sign.PLUS:
        return x + (HALF_PI - y)
    return x - (HALF_PI - y)


def kappa_phat(q: QuiverSpec, a, sign: Sign = Sign.UNDECORATED) -> Tuple[float, float]:
    key = LambdaKey(ext(a), sign)
    return kappa(q, key), phat(q, key)


def tent(z: float) -> float:
    """The 2*pi-periodic tent with minimum -pi/2 at 0 and maximum pi/2 at pi."""
    w = math.fmod(z, TWO_PI)
    if w < 0:
        w += TWO_PI
    return w - HALF_PI if w <= math.pi else 3 * HALF_PI - w


def lambda_eval(q: QuiverSpec, key: LambdaKey, z: float) -> float:
    return tent(z - kappa(q, key))


def all_lambda_keys(q: QuiverSpec):
    """One key per distinct function family: indexed elements get both signs."""
    keys = []
    for e in q.elements:
        if e.value.finite:
            keys.append(LambdaKey(e.value, Sign.MINUS))
            keys.append(LambdaKey(e.value, Sign.PLUS))
        else:
            keys.append(LambdaKey(e.value))
    return keys


def endpoint_keys(q: QuiverSpec, i: Interval) -> Tuple[LambdaKey, LambdaKey]:
    """The two functions whose crossing places a generic interval."""
    a, b = i.lo, i.hi
    if not a.finite or not q.in_s(a):
        ka = LambdaKey(a)
    else:
        # a closed source and the open sink just above it share the minus function
        minus = i.lo_closed == q.element_at(a).is_source
        ka = LambdaKey(a, Sign.MINUS if minus else Sign.PLUS)
    if not b.finite or not q.in_s(b):
        kb = LambdaKey(b)
    else:
        plus = i.hi_closed == q.element_at(b).is_source
        kb = LambdaKey(b, Sign.PLUS if plus else Sign.MINUS)
    return ka, kb


def _generic_gamma(q: QuiverSpec, i: Interval) -> StripPoint:
    ka, kb = endpoint_keys(q, i)
    n = 0 if _resolve(q, kb) is Sign.MINUS else 1
    x = n * math.pi + (kappa(q, ka) + kappa(q, kb)) / 2
    return StripPoint(x, lambda_eval(q, ka, x))


def gamma(q: QuiverSpec, i: Interval) -> StripPoint:
    return _gamma_cached(q, i)


@lru_cache(maxsize=65536)
def _gamma_cached(q: QuiverSpec, i: Interval) -> StripPoint:
    flags = classify(q, i)
    if flags.projective:
        return gamma_projective(q, flags.projective[0][0])
    if flags.injective:
        x, y = _point(q, flags.injective[0][0])
        return StripPoint(x + math.pi, -y)
    if flags.simple:
        a = i.lo
        key = LambdaKey(a)
        if _default_sign(q, a) is Sign.PLUS:
            return StripPoint(phat(q, key), HALF_PI)
        return StripPoint(phat(q, key) + math.pi, -HALF_PI)
    if flags.bar:
        # both ends use the function the pair shares; sit at its extreme
        lo = q.element_at(i.lo)
        hi = q.element(lo.index + 1)
        top = phat(q, LambdaKey(hi.value, Sign.PLUS))
        if lo.is_source:
            return StripPoint(top + math.pi, -HALF_PI)
        return StripPoint(top, HALF_PI)
    return _generic_gamma(q, i)


class Position(enum.IntEnum):
    P1 = 1
    P2 = 2
    P3 = 3
    P4 = 4

    def above(self, other: "Position") -> bool:
        """Strict order 2 > 1 > 3 and 2 > 4 > 3; 1 and 4 are incomparable."""
        higher = {2: {1, 3, 4}, 1: {3}, 4: {3}, 3: set()}
        return int(other) in higher[int(self)]


_PROJECTIVE_POSITION = {Variant.CLOSED: Position.P4, Variant.OPEN_ABOVE: Position.P2, Variant.OPEN_BELOW: Position.P3}
_INJECTIVE_POSITION = {Variant.CLOSED: Position.P1, Variant.OPEN_ABOVE: Position.P3, Variant.OPEN_BELOW: Position.P2}


def position(q: QuiverSpec, i: Interval) -> Position:
    flags = classify(q, i)
    if flags.projective:
        return _PROJECTIVE_POSITION[flags.projective[0][1]]
    if flags.injective:
        return _INJECTIVE_POSITION[flags.injective[0][1]]
    if flags.simple or flags.bar:
        return Position.P3 if gamma(q, i).y > 0 else Position.P2
    return Position(ar_sequence(q, i).role(i))


def _vertex(entries):
    return {a for a, _ in entries}


def same_gamma(q: QuiverSpec, i: Interval, j: Interval) -> bool:
    if i == j:
        return True
    fi, fj = classify(q, i), classify(q, j)
    if _vertex(fi.projective) & _vertex(fj.projective):
        return True
    if _vertex(fi.injective) & _vertex(fj.injective):
        return True
    si = ar_sequence(q, i)
    return si is not None and si.role(j) is not None


class SlopeKind(enum.Enum):
    PLUS_ONE = "+1"
    MINUS_ONE = "-1"
    SHALLOW = "shallow"
    STEEP = "steep"


@dataclass(frozen=True)
class SlopeClass:
    kind: SlopeKind
    r1: float
    r2: float

    def __str__(self):
        return "(%s, %s)" % (_fmt_slope(self.r1), _fmt_slope(self.r2))


def _fmt_slope(r: float) -> str:
    if math.isinf(r):
        return "inf"
    for num, text in ((1 / 3, "1/3"), (-1 / 3, "-1/3")):
        if abs(r - num) < TOL:
            return text
    return "%g" % r


_OFFSET = {1: (-1, 0), 2: (0, 1), 3: (0, -1), 4: (1, 0)}
_EDGES = {frozenset((1, 2)), frozenset((1, 3)), frozenset((2, 4)), frozenset((3, 4))}


def _numeric_slope(p: StripPoint, r: StripPoint) -> float:
    dx = r.x - p.x
    if abs(dx) < TOL:
        return math.inf
    return (r.y - p.y) / dx


def _slope_case(r: float) -> str:
    if math.isinf(r):
        return "steep"
    if abs(abs(r) - 1) < COINCIDENT:
        return "+1" if r > 0 else "-1"
    return "shallow" if abs(r) < 1 else "steep"


_CENTER = {"shallow": (2, 0), "+1": (1, 1), "-1": (1, -1), "steep": (0, 2)}


def _oriented(q, i, j, case: str):
    """Put the left (|r| <= 1) or lower (|r| > 1) object first."""
    gi, gj = gamma(q, i), gamma(q, j)
    if case == "steep":
        swap = gj.y < gi.y
    else:
        swap = gj.x < gi.x
    return (j, i) if swap else (i, j)


def _diamond_slope(pv: int, pw: int, center, fallback: float) -> float:
    ox, oy = _OFFSET[pv]
    wx, wy = _OFFSET[pw]
    dx = center[0] + wx - ox
    dy = center[1] + wy - oy
    if dx == 0 and dy == 0:
        return fallback
    if dx == 0:
        return math.inf
    return dy / dx


def slope_class(q: QuiverSpec, i: Interval, j: Interval) -> SlopeClass:
    if i == j:
        raise SamePoint("slope of a degenerate segment is undefined")
    if _lower_datum(i) == _lower_datum(j):
        return SlopeClass(SlopeKind.PLUS_ONE, 1.0, 1.0)
    if _upper_datum(i) == _upper_datum(j):
        return SlopeClass(SlopeKind.MINUS_ONE, -1.0, -1.0)
    pi_, pj = int(position(q, i)), int(position(q, j))
    if same_gamma(q, i, j):
        r2 = _diamond_slope(pi_, pj, (0, 0), 0.0)
        kind = SlopeKind.STEEP if math.isinf(r2) or abs(r2) > 1 else SlopeKind.SHALLOW
        return SlopeClass(kind, r2, r2)
    r1 = _numeric_slope(gamma(q, i), gamma(q, j))
    case = _slope_case(r1)
    v, w = _oriented(q, i, j, case)
    r2 = _diamond_slope(int(position(q, v)), int(position(q, w)), _CENTER[case], r1)
    if case in ("+1", "-1"):
        # a diagonal without a shared end: only the diamond slope separates it
        kind = SlopeKind.STEEP if math.isinf(r2) or abs(r2) > 1 else SlopeKind.SHALLOW
    else:
        kind = SlopeKind.STEEP if case == "steep" else SlopeKind.SHALLOW
    return SlopeClass(kind, r1, r2)



_Z_TABLES = {
    "shallow": {(1, 2): 1, (1, 3): 1, (1, 4): 2, (2, 1): -1, (2, 3): 0, (2, 4): 1,
                (3, 1): -1, (3, 2): 0, (3, 4): 1, (4, 1): -2, (4, 2): -1, (4, 3): -1},
    "+1": {(1, 2): 1, (1, 3): 1, (1, 4): 2, (2, 1): -1, (2, 3): 0, (2, 4): 1,
           (3, 1): 0, (3, 2): 1, (3, 4): 1, (4, 1): -1, (4, 2): 0, (4, 3): -1},
    "-1": {(1, 2): 1, (1, 3): 1, (1, 4): 2, (2, 1): 0, (2, 3): 1, (2, 4): 1,
           (3, 1): -1, (3, 2): 0, (3, 4): 1, (4, 1): -1, (4, 2): -1, (4, 3): 0},
    "steep": {(1, 2): 1, (1, 3): -1, (1, 4): 0, (2, 1): -1, (2, 3): -2, (2, 4): -1,
              (3, 1): 1, (3, 2): 2, (3, 4): 1, (4, 1): 0, (4, 2): 1, (4, 3): -1},
}


@functools.total_ordering
@dataclass(frozen=True)
class GenDist:
    """A value of R + Z ordered lexicographically; reals compare with a tolerance."""

    r: float
    z: int

    def __add__(self, other: "GenDist") -> "GenDist":
        return GenDist(self.r + other.r, self.z + other.z)

    def __eq__(self, other):
        if not isinstance(other, GenDist):
            return NotImplemented
        return abs(self.r - other.r) <= TOL and self.z == other.z

    def __hash__(self):
        return hash(self.z)

    def __lt__(self, other):
        if abs(self.r - other.r) <= TOL:
            return self.z < other.z
        return self.r < other.r

    def __str__(self):
        if abs(self.r) <= TOL:
            return "(0, %d)" % self.z
        return "(%.6f, %d)" % (self.r, self.z)


def _diamond_edges(p: int, r: int) -> int:
    if p == r:
        return 0
    return 1 if frozenset((p, r)) in _EDGES else 2


def metric_d(q: QuiverSpec, i: Interval, j: Interval) -> GenDist:
    if i == j:
        return GenDist(0.0, 0)
    if same_gamma(q, i, j):
        return GenDist(0.0, _diamond_edges(int(position(q, i)), int(position(q, j))))
    gi, gj = gamma(q, i), gamma(q, j)
    case = _slope_case(_numeric_slope(gi, gj))
    v, w = _oriented(q, i, j, case)
    pv, pw = int(position(q, v)), int(position(q, w))
    z = 0 if pv == pw else _Z_TABLES[case][(pv, pw)]
    return GenDist(gi.dist(gj), z)


class Region(enum.Enum):
    INTERIOR = "InteriorH"
    BOUNDARY = "Boundary"
    R1 = "Region1"
    R2 = "Region2"
    R3 = "Region3"
    R4 = "Region4"
    R5 = "Region5"
    R6 = "Region6"


@dataclass(frozen=True)
class RegionResult:
    region: Region
    edge: Optional[str] = None
    hom: Optional[int] = None

    def __str__(self):
        if self.region is Region.BOUNDARY:
            return "Boundary(%s)" % self.edge
        return self.region.value


def _hv_coords(gv: StripPoint, gw: StripPoint):
    """Coordinates of W along the two diagonals through V, with the far sides."""
    dx, dy = gw.x - gv.x, gw.y - gv.y
    s, t = dx - dy, dx + dy
    return s, t, math.pi + 2 * gv.y, math.pi - 2 * gv.y


def _outside_region(s, t, s_max, t_max) -> Region:
    if s < 0 and t < 0:
        return Region.R1
    if s > s_max and t > t_max:
        return Region.R6
    if s < 0:
        return Region.R2
    if t < 0:
        return Region.R3
    if t > t_max:
        return Region.R4
    return Region.R5


def _edge_name(s, t, s_max, t_max, tol) -> str:
    on_s0, on_t0 = abs(s) <= tol, abs(t) <= tol
    on_s1, on_t1 = abs(s - s_max) <= tol, abs(t - t_max) <= tol
    if on_s0 and on_t0:
        return "apex"
    if on_s1 and on_t1:
        return "far"
    if on_s0 and on_t1:
        return "top"
    if on_t0 and on_s1:
        return "bottom"
    if on_s0:
        return "upper-left"
    if on_t0:
        return "lower-left"
    if on_t1:
        return "upper-right"
    return "lower-right"


def hom_region(q: QuiverSpec, v: Interval, w: Interval) -> RegionResult:
    """Locate Gamma W relative to the Hom cone of V.

    ``hom`` is the predicted dimension of Hom(V, W): 1 inside the cone, 0 in
    the six outer regions, and on the boundary the value given by the
    boundary rules in ``_boundary_hom``.
    """
    gv = gamma(q, v)
    if abs(gv.y) >= HALF_PI - TOL:
        raise ApexObject("%s sits on the strip boundary" % v)
    gw = gamma(q, w)
    s, t, s_max, t_max = _hv_coords(gv, gw)
    tol = COINCIDENT
    if s < -tol or t < -tol or s > s_max + tol or t > t_max + tol:
        return RegionResult(_outside_region(s, t, s_max, t_max), hom=0)
    if s > tol and t > tol and s < s_max - tol and t < t_max - tol:
        return RegionResult(Region.INTERIOR, hom=1)
    edge = _edge_name(s, t, s_max, t_max, tol)
    return RegionResult(Region.BOUNDARY, edge, _boundary_hom(q, v, w, edge))


# sides of the cone met by each boundary piece
_EDGE_SIDES = {
    "apex": ("upper-left", "lower-left"),
    "top": ("upper-left", "upper-right"),
    "bottom": ("lower-left", "lower-right"),
    "far": ("upper-right", "lower-right"),
    "upper-left": ("upper-left",),
    "lower-left": ("lower-left",),
    "upper-right": ("upper-right",),
    "lower-right": ("lower-right",),
}


def _side_admits(side: str, pv: int, pw: int) -> bool:
    """Whether a nonzero map survives across one side of the cone.

    On the near sides the diamond of V must not sit on its inner edge unless
    W sits on the matching inner edge; on the far sides only the corners of
    V facing the side reach the corners of W facing back.
    """
    if side == "upper-left":
        return pv in (1, 2) or pw in (3, 4)
    if side == "lower-left":
        return pv in (1, 3) or pw in (2, 4)
    if side == "upper-right":
        return pv in (3, 4) and pw in (1, 3)
    return pv in (2, 4) and pw in (1, 2)


def _boundary_hom(q, v, w, edge) -> int:
    pv, pw = int(position(q, v)), int(position(q, w))
    return int(all(_side_admits(side, pv, pw) for side in _EDGE_SIDES[edge]))


# ------------------------------------------------------------------ rectangles


class RectangleKind(enum.Enum):
    COMPLETE = "Complete"
    ALMOST_COMPLETE = "AlmostComplete"
    NONE = "None"


@dataclass(frozen=True)
class RectangleResult:
    kind: RectangleKind
    corners: Tuple[Interval, ...] = ()
    phantom: Optional[Interval] = None

    def __str__(self):
        if self.kind is RectangleKind.NONE:
            return "None"
        text = "%s{%s}" % (self.kind.value, ", ".join(str(c) for c in self.corners))
        if self.phantom is not None:
            text += " phantom %s" % self.phantom
        return text


def _junction_candidates(q: QuiverSpec, c: ExtReal):
    """Simples and bars touching the point where two supports meet."""
    out = []
    if c.finite:
        out.append(Interval(c, True, c, True))
    els = q.elements
    for lo, hi in zip(els, els[1:]):
        if lo.value <= c <= hi.value:
            bar = Interval(lo.value, lo.value.finite, hi.value, hi.value.finite)
            out.append(bar)
    return out


def phantom_corner(q: QuiverSpec, v: Interval, w: Interval, e: Interval) -> Optional[Interval]:
    """The boundary object completing the rectangle on V, E, W, if any."""
    gv, gw, ge = gamma(q, v), gamma(q, w), gamma(q, e)
    target = StripPoint(gv.x + gw.x - ge.x, gv.y + gw.y - ge.y)
    if abs(abs(target.y) - HALF_PI) > TOL:
        return None
    c = v.hi if v.hi == w.lo else v.lo
    for cand in _junction_candidates(q, c):
        if gamma(q, cand).dist(target) < COINCIDENT:
            return cand
    return None


def extension_rectangle(q: QuiverSpec, v: Interval, w: Interval) -> RectangleResult:
    """The rectangle spanned by the nonsplit extension of W by V, if one exists."""
    ext = ext_with_middle(q, w, v)
    if ext.dim == 0:
        return RectangleResult(RectangleKind.NONE)
    if ext.arity == 2:
        a, b = ext.middle
        return RectangleResult(RectangleKind.COMPLETE, (v, a, b, w))
    (e,) = ext.middle
    return RectangleResult(RectangleKind.ALMOST_COMPLETE, (v, e, w), phantom_corner(q, v, w, e))
