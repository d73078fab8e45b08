"""Exact homological algebra of interval modules.

Every predicate here is combinatorial: the order is only ever probed at
exact rational points, never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import ZeroHom
from .interval import Interval, classify, difference, intersect, splice, try_interval, union_if_interval
from .quiver import Direction, ExtReal, QuiverSpec, local_direction, precedes


@dataclass(frozen=True)
class HomResult:
    dim: int
    witness: Optional[Interval] = None

    def __int__(self):
        return self.dim


def _eps(q: QuiverSpec, *intervals: Interval) -> Fraction:
    """A radius small enough that no critical value lies within it of another."""
    vals = set(q.points)
    for i in intervals:
        for e in (i.lo, i.hi):
            if e.finite:
                vals.add(e.value)
    vals = sorted(vals)
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    return min(gaps) / 4 if gaps else Fraction(1)


def _probes(c: ExtReal, eps: Fraction):
    return [ExtReal(0, c.value - eps), c, ExtReal(0, c.value + eps)]


def _flows_across(q, piece: Interval, core: Interval, eps, into_core: bool) -> bool:
    """Whether some point of ``piece`` and some point of ``core`` are related.

    With ``into_core`` the question is whether a core point lies below
    (is reachable from) a piece point; otherwise whether a piece point lies
    below a core point.  Both sets are intervals meeting at one junction, so
    it is enough to look at the junction and its ``eps``-neighbours.
    """
    c = core.lo if piece.hi <= core.lo else core.hi
    pts = _probes(c, eps)
    ps = [p for p in pts if piece.contains(p)]
    ks = [k for k in pts if core.contains(k)]
    for p in ps:
        for k in ks:
            if into_core and precedes(q, p, k):
                return True
            if not into_core and precedes(q, k, p):
                return True
    return False


def hom_dim(q: QuiverSpec, i: Interval, j: Interval) -> HomResult:
    """Dimension of Hom(M_i, M_j), with the image support as witness."""
    k = intersect(i, j)
    if k is None:
        return HomResult(0)
    eps = _eps(q, i, j)
    # the image must be a quotient of M_i: nothing of i outside k lies above k
    for piece in difference(i, k):
        if _flows_across(q, piece, k, eps, into_core=True):
            return HomResult(0)
    # and a submodule of M_j: nothing of j outside k lies below k
    for piece in difference(j, k):
        if _flows_across(q, piece, k, eps, into_core=False):
            return HomResult(0)
    return HomResult(1, k)


def kernel_cokernel(q: QuiverSpec, i: Interval, j: Interval):
    """Kernel and cokernel supports of the nonzero map M_i -> M_j.

    Each is a tuple of zero, one or two intervals (a kernel can split into a
    piece on each side of the image).
    """
    h = hom_dim(q, i, j)
    if h.dim == 0:
        raise ZeroHom("Hom(%s, %s) = 0" % (i, j))
    return tuple(difference(i, h.witness)), tuple(difference(j, h.witness))


@dataclass(frozen=True)
class ExtResult:
    dim: int
    middle: Tuple[Interval, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.middle)


def _corners(v: Interval, w: Interval):
    a = splice(v.lower, w.upper)
    b = splice(w.lower, v.upper)
    return a, b


def ext_with_middle(q: QuiverSpec, w: Interval, v: Interval) -> ExtResult:
    """Ext^1(M_w, M_v) and the middle term of the nonsplit extension 0 -> v -> E -> w -> 0."""
    if v == w:
        return ExtResult(0)
    if intersect(v, w) is None:
        e = union_if_interval(v, w)
        if e is None:
            return ExtResult(0)
        sub = hom_dim(q, v, e)
        quo = hom_dim(q, e, w)
        if sub.dim and sub.witness == v and quo.dim and quo.witness == w:
            return ExtResult(1, (e,))
        return ExtResult(0)
    if hom_dim(q, v, w).dim == 0:
        return ExtResult(0)
    a, b = _corners(v, w)
    if a is None or b is None:
        return ExtResult(0)
    if len({a, b, v, w}) < 4:
        return ExtResult(0)
    return ExtResult(1, (a, b))


# ----------------------------------------------------------------- AR sequences

# endpoint data: (value, closed); infinite ends count as closed here since the
# Table entries at +-inf behave like the closed ones


def _lower_datum(i: Interval):
    return (i.lo, i.lo_closed or not i.lo.finite)


def _upper_datum(i: Interval):
    return (i.hi, i.hi_closed or not i.hi.finite)


def _ascending(q, a: ExtReal) -> bool:
    return local_direction(q, a) is Direction.ASCENDING


def _lower_partner(q: QuiverSpec, datum):
    a, closed = datum
    el = q.element_at(a)
    if el is None:
        return (a, not closed)
    if closed:
        return (q.element(el.index + 1).value, False)
    return (q.element(el.index - 1).value, True)


def _upper_partner(q: QuiverSpec, datum):
    a, closed = datum
    el = q.element_at(a)
    if el is None:
        return (a, not closed)
    if closed:
        return (q.element(el.index - 1).value, False)
    return (q.element(el.index + 1).value, True)


def _lower_is_first(q, datum) -> bool:
    a, closed = datum
    el = q.element_at(a)
    if el is None:
        return closed == _ascending(q, a)
    return el.is_source


def _upper_is_first(q, datum) -> bool:
    b, closed = datum
    el = q.element_at(b)
    if el is None:
        return closed != _ascending(q, b)
    return el.is_source


def _build(lower, upper) -> Optional[Interval]:
    (a, ac), (b, bc) = lower, upper
    return try_interval(a, ac and a.finite, b, bc and b.finite)


@dataclass(frozen=True)
class ARSequence:
    """V1 -> V2 + V3 -> V4; V2 shares V1's lower datum and V3 its upper one."""

    type_tag: int
    first: Interval
    mid_top: Interval
    mid_bot: Interval
    last: Interval

    @property
    def terms(self) -> Tuple[Interval, Interval, Interval, Interval]:
        return (self.first, self.mid_top, self.mid_bot, self.last)

    def role(self, i: Interval) -> Optional[int]:
        for n, t in enumerate(self.terms, 1):
            if t == i:
                return n
        return None

    def __str__(self):
        return "type (%d): %s -> %s + %s -> %s" % ((self.type_tag,) + self.terms)


def _type_tag(q, lo1, hi1) -> int:
    a, a_closed = lo1
    b, b_closed = hi1
    a_in = q.in_sbar(a)
    b_in = q.in_sbar(b)
    if not a_in and not b_in:
        return {(True, True): 1, (True, False): 2, (False, True): 3, (False, False): 4}[
            (_ascending(q, a), _ascending(q, b))
        ]
    if a_in and not b_in:
        base = 5 if a_closed else 7
        return base if _ascending(q, b) else base + 1
    if b_in and not a_in:
        base = 9 if b_closed else 11
        return base if _ascending(q, a) else base + 1
    return {(False, True): 13, (True, True): 14, (False, False): 15, (True, False): 16}[(a_closed, b_closed)]


def ar_sequence(q: QuiverSpec, i: Interval) -> Optional[ARSequence]:
    """The unique AR sequence containing M_i, or None when there is none."""
    if not classify(q, i).in_ar_sequence:
        return None
    lo, hi = _lower_datum(i), _upper_datum(i)
    lo1 = lo if _lower_is_first(q, lo) else _lower_partner(q, lo)
    hi1 = hi if _upper_is_first(q, hi) else _upper_partner(q, hi)
    lo4 = _lower_partner(q, lo1)
    hi4 = _upper_partner(q, hi1)
    terms = (_build(lo1, hi1), _build(lo1, hi4), _build(lo4, hi1), _build(lo4, hi4))
    if any(t is None for t in terms):
        return None
    return ARSequence(_type_tag(q, lo1, hi1), *terms)
