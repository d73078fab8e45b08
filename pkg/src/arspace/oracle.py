"""Brute-force verification backend.

Any finite collection of intervals over a quiver is restricted to a finite
type-A quiver whose vertices are sample points: every critical value (finite
sinks, sources and interval endpoints), a midpoint between each consecutive
pair, and one sentinel beyond each extreme.  Hom is the solution space of the
commutativity equations, computed by exact integer rank; Ext comes from the
Euler form of the path algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from ._kernels import euler_form as _euler_kernel
from ._kernels import int_rank
from .errors import NegativeExt
from .interval import Interval, try_interval
from .quiver import (
    NEG_INF,
    POS_INF,
    Direction,
    ExtReal,
    Parity,
    QuiverSpec,
    local_direction,
)


@dataclass(frozen=True)
class Grid:
    samples: Tuple[Fraction, ...]
    # arrows[i] is +1 for samples[i] -> samples[i+1] and -1 for the reverse
    arrows: Tuple[int, ...]

    def __len__(self):
        return len(self.samples)


@dataclass(frozen=True)
class GridRep:
    dims: Tuple[int, ...]

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.dims) if d)


def _critical_values(q: QuiverSpec, intervals: Sequence[Interval]) -> List[Fraction]:
    vals = set(q.points)
    for i in intervals:
        for e in (i.lo, i.hi):
            if e.finite:
                vals.add(e.value)
    return sorted(vals)


def _with_midpoints(vals: Sequence[Fraction]) -> List[Fraction]:
    out = [vals[0]]
    for a, b in zip(vals, vals[1:]):
        out.append((a + b) / 2)
        out.append(b)
    return out


def build_grid(q: QuiverSpec, intervals: Sequence[Interval], refine: int = 0) -> Grid:
    """Critical-value grid; each ``refine`` step adds a midpoint between every pair."""
    crit = _critical_values(q, intervals)
    samples = [crit[0] - 1] + _with_midpoints(crit) + [crit[-1] + 1]
    for _ in range(refine):
        samples = _with_midpoints(samples)
    arrows = []
    for a, b in zip(samples, samples[1:]):
        mid = ExtReal(0, (a + b) / 2)
        arrows.append(-1 if local_direction(q, mid) is Direction.ASCENDING else 1)
    return Grid(tuple(samples), tuple(arrows))


def restrict(i: Interval, g: Grid) -> GridRep:
    return GridRep(tuple(1 if i.contains(ExtReal(0, p)) else 0 for p in g.samples))


def _edges(g: Grid):
    for i, d in enumerate(g.arrows):
        yield (i, i + 1) if d > 0 else (i + 1, i)


def _hom_system(g: Grid, v: GridRep, w: GridRep):
    """Rows of the commutativity equations on the unknowns f_p: V(p) -> W(p)."""
    unknowns = [i for i in range(len(g)) if v.dims[i] and w.dims[i]]
    col = {p: c for c, p in enumerate(unknowns)}
    rows = []
    for s, t in _edges(g):
        row = [0] * len(unknowns)
        # W(s->t) f_s - f_t V(s->t) = 0
        if s in col:
            row[col[s]] += w.dims[s] * w.dims[t]
        if t in col:
            row[col[t]] -= v.dims[s] * v.dims[t]
        if any(row):
            rows.append(row)
    return unknowns, rows


def hom_dim_grid(g: Grid, v: GridRep, w: GridRep) -> int:
    unknowns, rows = _hom_system(g, v, w)
    if not unknowns:
        return 0
    return len(unknowns) - int_rank(rows, len(unknowns))


def hom_basis(g: Grid, v: GridRep, w: GridRep) -> List[Tuple[Fraction, ...]]:
    """Basis of Hom(v, w) as per-sample scalars (zero off the common support)."""
    unknowns, rows = _hom_system(g, v, w)
    if not unknowns:
        return []
    m = sympy.Matrix(rows) if rows else sympy.zeros(1, len(unknowns))
    out = []
    for vec in m.nullspace():
        full = [Fraction(0)] * len(g)
        for c, p in enumerate(unknowns):
            full[p] = Fraction(int(vec[c].p), int(vec[c].q))
        out.append(tuple(full))
    return out


def euler_form(g: Grid, w: GridRep, v: GridRep) -> int:
    return _euler_kernel(w.dims, v.dims, g.arrows)


def ext_dim_grid(g: Grid, w: GridRep, v: GridRep) -> int:
    """dim Ext^1(w, v) = dim Hom(w, v) - <w, v>."""
    e = hom_dim_grid(g, w, v) - euler_form(g, w, v)
    if e < 0:
        raise NegativeExt("negative Ext dimension %d: grid is not faithful" % e)
    return e


def in_span(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> bool:
    """Exact test that ``target`` is a linear combination of ``vectors``."""
    vecs = [list(v) for v in vectors if any(v)]
    if not any(target):
        return True
    if not vecs:
        return False
    a = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in vecs])
    b = a.col_join(sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in target]]))
    return a.rank() == b.rank()


def oracle_hom(q: QuiverSpec, i: Interval, j: Interval, refine: int = 0) -> int:
    g = build_grid(q, [i, j], refine)
    return hom_dim_grid(g, restrict(i, g), restrict(j, g))


def oracle_ext(q: QuiverSpec, w: Interval, v: Interval, refine: int = 0) -> int:
    g = build_grid(q, [w, v], refine)
    return ext_dim_grid(g, restrict(w, g), restrict(v, g))


_INF_PROBABILITY = 0.15
_SIMPLE_PROBABILITY = 0.1


def random_quiver(rng: random.Random, max_ss: int) -> QuiverSpec:
    k = rng.randint(1, max_ss)
    pts = sorted(rng.sample(range(-4, 5), k))
    parity = rng.choice([Parity.EVEN, Parity.ODD])
    return QuiverSpec(tuple(Fraction(p) for p in pts), parity)


def random_interval(rng: random.Random, q: QuiverSpec) -> Interval:
    lo_v, hi_v = q.points[0] - 2, q.points[-1] + 2
    lattice = [lo_v + Fraction(i, 2) for i in range(int(2 * (hi_v - lo_v)) + 1)]
    if rng.random() < _SIMPLE_PROBABILITY:
        a = rng.choice(lattice)
        return Interval(ExtReal(0, a), True, ExtReal(0, a), True)
    while True:
        a = NEG_INF if rng.random() < _INF_PROBABILITY else ExtReal(0, rng.choice(lattice))
        b = POS_INF if rng.random() < _INF_PROBABILITY else ExtReal(0, rng.choice(lattice))
        i = try_interval(a, rng.random() < 0.5, b, rng.random() < 0.5)
        if i is not None:
            return i


def random_instance(seed: int, max_ss: int = 4, count: int = 2) -> Tuple[QuiverSpec, List[Interval]]:
    """Deterministic random quiver plus ``count`` intervals."""
    if not 1 <= max_ss <= 6:
        raise ValueError("max_ss must lie in 1..6")
    rng = random.Random(seed)
    q = random_quiver(rng, max_ss)
    return q, [random_interval(rng, q) for _ in range(count)]


def pointwise_dims(i: Interval, g: Grid) -> Tuple[int, ...]:
    return restrict(i, g).dims


def compose(*maps: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Pointwise product of scalar maps between interval modules."""
    out = [Fraction(1)] * len(maps[0])
    for m in maps:
        out = [a * b for a, b in zip(out, m)]
    return tuple(out)


def basis_map(g: Grid, v: Interval, w: Interval) -> Optional[Tuple[Fraction, ...]]:
    basis = hom_basis(g, restrict(v, g), restrict(w, g))
    return basis[0] if basis else None
