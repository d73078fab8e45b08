"""Randomized cross-checks of the combinatorial answers against the grid oracle."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List

from .geometry import (
    COINCIDENT,
    HALF_PI,
    TOL,
    RectangleKind,
    extension_rectangle,
    gamma,
    hom_region,
    same_gamma,
)
from .homalg import ext_with_middle, hom_dim
from .interval import classify
from .oracle import oracle_ext, oracle_hom, random_instance

SUITES = ("hom", "ext", "one-way", "region", "rectangle", "same-gamma")


@dataclass
class Report:
    checked: Counter = field(default_factory=Counter)
    failures: Dict[str, List[str]] = field(default_factory=dict)

    def record(self, suite: str, ok: bool, detail: str) -> None:
        self.checked[suite] += 1
        if not ok:
            self.failures.setdefault(suite, []).append(detail)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> List[str]:
        out = []
        for s in SUITES:
            bad = len(self.failures.get(s, ()))
            out.append("%-10s %d checked, %d disagreements" % (s, self.checked[s], bad))
            for d in self.failures.get(s, [])[:5]:
                out.append("  " + d)
        return out


def _rectangle_ok(q, v, w, ext) -> bool:
    rect = extension_rectangle(q, v, w)
    if ext.dim == 0:
        return rect.kind is RectangleKind.NONE
    if ext.arity == 2:
        return rect.kind is RectangleKind.COMPLETE
    if rect.kind is not RectangleKind.ALMOST_COMPLETE or rect.phantom is None:
        return False
    flags = classify(q, rect.phantom)
    edge = abs(abs(gamma(q, rect.phantom).y) - HALF_PI) <= TOL
    return (flags.simple or flags.bar) and edge


def run(trials: int, seed: int, max_ss: int = 4) -> Report:
    rep = Report()
    for n in range(trials):
        q, (v, w) = random_instance(seed * 1_000_003 + n, max_ss)
        tag = "seed %d: %s %s %s" % (seed * 1_000_003 + n, q, v, w)
        h_vw, h_wv = hom_dim(q, v, w).dim, hom_dim(q, w, v).dim
        rep.record("hom", h_vw == oracle_hom(q, v, w) and h_wv == oracle_hom(q, w, v), tag)
        e_wv = ext_with_middle(q, w, v)
        e_vw = ext_with_middle(q, v, w)
        rep.record("ext", e_wv.dim == oracle_ext(q, w, v) and e_vw.dim == oracle_ext(q, v, w), tag)
        rep.record("one-way", v == w or not (h_vw and h_wv), tag)
        if abs(gamma(q, v).y) < HALF_PI - TOL:
            rep.record("region", hom_region(q, v, w).hom == h_vw, tag)
        rep.record("rectangle", _rectangle_ok(q, v, w, e_wv), tag)
        close = gamma(q, v).dist(gamma(q, w)) < COINCIDENT
        rep.record("same-gamma", same_gamma(q, v, w) == close, tag)
    return rep
