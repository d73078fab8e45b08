from fractions import Fraction

import pytest
from hypothesis import given

from arspace.errors import NegativeExt
from arspace.oracle import (
    build_grid,
    ext_dim_grid,
    euler_form,
    hom_dim_grid,
    oracle_ext,
    oracle_hom,
    random_instance,
    restrict,
)
from arspace.quiver import validate_quiver

from conftest import I, quiver_and_intervals


def test_grid_construction(q1):
    g = build_grid(q1, [I("[0,1]"), I("[0,2]")])
    assert set(map(Fraction, ("-1", "0", "1/2", "1", "3/2", "2", "3"))) <= set(g.samples)
    assert restrict(I("[0,1]"), g).dims == (0, 1, 1, 1, 0, 0, 0)
    assert restrict(I("(0,1)"), g).dims == (0, 0, 1, 0, 0, 0, 0)


def test_grid_hom_examples(q1):
    g = build_grid(q1, [I("[0,1]"), I("[0,2]")])
    a, b = restrict(I("[0,1]"), g), restrict(I("[0,2]"), g)
    assert hom_dim_grid(g, a, b) == 1
    assert hom_dim_grid(g, b, a) == 0
    assert hom_dim_grid(g, a, a) == 1


def test_grid_ext_examples(q1):
    assert oracle_ext(q1, I("[2,3)"), I("[1,2)")) == 1
    assert oracle_ext(q1, I("[1,2)"), I("[1,2)")) == 0
    assert oracle_ext(q1, I("[0,1]"), I("[5,6)")) == 0


def test_negative_ext_signals_unfaithful_grid(q1):
    g = build_grid(q1, [I("[1,2)")])
    v = restrict(I("[1,2)"), g)
    # the hom solver assumes 0/1 dimensions; a doubled vector breaks the count
    doubled = type(v)(tuple(2 * d for d in v.dims))
    with pytest.raises(NegativeExt):
        ext_dim_grid(g, doubled, doubled)


def test_random_instance_is_deterministic():
    assert random_instance(0) == random_instance(0)
    assert random_instance(0) != random_instance(1)
    with pytest.raises(ValueError):
        random_instance(0, max_ss=7)


@given(quiver_and_intervals(count=3))
def test_generated_instances_are_valid(data):
    q, ivs = data
    assert validate_quiver(q) is q
    for i in ivs:
        assert not (not i.lo.finite and i.lo_closed) and not (not i.hi.finite and i.hi_closed)


@given(quiver_and_intervals())
def test_refinement_stability(data):
    q, (v, w) = data
    assert oracle_hom(q, v, w) == oracle_hom(q, v, w, refine=1)
    assert oracle_ext(q, w, v) == oracle_ext(q, w, v, refine=1)


@given(quiver_and_intervals())
def test_dimensions_are_zero_or_one(data):
    q, (v, w) = data
    assert oracle_hom(q, v, w) in (0, 1)
    assert oracle_ext(q, w, v) in (0, 1)


@given(quiver_and_intervals(count=1))
def test_interval_euler_form_is_one(data):
    q, (v,) = data
    g = build_grid(q, [v])
    r = restrict(v, g)
    assert euler_form(g, r, r) == 1
