import pytest
from hypothesis import given

from arspace.errors import ZeroHom
from arspace.homalg import ar_sequence, ext_with_middle, hom_dim, kernel_cokernel
from arspace.interval import classify
from arspace.oracle import build_grid, oracle_ext, oracle_hom, pointwise_dims

from conftest import I, Q, quiver_and_intervals


def test_hom_examples(q1):
    h = hom_dim(q1, I("[0,1]"), I("[0,2]"))
    assert (h.dim, h.witness) == (1, I("[0,1]"))
    assert hom_dim(q1, I("[0,2]"), I("[0,1]")).dim == 0
    assert hom_dim(q1, I("(2,5]"), I("(2,5]")).dim == 1


def test_kernel_cokernel_examples(q1):
    assert kernel_cokernel(q1, I("[0,1]"), I("[0,2]")) == ((), (I("(1,2]"),))
    assert kernel_cokernel(q1, I("[0,1]"), I("[0.5,2]")) == ((I("[0,0.5)"),), (I("(1,2]"),))
    assert kernel_cokernel(q1, I("[3,4)"), I("[3,4)")) == ((), ())
    with pytest.raises(ZeroHom):
        kernel_cokernel(q1, I("[0,2]"), I("[0,1]"))


def test_ext_examples(q1):
    e = ext_with_middle(q1, I("[2,3)"), I("[1,2)"))
    assert (e.dim, e.middle) == (1, (I("[1,3)"),))
    e = ext_with_middle(q1, I("[0.5,2]"), I("[0,1]"))
    assert (e.dim, e.middle) == (1, (I("[0,2]"), I("[0.5,1]")))
    assert ext_with_middle(q1, I("[0,1]"), I("[5,6)")).dim == 0


def test_ar_examples(q1):
    s = ar_sequence(q1, I("[0.5,2)"))
    assert s.type_tag == 1
    assert s.terms == (I("[0.5,2)"), I("[0.5,2]"), I("(0.5,2)"), I("(0.5,2]"))
    assert ar_sequence(q1, I("{0.5}")) is None


def test_ar_type_two_instance():
    # sink below the lower end, sink above the upper end
    q = Q([0, 2, 4])
    s = ar_sequence(q, I("[1,3]"))
    assert s.type_tag == 2
    assert s.terms == (I("[1,3]"), I("[1,3)"), I("(1,3]"), I("(1,3)"))


@given(quiver_and_intervals())
def test_hom_matches_oracle(data):
    q, (v, w) = data
    assert hom_dim(q, v, w).dim == oracle_hom(q, v, w)


@given(quiver_and_intervals())
def test_one_way_hom(data):
    q, (v, w) = data
    if v != w and hom_dim(q, v, w).dim:
        assert hom_dim(q, w, v).dim == 0


@given(quiver_and_intervals(count=1))
def test_no_self_extension(data):
    q, (v,) = data
    assert ext_with_middle(q, v, v).dim == 0
    assert oracle_ext(q, v, v) == 0


@given(quiver_and_intervals())
def test_ext_matches_oracle(data):
    q, (w, v) = data
    e = ext_with_middle(q, w, v)
    assert e.dim == oracle_ext(q, w, v)
    if e.dim:
        assert e.arity in (1, 2)
        assert v not in e.middle and w not in e.middle


@given(quiver_and_intervals())
def test_kernel_image_cokernel_partition(data):
    q, (v, w) = data
    h = hom_dim(q, v, w)
    if not h.dim:
        return
    ker, coker = kernel_cokernel(q, v, w)
    g = build_grid(q, [v, w])
    dv, dw, dk = pointwise_dims(v, g), pointwise_dims(w, g), pointwise_dims(h.witness, g)
    for n in range(len(g)):
        assert dv[n] == dk[n] + sum(pointwise_dims(k, g)[n] for k in ker)
        assert dw[n] == dk[n] + sum(pointwise_dims(c, g)[n] for c in coker)


@given(quiver_and_intervals(count=1))
def test_ar_sequence_exists_exactly_for_generic(data):
    q, (i,) = data
    s = ar_sequence(q, i)
    f = classify(q, i)
    assert (s is None) == (not f.generic)
    if s is not None:
        assert s.role(i) is not None
        g = build_grid(q, list(s.terms))
        d = [pointwise_dims(t, g) for t in s.terms]
        for n in range(len(g)):
            assert d[0][n] + d[3][n] == d[1][n] + d[2][n]
        assert s.first.lower == s.mid_top.lower and s.first.upper == s.mid_bot.upper
