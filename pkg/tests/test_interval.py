import pytest
from hypothesis import given

from arspace.errors import ClosedInfinity, EmptyInterval, IntervalSyntaxError, InvalidVariant
from arspace.interval import Interval, Kind, Variant, canonical_support, classify, format_interval, parse_interval
from arspace.quiver import NEG_INF, POS_INF, ext

from conftest import I, Q, finite_points, quiver_and_intervals, quivers


def test_parse_examples():
    i = parse_interval("[0,1)")
    assert (i.lo, i.lo_closed, i.hi, i.hi_closed) == (ext(0), True, ext(1), False)
    j = parse_interval("(-inf,+inf)")
    assert (j.lo, j.lo_closed, j.hi, j.hi_closed) == (NEG_INF, False, POS_INF, False)
    with pytest.raises(ClosedInfinity):
        parse_interval("[-inf,0]")


@pytest.mark.parametrize("text", ["[0,1", "0,1", "[a,1]", "[0;1]", "{}", "[1/0,2]"])
def test_parse_rejects_garbage(text):
    with pytest.raises(IntervalSyntaxError):
        parse_interval(text)


@pytest.mark.parametrize("text", ["[2,1]", "[1,1)", "(1,1)"])
def test_empty_rejected(text):
    with pytest.raises(EmptyInterval):
        parse_interval(text)


def test_format_canonicalizes():
    assert format_interval(parse_interval(" [ 0 , 1/2 ) ")) == "[0,0.5)"
    assert format_interval(parse_interval("[3,3]")) == "{3}"
    assert format_interval(parse_interval("{ -1/3 }")) == "{-1/3}"


def test_canonical_support_examples(q1):
    assert canonical_support(q1, 1, Kind.DOWN_SET) == I("[0,1]")
    assert canonical_support(q1, 0, Kind.UP_SET) == I("(-inf,+inf)")
    assert canonical_support(q1, 1, Kind.DOWN_SET, Variant.OPEN_BELOW) == I("[0,1)")
    assert canonical_support(q1, 0, Kind.DOWN_SET) == I("{0}")
    with pytest.raises(InvalidVariant):
        canonical_support(q1, 0, Kind.DOWN_SET, Variant.OPEN_ABOVE)


def test_classify_examples(q1):
    assert classify(q1, I("[0,1]")).labels() == ["Projective(1, closed)"]
    assert classify(q1, I("{0.5}")).labels() == ["Simple"]
    assert classify(Q([0, 1], "odd"), I("[0,1]")).bar
    assert classify(q1, I("[0.5,2)")).generic


def test_infinite_end_bar(q1):
    assert classify(q1, I("(-inf,0]")).bar
    assert not classify(q1, I("(-inf,0)")).bar


@given(quivers, finite_points(None))
def test_projectives_classify_as_projective(q, a):
    for v in Variant:
        try:
            s = canonical_support(q, a, Kind.DOWN_SET, v)
        except InvalidVariant:
            continue
        assert (a, v) in classify(q, s).projective


@given(quivers, finite_points(None))
def test_simple_projectives_sit_at_sinks(q, a):
    flags = classify(q, Interval(a, True, a, True))
    el = q.element_at(a)
    assert bool(flags.projective) == (el is not None and el.is_sink)


@given(quiver_and_intervals(count=1))
def test_bar_never_generic(data):
    q, (i,) = data
    f = classify(q, i)
    if f.bar:
        assert not f.generic and not f.simple


@given(quiver_and_intervals(count=1))
def test_format_parse_round_trip(data):
    _, (i,) = data
    assert parse_interval(format_interval(i)) == i
