import math
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import BASE_GRAPH, PAPER_SCRIPT, TRIANGLE, path, scripts, state_failure_prob, state_failure_prob_float
from netkofn.errors import InvalidParameter, InvalidProbability, NegativeTime
from netkofn.recurrence import base_distribution, build_distribution, closed_form
from netkofn.reliability import (
    ConstantP,
    Exponential,
    Weibull,
    edge_cdf,
    failure_curve,
    parse_model,
    pmf,
    system_failure_prob,
)

TRI = closed_form(TRIANGLE)


def test_edge_cdf_examples():
    assert edge_cdf(Exponential(1.0), 0.0) == 0
    assert edge_cdf(ConstantP(0.5), 123.0) == 0.5
    for rate in (0.3, 1.0, 4.0):
        for t in (0.0, 0.1, 1.0, 7.5):
            assert edge_cdf(Weibull(1.0, 1.0 / rate), t) == pytest.approx(edge_cdf(Exponential(rate), t), rel=1e-15, abs=1e-300)


def test_edge_cdf_errors():
    with pytest.raises(NegativeTime):
        edge_cdf(Exponential(1.0), -1.0)
    for bad in (lambda: Exponential(0), lambda: Weibull(0, 1), lambda: Weibull(1, -1), lambda: ConstantP(1.5)):
        with pytest.raises(InvalidParameter):
            bad()


@pytest.mark.parametrize(
    "text, model",
    [("const:0.25", ConstantP(0.25)), ("exp:2", Exponential(2.0)), ("weibull:1.5,3", Weibull(1.5, 3.0))],
)
def test_parse_model(text, model):
    assert parse_model(text) == model


@pytest.mark.parametrize("text", ["const", "exp:x", "weibull:1", "gauss:1", "const:2", "exp:-1"])
def test_parse_model_errors(text):
    with pytest.raises(InvalidParameter):
        parse_model(text)


def test_system_failure_examples():
    q = Fr(3, 7)
    assert system_failure_prob(base_distribution(), q) == q
    assert system_failure_prob(TRI, Fr(1, 2)) == Fr(1, 2)
    assert state_failure_prob(TRIANGLE, Fr(1, 2)) == Fr(1, 2)
    assert system_failure_prob(TRI, 0) == 0
    assert system_failure_prob(TRI, 1) == 1
    assert system_failure_prob(TRI, 0.5) == 0.5


def test_system_failure_rejects_bad_q():
    with pytest.raises(InvalidProbability):
        system_failure_prob(TRI, 1.2)
    with pytest.raises(InvalidProbability):
        system_failure_prob(TRI, Fr(-1, 3))


@settings(max_examples=60, deadline=None)
@given(scripts(max_steps=8), st.fractions(min_value=0, max_value=1, max_denominator=20))
def test_state_enumeration_identity(script, q):
    res = build_distribution(script)
    assert system_failure_prob(res.dist, q) == state_failure_prob(res.graph, q)
    assert system_failure_prob(res.dist, float(q)) == pytest.approx(state_failure_prob_float(res.graph, float(q)), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(scripts(max_steps=9))
def test_failure_monotone_in_q(script):
    d = build_distribution(script).dist
    values = [system_failure_prob(d, Fr(i, 50)) for i in range(51)]
    assert values[0] == 0 and values[-1] == 1
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_failure_curve_examples():
    c = failure_curve(TRI, Exponential(1.0), 0.0, 5.0, 10)
    assert c.points[0] == (0.0, 0.0)
    assert len(c.points) == 11 and c.points[-1][0] == 5.0
    flat = failure_curve(TRI, ConstantP(0.5), 0.0, 3.0, 6)
    assert [v for _, v in flat.points] == [0.5] * 7
    single = failure_curve(base_distribution(), Exponential(0.7), 0.0, 4.0, 8)
    for t, v in single.points:
        assert v == pytest.approx(1 - math.exp(-0.7 * t), rel=1e-14, abs=1e-300)


def test_failure_curve_monotone_for_weibull():
    d = build_distribution(PAPER_SCRIPT).dist
    vals = [v for _, v in failure_curve(d, Weibull(2.0, 1.5), 0.0, 6.0, 60).points]
    assert all(a <= b + 1e-15 for a, b in zip(vals, vals[1:]))
    assert all(0 <= v <= 1 for v in vals)


def test_failure_curve_bad_grid():
    with pytest.raises(InvalidParameter):
        failure_curve(TRI, ConstantP(0.1), 1.0, 1.0, 3)
    with pytest.raises(InvalidParameter):
        failure_curve(TRI, ConstantP(0.1), 0.0, 1.0, 0)
    with pytest.raises(NegativeTime):
        failure_curve(TRI, ConstantP(0.1), -1.0, 1.0, 3)


def test_tree_curve_is_any_edge_failing():
    t = path(6)
    d = closed_form(t)
    for p in (Fr(1, 10), Fr(1, 3)):
        assert system_failure_prob(d, p) == 1 - (1 - p) ** t.m


def test_pmf_examples():
    assert pmf(TRI) == [0, 1, 0]
    assert pmf(closed_form(path(5))) == [1, 0, 0, 0]
    assert pmf(build_distribution(PAPER_SCRIPT).dist) == [0, Fr(1, 5), Fr(4, 5), 0, 0]


@settings(max_examples=50, deadline=None)
@given(scripts(max_steps=10))
def test_pmf_is_a_distribution(script):
    p = pmf(build_distribution(script).dist)
    assert sum(p) == 1
    assert all(x >= 0 for x in p)


def test_base_graph_single_edge():
    assert BASE_GRAPH.m == 1
