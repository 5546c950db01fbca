"""Smoke tests for the python bindings."""

import math
from fractions import Fraction as F

import pytest

import colgen as cg


def test_parse_and_canonical_text():
    x = cg.parse("3*e^(1/2) - 2*e^(3)")
    assert str(x) == "3*e^(1/2) + -2*e^(3)"
    assert x.terms == [(F(3), F(1, 2), F(0)), (F(-2), F(3), F(0))]
    assert cg.valuation(x) == F(1, 2)
    assert cg.valuation(cg.parse("0")) is None


def test_ring_ops_and_jm():
    a = cg.ExactNet.alpha(F(1), cg.Model.simplified)
    b = cg.ExactNet.alpha(F(2), cg.Model.simplified)
    assert a * b == cg.ExactNet.alpha(F(3), cg.Model.simplified)
    assert cg.jm_embed(a * b) == cg.ExactNet.alpha(F(3), cg.Model.full)
    assert (a - a).is_zero


def test_order_and_balls():
    a2 = cg.ExactNet.alpha(F(2), cg.Model.full)
    a1 = cg.ExactNet.alpha(F(1), cg.Model.full)
    assert cg.order_compare(a2, a1) == "leq"
    assert cg.order_compare(a1, a2) == "geq"
    assert cg.q_positivity(cg.parse("e^(2)")) == "positive"
    assert cg.scalar_ball_member(cg.parse("e^(3)"), F(2)) == "member"
    assert cg.scalar_ball_member(cg.parse("2*e^(2)"), F(2)) == "not-member"
    # jm ball equivalence
    x = cg.parse("1/2*e^(1) + e^(4)")
    assert cg.scalar_ball_member(cg.jm_embed(x), F(1)) == cg.scalar_ball_member(x, F(1))


def test_genfun_layer():
    f = cg.parse("x^2*e^(1)")
    d = cg.seminorm(f, 0, 1)
    assert d.lead_exp == F(1)
    assert d.lead_sup == (F(9, 4), F(9, 4), True)
    assert cg.gf_ball_member(f, 0, 1, F(0)) == "member"
    dom = cg.IntervalDomain(F(-1), F(2))
    g = cg.parse("x*e^(2)", dom)
    assert str(cg.integrate(g, F(0), F(1))) == "1/2*e^(2)"
    assert cg.vnp(cg.parse("x*e^(2) + e^(5)"), 1, 0) == F(2)
    assert cg.dnp(cg.parse("x*e^(2)"), cg.parse("0*x"), 1, 0) == pytest.approx(
        math.exp(-2)
    )
    # psi embedding preserves membership
    assert cg.gf_ball_member(cg.psi_embed(f), 0, 1, F(0)) == "member"


def test_oracle_layer():
    x = cg.parse("3*e^(1/2) - 2*e^(3)")
    est = cg.estimate_valuation(cg.from_exact(x))
    assert not est.plausibly_infinite
    assert abs(est.slope - 0.5) < 1e-3

    osc = cg.oscillating_preset()
    sched = cg.oscillating_schedule(6)
    lo = cg.falsify_order(osc, "geq0", [F(2)], sched)
    hi = cg.falsify_order(osc, "leq0", [F(2)], sched)
    assert lo["falsified"] and hi["falsified"]

    assert cg.oracle_ball_member(cg.from_exact(cg.parse("2*e^(2)")), F(2), [F(3)])[
        "refuted"
    ]


def test_axiom_suite():
    rep = cg.axiom_check("B_Omega", "AV_II", samples=40, seed=7)
    assert rep.ok()
    assert rep.samples == 40
    assert cg.gseminorm_axiom_check(40, 11).ok()


def test_errors():
    with pytest.raises(Exception):
        cg.parse("e^2")
    with pytest.raises(Exception):
        a = cg.parse("e^(1)")
        b = cg.ExactNet.alpha(F(1), cg.Model.full)
        cg.order_compare(a, b)
