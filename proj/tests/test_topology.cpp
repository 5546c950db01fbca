#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "colgen/topology.hpp"

using namespace colgen;

namespace {
const IntervalDomain kDom = IntervalDomain::bounded(Rational(-2), Rational(2));

GenFunRep gf(Model m, std::vector<std::tuple<Polynomial, Rational, Rational>> ts) {
    std::vector<GenFunRep::FTerm> raw;
    for (auto& [p, a, b] : ts) raw.push_back({p, a, b});
    return GenFunRep::from_terms(m, kDom, std::move(raw));
}
}  // namespace

TEST_CASE("axiom_check runs clean on every basis/axiom pair") {
    for (BasisId basis : {BasisId::B, BasisId::Bs, BasisId::BOmega, BasisId::BsOmega}) {
        for (AxiomId ax : {AxiomId::GA_I, AxiomId::GA_II, AxiomId::AV_I, AxiomId::AV_II}) {
            AxiomReport rep = axiom_check(basis, ax, 60, 7);
            INFO(rep.line());
            CHECK(rep.ok());
            CHECK(rep.samples == 60);
        }
    }
}

TEST_CASE("MV axioms, default-off but available") {
    for (BasisId basis : {BasisId::B, BasisId::BOmega}) {
        for (AxiomId ax : {AxiomId::MV_I, AxiomId::MV_II, AxiomId::MV_III}) {
            AxiomReport rep = axiom_check(basis, ax, 40, 11);
            INFO(rep.line());
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("report line format") {
    AxiomReport rep = axiom_check(BasisId::B, AxiomId::GA_II, 5, 42);
    CHECK(rep.line() == "GA'_II B 5 0 0 42");
}

TEST_CASE("vnp and dnp") {
    GenFunRep f = gf(Model::simplified, {{Polynomial::x(), Rational(2), Rational(0)},
                                         {Polynomial::constant(Rational(1)), Rational(5),
                                          Rational(0)}});
    CHECK(vnp(f, {1, 0}).value == 2);
    CHECK(vnp(GenFunRep::zero(Model::simplified, kDom), {1, 2}).infinite);

    CHECK(dnp(f, f, {1, 0}) == 0.0);
    GenFunRep xe2 = gf(Model::simplified, {{Polynomial::x(), Rational(2), Rational(0)}});
    CHECK(dnp(xe2, GenFunRep::zero(Model::simplified, kDom), {1, 0}) ==
          doctest::Approx(std::exp(-2.0)));

    // vnp never increases in p or n
    Rng rng(401);
    for (int i = 0; i < 100; ++i) {
        GenFunRep g = random_genfun(rng, Model::simplified, kDom);
        for (long n = 0; n < 2; ++n)
            for (unsigned p = 0; p < 3; ++p) {
                Valuation v1 = vnp(g, {n, p});
                CHECK(vnp(g, {n, p + 1}) <= v1);
                CHECK(vnp(g, {n + 1, p}) <= v1);
            }
    }

    // pseudometric triangle inequality on random triples
    for (int i = 0; i < 200; ++i) {
        GenFunRep a = random_genfun(rng, Model::simplified, kDom);
        GenFunRep b = random_genfun(rng, Model::simplified, kDom);
        GenFunRep c = random_genfun(rng, Model::simplified, kDom);
        PseudoMetricIndex idx{rng.uniform(0, 2), unsigned(rng.uniform(0, 2))};
        CHECK(dnp(a, c, idx) <= dnp(a, b, idx) + dnp(b, c, idx) + 1e-12);
    }
}

TEST_CASE("metric-ball equivalences") {
    EquivParams p1;
    p1.r = 1;
    p1.rho = std::exp(-1.0);
    AxiomReport r1 = metric_ball_equivalence(EquivDirection::NormBallInRadiusBall, p1, 200, 13);
    CHECK(r1.ok());

    EquivParams p2;
    p2.r = 1;
    p2.rho = std::exp(-1.0) * 1.5;
    AxiomReport r2 = metric_ball_equivalence(EquivDirection::RadiusBallInNormBall, p2, 200, 17);
    CHECK(r2.ok());

    EquivParams p3;
    p3.n = 1;
    p3.p = 2;
    p3.a = 0.25;
    p3.r = rational_from_double(-std::log(0.25) + 1.0) + 1;
    AxiomReport r3 = metric_ball_equivalence(EquivDirection::SeminormBallsInMetricBall, p3, 150, 19);
    CHECK(r3.ok());

    EquivParams p4;
    p4.beta = 2;
    p4.l = 1;
    p4.r = 0;
    p4.a = 0.5;  // < e^0
    AxiomReport r4 = metric_ball_equivalence(EquivDirection::MetricBallInSeminormBall, p4, 150, 23);
    CHECK(r4.ok());

    EquivParams bad;
    bad.r = 1;
    bad.rho = 1.0;  // violates rho <= e^-r
    CHECK_THROWS(metric_ball_equivalence(EquivDirection::NormBallInRadiusBall, bad, 10, 1));
}

TEST_CASE("scalar convergence: alpha_n -> 0") {
    auto seq = [](int n) { return ExactNet::alpha(Rational(n), Model::simplified); };
    auto cert = converges_scalar(seq, ExactNet::zero(Model::simplified), 20, Rational(20));
    CHECK(cert.converged);
    CHECK(cert.table.size() == 21);
    CHECK(cert.table[5].value == 5);

    // constant sequence converges to its value
    ExactNet c = ExactNet::alpha(Rational(2), Model::simplified);
    auto cert2 = converges_scalar([&](int) { return c; }, c, 10, Rational(1000));
    CHECK(cert2.converged);

    // and does not converge to something else
    auto cert3 = converges_scalar([&](int) { return c; }, ExactNet::zero(Model::simplified),
                                  10, Rational(5));
    CHECK(!cert3.converged);
}

TEST_CASE("operator continuity: P f_n -> 0 for f_n = alpha_n * g, P = x d + 1") {
    GenFunRep g = gf(Model::full, {{Polynomial::x(), Rational(0), Rational(0)},
                                   {Polynomial::constant(Rational(2)), Rational(1, 2),
                                    Rational(1)}});
    GenFunRep one = embed_const(ExactNet::one(Model::full), kDom);
    GenFunRep xc = gf(Model::full, {{Polynomial::x(), Rational(0), Rational(0)}});
    auto seq = [&](int n) {
        ExactNet an = ExactNet::alpha(Rational(n), Model::full);
        return lpdo_apply({{xc, 1}, {one, 0}}, scalar_mul(an, g));
    };
    std::vector<PseudoMetricIndex> probes{{0, 0}, {1, 1}, {2, 2}};
    auto cert = converges_genfun(seq, GenFunRep::zero(Model::full, kDom), 20, probes,
                                 Rational(20));
    CHECK(cert.converged);
    // strictly increasing table
    for (size_t k = 0; k + 1 < cert.table.size(); ++k)
        CHECK(cert.table[k] < cert.table[k + 1]);
    CHECK(!(cert.table[20] < Valuation::finite(Rational(20))));
}

TEST_CASE("G-seminorm axioms and m-convexity") {
    AxiomReport rep = gseminorm_axiom_check(120, 29);
    INFO(rep.line());
    CHECK(rep.ok());
}

TEST_CASE("condition (ii) probe finds the Leibniz-mixing counterexamples") {
    // premise behind the probe: for f = g = x and beta = 1,
    // sup|d(fg)| = sup|2x| exceeds sup|df| * sup|dg| = 1 on [-3/2, 3/2]
    GenFunRep f = gf(Model::full, {{Polynomial::x(), Rational(0), Rational(0)}});
    auto df = seminorm(f, 1, 1);
    auto dp = seminorm(f * f, 1, 1);
    REQUIRE(!df.infinite);
    REQUIRE(!dp.infinite);
    CHECK(dp.lead_sup.lo > df.lead_sup.hi * df.lead_sup.hi);

    auto probe = mconv_condition_ii_probe(200, 31);
    CHECK(probe.samples == 200);
    CHECK(probe.violations >= 0);
    if (probe.violations > 0) CHECK(!probe.example.empty());
}

TEST_CASE("G-convex combinations stay in balls") {
    Rng rng(409);
    BallSpec ball{Model::full, Rational(2)};
    ExactNet x = random_ball_member(rng, Model::full, Rational(2));
    ExactNet y = random_ball_member(rng, Model::full, Rational(2));

    // lambda = 1 returns membership of x
    CHECK(gconvex_probe(x, y, ExactNet::one(Model::full), ball) == Membership::Member);
    // lambda = 0 returns membership of y
    CHECK(gconvex_probe(x, y, ExactNet::zero(Model::full), ball) == Membership::Member);
    // constant midpoint
    CHECK(gconvex_probe(x, y, ExactNet::constant(Model::full, Rational(1, 2)), ball) ==
          Membership::Member);
    // alpha_1 lies in [0,1]_g
    CHECK(gconvex_probe(x, y, ExactNet::alpha(Rational(1), Model::full), ball) ==
          Membership::Member);

    // function-ball variant
    GenFunRep f = random_gf_ball_member(rng, Model::full, kDom, 0, 1, Rational(2));
    GenFunRep h = random_gf_ball_member(rng, Model::full, kDom, 0, 1, Rational(2));
    CHECK(gconvex_probe_fn(f, h, ExactNet::alpha(Rational(1), Model::full), 0, 1,
                           Rational(2)) == Membership::Member);

    // alpha_{-1} > 1 is rejected
    CHECK_THROWS(gconvex_probe(x, y, ExactNet::alpha(Rational(-1), Model::full), ball));
}
