#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "colgen/netgen.hpp"
#include "colgen/parser.hpp"

using namespace colgen;

namespace {
const IntervalDomain kDom = IntervalDomain::bounded(Rational(-2), Rational(2));
}

TEST_CASE("scalar expressions compile to exact nets") {
    auto c = compile("3*e^(1/2) - 2*e^(3)", kDom);
    auto* net = std::get_if<ExactNet>(&c);
    REQUIRE(net);
    CHECK(net->model() == Model::simplified);
    REQUIRE(net->terms().size() == 2);
    CHECK(net->terms()[0].coeff == 3);
    CHECK(net->terms()[0].eps_exp == Rational(1, 2));
    CHECK(net->terms()[1].coeff == -2);
    CHECK(net->terms()[1].eps_exp == 3);

    auto full = std::get<ExactNet>(compile("e^(2)*i^(2)", kDom));
    CHECK(full == ExactNet::alpha(Rational(2), Model::full));

    CHECK(std::get<ExactNet>(compile("0", kDom)).is_zero());
    CHECK(std::get<ExactNet>(compile("e^(1) - e^(1)", kDom)).is_zero());
}

TEST_CASE("function expressions compile to polynomial representatives") {
    auto c = compile("x^2*e^(1)", kDom);
    auto* f = std::get_if<GenFunRep>(&c);
    REQUIRE(f);
    REQUIRE(f->terms().size() == 1);
    CHECK(f->terms()[0].poly == Polynomial::monomial(Rational(1), 2));
    CHECK(f->terms()[0].eps_exp == 1);

    auto g = std::get<GenFunRep>(compile("(x + 1)*(x - 1)*e^(2)", kDom));
    REQUIRE(g.terms().size() == 1);
    CHECK(g.terms()[0].poly ==
          Polynomial({Rational(-1), Rational(0), Rational(1)}));
}

TEST_CASE("transcendental expressions compile to sampled nets") {
    auto c = compile("i^(1)*sin(i^(-1))", kDom);
    auto* s = std::get_if<SampledNet>(&c);
    REQUIRE(s);
    CHECK(s->model() == Model::full);

    // matches the oscillating preset pointwise
    SampledNet preset = SampledNet::oscillating_preset();
    for (int j : {10, 60, 120, 180}) {
        for (const Rational& iota : oscillating_schedule(3)) {
            GridPoint p{j, -j * std::log(2.0), log_abs(iota), iota};
            NetValue a = (*s)(p), b = preset(p);
            CHECK(a.sign == b.sign);
            if (a.sign != 0)
                CHECK(a.log_abs == doctest::Approx(b.log_abs).epsilon(1e-9));
        }
    }

    // exp/log route through the log domain and survive deep tails
    auto e = std::get<SampledNet>(compile("exp(e^(-1))", kDom));
    GridPoint deep{150, -150 * std::log(2.0), std::nullopt, std::nullopt};
    NetValue v = e(deep);
    CHECK(v.sign == 1);
    CHECK(v.log_abs == doctest::Approx(std::pow(2.0, 150)));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse("3*"), ParseError);
    CHECK_THROWS_AS(parse("foo(2)"), ParseError);
    CHECK_THROWS_AS(parse("e^2"), ParseError);
    CHECK_THROWS_AS(parse("1/0"), ParseError);
    CHECK_THROWS_AS(parse("(1 + 2"), ParseError);
    CHECK_THROWS_AS(parse("1 + + 2"), ParseError);
    try {
        parse("2*e^(1) + $");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 11);
    }
    CHECK_THROWS_AS(compile("x*sin(x)", kDom), std::invalid_argument);
}

TEST_CASE("print(parse(s)) reparses to an identical AST") {
    std::vector<std::string> corpus = {
        "3*e^(1/2) + -2*e^(3)",
        "1*e^(2)*i^(2)",
        "0",
        "x^2*e^(1)",
        "(x + 1)*(x - 1)",
        "i^(1)*sin(i^(-1))",
        "2 - 3*e^(1) - 4*e^(2)",
        "cos(e^(1) + i^(2))",
        "log(exp(e^(1)))",
        "x",
        "-5/7",
    };
    for (const auto& s : corpus) {
        ExprPtr first = parse(s);
        std::string printed = print(*first);
        ExprPtr second = parse(printed);
        CHECK(*first == *second);
        CHECK(print(*second) == printed);
    }
}

TEST_CASE("canonical net text round-trips through the parser") {
    Rng rng(501);
    for (int i = 0; i < 200; ++i) {
        Model m = i % 2 ? Model::full : Model::simplified;
        ExactNet x = random_net(rng, m);
        auto c = compile(x.str(), kDom);
        auto* back = std::get_if<ExactNet>(&c);
        REQUIRE(back);
        if (x.is_zero())
            CHECK(back->is_zero());
        else
            CHECK(*back == x);
    }
}
