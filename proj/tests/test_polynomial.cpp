#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "colgen/iota_profile.hpp"
#include "colgen/netgen.hpp"
#include "colgen/polynomial.hpp"
#include "colgen/roots.hpp"

using namespace colgen;

namespace {

Polynomial poly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial(std::move(c));
}

// Brute-force root counter: dense sign scan plus exact endpoint checks.
int scan_roots(const Polynomial& p, const Rational& lo, const Rational& hi, int steps = 20000) {
    Polynomial sf = squarefree_part(p);
    int count = 0;
    Rational prev_x = lo;
    int prev_sign = sign(sf(lo));
    for (int k = 1; k <= steps; ++k) {
        Rational x = lo + (hi - lo) * Rational(k, steps);
        int s = sign(sf(x));
        if (s == 0) {
            ++count;
            prev_sign = -prev_sign;  // squarefree roots are simple
            continue;
        }
        if (prev_sign != 0 && s != prev_sign) ++count;
        prev_sign = s;
        prev_x = x;
    }
    (void)prev_x;
    return count;
}

// Brute-force sup of |p| by dense sampling; lower bound of the true sup.
double scan_sup(const Polynomial& p, const Rational& lo, const Rational& hi, int steps = 40000) {
    double best = 0;
    double a = to_double(lo), b = to_double(hi);
    for (int k = 0; k <= steps; ++k) {
        double x = a + (b - a) * k / steps;
        best = std::max(best, std::fabs(p.eval_double(x)));
    }
    return best;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Polynomial x = Polynomial::x();
    Polynomial q = x * x - Polynomial::constant(Rational(2));
    CHECK(q.degree() == 2);
    CHECK(q(Rational(2)) == 2);
    CHECK(q.derivative()(Rational(3)) == 6);
    CHECK(q.antiderivative().derivative() == q);
    CHECK(q.integral_over(Rational(0), Rational(1)) == Rational(-5, 3));
    CHECK(poly({0, 0, 3}).str() == "3*x^2");
}

TEST_CASE("sturm isolation agrees with the sign-scan oracle") {
    Rng rng(101);
    for (int i = 0; i < 120; ++i) {
        Polynomial p = random_poly(rng);
        if (p.degree() < 1) continue;
        Rational lo(-8), hi(8);
        auto locs = isolate_roots(p, lo, hi);
        int expect = scan_roots(p, lo, hi);
        CHECK(int(locs.size()) == expect);
        // each interval isolates exactly one root: endpoints have opposite
        // squarefree signs
        Polynomial sf = squarefree_part(p);
        for (const auto& r : locs) {
            if (r.exact) {
                CHECK(p(r.value) == 0);
            } else {
                CHECK(sign(sf(r.lo)) * sign(sf(r.hi)) == -1);
            }
        }
        // ascending and disjoint
        for (size_t k = 0; k + 1 < locs.size(); ++k) {
            Rational hi_k = locs[k].exact ? locs[k].value : locs[k].hi;
            Rational lo_n = locs[k + 1].exact ? locs[k + 1].value : locs[k + 1].lo;
            CHECK(hi_k <= lo_n);
        }
    }
}

TEST_CASE("rational roots are reported exactly") {
    // (2x - 1)(3x + 2)(x^2 - 2)
    Polynomial p = poly({2, 0, -1}) * poly({-1, 2}) * poly({2, 3});
    auto locs = isolate_roots(p, Rational(-3), Rational(3));
    REQUIRE(locs.size() == 4);
    int exact = 0, interval = 0;
    for (const auto& r : locs) (r.exact ? exact : interval)++;
    CHECK(exact == 2);
    CHECK(interval == 2);  // +-sqrt(2) stay intervals
    CHECK(locs[1].exact);
    CHECK(locs[1].value == Rational(-2, 3));
    CHECK(locs[2].exact);
    CHECK(locs[2].value == Rational(1, 2));
}

TEST_CASE("refine and sign_at_root") {
    Polynomial p = poly({-2, 0, 1});  // x^2 - 2
    auto locs = isolate_positive_roots(p);
    REQUIRE(locs.size() == 1);
    RootLoc r = refine_root(p, locs[0], Rational(1, 1000000));
    CHECK(!r.exact);
    CHECK(to_double(r.lo) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));

    // sign of x^3 - 3 at sqrt(2): 2^(3/2) < 3, so negative
    CHECK(sign_at_root(poly({-3, 0, 0, 1}), p, locs[0]) == -1);
    // sign of x^2 - 2 at its own root
    CHECK(sign_at_root(p, p, locs[0]) == 0);
    // sign of a multiple of the minimal polynomial
    CHECK(sign_at_root(p * poly({1, 1}), p, locs[0]) == 0);
}

TEST_CASE("poly_sup_abs matches the sampling oracle") {
    Rng rng(103);
    Rational tol(1, 1000000000000L);
    for (int i = 0; i < 80; ++i) {
        Polynomial p = random_poly(rng);
        Rational lo = rng.rational(-4, 0, 2), hi = lo + rng.rational(1, 4, 2);
        SupBound s = poly_sup_abs(p, lo, hi, tol);
        CHECK(s.hi - s.lo <= tol);
        double scanned = scan_sup(p, lo, hi);
        // scan is a lower bound up to sampling resolution
        CHECK(to_double(s.hi) >= scanned * (1 - 1e-6) - 1e-9);
        // and cannot be beaten by more than the sampling error allows
        CHECK(scanned >= to_double(s.lo) * (1 - 1e-3) - 1e-6);
    }
}

TEST_CASE("poly_sup_abs exact cases") {
    // endpoint max: x^2 on [-3/2, 3/2]
    SupBound s = poly_sup_abs(poly({0, 0, 1}), Rational(-3, 2), Rational(3, 2),
                              Rational(1, 1000000000000L));
    CHECK(s.exact);
    CHECK(s.lo == Rational(9, 4));

    // interior rational critical point: 1 - x^2 on [-2, 2] has sup 4 at the
    // endpoints and |p(0)| = 1 inside
    SupBound t = poly_sup_abs(poly({1, 0, -1}), Rational(-2), Rational(2),
                              Rational(1, 1000000000000L));
    CHECK(t.exact);
    CHECK(t.lo == 3);

    SupBound z = poly_sup_abs(Polynomial(), Rational(0), Rational(1),
                              Rational(1, 1000000000000L));
    CHECK(z.exact);
    CHECK(z.lo == 0);
}

TEST_CASE("iota profile analysis") {
    using T = IotaProfile::Term;
    // 1 - iota: one rational zero, both signs
    IotaProfile p({T{Rational(1), Rational(0)}, T{Rational(-1), Rational(1)}});
    auto a = p.analyze();
    CHECK(a.takes_negative);
    CHECK(a.takes_positive);
    REQUIRE(a.rational_zeros.size() == 1);
    CHECK(a.rational_zeros[0] == 1);
    CHECK(!a.has_irrational_zero);

    // (1 - iota)^2 with fractional powers: iota - 2*iota^(3/2) + iota^2 at
    // t = iota^(1/2) is t^2(1-t)^2 >= 0 touching at iota = 1
    IotaProfile q({T{Rational(1), Rational(1)}, T{Rational(-2), Rational(3, 2)},
                   T{Rational(1), Rational(2)}});
    auto aq = q.analyze();
    CHECK(!aq.takes_negative);
    CHECK(aq.takes_positive);
    REQUIRE(aq.rational_zeros.size() == 1);
    CHECK(aq.rational_zeros[0] == 1);

    // iota^4 - 4*iota^2 + 4 touches zero at irrational sqrt(2)
    IotaProfile r({T{Rational(4), Rational(0)}, T{Rational(-4), Rational(2)},
                   T{Rational(1), Rational(4)}});
    auto ar = r.analyze();
    CHECK(!ar.takes_negative);
    CHECK(ar.has_irrational_zero);
    CHECK(ar.rational_zeros.empty());

    // negative exponents: iota^(-1) - 1
    IotaProfile n({T{Rational(1), Rational(-1)}, T{Rational(-1), Rational(0)}});
    auto an = n.analyze();
    CHECK(an.takes_negative);
    CHECK(an.takes_positive);
    REQUIRE(an.rational_zeros.size() == 1);
    CHECK(an.rational_zeros[0] == 1);
}

TEST_CASE("iota profile exact sign evaluation") {
    using T = IotaProfile::Term;
    // iota^(1/2) - 3/2 at iota = 2: sqrt(2) < 3/2, negative
    IotaProfile p({T{Rational(1), Rational(1, 2)}, T{Rational(-3, 2), Rational(0)}});
    CHECK(p.sign_at(Rational(2)) == -1);
    // at iota = 9/4: sqrt = 3/2 exactly
    CHECK(p.sign_at(Rational(9, 4)) == 0);
    CHECK(p.sign_at(Rational(4)) == 1);
    // integer exponents take the fast path
    IotaProfile q({T{Rational(1), Rational(2)}, T{Rational(-2), Rational(0)}});
    CHECK(q.sign_at(Rational(1)) == -1);
    CHECK(q.sign_at(Rational(2)) == 1);
}

TEST_CASE("profile sign analysis agrees with dense sampling") {
    Rng rng(107);
    for (int i = 0; i < 100; ++i) {
        long n = rng.uniform(1, 4);
        std::vector<IotaProfile::Term> ts;
        for (long k = 0; k < n; ++k)
            ts.push_back({random_coeff(rng, {}), random_exponent(rng, {})});
        IotaProfile p(ts);
        if (p.is_zero()) continue;
        auto a = p.analyze();
        bool neg = false, pos = false;
        for (int k = 1; k <= 400; ++k) {
            double iota = 0.01 * k;
            double v = 0;
            for (const auto& t : p.terms())
                v += to_double(t.coeff) * std::pow(iota, to_double(t.exp));
            if (v < -1e-9) neg = true;
            if (v > 1e-9) pos = true;
        }
        if (neg) CHECK(a.takes_negative);
        if (pos) CHECK(a.takes_positive);
    }
}
