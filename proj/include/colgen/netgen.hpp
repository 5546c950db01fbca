#pragma once

#include <cstdint>
#include <random>

#include "colgen/exact_net.hpp"
#include "colgen/genfun.hpp"

namespace colgen {

// Distribution documented so every reported failure is reproducible from its
// seed: term count <= 5, exponents uniform rationals in [-5, 5] with
// denominator <= 4, coefficients in [-10, 10], polynomial degree <= 6.
struct GenConfig {
    int max_terms = 5;
    long exp_range = 5;
    long exp_max_den = 4;
    long coeff_range = 10;
    int max_degree = 6;
};

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    long uniform(long lo, long hi) {  // inclusive
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }

    // uniform over { p/q : p/q in [lo, hi], 1 <= q <= max_den } (by q then p)
    Rational rational(long lo, long hi, long max_den) {
        long q = uniform(1, max_den);
        long p = uniform(lo * q, hi * q);
        return rat(p, q);
    }

private:
    std::mt19937_64 eng_;
};

Rational random_exponent(Rng& rng, const GenConfig& cfg);
Rational random_coeff(Rng& rng, const GenConfig& cfg);  // nonzero

ExactNet random_net(Rng& rng, Model m, const GenConfig& cfg = {});
ExactNet random_nonzero_net(Rng& rng, Model m, const GenConfig& cfg = {});

Polynomial random_poly(Rng& rng, const GenConfig& cfg = {});
GenFunRep random_genfun(Rng& rng, Model m, const IntervalDomain& dom,
                        const GenConfig& cfg = {});

// Net shifted so its valuation becomes exactly v (identity on the zero net).
ExactNet with_valuation(const ExactNet& x, const Rational& v);
GenFunRep with_lead_exp(const GenFunRep& f, const Rational& v);

// Verified members of V_r[0] / V_r(0); occasionally sit on the boundary.
ExactNet random_ball_member(Rng& rng, Model m, const Rational& r, const GenConfig& cfg = {});

// Verified members of W^beta_{l,r}[0] / (0).
GenFunRep random_gf_ball_member(Rng& rng, Model m, const IntervalDomain& dom, unsigned beta,
                                long l, const Rational& r, const GenConfig& cfg = {});

Rational random_radius(Rng& rng);  // in [-3, 3], denominator <= 2

}  // namespace colgen
