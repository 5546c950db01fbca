#include "colgen/netgen.hpp"

namespace colgen {

Rational random_exponent(Rng& rng, const GenConfig& cfg) {
    return rng.rational(-cfg.exp_range, cfg.exp_range, cfg.exp_max_den);
}

Rational random_coeff(Rng& rng, const GenConfig& cfg) {
    Rational c;
    do
        c = rng.rational(-cfg.coeff_range, cfg.coeff_range, cfg.exp_max_den);
    while (c == 0);
    return c;
}

ExactNet random_net(Rng& rng, Model m, const GenConfig& cfg) {
    if (rng.unit() < 0.05) return ExactNet::zero(m);
    long n = rng.uniform(1, cfg.max_terms);
    std::vector<Term> raw;
    for (long i = 0; i < n; ++i) {
        if (m == Model::simplified)
            raw.emplace_back(random_coeff(rng, cfg), random_exponent(rng, cfg));
        else
            raw.emplace_back(random_coeff(rng, cfg), random_exponent(rng, cfg),
                             random_exponent(rng, cfg));
    }
    return ExactNet::from_terms(m, std::move(raw));
}

ExactNet random_nonzero_net(Rng& rng, Model m, const GenConfig& cfg) {
    ExactNet x = random_net(rng, m, cfg);
    while (x.is_zero()) x = random_net(rng, m, cfg);
    return x;
}

Polynomial random_poly(Rng& rng, const GenConfig& cfg) {
    long deg = rng.uniform(0, cfg.max_degree);
    std::vector<Rational> c(size_t(deg) + 1, Rational(0));
    for (auto& v : c)
        if (rng.unit() < 0.7) v = rng.rational(-cfg.coeff_range, cfg.coeff_range, 2);
    c[size_t(deg)] = random_coeff(rng, cfg);
    return Polynomial(std::move(c));
}

GenFunRep random_genfun(Rng& rng, Model m, const IntervalDomain& dom, const GenConfig& cfg) {
    if (rng.unit() < 0.05) return GenFunRep::zero(m, dom);
    long n = rng.uniform(1, cfg.max_terms);
    std::vector<GenFunRep::FTerm> raw;
    for (long i = 0; i < n; ++i)
        raw.push_back({random_poly(rng, cfg), random_exponent(rng, cfg),
                       m == Model::full ? random_exponent(rng, cfg) : Rational(0)});
    return GenFunRep::from_terms(m, dom, std::move(raw));
}

ExactNet with_valuation(const ExactNet& x, const Rational& v) {
    if (x.is_zero()) return x;
    Rational shift = v - x.lead().eps_exp;
    std::vector<Term> raw;
    for (const auto& t : x.terms()) raw.emplace_back(t.coeff, t.eps_exp + shift, t.iota_exp);
    return ExactNet::from_terms(x.model(), std::move(raw), x.inexact());
}

GenFunRep with_lead_exp(const GenFunRep& f, const Rational& v) {
    if (f.is_zero()) return f;
    Rational shift = v - f.terms().front().eps_exp;
    std::vector<GenFunRep::FTerm> raw;
    for (const auto& t : f.terms()) raw.push_back({t.poly, t.eps_exp + shift, t.iota_exp});
    return GenFunRep::from_terms(f.model(), f.domain(), std::move(raw));
}

ExactNet random_ball_member(Rng& rng, Model m, const Rational& r, const GenConfig& cfg) {
    BallSpec ball{m, r};
    for (int attempt = 0; attempt < 10; ++attempt) {
        ExactNet cand = ExactNet::zero(m);
        double pick = rng.unit();
        if (pick < 0.1) {
            // zero is in every ball
        } else if (pick < 0.35) {
            // boundary: c*alpha_r with |c| <= 1, possibly a tail pushing down
            Rational c = rng.rational(-1, 1, 4);
            cand = ExactNet::constant(m, c) * ExactNet::alpha(r, m);
            if (!cand.is_zero() && rng.unit() < 0.5) {
                Rational tc = -Rational(sign(c)) * abs(random_coeff(rng, cfg));
                Rational delta = rng.rational(1, 2, 4);
                cand = cand + ExactNet::from_terms(
                                  m, {Term(tc, r + delta, rng.unit() < 0.5 ? r : r + delta)});
            }
        } else {
            Rational delta = rng.rational(1, 2, 4);
            cand = with_valuation(random_nonzero_net(rng, m, cfg), r + delta);
        }
        if (scalar_ball_member(cand, ball) == Membership::Member) return cand;
    }
    // valuation strictly above the radius is always a member
    Rational delta = rng.rational(1, 2, 4);
    return with_valuation(random_nonzero_net(rng, m, cfg), r + delta);
}

GenFunRep random_gf_ball_member(Rng& rng, Model m, const IntervalDomain& dom, unsigned beta,
                                long l, const Rational& r, const GenConfig& cfg) {
    for (int attempt = 0; attempt < 10; ++attempt) {
        GenFunRep cand = GenFunRep::zero(m, dom);
        double pick = rng.unit();
        if (pick < 0.1) {
            // zero
        } else if (pick < 0.3) {
            // boundary constant c*eps^r (diagonal in the full model)
            Rational c = rng.rational(-1, 1, 4);
            cand = GenFunRep::from_terms(
                m, dom, {{Polynomial::constant(c), r, m == Model::full ? r : Rational(0)}});
        } else {
            Rational delta = rng.rational(1, 2, 4);
            cand = with_lead_exp(random_genfun(rng, m, dom, cfg), r + delta);
        }
        if (gf_ball_member(cand, beta, l, r) == Membership::Member) return cand;
    }
    Rational delta = rng.rational(1, 2, 4);
    GenFunRep f = random_genfun(rng, m, dom, cfg);
    while (f.is_zero()) f = random_genfun(rng, m, dom, cfg);
    return with_lead_exp(f, r + delta);
}

Rational random_radius(Rng& rng) { return rng.rational(-3, 3, 2); }

}  // namespace colgen
