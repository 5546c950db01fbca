#include "colgen/order.hpp"

#include <cmath>

namespace colgen {

const char* to_token(Verdict v) {
    switch (v) {
        case Verdict::Positive: return "positive";
        case Verdict::NotPositive: return "not-positive";
        default: return "unknown";
    }
}

const char* to_token(Membership m) {
    switch (m) {
        case Membership::Member: return "member";
        case Membership::NotMember: return "not-member";
        default: return "unknown";
    }
}

const char* to_token(Order o) {
    switch (o) {
        case Order::LEQ: return "leq";
        case Order::GEQ: return "geq";
        case Order::EQ: return "eq";
        case Order::Incomparable: return "incomparable";
        default: return "unknown";
    }
}

Valuation valuation(const ExactNet& x) {
    if (x.is_zero()) return Valuation::inf();
    return Valuation::finite(x.lead().eps_exp);
}

double sharp_dist(const ExactNet& x, const ExactNet& y) {
    if (x.model() != Model::simplified || y.model() != Model::simplified)
        throw ModelMismatch("sharp_dist: simplified model only");
    Valuation v = valuation(x - y);
    if (v.infinite) return 0.0;
    return std::exp(-to_double(v.value));
}

double sharp_norm(const ExactNet& x) { return sharp_dist(x, ExactNet::zero(x.model())); }

std::vector<std::pair<Rational, IotaProfile>> eps_groups(const ExactNet& x) {
    std::vector<std::pair<Rational, IotaProfile>> out;
    std::vector<IotaProfile::Term> cur;
    std::optional<Rational> cur_exp;
    for (const auto& t : x.terms()) {
        if (!cur_exp || t.eps_exp != *cur_exp) {
            if (cur_exp) out.emplace_back(*cur_exp, IotaProfile(std::move(cur)));
            cur.clear();
            cur_exp = t.eps_exp;
        }
        cur.push_back({t.coeff, t.iota_exp});
    }
    if (cur_exp) out.emplace_back(*cur_exp, IotaProfile(std::move(cur)));
    return out;
}

Verdict q_positivity(const ExactNet& x) {
    if (x.is_zero()) return Verdict::Positive;
    if (x.model() == Model::simplified)
        return sign(x.lead().coeff) > 0 ? Verdict::Positive : Verdict::NotPositive;

    auto groups = eps_groups(x);
    const IotaProfile& lead = groups.front().second;
    auto analysis = lead.analyze();
    if (analysis.takes_negative) return Verdict::NotPositive;

    // The leading profile is >= 0; at each of its zeros the first following
    // group that does not vanish there decides the sign.
    for (const auto& z : analysis.rational_zeros) {
        for (size_t k = 1; k < groups.size(); ++k) {
            int s = groups[k].second.sign_at(z);
            if (s < 0) return Verdict::NotPositive;
            if (s > 0) break;
        }
    }
    if (analysis.has_irrational_zero) return Verdict::Unknown;
    return Verdict::Positive;
}

Order order_compare(const ExactNet& x, const ExactNet& y) {
    ExactNet::require_same_model(x, y, "order_compare");
    ExactNet d = y - x;
    Verdict le = q_positivity(d);
    Verdict ge = q_positivity(-d);
    if (le == Verdict::Positive && ge == Verdict::Positive) return Order::EQ;
    if (le == Verdict::Unknown || ge == Verdict::Unknown) return Order::Unknown;
    if (le == Verdict::Positive) return Order::LEQ;
    if (ge == Verdict::Positive) return Order::GEQ;
    return Order::Incomparable;
}

std::optional<ExactNet> abs_exact(const ExactNet& x) {
    if (x.is_zero()) return x;
    if (x.model() == Model::simplified)
        return sign(x.lead().coeff) > 0 ? x : -x;
    Verdict pos = q_positivity(x);
    if (pos == Verdict::Positive) return x;
    Verdict neg = q_positivity(-x);
    if (neg == Verdict::Positive) return -x;
    if (pos == Verdict::Unknown || neg == Verdict::Unknown)
        throw UnknownVerdict("abs: sign analysis of " + x.str() + " is inconclusive");
    return std::nullopt;  // incomparable with 0: |x| lives in the sampled layer
}

std::pair<Rational, bool> rational_proot(const Rational& c, unsigned long p) {
    if (c <= 0) throw std::domain_error("rational_proot: base must be positive");
    if (p == 0) throw std::domain_error("rational_proot: p must be positive");
    mpz_class rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), c.get_num_mpz_t(), p) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), c.get_den_mpz_t(), p) != 0;
    if (en && ed) {
        Rational r(rn, rd);
        r.canonicalize();
        return {r, true};
    }
    // 128-bit approximation: floor((num * 2^(k*p) / den)^(1/p)) / 2^k
    unsigned long k = 140 + mpz_sizeinbase(c.get_den_mpz_t(), 2) / p;
    mpz_class scaled = c.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), k * p);
    scaled /= c.get_den();
    mpz_class root;
    mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), p);
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    Rational r(root, den);
    r.canonicalize();
    return {r, false};
}

std::optional<ExactNet> proot_exact(const ExactNet& x, unsigned long p) {
    if (q_positivity(x) != Verdict::Positive)
        throw std::domain_error("proot: net is not q-positive");
    if (x.is_zero()) return x;
    if (x.terms().size() != 1) return std::nullopt;
    const Term& t = x.lead();
    auto [c, exact] = rational_proot(t.coeff, p);
    Rational pr{long(p)};
    return ExactNet::from_terms(x.model(), {Term(c, t.eps_exp / pr, t.iota_exp / pr)},
                                !exact || x.inexact());
}

Membership scalar_ball_member(const ExactNet& x, const BallSpec& ball) {
    if (x.model() != ball.model) throw ModelMismatch("scalar_ball_member: model mismatch");
    ExactNet radius = ExactNet::alpha(ball.radius_exp, ball.model);
    Verdict above = q_positivity(radius - x);  // x <= alpha_r
    Verdict below = q_positivity(radius + x);  // -alpha_r <= x
    if (above == Verdict::NotPositive || below == Verdict::NotPositive)
        return Membership::NotMember;
    if (above == Verdict::Unknown || below == Verdict::Unknown) return Membership::Unknown;
    return Membership::Member;
}

}  // namespace colgen
