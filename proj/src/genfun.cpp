#include "colgen/genfun.hpp"

#include <algorithm>
#include <sstream>

namespace colgen {

long exhaustion_offset(const IntervalDomain& dom) {
    for (long l0 = 1; l0 < 1000000; ++l0) {
        Rational L(l0);
        Rational lo = -L, hi = L;
        if (dom.lower) lo = std::max(lo, Rational(*dom.lower + 1 / L));
        if (dom.upper) hi = std::min(hi, Rational(*dom.upper - 1 / L));
        if (lo < hi) return l0;
    }
    throw std::logic_error("exhaustion_offset: no offset found");
}

std::pair<Rational, Rational> exhaustion_closure(const IntervalDomain& dom, long l) {
    Rational L(l + exhaustion_offset(dom));
    Rational lo = -L, hi = L;
    if (dom.lower) lo = std::max(lo, Rational(*dom.lower + 1 / L));
    if (dom.upper) hi = std::min(hi, Rational(*dom.upper - 1 / L));
    return {lo, hi};
}

GenFunRep GenFunRep::from_terms(Model m, IntervalDomain dom, std::vector<FTerm> raw) {
    GenFunRep f(m, std::move(dom));
    if (m == Model::simplified)
        for (auto& t : raw) t.iota_exp = 0;
    std::sort(raw.begin(), raw.end(), [](const FTerm& a, const FTerm& b) {
        if (a.eps_exp != b.eps_exp) return a.eps_exp < b.eps_exp;
        return a.iota_exp < b.iota_exp;
    });
    for (auto& t : raw) {
        if (t.poly.is_zero()) continue;
        if (!f.terms_.empty() && f.terms_.back().eps_exp == t.eps_exp &&
            f.terms_.back().iota_exp == t.iota_exp) {
            f.terms_.back().poly = f.terms_.back().poly + t.poly;
            if (f.terms_.back().poly.is_zero()) f.terms_.pop_back();
        } else {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

void GenFunRep::require_compatible(const GenFunRep& f, const GenFunRep& g, const char* op) {
    if (f.model_ != g.model_)
        throw ModelMismatch(std::string(op) + ": mixed simplified/full operands");
    if (!(f.dom_ == g.dom_))
        throw std::invalid_argument(std::string(op) + ": domain mismatch");
}

GenFunRep GenFunRep::derive(unsigned order) const {
    std::vector<FTerm> raw;
    for (const auto& t : terms_) raw.push_back({t.poly.derivative(order), t.eps_exp, t.iota_exp});
    return from_terms(model_, dom_, std::move(raw));
}

GenFunRep operator+(const GenFunRep& f, const GenFunRep& g) {
    GenFunRep::require_compatible(f, g, "add");
    std::vector<GenFunRep::FTerm> raw = f.terms_;
    raw.insert(raw.end(), g.terms_.begin(), g.terms_.end());
    return GenFunRep::from_terms(f.model_, f.dom_, std::move(raw));
}

GenFunRep operator-(const GenFunRep& f) {
    std::vector<GenFunRep::FTerm> raw;
    for (const auto& t : f.terms_) raw.push_back({-t.poly, t.eps_exp, t.iota_exp});
    return GenFunRep::from_terms(f.model_, f.dom_, std::move(raw));
}

GenFunRep operator*(const GenFunRep& f, const GenFunRep& g) {
    GenFunRep::require_compatible(f, g, "mul");
    std::vector<GenFunRep::FTerm> raw;
    raw.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_)
        for (const auto& b : g.terms_)
            raw.push_back({a.poly * b.poly, a.eps_exp + b.eps_exp, a.iota_exp + b.iota_exp});
    return GenFunRep::from_terms(f.model_, f.dom_, std::move(raw));
}

bool operator==(const GenFunRep& f, const GenFunRep& g) {
    if (f.model_ != g.model_ || !(f.dom_ == g.dom_) || f.terms_.size() != g.terms_.size())
        return false;
    for (size_t i = 0; i < f.terms_.size(); ++i) {
        const auto &a = f.terms_[i], &b = g.terms_[i];
        if (!(a.poly == b.poly) || a.eps_exp != b.eps_exp || a.iota_exp != b.iota_exp)
            return false;
    }
    return true;
}

std::string GenFunRep::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += "(" + terms_[i].poly.str() + ")*e^(" + to_string(terms_[i].eps_exp) + ")";
        if (model_ == Model::full) out += "*i^(" + to_string(terms_[i].iota_exp) + ")";
    }
    return out;
}

GenFunRep embed_const(const ExactNet& lambda, const IntervalDomain& dom) {
    std::vector<GenFunRep::FTerm> raw;
    for (const auto& t : lambda.terms())
        raw.push_back({Polynomial::constant(t.coeff), t.eps_exp, t.iota_exp});
    return GenFunRep::from_terms(lambda.model(), dom, std::move(raw));
}

GenFunRep scalar_mul(const ExactNet& lambda, const GenFunRep& f) {
    return embed_const(lambda, f.domain()) * f;
}

GenFunRep psi_embed(const GenFunRep& f) {
    if (f.model() != Model::simplified)
        throw ModelMismatch("psi_embed: expects a simplified representative");
    std::vector<GenFunRep::FTerm> raw;
    for (const auto& t : f.terms()) raw.push_back({t.poly, t.eps_exp, t.eps_exp});
    return GenFunRep::from_terms(Model::full, f.domain(), std::move(raw));
}

ExactNet integrate(const GenFunRep& f, const Rational& m1, const Rational& m2) {
    if (m1 > m2) throw std::invalid_argument("integrate: need m1 <= m2");
    const auto& dom = f.domain();
    bool inside = (!dom.lower || *dom.lower < m1) && (!dom.upper || m2 < *dom.upper);
    if (!inside)
        throw std::invalid_argument("integrate: [" + to_string(m1) + ", " + to_string(m2) +
                                    "] is not compactly contained in " + dom.str());
    std::vector<Term> raw;
    for (const auto& t : f.terms())
        raw.emplace_back(t.poly.integral_over(m1, m2), t.eps_exp, t.iota_exp);
    return ExactNet::from_terms(f.model(), std::move(raw));
}

GenFunRep lpdo_apply(const std::vector<LpdoCoeff>& op, const GenFunRep& f) {
    GenFunRep acc = GenFunRep::zero(f.model(), f.domain());
    for (const auto& c : op) acc = acc + c.coeff * f.derive(c.order);
    return acc;
}

std::string SeminormDescriptor::str() const {
    if (infinite) return "inf";
    std::ostringstream os;
    os << "lead_exp=" << to_string(lead_exp) << " lead_sup=";
    if (lead_sup.exact)
        os << to_string(lead_sup.lo);
    else
        os << "[" << to_double(lead_sup.lo) << ", " << to_double(lead_sup.hi) << "]";
    return os.str();
}

SeminormDescriptor seminorm(const GenFunRep& f, unsigned beta, long l, const Rational& tol) {
    auto [klo, khi] = exhaustion_closure(f.domain(), l);
    SeminormDescriptor d;
    for (const auto& t : f.terms()) {
        Polynomial p = t.poly.derivative(beta);
        if (p.is_zero()) continue;
        d.bounds.push_back({poly_sup_abs(p, klo, khi, tol), t.eps_exp, t.iota_exp});
    }
    if (d.bounds.empty()) return d;
    d.infinite = false;
    d.lead_exp = d.bounds.front().eps_exp;
    // lead datum: the sup of the leading eps-group; for a full-model group
    // with several iota terms, the sum of sups (an upper envelope)
    SupBound acc = d.bounds.front().sup;
    for (size_t i = 1; i < d.bounds.size() && d.bounds[i].eps_exp == d.lead_exp; ++i) {
        acc.lo = acc.lo + d.bounds[i].sup.lo;
        acc.hi = acc.hi + d.bounds[i].sup.hi;
        acc.exact = false;
    }
    d.lead_sup = acc;
    return d;
}

namespace {

// Decide sup-boundary "s <= 1" given an enclosure, refining once at very
// high precision before giving up.
Membership compare_sup_to_one(const Polynomial& p, const Rational& klo, const Rational& khi,
                              SupBound s, bool sole_term) {
    if (!s.exact && (s.lo <= 1 && 1 <= s.hi)) {
        Rational deep = Rational(1, mpz_class(1) << 140);
        s = poly_sup_abs(p, klo, khi, deep);
    }
    if (s.exact) {
        if (s.lo < 1) return Membership::Member;
        if (s.lo > 1) return Membership::NotMember;
        // sup exactly 1: membership depends on the higher-order terms'
        // contribution at the maximizer; decidable only when there are none
        return sole_term ? Membership::Member : Membership::Unknown;
    }
    if (s.hi < 1) return Membership::Member;
    if (s.lo > 1) return Membership::NotMember;
    return Membership::Unknown;
}

// sigma-th derivative terms that survive, with their sups deferred.
struct SigmaTerm {
    Polynomial poly;
    Rational eps_exp;
    Rational iota_exp;
};

Membership check_sigma(const GenFunRep& f, unsigned sigma, long l, const Rational& r) {
    auto [klo, khi] = exhaustion_closure(f.domain(), l);
    std::vector<SigmaTerm> terms;
    bool all_const = true;
    for (const auto& t : f.terms()) {
        Polynomial p = t.poly.derivative(sigma);
        if (p.is_zero()) continue;
        if (p.degree() > 0) all_const = false;
        terms.push_back({std::move(p), t.eps_exp, t.iota_exp});
    }
    if (terms.empty()) return Membership::Member;

    if (all_const) {
        // the seminorm net is |scalar net|; decide exactly on that side
        std::vector<Term> raw;
        for (const auto& t : terms) raw.emplace_back(t.poly.coeff(0), t.eps_exp, t.iota_exp);
        ExactNet net = ExactNet::from_terms(f.model(), std::move(raw));
        return scalar_ball_member(net, BallSpec{f.model(), r});
    }

    const Rational& a1 = terms.front().eps_exp;
    if (a1 > r) return Membership::Member;
    if (a1 < r) return Membership::NotMember;

    size_t lead_count = 0;
    while (lead_count < terms.size() && terms[lead_count].eps_exp == a1) ++lead_count;

    Rational tol = seminorm_default_tol();
    if (f.model() == Model::simplified || (lead_count == 1 && terms[0].iota_exp == r)) {
        const Polynomial& p = terms[0].poly;
        SupBound s = poly_sup_abs(p, klo, khi, tol);
        return compare_sup_to_one(p, klo, khi, s, terms.size() == 1);
    }
    // Full model, critical eps exponent, off-diagonal iota powers. Canonical
    // terms in one eps-group carry distinct iota exponents, so with several
    // terms (or a single one with b != r) some power b != r is present; at a
    // point x where its polynomial does not vanish the group value grows like
    // iota^b against the allowed iota^r as iota -> 0 or infinity, and the
    // bound fails at such diameters.
    return Membership::NotMember;
}

}  // namespace

Membership gf_ball_member(const GenFunRep& f, unsigned beta, long l, const Rational& r,
                          bool all_sigma) {
    bool unknown = false;
    unsigned first = all_sigma ? 0 : beta;
    for (unsigned sigma = first; sigma <= beta; ++sigma) {
        Membership m = check_sigma(f, sigma, l, r);
        if (m == Membership::NotMember) return Membership::NotMember;
        if (m == Membership::Unknown) unknown = true;
    }
    return unknown ? Membership::Unknown : Membership::Member;
}

}  // namespace colgen
