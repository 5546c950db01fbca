#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colgen/exact_net.hpp"
#include "colgen/order.hpp"
#include "colgen/polynomial.hpp"
#include "colgen/roots.hpp"

namespace colgen {

// Open interval of the real line, possibly unbounded.
struct IntervalDomain {
    std::optional<Rational> lower, upper;  // nullopt encodes -inf / +inf

    IntervalDomain(std::optional<Rational> lo, std::optional<Rational> hi)
        : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower && upper && !(*lower < *upper))
            throw std::invalid_argument("IntervalDomain: need lower < upper");
    }

    static IntervalDomain real_line() { return {std::nullopt, std::nullopt}; }
    static IntervalDomain bounded(Rational lo, Rational hi) {
        return {std::move(lo), std::move(hi)};
    }

    friend bool operator==(const IntervalDomain& a, const IntervalDomain& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }

    std::string str() const {
        auto b = [](const std::optional<Rational>& v, const char* inf) {
            return v ? to_string(*v) : std::string(inf);
        };
        return "(" + b(lower, "-inf") + ", " + b(upper, "inf") + ")";
    }
};

// Least natural offset l0 >= 1 making Omega_0 nonempty under the fixed rule
// Omega_l = { x in Omega : |x| < l + l0, dist(x, boundary) > 1/(l + l0) }.
long exhaustion_offset(const IntervalDomain& dom);

// Closure of Omega_l, a compact interval [lo, hi] with lo < hi.
std::pair<Rational, Rational> exhaustion_closure(const IntervalDomain& dom, long l);

// Representative with polynomial coefficients: sum p_k(x) * eps^a_k
// [* iota^b_k], canonical by (a_k, b_k) with nonzero p_k.
class GenFunRep {
public:
    struct FTerm {
        Polynomial poly;
        Rational eps_exp;
        Rational iota_exp;
    };

    GenFunRep(Model model, IntervalDomain dom) : model_(model), dom_(std::move(dom)) {}

    static GenFunRep zero(Model m, IntervalDomain dom) { return GenFunRep(m, std::move(dom)); }

    static GenFunRep from_terms(Model m, IntervalDomain dom, std::vector<FTerm> raw);

    Model model() const { return model_; }
    const IntervalDomain& domain() const { return dom_; }
    const std::vector<FTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GenFunRep derive(unsigned order) const;

    friend GenFunRep operator+(const GenFunRep& f, const GenFunRep& g);
    friend GenFunRep operator-(const GenFunRep& f);
    friend GenFunRep operator-(const GenFunRep& f, const GenFunRep& g) { return f + (-g); }
    friend GenFunRep operator*(const GenFunRep& f, const GenFunRep& g);
    friend bool operator==(const GenFunRep& f, const GenFunRep& g);

    std::string str() const;

    static void require_compatible(const GenFunRep& f, const GenFunRep& g, const char* op);

private:
    Model model_;
    IntervalDomain dom_;
    std::vector<FTerm> terms_;
};

// Generalized constant lambda as a generalized function on dom.
GenFunRep embed_const(const ExactNet& lambda, const IntervalDomain& dom);

// lambda * f.
GenFunRep scalar_mul(const ExactNet& lambda, const GenFunRep& f);

// Simplified -> full along u(min(1, i(phi)), x); termwise (p, q) -> (p, q, q).
GenFunRep psi_embed(const GenFunRep& f);

// Exact integral over [m1, m2]; requires closure([m1, m2]) inside the domain.
ExactNet integrate(const GenFunRep& f, const Rational& m1, const Rational& m2);

// P = sum a_k * d^k/dx^k with generalized-function coefficients.
struct LpdoCoeff {
    GenFunRep coeff;
    unsigned order;
};
GenFunRep lpdo_apply(const std::vector<LpdoCoeff>& op, const GenFunRep& f);

// Exact leading data of the seminorm net eps |-> sup_{Omega_l} |d^beta f|.
struct SeminormDescriptor {
    struct TermBound {
        SupBound sup;
        Rational eps_exp;
        Rational iota_exp;
    };

    bool infinite = true;  // zero seminorm net
    Rational lead_exp;
    SupBound lead_sup;
    std::vector<TermBound> bounds;

    std::string str() const;
};

inline Rational seminorm_default_tol() { return Rational(1, 1000000000000L); }

SeminormDescriptor seminorm(const GenFunRep& f, unsigned beta, long l,
                            const Rational& tol = seminorm_default_tol());

// f in W^beta_{l,r}: the seminorm bound must hold for every sigma <= beta
// (set all_sigma = false for single-seminorm balls B_{p,r}).
Membership gf_ball_member(const GenFunRep& f, unsigned beta, long l, const Rational& r,
                          bool all_sigma = true);

}  // namespace colgen
