#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colgen/net_value.hpp"
#include "colgen/rational.hpp"

namespace colgen {

enum class Model { simplified, full };

inline const char* model_name(Model m) {
    return m == Model::simplified ? "simplified" : "full";
}

struct ModelMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// One monomial of a representative: coeff * eps^eps_exp * iota^iota_exp.
// Simplified-model terms keep iota_exp == 0.
struct Term {
    Rational coeff;
    Rational eps_exp;
    Rational iota_exp;

    Term(Rational c, Rational q) : coeff(std::move(c)), eps_exp(std::move(q)), iota_exp(0) {}
    Term(Rational c, Rational a, Rational b)
        : coeff(std::move(c)), eps_exp(std::move(a)), iota_exp(std::move(b)) {}
};

// Canonical finite sum of terms, strictly increasing by (eps_exp, iota_exp).
// The empty sum is the zero generalized number; anything else has a finite
// valuation, so "null" and "zero" coincide on this representation.
class ExactNet {
public:
    explicit ExactNet(Model m) : model_(m) {}

    static ExactNet zero(Model m) { return ExactNet(m); }

    static ExactNet one(Model m) {
        return from_terms(m, {Term(Rational(1), Rational(0), Rational(0))});
    }

    static ExactNet constant(Model m, const Rational& c) {
        return from_terms(m, {Term(c, Rational(0), Rational(0))});
    }

    // alpha_r (simplified) or alpha_r^bullet (full); the canonical radius
    // units. Along scaled mollifiers the full one is eps^r * iota^r.
    static ExactNet alpha(const Rational& r, Model m) {
        if (m == Model::simplified) return from_terms(m, {Term(Rational(1), r)});
        return from_terms(m, {Term(Rational(1), r, r)});
    }

    static ExactNet from_terms(Model m, std::vector<Term> raw, bool inexact = false) {
        ExactNet n(m);
        n.inexact_ = inexact;
        n.terms_ = normalize_terms(m, std::move(raw));
        return n;
    }

    Model model() const { return model_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool inexact() const { return inexact_; }

    const Term& lead() const {
        if (terms_.empty()) throw std::domain_error("lead(): zero net");
        return terms_.front();
    }

    friend ExactNet operator-(const ExactNet& x) {
        ExactNet r(x.model_);
        r.inexact_ = x.inexact_;
        r.terms_ = x.terms_;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend ExactNet operator+(const ExactNet& x, const ExactNet& y) {
        require_same_model(x, y, "add");
        std::vector<Term> raw = x.terms_;
        raw.insert(raw.end(), y.terms_.begin(), y.terms_.end());
        return from_terms(x.model_, std::move(raw), x.inexact_ || y.inexact_);
    }

    friend ExactNet operator-(const ExactNet& x, const ExactNet& y) { return x + (-y); }

    friend ExactNet operator*(const ExactNet& x, const ExactNet& y) {
        require_same_model(x, y, "mul");
        std::vector<Term> raw;
        raw.reserve(x.terms_.size() * y.terms_.size());
        for (const auto& a : x.terms_)
            for (const auto& b : y.terms_)
                raw.emplace_back(a.coeff * b.coeff, a.eps_exp + b.eps_exp,
                                 a.iota_exp + b.iota_exp);
        return from_terms(x.model_, std::move(raw), x.inexact_ || y.inexact_);
    }

    friend bool operator==(const ExactNet& x, const ExactNet& y) {
        if (x.model_ != y.model_ || x.terms_.size() != y.terms_.size()) return false;
        for (size_t i = 0; i < x.terms_.size(); ++i) {
            const Term &a = x.terms_[i], &b = y.terms_[i];
            if (a.coeff != b.coeff || a.eps_exp != b.eps_exp || a.iota_exp != b.iota_exp)
                return false;
        }
        return true;
    }

    // Log-domain evaluation, deterministic term order.
    NetValue eval_log(double log_eps, std::optional<double> log_iota = std::nullopt) const {
        if (model_ == Model::full && !log_iota)
            throw std::invalid_argument("eval: full-model net needs iota");
        NetValue acc = NetValue::zero();
        for (const auto& t : terms_) {
            NetValue v = NetValue::from_rational(t.coeff);
            v.log_abs += to_double(t.eps_exp) * log_eps;
            if (model_ == Model::full) v.log_abs += to_double(t.iota_exp) * *log_iota;
            acc = acc + v;
        }
        return acc;
    }

    NetValue eval(const NetValue& eps, std::optional<NetValue> iota = std::nullopt) const {
        if (eps.sign <= 0) throw std::invalid_argument("eval: eps must be positive");
        std::optional<double> li;
        if (iota) {
            if (iota->sign <= 0) throw std::invalid_argument("eval: iota must be positive");
            li = iota->log_abs;
        }
        return eval_log(eps.log_abs, li);
    }

    // Exact evaluation; defined only when every exponent is an integer.
    std::optional<Rational> eval_exact(const Rational& eps,
                                       std::optional<Rational> iota = std::nullopt) const {
        if (model_ == Model::full && !iota) return std::nullopt;
        Rational acc(0);
        for (const auto& t : terms_) {
            if (t.eps_exp.get_den() != 1 || t.iota_exp.get_den() != 1) return std::nullopt;
            Rational v = t.coeff * pow_int(eps, to_long(t.eps_exp.get_num()));
            if (model_ == Model::full) v *= pow_int(*iota, to_long(t.iota_exp.get_num()));
            acc += v;
        }
        return acc;
    }

    // Canonical text form: "c*e^(q)" / "c*e^(a)*i^(b)" joined by " + "; "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (i) out += " + ";
            out += to_string(terms_[i].coeff);
            out += "*e^(" + to_string(terms_[i].eps_exp) + ")";
            if (model_ == Model::full) out += "*i^(" + to_string(terms_[i].iota_exp) + ")";
        }
        return out;
    }

    static void require_same_model(const ExactNet& x, const ExactNet& y, const char* op) {
        if (x.model_ != y.model_)
            throw ModelMismatch(std::string(op) + ": mixed simplified/full operands");
    }

private:
    static std::vector<Term> normalize_terms(Model m, std::vector<Term> raw) {
        if (m == Model::simplified)
            for (auto& t : raw) t.iota_exp = 0;
        std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
            if (a.eps_exp != b.eps_exp) return a.eps_exp < b.eps_exp;
            return a.iota_exp < b.iota_exp;
        });
        std::vector<Term> out;
        for (auto& t : raw) {
            if (t.coeff == 0) continue;
            if (!out.empty() && out.back().eps_exp == t.eps_exp &&
                out.back().iota_exp == t.iota_exp) {
                out.back().coeff += t.coeff;
                if (out.back().coeff == 0) out.pop_back();
            } else {
                out.push_back(std::move(t));
            }
        }
        return out;
    }

    Model model_;
    std::vector<Term> terms_;
    bool inexact_ = false;
};

// Simplified -> full embedding along eps |-> min(1, i(phi)): term (c, q)
// lands on (c, q, q), since along scaled mollifiers the image evaluates to
// c*(eps*iota)^q for eps < 1/iota and nets agreeing for small eps coincide.
inline ExactNet jm_embed(const ExactNet& x) {
    if (x.model() != Model::simplified)
        throw ModelMismatch("jm_embed: expects a simplified net");
    std::vector<Term> raw;
    raw.reserve(x.terms().size());
    for (const auto& t : x.terms()) raw.emplace_back(t.coeff, t.eps_exp, t.eps_exp);
    return ExactNet::from_terms(Model::full, std::move(raw), x.inexact());
}

}  // namespace colgen
