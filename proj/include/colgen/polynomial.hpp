#pragma once

#include <string>
#include <vector>

#include "colgen/rational.hpp"

namespace colgen {

// Univariate polynomial with rational coefficients, dense ascending order,
// no trailing zero coefficient. The zero polynomial has an empty vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }
    static Polynomial monomial(const Rational& v, unsigned k) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = v;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const { return c_.back(); }

    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Rational> r = a.c_;
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const Rational& s, const Polynomial& a) {
        std::vector<Rational> r = a.c_;
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial derivative(unsigned order = 1) const {
        Polynomial p = *this;
        for (unsigned k = 0; k < order && !p.is_zero(); ++k) {
            std::vector<Rational> r;
            for (size_t i = 1; i < p.c_.size(); ++i) r.push_back(Rational(long(i)) * p.c_[i]);
            p = Polynomial(std::move(r));
        }
        return p;
    }

    Polynomial antiderivative() const {
        std::vector<Rational> r(c_.size() + 1, Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Rational(long(i + 1));
        return Polynomial(std::move(r));
    }

    Rational operator()(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + to_double(c_[i]);
        return acc;
    }

    Rational integral_over(const Rational& lo, const Rational& hi) const {
        Polynomial F = antiderivative();
        return F(hi) - F(lo);
    }

    // Sparse "c*x^k" form: "3*x^2 + -1*x^0"; "0" for the zero polynomial.
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!first) out += " + ";
            out += to_string(c_[i]) + "*x^" + std::to_string(i);
            first = false;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// Euclidean remainder of a by b (b nonzero).
inline Polynomial poly_rem(Polynomial a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("poly_rem: division by zero polynomial");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.leading() / b.leading();
        int shift = a.degree() - b.degree();
        std::vector<Rational> r = a.coeffs();
        const auto& bc = b.coeffs();
        for (size_t i = 0; i < bc.size(); ++i) r[i + shift] -= f * bc[i];
        a = Polynomial(std::move(r));
    }
    return a;
}

// Monic gcd via Euclid; exact rationals keep this stable.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
}

}  // namespace colgen
