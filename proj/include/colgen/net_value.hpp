#pragma once

#include <cmath>
#include <limits>

#include "colgen/rational.hpp"

namespace colgen {

// Signed log-domain scalar. Keeps sign and ln|v| separately so nets can be
// evaluated at eps = 2^-200 and beyond without underflowing a double.
struct NetValue {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;  // -1, 0, +1

    static NetValue zero() { return {}; }

    static NetValue from_double(double v) {
        if (v == 0.0) return {};
        return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
    }

    static NetValue from_rational(const Rational& q) {
        if (q == 0) return {};
        return {log_abs_of(q), colgen::sign(q)};
    }

    bool is_zero() const { return sign == 0; }

    // May overflow to +-inf or underflow to +-0; callers needing the tail use
    // log_abs directly.
    double value() const {
        if (sign == 0) return 0.0;
        return double(sign) * std::exp(log_abs);
    }

    bool finite_value() const {
        return sign == 0 || std::isfinite(std::exp(log_abs));
    }

    NetValue operator-() const { return {log_abs, -sign}; }

    friend NetValue operator*(const NetValue& a, const NetValue& b) {
        if (a.sign == 0 || b.sign == 0) return {};
        return {a.log_abs + b.log_abs, a.sign * b.sign};
    }

    friend NetValue operator+(const NetValue& a, const NetValue& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        double m = std::max(a.log_abs, b.log_abs);
        double s = a.sign * std::exp(a.log_abs - m) + b.sign * std::exp(b.log_abs - m);
        if (s == 0.0) return {};
        return {m + std::log(std::fabs(s)), s > 0 ? 1 : -1};
    }

private:
    static double log_abs_of(const Rational& q) { return colgen::log_abs(q); }
};

}  // namespace colgen
