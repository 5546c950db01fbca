#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace colgen {

// Exact rational scalar. GMP's mpq keeps the spec invariants for us:
// canonical form has denominator > 0 and gcd(|num|, den) == 1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs(const Rational& q) { return ::abs(q); }

// Canonical text: "p/q", "p" when q == 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p", "p/q" or "-p/q"; rejects anything else.
inline std::optional<Rational> rational_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rational(q);
}

inline Rational pow_int(const Rational& base, long e) {
    mpz_class num = base.get_num(), den = base.get_den();
    if (e < 0) {
        if (num == 0) throw std::domain_error("pow_int: 0 to negative power");
        std::swap(num, den);
        if (den < 0) { den = -den; num = -num; }
        e = -e;
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

inline long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

// Floor of a rational as an integer.
inline mpz_class floor_int(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline mpz_class ceil_int(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// ln|q| without intermediate overflow; q must be nonzero.
inline double log_abs(const Rational& q) {
    if (q == 0) throw std::domain_error("log_abs(0)");
    signed long en, ed;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    constexpr double ln2 = 0.6931471805599453094;
    return std::log(std::fabs(mn)) - std::log(md) + (double(en) - double(ed)) * ln2;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Every finite double is a dyadic rational; this is the exact value.
inline Rational rational_from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("rational_from_double: not finite");
    Rational q;
    mpq_set_d(q.get_mpq_t(), d);
    return q;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace colgen
