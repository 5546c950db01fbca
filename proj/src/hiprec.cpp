#include "colgen/hiprec.hpp"

#include <mpfr.h>

#include <algorithm>

namespace colgen {

namespace {

// Working precision must cover the integer part of the argument plus the
// bits we want back after reduction mod 2*pi.
mpfr_prec_t prec_for(const Rational& x) {
    size_t nb = mpz_sizeinbase(x.get_num_mpz_t(), 2);
    size_t db = mpz_sizeinbase(x.get_den_mpz_t(), 2);
    size_t mag = nb > db ? nb - db : 0;
    return mpfr_prec_t(std::min<size_t>(mag + 128, 100000));
}

double trig_at(const Rational& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    mpfr_t t;
    mpfr_init2(t, prec_for(x));
    mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDN);
    fn(t, t, MPFR_RNDN);
    double r = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

}  // namespace

double sin_at(const Rational& x) { return trig_at(x, mpfr_sin); }
double cos_at(const Rational& x) { return trig_at(x, mpfr_cos); }

double log_at(const Rational& x) { return log_abs(x); }

}  // namespace colgen
