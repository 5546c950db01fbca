#pragma once

#include "colgen/rational.hpp"

namespace colgen {

// Transcendental evaluation at exact rational arguments. Arguments here can
// be astronomically large (1/eps at eps = 2^-200), where a double round-trip
// through the argument would lose every digit of the phase; these reduce with
// enough working precision to keep ~50 correct bits in the result.
double sin_at(const Rational& x);
double cos_at(const Rational& x);

// ln(x), x > 0; accurate for rationals of any magnitude.
double log_at(const Rational& x);

}  // namespace colgen
