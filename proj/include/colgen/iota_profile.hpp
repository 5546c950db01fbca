#pragma once

#include <vector>

#include "colgen/rational.hpp"

namespace colgen {

// Finite sum of rational powers of the diameter variable: sum c * iota^e.
// These arise as the per-eps-exponent groups of a full-model net and drive
// every sign decision on (0, infinity).
class IotaProfile {
public:
    struct Term {
        Rational coeff;
        Rational exp;
    };

    struct Analysis {
        bool takes_negative = false;
        bool takes_positive = false;
        std::vector<Rational> rational_zeros;  // in iota space, ascending
        bool has_irrational_zero = false;
    };

    IotaProfile() = default;
    explicit IotaProfile(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Exact sign pattern on (0, infinity).
    Analysis analyze() const;

    // Exact sign at a rational point iota0 > 0. Works for fractional
    // exponents by locating iota0^(1/Q) as an algebraic number.
    int sign_at(const Rational& iota0) const;

private:
    std::vector<Term> terms_;  // canonical: merged, nonzero, ascending exp
};

}  // namespace colgen
