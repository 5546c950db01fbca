#pragma once

#include <optional>
#include <vector>

#include "colgen/polynomial.hpp"
#include "colgen/rational.hpp"

namespace colgen {

// Location of one real root: either an exact rational value or an open
// isolating interval (lo, hi) with P(lo) != 0, P(hi) != 0 containing exactly
// one root of P.
struct RootLoc {
    bool exact = false;
    Rational value;  // when exact
    Rational lo, hi; // when not exact
};

std::vector<Polynomial> sturm_sequence(const Polynomial& p);

// Number of distinct real roots of the squarefree polynomial behind `seq` in
// the half-open interval (a, b].
int sturm_count(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b);

// All |roots| of p lie within (-bound, bound).
Rational cauchy_root_bound(const Polynomial& p);

// Squarefree part p / gcd(p, p').
Polynomial squarefree_part(const Polynomial& p);

// Distinct real roots of p in the open interval (lo, hi), ascending. The
// returned isolating intervals are pairwise disjoint and lie inside (lo, hi).
std::vector<RootLoc> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Distinct real roots of p in (0, +infinity).
std::vector<RootLoc> isolate_positive_roots(const Polynomial& p);

// Shrinks an isolating interval of a squarefree p until hi - lo <= width (or
// the root is found exactly).
RootLoc refine_root(const Polynomial& p, RootLoc loc, const Rational& width);

// Sign of q at the unique root of the squarefree polynomial p located by loc.
int sign_at_root(const Polynomial& q, const Polynomial& p, const RootLoc& loc);

// Interval evaluation: the image of [lo, hi] under p is contained in the
// returned pair.
std::pair<Rational, Rational> interval_eval(const Polynomial& p, const Rational& lo,
                                            const Rational& hi);

// Enclosure of sup_{x in [lo, hi]} |p(x)|. exact implies lo == hi.
struct SupBound {
    Rational lo, hi;
    bool exact = false;

    static SupBound point(const Rational& v) { return {v, v, true}; }
};

// Certified supremum of |p| over the compact interval [lo, hi]; the enclosure
// width is at most tol unless the value was determined exactly.
SupBound poly_sup_abs(const Polynomial& p, const Rational& lo, const Rational& hi,
                      const Rational& tol);

}  // namespace colgen
