#pragma once

#include <optional>
#include <string>

#include "colgen/exact_net.hpp"
#include "colgen/iota_profile.hpp"

namespace colgen {

enum class Verdict { Positive, NotPositive, Unknown };
enum class Order { LEQ, GEQ, EQ, Incomparable, Unknown };
enum class Membership { Member, NotMember, Unknown };

const char* to_token(Verdict v);     // "positive" | "not-positive" | "unknown"
const char* to_token(Membership m);  // "member" | "not-member" | "unknown"
const char* to_token(Order o);       // "leq" | "geq" | "eq" | "incomparable" | "unknown"

// Raised when a decision procedure's precondition would need an Unknown
// verdict resolved.
struct UnknownVerdict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Extended valuation: infinite exactly for the zero net.
struct Valuation {
    bool infinite = true;
    Rational value;

    static Valuation inf() { return {}; }
    static Valuation finite(Rational v) { return {false, std::move(v)}; }

    std::string str() const { return infinite ? "inf" : to_string(value); }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    // infinite compares above every finite valuation
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite) return false;
        if (b.infinite) return true;
        return a.value < b.value;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
};

Valuation valuation(const ExactNet& x);

// Scarpalezos sharp distance; simplified model only.
double sharp_dist(const ExactNet& x, const ExactNet& y);
double sharp_norm(const ExactNet& x);

Verdict q_positivity(const ExactNet& x);
Order order_compare(const ExactNet& x, const ExactNet& y);

// Exact absolute value. nullopt means the net is order-incomparable with 0
// and |x| only exists in the sampled layer. Throws UnknownVerdict when the
// sign analysis cannot decide.
std::optional<ExactNet> abs_exact(const ExactNet& x);

// Exact q-positive p-th root of a single-term (or zero) q-positive net;
// irrational coefficients are carried as 128-bit-accurate rationals and the
// result is flagged inexact. nullopt for multi-term nets (sampled layer).
std::optional<ExactNet> proot_exact(const ExactNet& x, unsigned long p);

// Coefficient-level p-th root used by proot: (value, is_exact).
std::pair<Rational, bool> rational_proot(const Rational& c, unsigned long p);

struct BallSpec {
    Model model;
    Rational radius_exp;
};

// x in V_r[0] (full) or V_r(0) (simplified); decided exactly as
// q-positivity of alpha_r -+ x.
Membership scalar_ball_member(const ExactNet& x, const BallSpec& ball);

// Eps-exponent groups of a net as iota profiles, ascending by exponent.
std::vector<std::pair<Rational, IotaProfile>> eps_groups(const ExactNet& x);

}  // namespace colgen
