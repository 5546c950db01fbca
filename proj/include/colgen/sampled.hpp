#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colgen/exact_net.hpp"
#include "colgen/order.hpp"

namespace colgen {

// Geometric evaluation grid eps_j = 2^-j.
struct GridSpec {
    int j0 = 4;
    int J = 200;
    int tail_window = 64;

    int tail_begin() const { return std::max(j0, J - tail_window + 1); }
};

struct GridPoint {
    int j = 0;
    double log_eps = 0;
    std::optional<double> log_iota;
    std::optional<Rational> iota;  // exact value behind log_iota when known
};

// Exact leading data attached by producers (coefficient as a double is
// enough: it feeds the semi-numeric layer only; the exponent stays exact).
struct LeadData {
    double coeff = 0;
    Rational exp;
};

// Black-box net over the grid; the semi-numeric oracle's subject.
class SampledNet {
public:
    using Evaluator = std::function<NetValue(const GridPoint&)>;

    SampledNet(Model model, Evaluator ev, GridSpec grid = {},
               std::optional<LeadData> lead = std::nullopt)
        : model_(model), eval_(std::move(ev)), grid_(grid), lead_(std::move(lead)) {}

    Model model() const { return model_; }
    const GridSpec& grid() const { return grid_; }
    const std::optional<LeadData>& lead() const { return lead_; }

    NetValue operator()(const GridPoint& p) const { return eval_(p); }

    static SampledNet from_exact(const ExactNet& x, GridSpec grid = {});

    // |x| for order-incomparable exact nets.
    static SampledNet abs_of(const ExactNet& x, GridSpec grid = {});

    // The q-positive p-th root of a multi-term q-positive net, pointwise,
    // carrying exact leading data (c_1^(1/p), q_1/p).
    static SampledNet proot_of(const ExactNet& x, unsigned long p, GridSpec grid = {});

    // eps |-> max(0, x(eps)); the clipped nonnegative representative a
    // q-positive net always possesses.
    static SampledNet nonneg_of(const ExactNet& x, GridSpec grid = {});

    // this - y, for null tests of corrections.
    SampledNet minus_exact(const ExactNet& y) const;

    // The oscillating net (eps, iota) |-> eps*iota*sin(1/(eps*iota)), i.e.
    // i(phi)*sin(1/i(phi)) along dilations; comparable with 0 in neither
    // direction.
    static SampledNet oscillating_preset(GridSpec grid = {});

    std::string describe() const;

private:
    Model model_;
    Evaluator eval_;
    GridSpec grid_;
    std::optional<LeadData> lead_;
};

// Diameters 2/((2k+1)*pi), k = 0..count-1: the schedule on which the
// oscillating preset takes the values +-i(phi).
std::vector<Rational> oscillating_schedule(int count);

struct OracleConfig {
    Rational probe_B = Rational(50);
    std::vector<Rational> b_list = {Rational(1), Rational(2), Rational(3), Rational(5),
                                    Rational(10)};
    // iota sampling for full nets when the caller supplies no schedule
    std::vector<Rational> iota_probes;

    OracleConfig();
};

struct ValuationEstimate {
    double slope = 0;
    double half_width = 0;
    int window_lo = 0, window_hi = 0;
    bool plausibly_infinite = false;

    std::string str() const;
};

ValuationEstimate estimate_valuation(const SampledNet& net, const OracleConfig& cfg = {});

enum class FalsifyDirection { geq0, leq0 };

struct Witness {
    int j = 0;
    Rational eps;  // exactly 2^-j
    std::optional<Rational> iota;
    Rational b;
    double log_abs_value = 0;
    int value_sign = 0;

    std::string str() const;
};

struct FalsifyResult {
    bool falsified = false;
    std::optional<Witness> witness;
    int violations = 0;
};

// Searches the tail of the grid (and the iota schedule, for full nets) for a
// point where x(phi_eps) < -eps^b (geq0) resp. > +eps^b (leq0). A hit
// refutes the corresponding order statement; absence proves nothing.
FalsifyResult falsify_order(const SampledNet& net, FalsifyDirection dir,
                            const std::vector<Rational>& b_probe,
                            const std::optional<std::vector<Rational>>& iota_schedule =
                                std::nullopt,
                            const OracleConfig& cfg = {});

// True iff |value| <= eps^B over the whole tail window: the semi-numeric
// "this net looks null" estimate.
bool null_estimate(const SampledNet& net, const Rational& B = Rational(50),
                   const OracleConfig& cfg = {});

struct OracleBallResult {
    bool refuted = false;
    std::optional<Witness> witness;
};

// Semi-decision of |x| <= alpha_r: Refuted on a tail point violating
// |value| <= eps^r + eps^b (simplified) or iota^r*eps^r + eps^b (full).
OracleBallResult oracle_ball_member(const SampledNet& net, const Rational& r,
                                    const std::vector<Rational>& b_probe,
                                    const OracleConfig& cfg = {});

}  // namespace colgen
