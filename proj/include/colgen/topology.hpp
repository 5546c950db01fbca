#pragma once

#include <functional>
#include <string>
#include <vector>

#include "colgen/genfun.hpp"
#include "colgen/netgen.hpp"
#include "colgen/order.hpp"

namespace colgen {

// The four filter bases: scalar balls V_r (full/simplified) and function
// balls W^beta_{l,r} (full/simplified).
enum class BasisId { B, Bs, BOmega, BsOmega };
enum class AxiomId { GA_I, GA_II, AV_I, AV_II, MV_I, MV_II, MV_III };

const char* basis_name(BasisId b);
const char* axiom_name(AxiomId a);

struct AxiomReport {
    std::string axiom;
    std::string basis;
    int samples = 0;
    uint64_t seed = 0;

    struct Case {
        int index;
        std::string witness;
    };
    std::vector<Case> failures;
    std::vector<Case> unknowns;

    bool ok() const { return failures.empty(); }
    // "axiom basis samples failures unknowns seed"
    std::string line() const;
};

struct SuiteConfig {
    IntervalDomain domain = IntervalDomain::bounded(Rational(-2), Rational(2));
    unsigned max_beta = 3;
    long max_l = 3;
    GenConfig gen;
};

// Draws random members of the inner ball prescribed by the cited radius
// formulas and asserts membership in the outer ball; zero failures expected.
AxiomReport axiom_check(BasisId basis, AxiomId axiom, int samples, uint64_t seed,
                        const SuiteConfig& cfg = {});

struct PseudoMetricIndex {
    long n = 0;
    unsigned p = 0;
};

// sup of the o(eps^a) exponents over all seminorms with sigma <= p on
// Omega_n; for polynomial-coefficient representatives this is the least
// eps exponent carried by a sigma-surviving term.
Valuation vnp(const GenFunRep& f, const PseudoMetricIndex& idx);

// exp(-vnp(f - g)); the Scarpalezos pseudometric family.
double dnp(const GenFunRep& f, const GenFunRep& g, const PseudoMetricIndex& idx);

enum class EquivDirection { NormBallInRadiusBall, RadiusBallInNormBall, SeminormBallsInMetricBall, MetricBallInSeminormBall };

struct EquivParams {
    Rational r;        // ball radius exponent
    double rho = 0;    // sharp-norm ball radius
    long n = 0;        // exhaustion index of the metric family
    unsigned p = 0;    // max derivative order of the metric family
    unsigned beta = 0; // W-ball derivative order
    long l = 0;        // W-ball exhaustion index
    double a = 0;      // d_np-ball radius
};

// Randomized membership implications between norm/metric balls and the
// V_r / W-balls, in the cited direction. Throws when the side condition on
// the parameters fails.
AxiomReport metric_ball_equivalence(EquivDirection dir, const EquivParams& params, int samples,
                                    uint64_t seed, const SuiteConfig& cfg = {});

struct ConvergenceCertificate {
    std::vector<Valuation> table;
    bool converged = false;

    std::string str() const;
};

// Scalar sharp convergence: valuation(x_n - x) increases without bound.
ConvergenceCertificate converges_scalar(const std::function<ExactNet(int)>& seq,
                                        const ExactNet& limit, int last_index,
                                        const Rational& threshold);

// d_np-family convergence over a finite probe set of indices.
ConvergenceCertificate converges_genfun(const std::function<GenFunRep(int)>& seq,
                                        const GenFunRep& limit, int last_index,
                                        const std::vector<PseudoMetricIndex>& probes,
                                        const Rational& threshold);

// GSN1/GSN2 at descriptor level, the sup reverse-triangle proxy, and
// m-convexity condition (i) with the (r+1)/2 radius.
AxiomReport gseminorm_axiom_check(int samples, uint64_t seed, const SuiteConfig& cfg = {});

// Informational search for failures of condition (ii), p(xy) <= p(x)p(y),
// with the natural candidate q = p. Condition (i) holds for this family
// while (i) => (ii) is open, so found violations are reported, not counted
// as failures.
struct ConditionIIProbe {
    int samples = 0;
    int violations = 0;
    std::string example;
};
ConditionIIProbe mconv_condition_ii_probe(int samples, uint64_t seed,
                                          const SuiteConfig& cfg = {});

// lambda*x + (1-lambda)*y stays in the ball; lambda must satisfy
// 0 <= lambda <= 1 in the q-positivity order.
Membership gconvex_probe(const ExactNet& x, const ExactNet& y, const ExactNet& lambda,
                         const BallSpec& ball);
Membership gconvex_probe_fn(const GenFunRep& f, const GenFunRep& g, const ExactNet& lambda,
                            unsigned beta, long l, const Rational& r);

}  // namespace colgen
