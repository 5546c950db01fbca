#include "colgen/sampled.hpp"

#include <cmath>
#include <sstream>

#include "colgen/hiprec.hpp"

namespace colgen {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

Rational dyadic_eps(int j) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(j));
    return Rational(1, den);
}

double logaddexp(double a, double b) {
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

OracleConfig::OracleConfig() {
    // off the rational lattice, so generic profiles do not vanish there
    iota_probes = {rational_from_double(0.6180339887498949),
                   rational_from_double(0.3571428571428571), rational_from_double(1.0)};
}

SampledNet SampledNet::from_exact(const ExactNet& x, GridSpec grid) {
    std::optional<LeadData> lead;
    if (!x.is_zero()) lead = LeadData{to_double(x.lead().coeff), x.lead().eps_exp};
    return SampledNet(
        x.model(), [x](const GridPoint& p) { return x.eval_log(p.log_eps, p.log_iota); }, grid,
        lead);
}

SampledNet SampledNet::abs_of(const ExactNet& x, GridSpec grid) {
    std::optional<LeadData> lead;
    if (!x.is_zero()) lead = LeadData{std::fabs(to_double(x.lead().coeff)), x.lead().eps_exp};
    return SampledNet(
        x.model(),
        [x](const GridPoint& p) {
            NetValue v = x.eval_log(p.log_eps, p.log_iota);
            if (v.sign < 0) v.sign = 1;
            return v;
        },
        grid, lead);
}

SampledNet SampledNet::proot_of(const ExactNet& x, unsigned long p, GridSpec grid) {
    if (q_positivity(x) != Verdict::Positive)
        throw std::domain_error("proot: net is not q-positive");
    if (p == 0) throw std::domain_error("proot: p must be positive");
    std::optional<LeadData> lead;
    if (!x.is_zero())
        lead = LeadData{std::pow(to_double(x.lead().coeff), 1.0 / double(p)),
                        x.lead().eps_exp / Rational(long(p))};
    double invp = 1.0 / double(p);
    return SampledNet(
        x.model(),
        [x, invp](const GridPoint& pt) {
            NetValue v = x.eval_log(pt.log_eps, pt.log_iota);
            if (v.sign <= 0) return NetValue::zero();  // clamp stray negatives at zeros
            return NetValue{v.log_abs * invp, 1};
        },
        grid, lead);
}

SampledNet SampledNet::nonneg_of(const ExactNet& x, GridSpec grid) {
    if (q_positivity(x) != Verdict::Positive)
        throw std::domain_error("nonneg_representative: net is not q-positive");
    return SampledNet(
        x.model(),
        [x](const GridPoint& p) {
            NetValue v = x.eval_log(p.log_eps, p.log_iota);
            if (v.sign < 0) return NetValue::zero();
            return v;
        },
        grid, x.is_zero() ? std::nullopt
                          : std::optional<LeadData>(
                                LeadData{to_double(x.lead().coeff), x.lead().eps_exp}));
}

SampledNet SampledNet::minus_exact(const ExactNet& y) const {
    if (y.model() != model_) throw ModelMismatch("minus_exact: model mismatch");
    SampledNet self = *this;
    return SampledNet(
        model_,
        [self, y](const GridPoint& p) {
            return self(p) + (-y).eval_log(p.log_eps, p.log_iota);
        },
        grid_);
}

SampledNet SampledNet::oscillating_preset(GridSpec grid) {
    return SampledNet(
        Model::full,
        [](const GridPoint& p) {
            if (!p.log_iota) throw std::invalid_argument("oscillating preset needs iota");
            if (p.iota) {
                Rational u = dyadic_eps(p.j) * (*p.iota);
                double s = sin_at(Rational(1) / u);
                if (s == 0.0) return NetValue::zero();
                return NetValue{log_abs(u) + std::log(std::fabs(s)), s > 0 ? 1 : -1};
            }
            double log_u = p.log_eps + *p.log_iota;
            double s = std::sin(std::exp(-log_u));
            if (s == 0.0) return NetValue::zero();
            return NetValue{log_u + std::log(std::fabs(s)), s > 0 ? 1 : -1};
        },
        grid);
}

std::string SampledNet::describe() const {
    std::ostringstream os;
    os << "sampled " << model_name(model_) << " net, grid 2^-" << grid_.j0 << "..2^-" << grid_.J;
    if (lead_) os << ", lead ~ " << lead_->coeff << "*e^(" << to_string(lead_->exp) << ")";
    return os.str();
}

std::vector<Rational> oscillating_schedule(int count) {
    std::vector<Rational> out;
    out.reserve(size_t(count));
    for (int k = 0; k < count; ++k)
        out.push_back(rational_from_double(2.0 / ((2.0 * k + 1.0) * M_PI)));
    return out;
}

namespace {

std::vector<GridPoint> tail_points(const SampledNet& net,
                                   const std::optional<std::vector<Rational>>& schedule,
                                   const OracleConfig& cfg) {
    std::vector<Rational> iotas;
    if (net.model() == Model::full)
        iotas = schedule ? *schedule : cfg.iota_probes;
    std::vector<GridPoint> pts;
    const GridSpec& g = net.grid();
    for (int j = g.tail_begin(); j <= g.J; ++j) {
        double le = -double(j) * kLn2;
        if (net.model() == Model::simplified) {
            pts.push_back({j, le, std::nullopt, std::nullopt});
        } else {
            for (const auto& io : iotas)
                pts.push_back({j, le, log_abs(io), io});
        }
    }
    return pts;
}

struct Fit {
    double slope = 0, half_width = 0;
    int n = 0;
};

Fit fit_loglog(const std::vector<std::pair<double, double>>& xy) {
    Fit f;
    f.n = int(xy.size());
    if (f.n < 2) return f;
    double sx = 0, sy = 0;
    for (auto& [x, y] : xy) {
        sx += x;
        sy += y;
    }
    double mx = sx / f.n, my = sy / f.n;
    double sxx = 0, sxy = 0;
    for (auto& [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    f.slope = sxy / sxx;
    double ss = 0;
    for (auto& [x, y] : xy) {
        double r = y - my - f.slope * (x - mx);
        ss += r * r;
    }
    if (f.n > 2 && sxx > 0) f.half_width = 2.0 * std::sqrt(ss / double(f.n - 2) / sxx);
    return f;
}

}  // namespace

std::string ValuationEstimate::str() const {
    std::ostringstream os;
    if (plausibly_infinite) {
        os << "plausibly-infinite (tail window 2^-" << window_lo << "..2^-" << window_hi << ")";
    } else {
        os << slope << " +- " << half_width << " (tail window 2^-" << window_lo << "..2^-"
           << window_hi << ")";
    }
    return os.str();
}

ValuationEstimate estimate_valuation(const SampledNet& net, const OracleConfig& cfg) {
    const GridSpec& g = net.grid();
    ValuationEstimate est;
    est.window_lo = g.tail_begin();
    est.window_hi = g.J;

    std::vector<Rational> iotas =
        net.model() == Model::full ? cfg.iota_probes : std::vector<Rational>{Rational(1)};

    bool have_slope = false;
    for (const auto& io : iotas) {
        std::vector<std::pair<double, double>> xy;
        bool below_everywhere = true;
        for (int j = est.window_lo; j <= g.J; ++j) {
            GridPoint p{j, -double(j) * kLn2, std::nullopt, std::nullopt};
            if (net.model() == Model::full) {
                p.log_iota = log_abs(io);
                p.iota = io;
            }
            NetValue v = net(p);
            double bound = to_double(cfg.probe_B) * p.log_eps;
            if (v.sign != 0 && v.log_abs > bound) below_everywhere = false;
            if (v.sign != 0) xy.push_back({p.log_eps, v.log_abs});
        }
        if (below_everywhere || xy.size() < 8) continue;
        Fit f = fit_loglog(xy);
        if (!have_slope || f.slope < est.slope) {
            est.slope = f.slope;
            est.half_width = f.half_width;
            have_slope = true;
        }
    }
    est.plausibly_infinite = !have_slope;
    return est;
}

std::string Witness::str() const {
    std::ostringstream os;
    os << "eps=2^-" << j;
    if (iota) os << " iota=" << to_string(*iota);
    os << " b=" << to_string(b) << " value=" << (value_sign >= 0 ? "+" : "-") << "exp("
       << log_abs_value << ")";
    return os.str();
}

FalsifyResult falsify_order(const SampledNet& net, FalsifyDirection dir,
                            const std::vector<Rational>& b_probe,
                            const std::optional<std::vector<Rational>>& iota_schedule,
                            const OracleConfig& cfg) {
    if (b_probe.empty()) throw std::invalid_argument("falsify_order: empty b probe list");
    FalsifyResult res;
    int bad_sign = dir == FalsifyDirection::geq0 ? -1 : 1;
    double best_margin = 0;
    for (const auto& p : tail_points(net, iota_schedule, cfg)) {
        NetValue v = net(p);
        if (v.sign != bad_sign) continue;
        for (const auto& b : b_probe) {
            double margin = v.log_abs - to_double(b) * p.log_eps;
            if (margin <= 0) continue;
            ++res.violations;
            if (!res.falsified || margin > best_margin) {
                best_margin = margin;
                res.witness = Witness{p.j, dyadic_eps(p.j), p.iota, b, v.log_abs, v.sign};
                res.falsified = true;
            }
        }
    }
    return res;
}

bool null_estimate(const SampledNet& net, const Rational& B, const OracleConfig& cfg) {
    if (B <= 0) throw std::invalid_argument("null_estimate: B must be positive");
    for (const auto& p : tail_points(net, std::nullopt, cfg)) {
        NetValue v = net(p);
        if (v.sign != 0 && v.log_abs > to_double(B) * p.log_eps) return false;
    }
    return true;
}

OracleBallResult oracle_ball_member(const SampledNet& net, const Rational& r,
                                    const std::vector<Rational>& b_probe,
                                    const OracleConfig& cfg) {
    OracleBallResult res;
    for (const auto& p : tail_points(net, std::nullopt, cfg)) {
        NetValue v = net(p);
        if (v.sign == 0) continue;
        for (const auto& b : b_probe) {
            double radius_log = to_double(r) * p.log_eps;
            if (net.model() == Model::full) radius_log += to_double(r) * *p.log_iota;
            double bound = logaddexp(radius_log, to_double(b) * p.log_eps);
            if (v.log_abs > bound) {
                res.refuted = true;
                res.witness = Witness{p.j, dyadic_eps(p.j), p.iota, b, v.log_abs, v.sign};
                return res;
            }
        }
    }
    return res;
}

}  // namespace colgen
