#include "colgen/topology.hpp"

#include <cmath>
#include <sstream>

namespace colgen {

const char* basis_name(BasisId b) {
    switch (b) {
        case BasisId::B: return "B";
        case BasisId::Bs: return "B_s";
        case BasisId::BOmega: return "B_Omega";
        default: return "B_sOmega";
    }
}

const char* axiom_name(AxiomId a) {
    switch (a) {
        case AxiomId::GA_I: return "GA'_I";
        case AxiomId::GA_II: return "GA'_II";
        case AxiomId::AV_I: return "AV'_I";
        case AxiomId::AV_II: return "AV'_II";
        case AxiomId::MV_I: return "MV'_I";
        case AxiomId::MV_II: return "MV'_II";
        default: return "MV'_III";
    }
}

std::string AxiomReport::line() const {
    std::ostringstream os;
    os << axiom << " " << basis << " " << samples << " " << failures.size() << " "
       << unknowns.size() << " " << seed;
    return os.str();
}

namespace {

long moderation_order(const ExactNet& a) {
    if (a.is_zero()) return 0;
    Valuation v = valuation(a);
    Rational neg = -v.value;
    if (neg <= 0) return 0;
    return to_long(ceil_int(neg));
}

void record(AxiomReport& rep, Membership m, int index, const std::string& witness) {
    if (m == Membership::NotMember)
        rep.failures.push_back({index, witness});
    else if (m == Membership::Unknown)
        rep.unknowns.push_back({index, witness});
}

}  // namespace

AxiomReport axiom_check(BasisId basis, AxiomId axiom, int samples, uint64_t seed,
                        const SuiteConfig& cfg) {
    AxiomReport rep;
    rep.axiom = axiom_name(axiom);
    rep.basis = basis_name(basis);
    rep.samples = samples;
    rep.seed = seed;

    bool fn_basis = basis == BasisId::BOmega || basis == BasisId::BsOmega;
    Model model = (basis == BasisId::B || basis == BasisId::BOmega) ? Model::full
                                                                    : Model::simplified;
    Rng rng(seed);

    for (int i = 0; i < samples; ++i) {
        Rational r = random_radius(rng);
        if (!fn_basis) {
            BallSpec outer{model, r};
            switch (axiom) {
                case AxiomId::GA_I: {
                    Rational s = r + 1;
                    ExactNet x = random_ball_member(rng, model, s, cfg.gen);
                    ExactNet y = random_ball_member(rng, model, s, cfg.gen);
                    record(rep, scalar_ball_member(x + y, outer), i,
                           "r=" + to_string(r) + " x=" + x.str() + " y=" + y.str());
                    break;
                }
                case AxiomId::GA_II: {
                    ExactNet x = random_ball_member(rng, model, r, cfg.gen);
                    record(rep, scalar_ball_member(-x, outer), i,
                           "r=" + to_string(r) + " x=" + x.str());
                    break;
                }
                case AxiomId::AV_I:
                case AxiomId::MV_I:
                case AxiomId::MV_II: {
                    ExactNet a = random_net(rng, model, cfg.gen);
                    Rational s = r + moderation_order(a) + 1;
                    ExactNet x = random_ball_member(rng, model, s, cfg.gen);
                    record(rep, scalar_ball_member(a * x, outer), i,
                           "r=" + to_string(r) + " a=" + a.str() + " x=" + x.str());
                    break;
                }
                case AxiomId::AV_II:
                case AxiomId::MV_III: {
                    Rational s = (r + 1) / 2;
                    ExactNet x = random_ball_member(rng, model, s, cfg.gen);
                    ExactNet y = random_ball_member(rng, model, s, cfg.gen);
                    record(rep, scalar_ball_member(x * y, outer), i,
                           "r=" + to_string(r) + " x=" + x.str() + " y=" + y.str());
                    break;
                }
            }
        } else {
            unsigned beta = unsigned(rng.uniform(0, long(cfg.max_beta)));
            long l = rng.uniform(0, cfg.max_l);
            const IntervalDomain& dom = cfg.domain;
            auto tag = [&](std::string extra) {
                return "r=" + to_string(r) + " beta=" + std::to_string(beta) +
                       " l=" + std::to_string(l) + " " + std::move(extra);
            };
            switch (axiom) {
                case AxiomId::GA_I: {
                    Rational s = r + 1;
                    GenFunRep f = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    GenFunRep g = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    record(rep, gf_ball_member(f + g, beta, l, r), i,
                           tag("f=" + f.str() + " g=" + g.str()));
                    break;
                }
                case AxiomId::GA_II: {
                    GenFunRep f = random_gf_ball_member(rng, model, dom, beta, l, r, cfg.gen);
                    record(rep, gf_ball_member(-f, beta, l, r), i, tag("f=" + f.str()));
                    break;
                }
                case AxiomId::AV_I: {
                    GenFunRep f0 = random_genfun(rng, model, dom, cfg.gen);
                    Rational rp = f0.is_zero() ? Rational(0) : f0.terms().front().eps_exp;
                    Rational s = r - rp + 1;
                    GenFunRep g = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    record(rep, gf_ball_member(f0 * g, beta, l, r), i,
                           tag("f0=" + f0.str() + " g=" + g.str()));
                    break;
                }
                case AxiomId::MV_I:
                case AxiomId::MV_II: {
                    // scalar action on the module
                    ExactNet a = random_net(rng, model, cfg.gen);
                    Rational s = r + moderation_order(a) + 1;
                    GenFunRep f = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    record(rep, gf_ball_member(scalar_mul(a, f), beta, l, r), i,
                           tag("a=" + a.str() + " f=" + f.str()));
                    break;
                }
                case AxiomId::AV_II: {
                    Rational s = (r + 1) / 2;
                    GenFunRep f = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    GenFunRep g = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    record(rep, gf_ball_member(f * g, beta, l, r), i,
                           tag("f=" + f.str() + " g=" + g.str()));
                    break;
                }
                case AxiomId::MV_III: {
                    Rational s = (r + 1) / 2;
                    ExactNet a = random_ball_member(rng, model, s, cfg.gen);
                    GenFunRep f = random_gf_ball_member(rng, model, dom, beta, l, s, cfg.gen);
                    record(rep, gf_ball_member(scalar_mul(a, f), beta, l, r), i,
                           tag("a=" + a.str() + " f=" + f.str()));
                    break;
                }
            }
        }
    }
    return rep;
}

Valuation vnp(const GenFunRep& f, const PseudoMetricIndex& idx) {
    Valuation best = Valuation::inf();
    for (unsigned sigma = 0; sigma <= idx.p; ++sigma) {
        for (const auto& t : f.terms()) {
            if (t.poly.degree() < int(sigma)) continue;  // sigma-th derivative vanishes
            Valuation v = Valuation::finite(t.eps_exp);
            if (v < best) best = v;
        }
    }
    return best;
}

double dnp(const GenFunRep& f, const GenFunRep& g, const PseudoMetricIndex& idx) {
    Valuation v = vnp(f - g, idx);
    if (v.infinite) return 0.0;
    return std::exp(-to_double(v.value));
}

AxiomReport metric_ball_equivalence(EquivDirection dir, const EquivParams& params, int samples,
                                    uint64_t seed, const SuiteConfig& cfg) {
    AxiomReport rep;
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    double r_d = to_double(params.r);

    switch (dir) {
        case EquivDirection::NormBallInRadiusBall: {
            rep.axiom = "norm-ball-in-V_r";
            rep.basis = "B_s";
            if (!(params.rho > 0) || params.rho > std::exp(-r_d) * (1 + 1e-12))
                throw std::invalid_argument("norm-ball direction needs 0 < rho <= e^-r");
            for (int i = 0; i < samples; ++i) {
                ExactNet x = ExactNet::zero(Model::simplified);
                if (rng.unit() > 0.05) {
                    Rational vt = rational_from_double(-std::log(params.rho)) +
                                  rng.rational(1, 8, 4);
                    x = with_valuation(random_nonzero_net(rng, Model::simplified, cfg.gen), vt);
                }
                if (!x.is_zero() && !(sharp_norm(x) < params.rho)) continue;  // not in B_rho
                record(rep, scalar_ball_member(x, {Model::simplified, params.r}), i,
                       "x=" + x.str());
            }
            break;
        }
        case EquivDirection::RadiusBallInNormBall: {
            rep.axiom = "V_r-in-norm-ball";
            rep.basis = "B_s";
            if (!(std::exp(-r_d) < params.rho))
                throw std::invalid_argument("radius-ball direction needs e^-r < rho");
            for (int i = 0; i < samples; ++i) {
                ExactNet x = random_ball_member(rng, Model::simplified, params.r, cfg.gen);
                if (!(sharp_norm(x) < params.rho))
                    rep.failures.push_back({i, "x=" + x.str()});
            }
            break;
        }
        case EquivDirection::SeminormBallsInMetricBall: {
            rep.axiom = "W-balls-in-d-ball";
            rep.basis = "B_sOmega";
            if (!(params.a > 0) || r_d < -std::log(params.a) + 1 - 1e-12)
                throw std::invalid_argument("seminorm-ball direction needs r >= -log a + 1");
            PseudoMetricIndex idx{params.n, params.p};
            GenFunRep zero = GenFunRep::zero(Model::simplified, cfg.domain);
            for (int i = 0; i < samples; ++i) {
                GenFunRep f = random_gf_ball_member(rng, Model::simplified, cfg.domain,
                                                    params.p, params.n, params.r, cfg.gen);
                if (!(dnp(f, zero, idx) <= params.a * (1 + 1e-12)))
                    rep.failures.push_back({i, "f=" + f.str()});
            }
            break;
        }
        case EquivDirection::MetricBallInSeminormBall: {
            rep.axiom = "d-ball-in-W-ball";
            rep.basis = "B_sOmega";
            if (!(params.a > 0) || !(params.a < std::exp(-r_d)))
                throw std::invalid_argument("metric-ball direction needs 0 < a < e^-r");
            for (int i = 0; i < samples; ++i) {
                GenFunRep f = GenFunRep::zero(Model::simplified, cfg.domain);
                if (rng.unit() > 0.05) {
                    Rational vt =
                        rational_from_double(-std::log(params.a)) + rng.rational(1, 8, 4);
                    GenFunRep g = random_genfun(rng, Model::simplified, cfg.domain, cfg.gen);
                    while (g.is_zero())
                        g = random_genfun(rng, Model::simplified, cfg.domain, cfg.gen);
                    f = with_lead_exp(g, vt);
                }
                record(rep, gf_ball_member(f, params.beta, params.l, params.r), i,
                       "f=" + f.str());
            }
            break;
        }
    }
    return rep;
}

std::string ConvergenceCertificate::str() const {
    std::ostringstream os;
    os << (converged ? "converged" : "not-converged");
    os << " [";
    for (size_t i = 0; i < table.size(); ++i) {
        if (i) os << ", ";
        os << table[i].str();
    }
    os << "]";
    return os.str();
}

namespace {

bool certificate_converged(const std::vector<Valuation>& table, const Rational& threshold) {
    if (table.empty()) return false;
    const Valuation& last = table.back();
    if (!last.infinite && last.value < threshold) return false;
    size_t start = table.size() / 2;
    for (size_t k = start; k + 1 < table.size(); ++k) {
        if (table[k].infinite && table[k + 1].infinite) continue;  // settled on the limit
        if (!(table[k] < table[k + 1])) return false;
    }
    return true;
}

}  // namespace

ConvergenceCertificate converges_scalar(const std::function<ExactNet(int)>& seq,
                                        const ExactNet& limit, int last_index,
                                        const Rational& threshold) {
    ConvergenceCertificate cert;
    for (int k = 0; k <= last_index; ++k) cert.table.push_back(valuation(seq(k) - limit));
    cert.converged = certificate_converged(cert.table, threshold);
    return cert;
}

ConvergenceCertificate converges_genfun(const std::function<GenFunRep(int)>& seq,
                                        const GenFunRep& limit, int last_index,
                                        const std::vector<PseudoMetricIndex>& probes,
                                        const Rational& threshold) {
    ConvergenceCertificate cert;
    for (int k = 0; k <= last_index; ++k) {
        GenFunRep diff = seq(k) - limit;
        Valuation worst = Valuation::inf();
        for (const auto& idx : probes) {
            Valuation v = vnp(diff, idx);
            if (v < worst) worst = v;
        }
        cert.table.push_back(worst);
    }
    cert.converged = certificate_converged(cert.table, threshold);
    return cert;
}

AxiomReport gseminorm_axiom_check(int samples, uint64_t seed, const SuiteConfig& cfg) {
    AxiomReport rep;
    rep.axiom = "GSN";
    rep.basis = "B_Omega";
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    const IntervalDomain& dom = cfg.domain;
    Rational tol = seminorm_default_tol();

    for (int i = 0; i < samples; ++i) {
        unsigned beta = unsigned(rng.uniform(0, 2));
        long l = rng.uniform(0, 2);
        switch (i % 4) {
            case 0: {  // GSN1 at descriptor level
                GenFunRep f = random_genfun(rng, Model::full, dom, cfg.gen);
                GenFunRep g = random_genfun(rng, Model::full, dom, cfg.gen);
                auto df = seminorm(f, beta, l), dg = seminorm(g, beta, l),
                     ds = seminorm(f + g, beta, l);
                Valuation vf = df.infinite ? Valuation::inf() : Valuation::finite(df.lead_exp);
                Valuation vg = dg.infinite ? Valuation::inf() : Valuation::finite(dg.lead_exp);
                Valuation vs = ds.infinite ? Valuation::inf() : Valuation::finite(ds.lead_exp);
                Valuation lower = vf < vg ? vf : vg;
                bool ok = lower <= vs;
                if (ok && !ds.infinite && !df.infinite && !dg.infinite &&
                    ds.lead_exp == df.lead_exp && df.lead_exp == dg.lead_exp)
                    ok = ds.lead_sup.lo <= df.lead_sup.hi + dg.lead_sup.hi + 2 * tol;
                if (!ok)
                    rep.failures.push_back({i, "GSN1 f=" + f.str() + " g=" + g.str()});
                break;
            }
            case 1: {  // GSN2: lead data of a*f multiply
                ExactNet a = random_nonzero_net(rng, Model::full, cfg.gen);
                GenFunRep f = random_genfun(rng, Model::full, dom, cfg.gen);
                auto df = seminorm(f, beta, l);
                auto dp = seminorm(scalar_mul(a, f), beta, l);
                bool ok;
                if (df.infinite)
                    ok = dp.infinite;
                else {
                    ok = !dp.infinite && dp.lead_exp == a.lead().eps_exp + df.lead_exp;
                    size_t a_lead = 0;
                    Rational ca(0);
                    for (const auto& t : a.terms())
                        if (t.eps_exp == a.lead().eps_exp) {
                            ++a_lead;
                            ca += abs(t.coeff);
                        }
                    size_t f_lead = 0;
                    for (const auto& b : df.bounds)
                        if (b.eps_exp == df.lead_exp) ++f_lead;
                    if (ok && a_lead == 1 && f_lead == 1) {
                        // exact multiplication of the single-term lead data
                        ok = dp.lead_sup.lo <= ca * df.lead_sup.hi + tol &&
                             ca * df.lead_sup.lo <= dp.lead_sup.hi + tol;
                    } else if (ok) {
                        // multi-term groups only bound the stored envelope
                        ok = dp.lead_sup.lo <= ca * df.lead_sup.hi + tol;
                    }
                }
                if (!ok) rep.failures.push_back({i, "GSN2 a=" + a.str() + " f=" + f.str()});
                break;
            }
            case 2: {  // reverse triangle for the sup itself
                Polynomial F = random_poly(rng, cfg.gen);
                Polynomial G = random_poly(rng, cfg.gen);
                auto [klo, khi] = exhaustion_closure(dom, l);
                SupBound sf = poly_sup_abs(F, klo, khi, tol);
                SupBound sg = poly_sup_abs(G, klo, khi, tol);
                SupBound sh = poly_sup_abs(F - G, klo, khi, tol);
                Rational diff_lo = sf.lo - sg.hi, diff_hi = sf.hi - sg.lo;
                Rational mag = std::max(abs(diff_lo), abs(diff_hi));
                if (!(mag <= sh.hi + 2 * tol + (sf.hi - sf.lo) + (sg.hi - sg.lo)))
                    rep.failures.push_back({i, "revtri F=" + F.str() + " G=" + G.str()});
                break;
            }
            default: {  // m-convexity condition (i): B_q B_q in B_p, q = (r+1)/2
                Rational r = random_radius(rng);
                Rational q = (r + 1) / 2;
                GenFunRep f = GenFunRep::zero(Model::full, dom);
                GenFunRep g = f;
                for (int attempt = 0; attempt < 10; ++attempt) {
                    GenFunRep h = random_genfun(rng, Model::full, dom, cfg.gen);
                    if (h.is_zero()) continue;
                    h = with_lead_exp(h, q + rng.rational(1, 2, 4));
                    if (gf_ball_member(h, beta, l, q, false) != Membership::Member) continue;
                    if (f.is_zero())
                        f = h;
                    else {
                        g = h;
                        break;
                    }
                }
                Membership m = gf_ball_member(f * g, beta, l, r, false);
                record(rep, m, i, "mconv f=" + f.str() + " g=" + g.str());
                break;
            }
        }
    }
    return rep;
}

ConditionIIProbe mconv_condition_ii_probe(int samples, uint64_t seed, const SuiteConfig& cfg) {
    ConditionIIProbe probe;
    probe.samples = samples;
    Rng rng(seed);
    Rational tol = seminorm_default_tol();
    for (int i = 0; i < samples; ++i) {
        unsigned beta = unsigned(rng.uniform(1, 2));  // Leibniz mixing needs beta >= 1
        long l = rng.uniform(0, 2);
        GenFunRep f = random_genfun(rng, Model::full, cfg.domain, cfg.gen);
        GenFunRep g = random_genfun(rng, Model::full, cfg.domain, cfg.gen);
        auto df = seminorm(f, beta, l), dg = seminorm(g, beta, l),
             dp = seminorm(f * g, beta, l);
        if (df.infinite || dg.infinite || dp.infinite) continue;
        if (dp.lead_exp != df.lead_exp + dg.lead_exp) continue;
        if (dp.lead_sup.lo > df.lead_sup.hi * dg.lead_sup.hi + tol) {
            ++probe.violations;
            if (probe.example.empty())
                probe.example = "beta=" + std::to_string(beta) + " l=" + std::to_string(l) +
                                " f=" + f.str() + " g=" + g.str();
        }
    }
    return probe;
}

namespace {

void require_segment_scalar(const ExactNet& lambda) {
    ExactNet zero = ExactNet::zero(lambda.model());
    ExactNet one = ExactNet::one(lambda.model());
    Order lo = order_compare(zero, lambda);
    Order hi = order_compare(lambda, one);
    bool ok_lo = lo == Order::LEQ || lo == Order::EQ;
    bool ok_hi = hi == Order::LEQ || hi == Order::EQ;
    if (!ok_lo || !ok_hi)
        throw std::invalid_argument("gconvex_probe: lambda = " + lambda.str() +
                                    " is not in [0,1]_g");
}

}  // namespace

Membership gconvex_probe(const ExactNet& x, const ExactNet& y, const ExactNet& lambda,
                         const BallSpec& ball) {
    require_segment_scalar(lambda);
    ExactNet one = ExactNet::one(lambda.model());
    ExactNet z = lambda * x + (one - lambda) * y;
    return scalar_ball_member(z, ball);
}

Membership gconvex_probe_fn(const GenFunRep& f, const GenFunRep& g, const ExactNet& lambda,
                            unsigned beta, long l, const Rational& r) {
    require_segment_scalar(lambda);
    ExactNet one = ExactNet::one(lambda.model());
    GenFunRep z = scalar_mul(lambda, f) + scalar_mul(one - lambda, g);
    return gf_ball_member(z, beta, l, r);
}

}  // namespace colgen
