// colgen: decision procedures for Colombeau generalized numbers and
// one-dimensional generalized functions in the sharp topologies.
//
// Exit codes: 0 success / member / positive; 1 not-member / not-positive /
// suite failures; 2 unknown verdict; 3 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colgen/parser.hpp"
#include "colgen/sampled.hpp"
#include "colgen/topology.hpp"

using namespace colgen;

namespace {

struct GlobalOpts {
    int grid_depth = 200;
    int tail_window = 64;
    double tolerance = 1e-12;
    uint64_t seed = 7;
    int samples = 200;
    std::string format = "text";
    std::string domain = "-2,2";
    std::string iota_schedule;  // "oscillating" or comma-separated doubles
};

IntervalDomain parse_domain(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--domain", "expected LOWER,UPPER (use inf for unbounded)");
    auto side = [](std::string s) -> std::optional<Rational> {
        while (!s.empty() && s.front() == ' ') s.erase(s.begin());
        while (!s.empty() && s.back() == ' ') s.pop_back();
        if (s == "inf" || s == "-inf") return std::nullopt;
        auto q = rational_from_string(s);
        if (!q) throw CLI::ValidationError("--domain", "bad rational '" + s + "'");
        return *q;
    };
    return IntervalDomain(side(spec.substr(0, comma)), side(spec.substr(comma + 1)));
}

Rational parse_rational_arg(const std::string& s, const std::string& what) {
    auto q = rational_from_string(s);
    if (!q) throw CLI::ValidationError(what, "expected an exact rational, got '" + s + "'");
    return *q;
}

GridSpec grid_of(const GlobalOpts& g) {
    GridSpec spec;
    spec.J = g.grid_depth;
    spec.tail_window = g.tail_window;
    return spec;
}

std::optional<std::vector<Rational>> schedule_of(const GlobalOpts& g) {
    if (g.iota_schedule.empty()) return std::nullopt;
    if (g.iota_schedule == "oscillating") return oscillating_schedule(8);
    std::vector<Rational> out;
    std::stringstream ss(g.iota_schedule);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(rational_from_double(std::stod(item)));
    return out;
}

Compiled compile_arg(const std::string& expr, const GlobalOpts& g) {
    return compile(*parse(expr), parse_domain(g.domain), grid_of(g));
}

ExactNet expect_scalar(const Compiled& c, const std::string& what) {
    if (auto* net = std::get_if<ExactNet>(&c)) return *net;
    throw CLI::ValidationError(what, "needs an exact scalar expression");
}

GenFunRep expect_function(Compiled c, const std::string& what, const GlobalOpts& g) {
    if (auto* f = std::get_if<GenFunRep>(&c)) return *f;
    if (auto* net = std::get_if<ExactNet>(&c))
        return embed_const(*net, parse_domain(g.domain));
    throw CLI::ValidationError(what, "needs a polynomial-coefficient expression");
}

int verdict_exit(Membership m) {
    switch (m) {
        case Membership::Member: return 0;
        case Membership::NotMember: return 1;
        default: return 2;
    }
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Positive: return 0;
        case Verdict::NotPositive: return 1;
        default: return 2;
    }
}

std::string report_line(const AxiomReport& rep, const std::string& format) {
    if (format != "tsv") return rep.line();
    std::ostringstream os;
    os << rep.axiom << "\t" << rep.basis << "\t" << rep.samples << "\t" << rep.failures.size()
       << "\t" << rep.unknowns.size() << "\t" << rep.seed;
    return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out);

int run_script(const std::string& path, std::ostream& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "script: cannot open " << path << "\n";
        return 3;
    }
    std::string line;
    int worst = 0;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace((unsigned char)trimmed.front()))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed[0] == '#') continue;

        // shell-style split with double quotes
        std::vector<std::string> argv;
        std::string cur;
        bool quoted = false, have = false;
        for (char ch : trimmed) {
            if (ch == '"') {
                quoted = !quoted;
                have = true;
            } else if (std::isspace((unsigned char)ch) && !quoted) {
                if (have || !cur.empty()) argv.push_back(cur);
                cur.clear();
                have = false;
            } else {
                cur += ch;
            }
        }
        if (have || !cur.empty()) argv.push_back(cur);

        out << "> " << trimmed << "\n";
        int rc = run_command(argv, out);
        out << "exit " << rc << "\n";
        worst = std::max(worst, rc);
    }
    return worst;
}

int run_command(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact Colombeau generalized numbers and sharp-topology deciders"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--grid-depth", g.grid_depth, "deepest grid index J (eps = 2^-J)");
    app.add_option("--tail-window", g.tail_window, "tail window length for the oracle");
    app.add_option("--tolerance", g.tolerance, "seminorm sup refinement tolerance");
    app.add_option("--seed", g.seed, "random seed for suites");
    app.add_option("--samples", g.samples, "sample count for suites");
    app.add_option("--format", g.format, "text|tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    app.add_option("--domain", g.domain, "open interval LOWER,UPPER for function commands");
    app.add_option("--iota-schedule", g.iota_schedule,
                   "oscillating or comma-separated diameters");

    std::string expr, expr2, dir = "geq0", preset = "alpha", basis = "all", axiom = "core";
    std::string radius_s, m1_s, m2_s, thr_s = "20";
    unsigned beta = 0, order_p = 2, pp = 0;
    long ell = 0, nn = 0;
    int limit_index = 20;
    bool with_mv = false;
    std::vector<std::string> lpdo_terms, b_list;

    auto* c_val = app.add_subcommand("valuation", "valuation of a scalar net");
    c_val->add_option("expr", expr)->required();

    auto* c_norm = app.add_subcommand("norm", "sharp norm e^-V (simplified)");
    c_norm->add_option("expr", expr)->required();

    auto* c_dist = app.add_subcommand("dist", "sharp distance (simplified)");
    c_dist->add_option("x", expr)->required();
    c_dist->add_option("y", expr2)->required();

    auto* c_cmp = app.add_subcommand("compare", "order relation between two nets");
    c_cmp->add_option("x", expr)->required();
    c_cmp->add_option("y", expr2)->required();

    auto* c_abs = app.add_subcommand("abs", "absolute value");
    c_abs->add_option("expr", expr)->required();

    auto* c_root = app.add_subcommand("root", "q-positive p-th root");
    c_root->add_option("p", order_p)->required();
    c_root->add_option("expr", expr)->required();

    auto* c_mem = app.add_subcommand("member", "ball membership V_r / W^beta_{l,r}");
    c_mem->add_option("r", radius_s)->required();
    c_mem->add_option("expr", expr)->required();
    c_mem->add_option("--beta", beta);
    c_mem->add_option("--l", ell);

    auto* c_semi = app.add_subcommand("seminorm", "generalized seminorm descriptor");
    c_semi->add_option("beta", beta)->required();
    c_semi->add_option("l", ell)->required();
    c_semi->add_option("expr", expr)->required();

    auto* c_int = app.add_subcommand("integrate", "integral over [m1, m2]");
    c_int->add_option("m1", m1_s)->required();
    c_int->add_option("m2", m2_s)->required();
    c_int->add_option("expr", expr)->required();

    auto* c_der = app.add_subcommand("derive", "derivative of a generalized function");
    c_der->add_option("beta", beta)->required();
    c_der->add_option("expr", expr)->required();

    auto* c_lpdo = app.add_subcommand("lpdo", "apply sum a_k d^k");
    c_lpdo->add_option("expr", expr)->required();
    c_lpdo->add_option("--term", lpdo_terms, "ORDER:COEFF_EXPR, repeatable")->required();

    auto* c_vnp = app.add_subcommand("vnp", "V_np valuation of a generalized function");
    c_vnp->add_option("n", nn)->required();
    c_vnp->add_option("p", pp)->required();
    c_vnp->add_option("expr", expr)->required();

    auto* c_dnp = app.add_subcommand("dnp", "pseudometric d_np");
    c_dnp->add_option("n", nn)->required();
    c_dnp->add_option("p", pp)->required();
    c_dnp->add_option("x", expr)->required();
    c_dnp->add_option("y", expr2)->required();

    auto* c_ax = app.add_subcommand("axiom-suite", "filter-basis axiom verifier");
    c_ax->add_option("--basis", basis, "B|B_s|B_Omega|B_sOmega|all");
    c_ax->add_option("--axiom", axiom, "GA_I|GA_II|AV_I|AV_II|core|all");
    c_ax->add_flag("--mv", with_mv, "include the module axioms MV'_I..III");

    auto* c_conv = app.add_subcommand("converge", "convergence certificates");
    c_conv->add_option("--preset", preset, "alpha|lpdo");
    c_conv->add_option("--limit-index", limit_index);
    c_conv->add_option("--threshold", thr_s, "required final valuation");

    auto* c_fal = app.add_subcommand("falsify", "search for order violations");
    c_fal->add_option("expr", expr)->required();
    c_fal->add_option("--direction", dir)->check(CLI::IsMember({"geq0", "leq0"}));
    c_fal->add_option("--b", b_list, "probe exponents")->required();

    auto* c_script = app.add_subcommand("script", "replay a command file");
    std::string script_path;
    c_script->add_option("file", script_path)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 3;
    }

    try {
        if (c_val->parsed()) {
            Compiled c = compile_arg(expr, g);
            if (auto* s = std::get_if<SampledNet>(&c)) {
                out << estimate_valuation(*s).str() << "\n";
                return 0;
            }
            out << valuation(expect_scalar(c, "valuation")).str() << "\n";
            return 0;
        }
        if (c_norm->parsed()) {
            out << sharp_norm(expect_scalar(compile_arg(expr, g), "norm")) << "\n";
            return 0;
        }
        if (c_dist->parsed()) {
            out << sharp_dist(expect_scalar(compile_arg(expr, g), "dist"),
                              expect_scalar(compile_arg(expr2, g), "dist"))
                << "\n";
            return 0;
        }
        if (c_cmp->parsed()) {
            Compiled cx = compile_arg(expr, g), cy = compile_arg(expr2, g);
            // identify simplified exact operands inside the full ring via j_m
            auto model_of = [](const Compiled& c) {
                if (auto* s = std::get_if<SampledNet>(&c)) return s->model();
                if (auto* n = std::get_if<ExactNet>(&c)) return n->model();
                throw CLI::ValidationError("compare", "needs scalar operands");
            };
            auto lift = [&](Compiled& c) {
                if (auto* n = std::get_if<ExactNet>(&c);
                    n && n->model() == Model::simplified)
                    c = jm_embed(*n);
            };
            if (model_of(cx) != model_of(cy)) {
                lift(cx);
                lift(cy);
            }
            if (std::holds_alternative<ExactNet>(cx) && std::holds_alternative<ExactNet>(cy)) {
                Order o = order_compare(std::get<ExactNet>(cx), std::get<ExactNet>(cy));
                out << to_token(o) << "\n";
                switch (o) {
                    case Order::LEQ:
                    case Order::GEQ:
                    case Order::EQ: return 0;
                    case Order::Incomparable: return 1;
                    default: return 2;
                }
            }
            // semi-numeric route: falsify both order directions of x - y
            auto as_sampled = [&](Compiled& c) {
                if (auto* s = std::get_if<SampledNet>(&c)) return *s;
                return SampledNet::from_exact(expect_scalar(c, "compare"), grid_of(g));
            };
            SampledNet sx = as_sampled(cx), sy = as_sampled(cy);
            if (sx.model() != sy.model())
                throw CLI::ValidationError("compare", "mixed simplified/full operands");
            SampledNet diff(sx.model(),
                            [sx, sy](const GridPoint& p) { return sx(p) + (-sy(p)); },
                            grid_of(g));
            std::vector<Rational> bs{Rational(1), Rational(2), Rational(3)};
            auto sched = schedule_of(g);
            bool ge_bad = falsify_order(diff, FalsifyDirection::geq0, bs, sched).falsified;
            bool le_bad = falsify_order(diff, FalsifyDirection::leq0, bs, sched).falsified;
            if (ge_bad && le_bad) {
                out << "incomparable\n";
                return 1;
            }
            out << "unknown (geq0 " << (ge_bad ? "falsified" : "not falsified") << ", leq0 "
                << (le_bad ? "falsified" : "not falsified") << ")\n";
            return 2;
        }
        if (c_abs->parsed()) {
            ExactNet x = expect_scalar(compile_arg(expr, g), "abs");
            try {
                auto a = abs_exact(x);
                if (a) {
                    out << a->str() << "\n";
                    return 0;
                }
                out << SampledNet::abs_of(x, grid_of(g)).describe() << "\n";
                return 0;
            } catch (const UnknownVerdict& e) {
                out << "unknown: " << e.what() << "\n";
                return 2;
            }
        }
        if (c_root->parsed()) {
            ExactNet x = expect_scalar(compile_arg(expr, g), "root");
            auto r = proot_exact(x, order_p);
            if (r) {
                out << r->str() << "\n";
                if (r->inexact()) out << "note: coefficient carried at 128-bit precision\n";
                return 0;
            }
            out << SampledNet::proot_of(x, order_p, grid_of(g)).describe() << "\n";
            return 0;
        }
        if (c_mem->parsed()) {
            Rational r = parse_rational_arg(radius_s, "member");
            Compiled c = compile_arg(expr, g);
            if (auto* f = std::get_if<GenFunRep>(&c)) {
                Membership m = gf_ball_member(*f, beta, ell, r);
                out << to_token(m) << "\n";
                return verdict_exit(m);
            }
            if (auto* s = std::get_if<SampledNet>(&c)) {
                std::vector<Rational> bs{Rational(1), Rational(2), Rational(3), Rational(5),
                                         Rational(10)};
                auto res = oracle_ball_member(*s, r, bs);
                out << (res.refuted ? "refuted " + res.witness->str() : "consistent") << "\n";
                return res.refuted ? 1 : 0;
            }
            ExactNet x = std::get<ExactNet>(c);
            Membership m = scalar_ball_member(x, BallSpec{x.model(), r});
            out << to_token(m) << "\n";
            return verdict_exit(m);
        }
        if (c_semi->parsed()) {
            GenFunRep f = expect_function(compile_arg(expr, g), "seminorm", g);
            out << seminorm(f, beta, ell, rational_from_double(g.tolerance)).str() << "\n";
            return 0;
        }
        if (c_int->parsed()) {
            GenFunRep f = expect_function(compile_arg(expr, g), "integrate", g);
            out << integrate(f, parse_rational_arg(m1_s, "integrate"),
                             parse_rational_arg(m2_s, "integrate"))
                       .str()
                << "\n";
            return 0;
        }
        if (c_der->parsed()) {
            GenFunRep f = expect_function(compile_arg(expr, g), "derive", g);
            out << f.derive(beta).str() << "\n";
            return 0;
        }
        if (c_lpdo->parsed()) {
            GenFunRep f = expect_function(compile_arg(expr, g), "lpdo", g);
            std::vector<LpdoCoeff> op;
            for (const auto& t : lpdo_terms) {
                auto colon = t.find(':');
                if (colon == std::string::npos)
                    throw CLI::ValidationError("lpdo", "--term wants ORDER:EXPR");
                unsigned k = unsigned(std::stoul(t.substr(0, colon)));
                op.push_back(
                    {expect_function(compile_arg(t.substr(colon + 1), g), "lpdo", g), k});
            }
            out << lpdo_apply(op, f).str() << "\n";
            return 0;
        }
        if (c_vnp->parsed()) {
            GenFunRep f = expect_function(compile_arg(expr, g), "vnp", g);
            out << vnp(f, {nn, pp}).str() << "\n";
            return 0;
        }
        if (c_dnp->parsed()) {
            GenFunRep f = expect_function(compile_arg(expr, g), "dnp", g);
            GenFunRep h = expect_function(compile_arg(expr2, g), "dnp", g);
            out << dnp(f, h, {nn, pp}) << "\n";
            return 0;
        }
        if (c_ax->parsed()) {
            SuiteConfig cfg;
            cfg.domain = parse_domain(g.domain);
            std::vector<BasisId> bases;
            if (basis == "all")
                bases = {BasisId::B, BasisId::Bs, BasisId::BOmega, BasisId::BsOmega};
            else if (basis == "B")
                bases = {BasisId::B};
            else if (basis == "B_s")
                bases = {BasisId::Bs};
            else if (basis == "B_Omega")
                bases = {BasisId::BOmega};
            else if (basis == "B_sOmega")
                bases = {BasisId::BsOmega};
            else
                throw CLI::ValidationError("axiom-suite", "unknown basis " + basis);
            std::vector<AxiomId> axioms;
            if (axiom == "core" || axiom == "all")
                axioms = {AxiomId::GA_I, AxiomId::GA_II, AxiomId::AV_I, AxiomId::AV_II};
            else if (axiom == "GA_I")
                axioms = {AxiomId::GA_I};
            else if (axiom == "GA_II")
                axioms = {AxiomId::GA_II};
            else if (axiom == "AV_I")
                axioms = {AxiomId::AV_I};
            else if (axiom == "AV_II")
                axioms = {AxiomId::AV_II};
            else
                throw CLI::ValidationError("axiom-suite", "unknown axiom " + axiom);
            if (with_mv || axiom == "all") {
                axioms.push_back(AxiomId::MV_I);
                axioms.push_back(AxiomId::MV_II);
                axioms.push_back(AxiomId::MV_III);
            }
            size_t failures = 0;
            for (BasisId b : bases)
                for (AxiomId a : axioms) {
                    AxiomReport rep = axiom_check(b, a, g.samples, g.seed, cfg);
                    out << report_line(rep, g.format) << "\n";
                    for (const auto& fc : rep.failures)
                        out << "  failure[" << fc.index << "]: " << fc.witness << "\n";
                    failures += rep.failures.size();
                }
            if (axiom == "all") {
                AxiomReport gsn = gseminorm_axiom_check(g.samples, g.seed, cfg);
                out << report_line(gsn, g.format) << "\n";
                failures += gsn.failures.size();
                auto probe = mconv_condition_ii_probe(g.samples, g.seed, cfg);
                out << "info: condition (ii) with q=p violated " << probe.violations << "/"
                    << probe.samples << " times (open whether (i) implies (ii))\n";
                if (!probe.example.empty()) out << "info: first witness " << probe.example
                                                << "\n";
            }
            out << (failures == 0 ? "0 failures" : std::to_string(failures) + " failures")
                << "\n";
            return failures == 0 ? 0 : 1;
        }
        if (c_conv->parsed()) {
            Rational threshold = parse_rational_arg(thr_s, "converge");
            ConvergenceCertificate cert;
            if (preset == "alpha") {
                cert = converges_scalar(
                    [](int n) { return ExactNet::alpha(Rational(n), Model::simplified); },
                    ExactNet::zero(Model::simplified), limit_index, threshold);
            } else if (preset == "lpdo") {
                IntervalDomain dom = parse_domain(g.domain);
                GenFunRep base = GenFunRep::from_terms(
                    Model::full, dom,
                    {{Polynomial::x(), Rational(0), Rational(0)},
                     {Polynomial::constant(Rational(2)), Rational(1, 2), Rational(1)}});
                GenFunRep one = embed_const(ExactNet::one(Model::full), dom);
                GenFunRep xc = GenFunRep::from_terms(
                    Model::full, dom, {{Polynomial::x(), Rational(0), Rational(0)}});
                auto seq = [&](int n) {
                    return lpdo_apply({{xc, 1}, {one, 0}},
                                      scalar_mul(ExactNet::alpha(Rational(n), Model::full),
                                                 base));
                };
                cert = converges_genfun(seq, GenFunRep::zero(Model::full, dom), limit_index,
                                        {{0, 0}, {1, 1}, {2, 2}}, threshold);
            } else {
                throw CLI::ValidationError("converge", "unknown preset " + preset);
            }
            out << cert.str() << "\n";
            return cert.converged ? 0 : 1;
        }
        if (c_fal->parsed()) {
            Compiled c = compile_arg(expr, g);
            SampledNet net = std::holds_alternative<SampledNet>(c)
                                 ? std::get<SampledNet>(c)
                                 : SampledNet::from_exact(
                                       expect_scalar(c, "falsify"), grid_of(g));
            std::vector<Rational> bs;
            for (const auto& b : b_list) bs.push_back(parse_rational_arg(b, "falsify"));
            auto res = falsify_order(
                net, dir == "geq0" ? FalsifyDirection::geq0 : FalsifyDirection::leq0, bs,
                schedule_of(g));
            if (res.falsified) {
                out << "falsified " << res.witness->str() << " (violations "
                    << res.violations << ")\n";
                return 1;
            }
            out << "not-falsified\n";
            return 0;
        }
        if (c_script->parsed()) return run_script(script_path, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const UnknownVerdict& e) {
        std::cerr << "unknown verdict: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_command(args, std::cout);
}
