#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "colgen/parser.hpp"
#include "colgen/sampled.hpp"
#include "colgen/topology.hpp"

namespace py = pybind11;
using namespace colgen;

namespace pybind11::detail {

// Rational <-> fractions.Fraction (also accepts int and "p/q" strings).
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (src.is_none()) return false;
        std::string text;
        if (isinstance<py::int_>(src) || isinstance<py::str>(src)) {
            text = py::str(src).cast<std::string>();
        } else {
            object fraction = module_::import("fractions").attr("Fraction");
            if (!isinstance(src, fraction)) return false;
            text = py::str(src).cast<std::string>();
        }
        auto q = rational_from_string(text);
        if (!q) return false;
        value = *q;
        return true;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(to_string(src)).release();
    }
};

}  // namespace pybind11::detail

namespace {

py::object valuation_py(const ExactNet& x) {
    Valuation v = valuation(x);
    if (v.infinite) return py::none();
    return py::cast(v.value);
}

py::object vnp_py(const GenFunRep& f, long n, unsigned p) {
    Valuation v = vnp(f, {n, p});
    if (v.infinite) return py::none();
    return py::cast(v.value);
}

BasisId basis_from(const std::string& s) {
    if (s == "B") return BasisId::B;
    if (s == "B_s") return BasisId::Bs;
    if (s == "B_Omega") return BasisId::BOmega;
    if (s == "B_sOmega") return BasisId::BsOmega;
    throw std::invalid_argument("unknown basis " + s);
}

AxiomId axiom_from(const std::string& s) {
    if (s == "GA_I") return AxiomId::GA_I;
    if (s == "GA_II") return AxiomId::GA_II;
    if (s == "AV_I") return AxiomId::AV_I;
    if (s == "AV_II") return AxiomId::AV_II;
    if (s == "MV_I") return AxiomId::MV_I;
    if (s == "MV_II") return AxiomId::MV_II;
    if (s == "MV_III") return AxiomId::MV_III;
    throw std::invalid_argument("unknown axiom " + s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Colombeau generalized numbers and sharp-topology deciders";

    py::enum_<Model>(m, "Model")
        .value("simplified", Model::simplified)
        .value("full", Model::full);

    py::class_<ExactNet>(m, "ExactNet")
        .def_static(
            "from_terms",
            [](Model model, const std::vector<std::vector<Rational>>& terms) {
                std::vector<Term> raw;
                for (const auto& t : terms) {
                    if (t.size() == 2)
                        raw.emplace_back(t[0], t[1]);
                    else if (t.size() == 3)
                        raw.emplace_back(t[0], t[1], t[2]);
                    else
                        throw std::invalid_argument("term wants (coeff, eps_exp[, iota_exp])");
                }
                return ExactNet::from_terms(model, std::move(raw));
            },
            py::arg("model"), py::arg("terms"))
        .def_static("zero", &ExactNet::zero)
        .def_static("one", &ExactNet::one)
        .def_static("alpha", &ExactNet::alpha, py::arg("r"), py::arg("model"))
        .def_property_readonly("model", &ExactNet::model)
        .def_property_readonly("is_zero", &ExactNet::is_zero)
        .def_property_readonly("inexact", &ExactNet::inexact)
        .def_property_readonly("terms",
                               [](const ExactNet& x) {
                                   std::vector<std::tuple<Rational, Rational, Rational>> out;
                                   for (const auto& t : x.terms())
                                       out.emplace_back(t.coeff, t.eps_exp, t.iota_exp);
                                   return out;
                               })
        .def("__str__", &ExactNet::str)
        .def("__repr__", [](const ExactNet& x) { return "<ExactNet " + x.str() + ">"; })
        .def("__add__", [](const ExactNet& a, const ExactNet& b) { return a + b; })
        .def("__sub__", [](const ExactNet& a, const ExactNet& b) { return a - b; })
        .def("__mul__", [](const ExactNet& a, const ExactNet& b) { return a * b; })
        .def("__neg__", [](const ExactNet& a) { return -a; })
        .def("__eq__", [](const ExactNet& a, const ExactNet& b) { return a == b; })
        .def("eval",
             [](const ExactNet& x, double eps, std::optional<double> iota) {
                 std::optional<NetValue> io;
                 if (iota) io = NetValue::from_double(*iota);
                 return x.eval(NetValue::from_double(eps), io).value();
             },
             py::arg("eps"), py::arg("iota") = py::none());

    py::class_<IntervalDomain>(m, "IntervalDomain")
        .def(py::init([](std::optional<Rational> lo, std::optional<Rational> hi) {
                 return IntervalDomain(std::move(lo), std::move(hi));
             }),
             py::arg("lower") = py::none(), py::arg("upper") = py::none())
        .def("__str__", &IntervalDomain::str);

    py::class_<GenFunRep>(m, "GenFunRep")
        .def_property_readonly("model", &GenFunRep::model)
        .def_property_readonly("is_zero", &GenFunRep::is_zero)
        .def("__str__", &GenFunRep::str)
        .def("__repr__", [](const GenFunRep& f) { return "<GenFunRep " + f.str() + ">"; })
        .def("__add__", [](const GenFunRep& a, const GenFunRep& b) { return a + b; })
        .def("__sub__", [](const GenFunRep& a, const GenFunRep& b) { return a - b; })
        .def("__mul__", [](const GenFunRep& a, const GenFunRep& b) { return a * b; })
        .def("__eq__", [](const GenFunRep& a, const GenFunRep& b) { return a == b; })
        .def("derive", &GenFunRep::derive, py::arg("order") = 1);

    py::class_<SampledNet>(m, "SampledNet")
        .def_property_readonly("model", &SampledNet::model)
        .def("__repr__", [](const SampledNet& s) { return "<" + s.describe() + ">"; })
        .def("describe", &SampledNet::describe);

    py::class_<SeminormDescriptor>(m, "SeminormDescriptor")
        .def_property_readonly("infinite",
                               [](const SeminormDescriptor& d) { return d.infinite; })
        .def_property_readonly("lead_exp",
                               [](const SeminormDescriptor& d) -> py::object {
                                   if (d.infinite) return py::none();
                                   return py::cast(d.lead_exp);
                               })
        .def_property_readonly("lead_sup",
                               [](const SeminormDescriptor& d) -> py::object {
                                   if (d.infinite) return py::none();
                                   return py::make_tuple(d.lead_sup.lo, d.lead_sup.hi,
                                                         d.lead_sup.exact);
                               })
        .def("__str__", &SeminormDescriptor::str);

    py::class_<ValuationEstimate>(m, "ValuationEstimate")
        .def_readonly("slope", &ValuationEstimate::slope)
        .def_readonly("half_width", &ValuationEstimate::half_width)
        .def_readonly("plausibly_infinite", &ValuationEstimate::plausibly_infinite)
        .def("__str__", &ValuationEstimate::str);

    py::class_<AxiomReport>(m, "AxiomReport")
        .def_property_readonly("failures",
                               [](const AxiomReport& r) { return r.failures.size(); })
        .def_property_readonly("unknowns",
                               [](const AxiomReport& r) { return r.unknowns.size(); })
        .def_readonly("samples", &AxiomReport::samples)
        .def("ok", &AxiomReport::ok)
        .def("line", &AxiomReport::line)
        .def("__str__", &AxiomReport::line);

    m.def(
        "parse",
        [](const std::string& text, std::optional<IntervalDomain> dom) -> py::object {
            IntervalDomain d =
                dom ? *dom : IntervalDomain::bounded(Rational(-2), Rational(2));
            Compiled c = compile(*colgen::parse(text), d);
            return std::visit([](auto&& v) { return py::cast(v); }, c);
        },
        py::arg("text"), py::arg("domain") = py::none());

    m.def("jm_embed", &jm_embed);
    m.def("psi_embed", &psi_embed);
    m.def("embed_const", &embed_const, py::arg("scalar"), py::arg("domain"));
    m.def("scalar_mul", &scalar_mul);
    m.def("valuation", &valuation_py);
    m.def("sharp_norm", &sharp_norm);
    m.def("sharp_dist", &sharp_dist);
    m.def("q_positivity", [](const ExactNet& x) { return to_token(q_positivity(x)); });
    m.def("order_compare",
          [](const ExactNet& x, const ExactNet& y) { return to_token(order_compare(x, y)); });
    m.def("abs_exact", [](const ExactNet& x) -> py::object {
        auto a = abs_exact(x);
        if (!a) return py::none();
        return py::cast(*a);
    });
    m.def("proot",
          [](const ExactNet& x, unsigned long p) -> py::object {
              auto r = proot_exact(x, p);
              if (r) return py::cast(*r);
              return py::cast(SampledNet::proot_of(x, p));
          },
          py::arg("x"), py::arg("p"));
    m.def("scalar_ball_member", [](const ExactNet& x, const Rational& r) {
        return to_token(scalar_ball_member(x, BallSpec{x.model(), r}));
    });
    m.def("gf_ball_member",
          [](const GenFunRep& f, unsigned beta, long l, const Rational& r) {
              return to_token(gf_ball_member(f, beta, l, r));
          },
          py::arg("f"), py::arg("beta"), py::arg("l"), py::arg("r"));
    m.def("seminorm",
          [](const GenFunRep& f, unsigned beta, long l) { return seminorm(f, beta, l); },
          py::arg("f"), py::arg("beta"), py::arg("l"));
    m.def("integrate", &integrate, py::arg("f"), py::arg("m1"), py::arg("m2"));
    m.def("lpdo_apply",
          [](const std::vector<std::pair<unsigned, GenFunRep>>& op, const GenFunRep& f) {
              std::vector<LpdoCoeff> terms;
              for (const auto& [k, a] : op) terms.push_back({a, k});
              return lpdo_apply(terms, f);
          });
    m.def("exhaustion_closure", &exhaustion_closure, py::arg("domain"), py::arg("l"));
    m.def("vnp", &vnp_py, py::arg("f"), py::arg("n"), py::arg("p"));
    m.def("dnp",
          [](const GenFunRep& f, const GenFunRep& g, long n, unsigned p) {
              return dnp(f, g, {n, p});
          });
    m.def("estimate_valuation",
          [](const SampledNet& net) { return estimate_valuation(net); });
    m.def("from_exact", [](const ExactNet& x) { return SampledNet::from_exact(x); });
    m.def("oscillating_preset", []() { return SampledNet::oscillating_preset(); });
    m.def("oscillating_schedule", &oscillating_schedule);
    m.def("null_estimate",
          [](const SampledNet& net, const Rational& B) { return null_estimate(net, B); },
          py::arg("net"), py::arg("B") = Rational(50));
    m.def("falsify_order",
          [](const SampledNet& net, const std::string& direction,
             const std::vector<Rational>& b_probe,
             std::optional<std::vector<Rational>> schedule) {
              auto res = falsify_order(net,
                                       direction == "geq0" ? FalsifyDirection::geq0
                                                           : FalsifyDirection::leq0,
                                       b_probe, schedule);
              py::dict out;
              out["falsified"] = res.falsified;
              out["violations"] = res.violations;
              if (res.witness) out["witness"] = res.witness->str();
              return out;
          },
          py::arg("net"), py::arg("direction"), py::arg("b_probe"),
          py::arg("iota_schedule") = py::none());
    m.def("oracle_ball_member",
          [](const SampledNet& net, const Rational& r, const std::vector<Rational>& bs) {
              auto res = oracle_ball_member(net, r, bs);
              py::dict out;
              out["refuted"] = res.refuted;
              if (res.witness) out["witness"] = res.witness->str();
              return out;
          });
    m.def("axiom_check",
          [](const std::string& basis, const std::string& axiom, int samples, uint64_t seed) {
              return axiom_check(basis_from(basis), axiom_from(axiom), samples, seed);
          },
          py::arg("basis"), py::arg("axiom"), py::arg("samples") = 200, py::arg("seed") = 7);
    m.def("gseminorm_axiom_check",
          [](int samples, uint64_t seed) { return gseminorm_axiom_check(samples, seed); },
          py::arg("samples") = 200, py::arg("seed") = 7);
}
