#include "colgen/iota_profile.hpp"

#include <algorithm>
#include <stdexcept>

#include "colgen/polynomial.hpp"
#include "colgen/roots.hpp"

namespace colgen {

IotaProfile::IotaProfile(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.exp < b.exp; });
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!terms_.empty() && terms_.back().exp == t.exp) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff == 0) terms_.pop_back();
        } else {
            terms_.push_back(t);
        }
    }
}

namespace {

// Substitute iota = t^D and factor out the lowest power; the result has a
// nonzero constant term, and its sign on t > 0 matches the profile's on
// iota > 0 since t^k > 0 there.
Polynomial to_polynomial(const std::vector<IotaProfile::Term>& terms, mpz_class& D_out) {
    mpz_class D(1);
    for (const auto& t : terms) D = lcm(D, t.exp.get_den());
    std::vector<std::pair<mpz_class, Rational>> powers;  // (integer exponent, coeff)
    mpz_class lowest;
    bool first = true;
    for (const auto& t : terms) {
        mpz_class n = t.exp.get_num() * (D / t.exp.get_den());
        if (first || n < lowest) lowest = n;
        first = false;
        powers.push_back({n, t.coeff});
    }
    size_t deg = 0;
    for (auto& [n, c] : powers) {
        n -= lowest;
        deg = std::max(deg, size_t(n.get_ui()));
    }
    std::vector<Rational> coeffs(deg + 1, Rational(0));
    for (const auto& [n, c] : powers) coeffs[size_t(n.get_ui())] += c;
    D_out = D;
    return Polynomial(std::move(coeffs));
}

}  // namespace

IotaProfile::Analysis IotaProfile::analyze() const {
    Analysis a;
    if (terms_.empty()) return a;
    mpz_class D;
    Polynomial p = to_polynomial(terms_, D);

    if (p.degree() == 0) {
        (sign(p.coeff(0)) > 0 ? a.takes_positive : a.takes_negative) = true;
        return a;
    }

    auto roots = isolate_positive_roots(p);

    // Sample points strictly between consecutive roots, plus one below the
    // first and one above the last.
    std::vector<Rational> samples;
    auto lo_of = [](const RootLoc& r) { return r.exact ? r.value : r.lo; };
    auto hi_of = [](const RootLoc& r) { return r.exact ? r.value : r.hi; };
    if (roots.empty()) {
        samples.push_back(Rational(1));
    } else {
        samples.push_back(lo_of(roots.front()) / 2);
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            samples.push_back((hi_of(roots[i]) + lo_of(roots[i + 1])) / 2);
        samples.push_back(hi_of(roots.back()) + 1);
    }
    for (const auto& s : samples) {
        // isolating endpoints are never roots of p, but exact roots make the
        // arithmetic midpoints above land off-root too; guard regardless
        Rational x = s;
        int sg = sign(p(x));
        while (sg == 0) {
            x += Rational(1, 1048576);
            sg = sign(p(x));
        }
        (sg > 0 ? a.takes_positive : a.takes_negative) = true;
    }

    long d = static_cast<long>(D.get_si());
    for (const auto& r : roots) {
        if (r.exact)
            a.rational_zeros.push_back(pow_int(r.value, d));
        else
            a.has_irrational_zero = true;
    }
    return a;
}

int IotaProfile::sign_at(const Rational& iota0) const {
    if (iota0 <= 0) throw std::domain_error("IotaProfile::sign_at: iota must be positive");
    if (terms_.empty()) return 0;

    mpz_class Q(1);
    for (const auto& t : terms_) Q = lcm(Q, t.exp.get_den());

    if (Q == 1) {
        Rational acc(0);
        for (const auto& t : terms_)
            acc += t.coeff * pow_int(iota0, to_long(t.exp.get_num()));
        return sign(acc);
    }

    // sign(sum c * iota0^(n/Q)) = sign(P(u)) with u = iota0^(1/Q) > 0
    mpz_class D;
    Polynomial p = to_polynomial(terms_, D);  // D == Q here
    unsigned long q = D.get_ui();

    mpz_class rn, rd;
    bool en = mpz_root(rn.get_mpz_t(), iota0.get_num_mpz_t(), q) != 0;
    bool ed = mpz_root(rd.get_mpz_t(), iota0.get_den_mpz_t(), q) != 0;
    if (en && ed) {
        Rational u(rn, rd);
        u.canonicalize();
        return sign(p(u));
    }

    // u is the positive root of den*x^Q - num, irrational by the check above
    std::vector<Rational> f(q + 1, Rational(0));
    f[0] = -Rational(iota0.get_num());
    f[q] = Rational(iota0.get_den());
    Polynomial defining{f};
    auto locs = isolate_positive_roots(defining);
    if (locs.size() != 1) throw std::logic_error("sign_at: root of x^Q - a not isolated");
    return sign_at_root(p, defining, locs.front());
}

}  // namespace colgen
