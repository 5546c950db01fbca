#include "colgen/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace colgen {

namespace {

// Exact quotient a / b; remainder must vanish.
Polynomial poly_divexact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("poly_divexact: zero divisor");
    if (a.is_zero()) return {};
    std::vector<Rational> qc(size_t(a.degree() - b.degree() + 1), Rational(0));
    Polynomial rem = a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Rational f = rem.leading() / b.leading();
        int shift = rem.degree() - b.degree();
        qc[size_t(shift)] = f;
        std::vector<Rational> rc = rem.coeffs();
        const auto& bc = b.coeffs();
        for (size_t i = 0; i < bc.size(); ++i) rc[i + size_t(shift)] -= f * bc[i];
        rem = Polynomial(std::move(rc));
    }
    if (!rem.is_zero()) throw std::domain_error("poly_divexact: nonzero remainder");
    return Polynomial(std::move(qc));
}

// Divisors of |n|, or empty when n does not factor cheaply.
std::vector<mpz_class> divisors_limited(mpz_class n) {
    n = ::abs(n);
    if (n == 0) return {};
    std::vector<std::pair<mpz_class, int>> factors;
    for (long p = 2; p <= 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.push_back({mpz_class(p), e});
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 25) == 0) return {};  // composite cofactor, bail
        factors.push_back({n, 1});
    }
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : factors) {
        size_t base = divs.size();
        mpz_class pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > 4096) return {};
            }
        }
    }
    return divs;
}

// All rational roots of p (exact), or nullopt when divisor enumeration bailed.
std::optional<std::vector<Rational>> rational_roots(const Polynomial& p) {
    std::vector<Rational> out;
    if (p.is_zero() || p.degree() <= 0) return out;

    // strip x^k
    const auto& c = p.coeffs();
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low > 0) out.push_back(Rational(0));
    std::vector<Rational> cc(c.begin() + long(low), c.end());
    if (cc.size() <= 1) return out;

    // clear denominators
    mpz_class L(1);
    for (const auto& v : cc) L = lcm(L, v.get_den());
    std::vector<mpz_class> ic;
    ic.reserve(cc.size());
    for (const auto& v : cc) ic.push_back(mpz_class(v.get_num() * (L / v.get_den())));

    auto ps = divisors_limited(ic.front());
    auto qs = divisors_limited(ic.back());
    if (ps.empty() || qs.empty()) return std::nullopt;

    Polynomial stripped{cc};
    for (const auto& pn : ps)
        for (const auto& qn : qs) {
            Rational cand(pn, qn);
            cand.canonicalize();
            if (stripped(cand) == 0) out.push_back(cand);
            if (stripped(-cand) == 0) out.push_back(-cand);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
    int prev = 0, var = 0;
    for (const auto& p : seq) {
        int s = p.is_zero() ? 0 : sign(p(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

}  // namespace

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    Polynomial d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    while (true) {
        Polynomial r = poly_rem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sturm_count(const std::vector<Polynomial>& seq, const Rational& a, const Rational& b) {
    if (seq.empty()) return 0;
    return variations_at(seq, a) - variations_at(seq, b);
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero() || p.degree() == 0) return Rational(1);
    Rational m(0);
    const auto& c = p.coeffs();
    for (size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, abs(c[i]));
    return Rational(1) + m / abs(p.leading());
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero() || p.degree() <= 0) return p;
    Polynomial g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return poly_divexact(p, g);
}

std::vector<RootLoc> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    std::vector<RootLoc> out;
    if (p.is_zero() || p.degree() <= 0 || lo >= hi) return out;
    Polynomial g = squarefree_part(p);

    // Exact rational roots first; the bisection below then only ever sees
    // irrational ones, so interval locations are classified reliably.
    auto rr = rational_roots(g);
    if (rr) {
        for (const auto& r : *rr) {
            if (r > lo && r < hi) out.push_back({true, r, Rational(0), Rational(0)});
            g = poly_divexact(g, Polynomial({-r, Rational(1)}));
        }
    }
    if (g.degree() >= 1) {
        auto seq = sturm_sequence(g);
        Rational a = lo, b = hi;
        // endpoints may still be roots when factoring bailed; nudge inward
        while (g(a) == 0) a += (hi - lo) / 1048576;
        while (g(b) == 0) b -= (hi - lo) / 1048576;
        std::vector<RootLoc> ivs;
        std::vector<std::tuple<Rational, Rational, int>> stack;
        int total = sturm_count(seq, a, b);
        if (total > 0) stack.push_back({a, b, total});
        while (!stack.empty()) {
            auto [u, v, cnt] = stack.back();
            stack.pop_back();
            if (cnt == 0) continue;
            if (cnt == 1) {
                ivs.push_back({false, Rational(0), u, v});
                continue;
            }
            Rational mid = (u + v) / 2;
            if (g(mid) == 0) {
                // only reachable when rational-root extraction bailed
                out.push_back({true, mid, Rational(0), Rational(0)});
                Rational ml = mid, mr = mid;
                Rational step = (v - u) / 1048576;
                do ml -= step;
                while (g(ml) == 0);
                do mr += step;
                while (g(mr) == 0);
                stack.push_back({u, ml, sturm_count(seq, u, ml)});
                stack.push_back({mr, v, sturm_count(seq, mr, v)});
            } else {
                int left = sturm_count(seq, u, mid);
                stack.push_back({u, mid, left});
                stack.push_back({mid, v, cnt - left});
            }
        }
        // keep interval locations clear of the exact roots removed above, so
        // callers can order all locations strictly
        for (auto& iv : ivs) {
            for (const auto& ex : out) {
                if (!ex.exact) continue;
                while (ex.value >= iv.lo && ex.value <= iv.hi) {
                    Rational mid = (iv.lo + iv.hi) / 2;
                    if (g(mid) == 0) break;  // cannot happen: mid would be rational root of g
                    if (sturm_count(seq, iv.lo, mid) == 1)
                        iv.hi = mid;
                    else
                        iv.lo = mid;
                }
            }
        }
        out.insert(out.end(), ivs.begin(), ivs.end());
    }
    std::sort(out.begin(), out.end(), [](const RootLoc& x, const RootLoc& y) {
        const Rational& kx = x.exact ? x.value : x.lo;
        const Rational& ky = y.exact ? y.value : y.lo;
        return kx < ky;
    });
    return out;
}

std::vector<RootLoc> isolate_positive_roots(const Polynomial& p) {
    if (p.is_zero() || p.degree() <= 0) return {};
    return isolate_roots(p, Rational(0), cauchy_root_bound(p));
}

RootLoc refine_root(const Polynomial& p, RootLoc loc, const Rational& width) {
    if (loc.exact) return loc;
    Polynomial g = squarefree_part(p);
    auto seq = sturm_sequence(g);
    while (loc.hi - loc.lo > width) {
        Rational mid = (loc.lo + loc.hi) / 2;
        if (g(mid) == 0) return {true, mid, Rational(0), Rational(0)};
        if (sturm_count(seq, loc.lo, mid) == 1)
            loc.hi = mid;
        else
            loc.lo = mid;
    }
    return loc;
}

int sign_at_root(const Polynomial& q, const Polynomial& p, const RootLoc& loc) {
    if (loc.exact) return sign(q(loc.value));
    if (q.is_zero()) return 0;
    Polynomial g = squarefree_part(p);
    Polynomial common = poly_gcd(g, q);
    if (common.degree() > 0) {
        auto cseq = sturm_sequence(common);
        if (sturm_count(cseq, loc.lo, loc.hi) > 0) return 0;  // q vanishes at the root
    }
    auto qseq = sturm_sequence(q);
    auto seq = sturm_sequence(g);
    RootLoc iv = loc;
    while (true) {
        if (q(iv.lo) != 0 && q(iv.hi) != 0 && sturm_count(qseq, iv.lo, iv.hi) == 0)
            return sign(q(iv.lo));
        Rational mid = (iv.lo + iv.hi) / 2;
        if (g(mid) == 0) return sign(q(mid));
        if (sturm_count(seq, iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
}

std::pair<Rational, Rational> interval_eval(const Polynomial& p, const Rational& lo,
                                            const Rational& hi) {
    Rational a(0), b(0);
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        Rational p1 = a * lo, p2 = a * hi, p3 = b * lo, p4 = b * hi;
        Rational na = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational nb = std::max(std::max(p1, p2), std::max(p3, p4));
        a = na + c[i];
        b = nb + c[i];
    }
    return {a, b};
}

SupBound poly_sup_abs(const Polynomial& p, const Rational& lo, const Rational& hi,
                      const Rational& tol) {
    if (lo > hi) throw std::invalid_argument("poly_sup_abs: empty interval");
    if (p.is_zero()) return SupBound::point(Rational(0));

    std::vector<SupBound> candidates;
    candidates.push_back(SupBound::point(abs(p(lo))));
    candidates.push_back(SupBound::point(abs(p(hi))));

    Polynomial d = p.derivative();
    for (auto root : isolate_roots(d, lo, hi)) {
        if (root.exact) {
            candidates.push_back(SupBound::point(abs(p(root.value))));
            continue;
        }
        while (true) {
            auto [a, b] = interval_eval(p, root.lo, root.hi);
            Rational abs_lo, abs_hi;
            if (a >= 0) {
                abs_lo = a;
                abs_hi = b;
            } else if (b <= 0) {
                abs_lo = -b;
                abs_hi = -a;
            } else {
                abs_lo = 0;
                abs_hi = std::max(b, Rational(-a));
            }
            if (abs_hi - abs_lo <= tol) {
                candidates.push_back({abs_lo, abs_hi, false});
                break;
            }
            root = refine_root(d, root, (root.hi - root.lo) / 16);
            if (root.exact) {
                candidates.push_back(SupBound::point(abs(p(root.value))));
                break;
            }
        }
    }

    Rational best_lo = candidates.front().lo, best_hi = candidates.front().hi;
    Rational best_exact(-1);
    for (const auto& c : candidates) {
        best_lo = std::max(best_lo, c.lo);
        best_hi = std::max(best_hi, c.hi);
        if (c.exact) best_exact = std::max(best_exact, c.lo);
    }
    if (best_exact >= best_hi) return SupBound::point(best_exact);
    return {std::max(best_lo, best_exact), best_hi, best_lo == best_hi};
}

}  // namespace colgen
