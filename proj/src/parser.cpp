#include "colgen/parser.hpp"

#include <cctype>

#include "colgen/hiprec.hpp"

namespace colgen {

bool operator==(const NetExpr& a, const NetExpr& b) {
    if (a.kind != b.kind || a.signs != b.signs || a.xpow != b.xpow || a.func != b.func)
        return false;
    if ((a.kind == NetExpr::Kind::Number || a.kind == NetExpr::Kind::EpsPow ||
         a.kind == NetExpr::Kind::IotaPow) &&
        a.value != b.value)
        return false;
    if (a.children.size() != b.children.size()) return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!(*a.children[i] == *b.children[i])) return false;
    return true;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& in) : s(in) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    char get() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", line, col);
        ++col;
        return s[pos++];
    }

    void expect(char c) {
        char g = get();
        if (g != c)
            throw ParseError(std::string("expected '") + c + "', got '" + g + "'", line,
                             col - 1);
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            out += s[pos++];
            ++col;
        }
        return out;
    }

    mpz_class digits() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a number", line, col);
        std::string d;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            d += s[pos++];
            ++col;
        }
        return mpz_class(d);
    }

    Rational rational() {
        bool neg = false;
        if (peek() == '-') {
            get();
            neg = true;
        }
        mpz_class num = digits();
        mpz_class den(1);
        if (peek() == '/') {
            get();
            den = digits();
            if (den == 0) throw ParseError("zero denominator", line, col);
        }
        Rational q(neg ? mpz_class(-num) : num, den);
        q.canonicalize();
        return q;
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& in) : lex(in) {}

    ExprPtr parse_expr() {
        auto sum = std::make_shared<NetExpr>();
        sum->kind = NetExpr::Kind::Sum;
        sum->children.push_back(parse_term());
        sum->signs.push_back(1);
        while (lex.peek() == '+' || lex.peek() == '-') {
            // a '-' starting a rational belongs to the factor only at the
            // head of an expression; here it is the sum operator
            int sg = lex.get() == '+' ? 1 : -1;
            sum->children.push_back(parse_term());
            sum->signs.push_back(sg);
        }
        if (sum->children.size() == 1 && sum->signs[0] == 1)
            return sum->children[0];  // no wrapping for a single positive term
        return sum;
    }

    ExprPtr parse_term() {
        auto prod = std::make_shared<NetExpr>();
        prod->kind = NetExpr::Kind::Product;
        prod->children.push_back(parse_factor());
        while (lex.peek() == '*') {
            lex.get();
            prod->children.push_back(parse_factor());
        }
        if (prod->children.size() == 1) return prod->children[0];
        return prod;
    }

    ExprPtr parse_factor() {
        char c = lex.peek();
        auto node = std::make_shared<NetExpr>();
        if (c == '(') {
            lex.get();
            node->kind = NetExpr::Kind::Paren;
            node->children.push_back(parse_expr());
            lex.expect(')');
            return node;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            node->kind = NetExpr::Kind::Number;
            node->value = lex.rational();
            return node;
        }
        int at_line = lex.line, at_col = lex.col;
        std::string id = lex.ident();
        if (id == "e" || id == "i") {
            node->kind = id == "e" ? NetExpr::Kind::EpsPow : NetExpr::Kind::IotaPow;
            lex.expect('^');
            lex.expect('(');
            node->value = lex.rational();
            lex.expect(')');
            return node;
        }
        if (id == "x") {
            node->kind = NetExpr::Kind::XPow;
            node->xpow = 1;
            if (lex.peek() == '^') {
                lex.get();
                node->xpow = unsigned(lex.digits().get_ui());
            }
            return node;
        }
        if (id == "sin" || id == "cos" || id == "exp" || id == "log") {
            node->kind = NetExpr::Kind::Func;
            node->func = id;
            lex.expect('(');
            node->children.push_back(parse_expr());
            lex.expect(')');
            return node;
        }
        if (id.empty())
            throw ParseError(std::string("unexpected character '") + c + "'", at_line, at_col);
        throw ParseError("unknown identifier '" + id + "'", at_line, at_col);
    }
};

void analyze(const NetExpr& e, bool& has_i, bool& has_x, bool& has_func) {
    switch (e.kind) {
        case NetExpr::Kind::IotaPow: has_i = true; break;
        case NetExpr::Kind::XPow: has_x = true; break;
        case NetExpr::Kind::Func: has_func = true; break;
        default: break;
    }
    for (const auto& c : e.children) analyze(*c, has_i, has_x, has_func);
}

GenFunRep compile_exact(const NetExpr& e, Model m, const IntervalDomain& dom) {
    switch (e.kind) {
        case NetExpr::Kind::Sum: {
            GenFunRep acc = GenFunRep::zero(m, dom);
            for (size_t i = 0; i < e.children.size(); ++i) {
                GenFunRep t = compile_exact(*e.children[i], m, dom);
                acc = e.signs[i] > 0 ? acc + t : acc - t;
            }
            return acc;
        }
        case NetExpr::Kind::Product: {
            GenFunRep acc = compile_exact(*e.children[0], m, dom);
            for (size_t i = 1; i < e.children.size(); ++i)
                acc = acc * compile_exact(*e.children[i], m, dom);
            return acc;
        }
        case NetExpr::Kind::Paren: return compile_exact(*e.children[0], m, dom);
        case NetExpr::Kind::Number:
            return GenFunRep::from_terms(
                m, dom, {{Polynomial::constant(e.value), Rational(0), Rational(0)}});
        case NetExpr::Kind::EpsPow:
            return GenFunRep::from_terms(
                m, dom, {{Polynomial::constant(Rational(1)), e.value, Rational(0)}});
        case NetExpr::Kind::IotaPow:
            return GenFunRep::from_terms(
                m, dom, {{Polynomial::constant(Rational(1)), Rational(0), e.value}});
        case NetExpr::Kind::XPow:
            return GenFunRep::from_terms(
                m, dom,
                {{Polynomial::monomial(Rational(1), e.xpow), Rational(0), Rational(0)}});
        default: throw std::logic_error("compile_exact: func node");
    }
}

// Sampled evaluation value: exact rational fast path plus a log-domain view.
struct EvalVal {
    std::optional<Rational> exact;
    NetValue approx;

    static EvalVal from_rational(const Rational& q) {
        return {q, NetValue::from_rational(q)};
    }
    static EvalVal from_net(NetValue v) { return {std::nullopt, v}; }
};

Rational dyadic(int j) {
    mpz_class den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(j));
    return Rational(1, den);
}

EvalVal eval_node(const NetExpr& e, const GridPoint& p, Model m) {
    using K = NetExpr::Kind;
    switch (e.kind) {
        case K::Sum: {
            EvalVal acc = EvalVal::from_rational(Rational(0));
            for (size_t i = 0; i < e.children.size(); ++i) {
                EvalVal v = eval_node(*e.children[i], p, m);
                if (acc.exact && v.exact) {
                    Rational r = e.signs[i] > 0 ? Rational(*acc.exact + *v.exact)
                                                : Rational(*acc.exact - *v.exact);
                    acc = EvalVal::from_rational(r);
                } else {
                    NetValue nv = e.signs[i] > 0 ? v.approx : -v.approx;
                    acc = EvalVal::from_net(acc.approx + nv);
                }
            }
            return acc;
        }
        case K::Product: {
            EvalVal acc = EvalVal::from_rational(Rational(1));
            for (const auto& c : e.children) {
                EvalVal v = eval_node(*c, p, m);
                if (acc.exact && v.exact)
                    acc = EvalVal::from_rational(*acc.exact * *v.exact);
                else
                    acc = EvalVal::from_net(acc.approx * v.approx);
            }
            return acc;
        }
        case K::Paren: return eval_node(*e.children[0], p, m);
        case K::Number: return EvalVal::from_rational(e.value);
        case K::EpsPow: {
            if (e.value.get_den() == 1)
                return EvalVal::from_rational(pow_int(dyadic(p.j), to_long(e.value.get_num())));
            return EvalVal::from_net(NetValue{to_double(e.value) * p.log_eps, 1});
        }
        case K::IotaPow: {
            // 'i' in a sampled expression is i(phi) itself, whose value along
            // the dilation orbit is eps*iota
            if (!p.log_iota)
                throw std::invalid_argument("sampled expression with 'i' needs iota");
            if (e.value.get_den() == 1 && p.iota)
                return EvalVal::from_rational(
                    pow_int(dyadic(p.j) * *p.iota, to_long(e.value.get_num())));
            return EvalVal::from_net(
                NetValue{to_double(e.value) * (p.log_eps + *p.log_iota), 1});
        }
        case K::Func: {
            EvalVal arg = eval_node(*e.children[0], p, m);
            if (e.func == "sin" || e.func == "cos") {
                double s;
                if (arg.exact)
                    s = e.func == "sin" ? sin_at(*arg.exact) : cos_at(*arg.exact);
                else {
                    double v = arg.approx.value();
                    s = e.func == "sin" ? std::sin(v) : std::cos(v);
                }
                return EvalVal::from_net(NetValue::from_double(s));
            }
            if (e.func == "exp") {
                double x = arg.exact ? to_double(*arg.exact) : arg.approx.value();
                return EvalVal::from_net(NetValue{x, 1});
            }
            // log
            if (arg.exact) {
                if (*arg.exact <= 0) throw std::domain_error("log of a nonpositive value");
                return EvalVal::from_net(NetValue::from_double(log_at(*arg.exact)));
            }
            if (arg.approx.sign <= 0) throw std::domain_error("log of a nonpositive value");
            return EvalVal::from_net(NetValue::from_double(arg.approx.log_abs));
        }
        default: throw std::logic_error("eval_node: x in a sampled expression");
    }
}

}  // namespace

ExprPtr parse(const std::string& input) {
    Parser p(input);
    ExprPtr e = p.parse_expr();
    if (!p.lex.eof())
        throw ParseError(std::string("trailing input starting at '") + p.lex.peek() + "'",
                         p.lex.line, p.lex.col);
    return e;
}

std::string print(const NetExpr& e) {
    using K = NetExpr::Kind;
    switch (e.kind) {
        case K::Sum: {
            std::string out = print(*e.children[0]);
            for (size_t i = 1; i < e.children.size(); ++i)
                out += (e.signs[i] > 0 ? " + " : " - ") + print(*e.children[i]);
            return out;
        }
        case K::Product: {
            std::string out = print(*e.children[0]);
            for (size_t i = 1; i < e.children.size(); ++i) out += "*" + print(*e.children[i]);
            return out;
        }
        case K::Paren: return "(" + print(*e.children[0]) + ")";
        case K::Number: return to_string(e.value);
        case K::EpsPow: return "e^(" + to_string(e.value) + ")";
        case K::IotaPow: return "i^(" + to_string(e.value) + ")";
        case K::XPow: return e.xpow == 1 ? "x" : "x^" + std::to_string(e.xpow);
        default: return e.func + "(" + print(*e.children[0]) + ")";
    }
}

Compiled compile(const NetExpr& e, const IntervalDomain& dom, GridSpec grid) {
    bool has_i = false, has_x = false, has_func = false;
    analyze(e, has_i, has_x, has_func);
    Model m = has_i ? Model::full : Model::simplified;

    if (has_func && has_x)
        throw std::invalid_argument(
            "expressions mixing x and transcendental functions are not supported");

    if (has_func) {
        auto root = std::make_shared<NetExpr>(e);
        return SampledNet(m, [root, m](const GridPoint& p) {
            return eval_node(*root, p, m).approx;
        }, grid);
    }

    GenFunRep f = compile_exact(e, m, dom);
    if (has_x) return f;

    std::vector<Term> raw;
    for (const auto& t : f.terms()) raw.emplace_back(t.poly.coeff(0), t.eps_exp, t.iota_exp);
    return ExactNet::from_terms(m, std::move(raw));
}

}  // namespace colgen
