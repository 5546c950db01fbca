#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "colgen/exact_net.hpp"
#include "colgen/genfun.hpp"
#include "colgen/sampled.hpp"

namespace colgen {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                             std::to_string(col_)),
          line(line_),
          col(col_) {}
};

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := rational | 'e'^'('rational')' | 'i'^'('rational')'
//         | 'x' ['^' nat] | func '(' expr ')' | '(' expr ')'
// func   := sin | cos | exp | log
struct NetExpr {
    enum class Kind { Sum, Product, Number, EpsPow, IotaPow, XPow, Func, Paren };

    Kind kind;
    std::vector<std::shared_ptr<const NetExpr>> children;
    std::vector<int> signs;  // Sum only; signs[0] == +1
    Rational value;          // Number value or eps/iota exponent
    unsigned xpow = 1;
    std::string func;

    friend bool operator==(const NetExpr& a, const NetExpr& b);
};

using ExprPtr = std::shared_ptr<const NetExpr>;

ExprPtr parse(const std::string& input);
std::string print(const NetExpr& e);

// What an expression denotes: exact scalar net, exact generalized function,
// or (when transcendental functions appear) a sampled scalar net.
using Compiled = std::variant<ExactNet, GenFunRep, SampledNet>;

// Function-valued expressions need a domain; scalar ones ignore it.
Compiled compile(const NetExpr& e, const IntervalDomain& dom, GridSpec grid = {});

inline Compiled compile(const std::string& input, const IntervalDomain& dom,
                        GridSpec grid = {}) {
    return compile(*parse(input), dom, grid);
}

}  // namespace colgen
