#pragma once

#include "fcq/exactalg/integer.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcq::cli {

/// Malformed input text (usage-level error).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression tree for `+ - * ^ ( )`, integers, identifiers and calls such
/// as `e(-1)`.
struct Expr {
    enum class Kind { Integer, Identifier, Call, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    Integer value = 0;        // Integer literal
    std::string name;         // Identifier, Call
    long argument = 0;        // Call argument, Pow exponent
    std::vector<std::unique_ptr<Expr>> children;
};

/// Precedence: `^` binds tightest (right operand a signed integer), then
/// unary minus, then `*`, then `+ -`.
std::unique_ptr<Expr> parse_expression(const std::string& text);

/// Identifier names that occur outside calls.
std::set<std::string> identifiers(const Expr& e);

/// Folds the tree with a backend providing constant, identifier, call, add,
/// sub, neg, mul and pow.
template <class Backend>
auto evaluate(const Expr& e, Backend& b) -> decltype(b.constant(Integer(0)))
{
    using K = Expr::Kind;
    switch (e.kind) {
    case K::Integer: return b.constant(e.value);
    case K::Identifier: return b.identifier(e.name);
    case K::Call: return b.call(e.name, e.argument);
    case K::Neg: return b.neg(evaluate(*e.children[0], b));
    case K::Add: return b.add(evaluate(*e.children[0], b), evaluate(*e.children[1], b));
    case K::Sub: return b.sub(evaluate(*e.children[0], b), evaluate(*e.children[1], b));
    case K::Mul: return b.mul(evaluate(*e.children[0], b), evaluate(*e.children[1], b));
    case K::Pow: return b.pow(evaluate(*e.children[0], b), e.argument);
    }
    throw ParseError("malformed expression tree");
}

} // namespace fcq::cli
