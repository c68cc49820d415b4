#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "tempus/delta.hpp"
#include "tempus/errors.hpp"

namespace tempus::expr {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// AST over numeric literals, the variable t, pi, unary minus, the binary
// operators + - * / ^ and the calls sin cos exp log sqrt abs.
struct Expr {
    enum class Kind { Number, Var, Pi, Neg, Add, Sub, Mul, Div, Pow, Call };

    Kind kind;
    double value = 0;      // Number
    std::string func;      // Call
    ExprPtr lhs, rhs;      // Neg/Call use lhs only
    std::size_t offset = 0; // byte offset in the source text
};

ExprPtr parse(std::string_view text);

double evaluate(const Expr& e, double t);

// Fully parenthesized round-trippable rendering.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// parse + wrap as a ScaleFunction labelled with the source text.
ScaleFunction make_function(const std::string& text);

} // namespace tempus::expr
