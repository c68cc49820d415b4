#include "tempus/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace tempus::expr {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr std::array<const char*, 6> kFunctions = {"sin", "cos",  "exp",
                                                   "log", "sqrt", "abs"};

bool known_function(const std::string& name)
{
    for (const char* f : kFunctions)
        if (name == f)
            return true;
    return false;
}

std::shared_ptr<Expr> make(Expr::Kind kind, std::size_t offset,
                           ExprPtr lhs = nullptr, ExprPtr rhs = nullptr)
{
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->offset = offset;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

// Recursive descent over:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' factor)?
//   atom   := number | 't' | 'pi' | ident '(' expr ')' | '(' expr ')'
// Unary minus binds looser than '^', so "-2^2" is -(2^2).
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError(pos_, "an expression");
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < text_.size())
            throw SyntaxError(pos_, "end of input");
        return e;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_char(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool consume_char(char c)
    {
        if (!peek_char(c))
            return false;
        ++pos_;
        return true;
    }

    ExprPtr parse_expr()
    {
        ExprPtr e = parse_term();
        for (;;) {
            std::size_t at = pos_;
            if (consume_char('+'))
                e = make(Expr::Kind::Add, at, e, parse_term());
            else if (consume_char('-'))
                e = make(Expr::Kind::Sub, at, e, parse_term());
            else
                return e;
        }
    }

    ExprPtr parse_term()
    {
        ExprPtr e = parse_factor();
        for (;;) {
            std::size_t at = pos_;
            if (consume_char('*'))
                e = make(Expr::Kind::Mul, at, e, parse_factor());
            else if (consume_char('/'))
                e = make(Expr::Kind::Div, at, e, parse_factor());
            else
                return e;
        }
    }

    ExprPtr parse_factor()
    {
        skip_ws();
        std::size_t at = pos_;
        if (consume_char('-'))
            return make(Expr::Kind::Neg, at, parse_factor());
        ExprPtr base = parse_atom();
        at = pos_;
        if (consume_char('^'))
            return make(Expr::Kind::Pow, at, base, parse_factor());
        return base;
    }

    ExprPtr parse_atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw SyntaxError(pos_, "a number, 't', 'pi', a function call or "
                                    "a parenthesized expression");
        const std::size_t at = pos_;
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!consume_char(')'))
                throw SyntaxError(pos_, "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_ident();
        throw SyntaxError(at, "a number, 't', 'pi', a function call or a "
                              "parenthesized expression");
    }

    ExprPtr parse_number()
    {
        const std::size_t at = pos_;
        // strtod accepts the usual decimal/exponent forms; it would also eat
        // a sign, but parse_factor consumed any leading '-' already.
        const std::string buf(text_.substr(pos_));
        char* end = nullptr;
        const double v = std::strtod(buf.c_str(), &end);
        if (end == buf.c_str())
            throw SyntaxError(at, "a number");
        pos_ += static_cast<std::size_t>(end - buf.c_str());
        auto e = make(Expr::Kind::Number, at);
        e->value = v;
        return e;
    }

    ExprPtr parse_ident()
    {
        const std::size_t at = pos_;
        std::string name;
        while (pos_ < text_.size()
               && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            name += text_[pos_++];

        if (name == "t")
            return make(Expr::Kind::Var, at);
        if (name == "pi")
            return make(Expr::Kind::Pi, at);

        if (!peek_char('('))
            throw SyntaxError(pos_, "'(' after function name '" + name + "'");
        if (!known_function(name))
            throw UnknownFunctionError(at, name);
        ++pos_; // '('
        ExprPtr arg = parse_expr();
        if (!consume_char(')'))
            throw SyntaxError(pos_, "')'");
        auto e = make(Expr::Kind::Call, at, arg);
        e->func = name;
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_integer_value(double v)
{
    return std::isfinite(v) && v == std::floor(v);
}

} // namespace

ExprPtr parse(std::string_view text)
{
    if (text.empty())
        throw SyntaxError(0, "a nonempty expression");
    return Parser(text).run();
}

double evaluate(const Expr& e, double t)
{
    switch (e.kind) {
    case Expr::Kind::Number:
        return e.value;
    case Expr::Kind::Var:
        return t;
    case Expr::Kind::Pi:
        return kPi;
    case Expr::Kind::Neg:
        return -evaluate(*e.lhs, t);
    case Expr::Kind::Add:
        return evaluate(*e.lhs, t) + evaluate(*e.rhs, t);
    case Expr::Kind::Sub:
        return evaluate(*e.lhs, t) - evaluate(*e.rhs, t);
    case Expr::Kind::Mul:
        return evaluate(*e.lhs, t) * evaluate(*e.rhs, t);
    case Expr::Kind::Div: {
        const double num = evaluate(*e.lhs, t);
        const double den = evaluate(*e.rhs, t);
        if (den == 0.0)
            throw EvalError(e.offset, "division by zero");
        return num / den;
    }
    case Expr::Kind::Pow: {
        const double base = evaluate(*e.lhs, t);
        const double ex = evaluate(*e.rhs, t);
        if (base < 0.0 && !is_integer_value(ex))
            throw EvalError(e.offset,
                            "negative base with non-integer exponent");
        if (base == 0.0 && ex < 0.0)
            throw EvalError(e.offset, "zero raised to a negative power");
        const double r = std::pow(base, ex);
        if (!std::isfinite(r))
            throw EvalError(e.offset, "power overflow");
        return r;
    }
    case Expr::Kind::Call: {
        const double x = evaluate(*e.lhs, t);
        if (e.func == "sin")
            return std::sin(x);
        if (e.func == "cos")
            return std::cos(x);
        if (e.func == "exp") {
            const double r = std::exp(x);
            if (!std::isfinite(r))
                throw EvalError(e.offset, "exp overflow");
            return r;
        }
        if (e.func == "log") {
            if (x <= 0.0)
                throw EvalError(e.offset, "log of a non-positive value");
            return std::log(x);
        }
        if (e.func == "sqrt") {
            if (x < 0.0)
                throw EvalError(e.offset, "sqrt of a negative value");
            return std::sqrt(x);
        }
        if (e.func == "abs")
            return std::fabs(x);
        throw EvalError(e.offset, "unknown function " + e.func);
    }
    }
    throw EvalError(e.offset, "malformed expression node");
}

std::string to_string(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Number: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", e.value);
        return buf;
    }
    case Expr::Kind::Var:
        return "t";
    case Expr::Kind::Pi:
        return "pi";
    case Expr::Kind::Neg:
        return "(-" + to_string(*e.lhs) + ")";
    case Expr::Kind::Add:
        return "(" + to_string(*e.lhs) + "+" + to_string(*e.rhs) + ")";
    case Expr::Kind::Sub:
        return "(" + to_string(*e.lhs) + "-" + to_string(*e.rhs) + ")";
    case Expr::Kind::Mul:
        return "(" + to_string(*e.lhs) + "*" + to_string(*e.rhs) + ")";
    case Expr::Kind::Div:
        return "(" + to_string(*e.lhs) + "/" + to_string(*e.rhs) + ")";
    case Expr::Kind::Pow:
        return "(" + to_string(*e.lhs) + "^" + to_string(*e.rhs) + ")";
    case Expr::Kind::Call:
        return e.func + "(" + to_string(*e.lhs) + ")";
    }
    return "?";
}

bool structurally_equal(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case Expr::Kind::Number:
        return a.value == b.value;
    case Expr::Kind::Var:
    case Expr::Kind::Pi:
        return true;
    case Expr::Kind::Call:
        if (a.func != b.func)
            return false;
        [[fallthrough]];
    case Expr::Kind::Neg:
        return structurally_equal(*a.lhs, *b.lhs);
    default:
        return structurally_equal(*a.lhs, *b.lhs)
            && structurally_equal(*a.rhs, *b.rhs);
    }
}

ScaleFunction make_function(const std::string& text)
{
    ExprPtr ast = parse(text);
    return ScaleFunction{[ast](double t) { return evaluate(*ast, t); }, text};
}

} // namespace tempus::expr
