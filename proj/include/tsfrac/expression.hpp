#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "tsfrac/grid_function.hpp"

namespace tsfrac {

/// Arithmetic expression in one variable t: constants, +, -, *, /, unary
/// minus and integer powers. Parsed from text, evaluated deterministically
/// (same AST and t always give the same value, node by node).
class Expression {
public:
    struct Node;

    /// Grammar:
    ///   expr   := term { ("+"|"-") term }
    ///   term   := factor { ("*"|"/") factor }
    ///   factor := "-" factor | base [ "^" integer ]
    ///   base   := number | "t" | "(" expr ")"
    ///   number := digits [ "." digits ]        (no scientific notation)
    ///   integer := [ "-" ] digits
    /// Throws ParseError carrying the byte offset and the expected tokens.
    static Expression parse(std::string_view src);

    /// Throws EvalError(t) when the value is undefined at t (division by
    /// zero, zero to a negative power) or overflows.
    double eval(double t) const;

    /// Minimal-parentheses text that parses back to an identical AST.
    std::string pretty() const;

    bool identical(const Expression& other) const;

    /// Root of the AST; Node stays an opaque type outside the parser.
    const Node* root() const { return root_.get(); }

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

inline Expression parse_expression(std::string_view src) { return Expression::parse(src); }

/// Shape of an expression the power-rule oracles cover: (t - k)^n, or its
/// reciprocal 1/(t - k)^n. Bare t is (t - 0)^1; t^-n counts as reciprocal.
struct PowerForm {
    double k = 0.0;
    long n = 1;
    bool reciprocal = false;
};

/// Recognizes t, t^n, (t - k)^n, (t + c)^n, 1/(t - k)^n and t^-n.
std::optional<PowerForm> match_power_form(const Expression& e);

/// values[i] = e(points[i]); throws EvalError at the first undefined point.
GridFunction sample(const Expression& e, const TimeScale& ts);

/// Like sample, but marks undefined points invalid instead of throwing.
GridFunction sample_masked(const Expression& e, const TimeScale& ts);

}  // namespace tsfrac
