#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsfrac {

/// Base class of every domain error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PointNotInScale : public Error {
public:
    explicit PointNotInScale(double t)
        : Error("point " + std::to_string(t) + " is not a scale point"), point(t) {}
    double point;
};

class OutsideKappaDomain : public Error {
public:
    explicit OutsideKappaDomain(double t)
        : Error("point " + std::to_string(t) + " is outside the kappa domain"), point(t) {}
    double point;
};

class DegenerateScale : public Error {
public:
    explicit DegenerateScale(const std::string& what) : Error(what) {}
};

class ScaleMismatch : public Error {
public:
    ScaleMismatch() : Error("grid functions live on different scales") {}
};

class OrderOutOfRange : public Error {
public:
    OrderOutOfRange(double mu, const std::string& required)
        : Error("order " + std::to_string(mu) + " out of range (" + required + ")"),
          order(mu) {}
    double order;
};

class NonUniformScale : public Error {
public:
    NonUniformScale() : Error("operation requires a uniform scale") {}
};

class ReversedBounds : public Error {
public:
    ReversedBounds(double a, double t)
        : Error("integration bounds reversed: t = " + std::to_string(t) +
                " < a = " + std::to_string(a)) {}
};

class PoleOnScale : public Error {
public:
    explicit PoleOnScale(double t)
        : Error("pole at scale point " + std::to_string(t)), point(t) {}
    double point;
};

/// Thrown by operators handed a masked grid function; only the law checks
/// evaluate masked inputs (they skip the excluded points instead).
class MaskedInput : public Error {
public:
    MaskedInput() : Error("operator does not accept masked grid functions") {}
};

class EvalError : public Error {
public:
    explicit EvalError(double t)
        : Error("expression undefined at t = " + std::to_string(t)), point(t) {}
    double point;
};

class ParseError : public Error {
public:
    ParseError(std::size_t off, std::vector<std::string> exp)
        : Error(describe(off, exp)), offset(off), expected(std::move(exp)) {}

    /// Byte offset into the source where parsing failed.
    std::size_t offset;
    /// Tokens that would have been accepted at that offset.
    std::vector<std::string> expected;

private:
    static std::string describe(std::size_t off, const std::vector<std::string>& exp) {
        std::string msg = "parse error at byte " + std::to_string(off) + ": expected ";
        for (std::size_t i = 0; i < exp.size(); ++i) {
            if (i) msg += exp.size() == 2 ? " or " : (i + 1 == exp.size() ? ", or " : ", ");
            msg += exp[i];
        }
        return msg;
    }
};

}  // namespace tsfrac
