#pragma once

#include <iosfwd>
#include <vector>

#include "tsfrac/timescale.hpp"

namespace tsfrac {

/// Real values aligned one-to-one with the points of a TimeScale. Immutable.
///
/// The masked variant carries a per-point validity flag and exists only so
/// the law checks can represent functions undefined at isolated points
/// (e.g. 1/t on a scale containing 0). Every numerical operator rejects
/// masked inputs; the law checks skip invalid points instead.
class GridFunction {
public:
    GridFunction(TimeScale scale, std::vector<double> values);
    static GridFunction masked(TimeScale scale, std::vector<double> values,
                               std::vector<unsigned char> valid);

    const TimeScale& scale() const { return scale_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    bool is_masked() const { return !valid_.empty(); }
    bool valid(std::size_t i) const { return valid_.empty() || valid_[i] != 0; }

private:
    GridFunction(TimeScale scale, std::vector<double> values,
                 std::vector<unsigned char> valid);
    TimeScale scale_;
    std::vector<double> values_;
    std::vector<unsigned char> valid_;  // empty means all points valid
};

/// Pointwise a*f + b*g on a shared scale; throws ScaleMismatch otherwise.
GridFunction lincomb(double a, const GridFunction& f, double b, const GridFunction& g);

/// Pointwise product / quotient on a shared scale. Mask-aware: invalid points
/// propagate, and quotient marks points with zero divisor invalid.
GridFunction pointwise_mul(const GridFunction& f, const GridFunction& g);
GridFunction pointwise_div(const GridFunction& f, const GridFunction& g);

/// f restricted to the kappa domain (drops the value at the minimum).
GridFunction kappa_restrict(const GridFunction& f);

/// t -> f(rho(t)) on the kappa domain.
GridFunction rho_shift(const GridFunction& f);

/// CSV with header "t,value", one row per scale point, 17 significant digits.
void write_csv(const GridFunction& f, std::ostream& out);

/// Reads a GridFunction aligned to `scale`; the t column must match the
/// scale's points (absolute tolerance 1e-9) in order.
GridFunction read_csv(std::istream& in, const TimeScale& scale);

}  // namespace tsfrac
