#include "tsfrac/grid_function.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include "tsfrac/errors.hpp"

namespace tsfrac {

namespace {

void require_same_scale(const GridFunction& f, const GridFunction& g) {
    if (!f.scale().same_points(g.scale())) throw ScaleMismatch();
}

}  // namespace

GridFunction::GridFunction(TimeScale scale, std::vector<double> values)
    : GridFunction(std::move(scale), std::move(values), {}) {
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw Error("grid value at index " + std::to_string(i) + " is not finite");
}

GridFunction::GridFunction(TimeScale scale, std::vector<double> values,
                           std::vector<unsigned char> valid)
    : scale_(std::move(scale)), values_(std::move(values)), valid_(std::move(valid)) {
    if (values_.size() != scale_.size())
        throw Error("value count " + std::to_string(values_.size()) +
                    " does not match scale size " + std::to_string(scale_.size()));
    if (!valid_.empty() && valid_.size() != values_.size())
        throw Error("mask length does not match value count");
}

GridFunction GridFunction::masked(TimeScale scale, std::vector<double> values,
                                  std::vector<unsigned char> valid) {
    if (valid.empty()) valid.assign(values.size(), 1);
    GridFunction f(std::move(scale), std::move(values), std::move(valid));
    for (std::size_t i = 0; i < f.values_.size(); ++i)
        if (f.valid(i) && !std::isfinite(f.values_[i]))
            throw Error("grid value at index " + std::to_string(i) + " is not finite");
    return f;
}

GridFunction lincomb(double a, const GridFunction& f, double b, const GridFunction& g) {
    require_same_scale(f, g);
    if (f.is_masked() || g.is_masked()) throw MaskedInput();
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = a * f[i] + b * g[i];
    return GridFunction(f.scale(), std::move(out));
}

GridFunction pointwise_mul(const GridFunction& f, const GridFunction& g) {
    require_same_scale(f, g);
    std::vector<double> out(f.size());
    std::vector<unsigned char> valid(f.size(), 1);
    bool any_masked = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.valid(i) && g.valid(i)) {
            out[i] = f[i] * g[i];
        } else {
            out[i] = 0.0;
            valid[i] = 0;
            any_masked = true;
        }
    }
    if (!any_masked) return GridFunction(f.scale(), std::move(out));
    return GridFunction::masked(f.scale(), std::move(out), std::move(valid));
}

GridFunction pointwise_div(const GridFunction& f, const GridFunction& g) {
    require_same_scale(f, g);
    std::vector<double> out(f.size());
    std::vector<unsigned char> valid(f.size(), 1);
    bool any_masked = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.valid(i) && g.valid(i) && g[i] != 0.0) {
            out[i] = f[i] / g[i];
        } else {
            out[i] = 0.0;
            valid[i] = 0;
            any_masked = true;
        }
    }
    if (!any_masked) return GridFunction(f.scale(), std::move(out));
    return GridFunction::masked(f.scale(), std::move(out), std::move(valid));
}

GridFunction kappa_restrict(const GridFunction& f) {
    const TimeScale kd = f.scale().kappa_domain();
    std::vector<double> out(f.values().begin() + 1, f.values().end());
    if (!f.is_masked()) return GridFunction(kd, std::move(out));
    std::vector<unsigned char> valid(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) valid[i] = f.valid(i + 1) ? 1 : 0;
    return GridFunction::masked(kd, std::move(out), std::move(valid));
}

GridFunction rho_shift(const GridFunction& f) {
    const TimeScale kd = f.scale().kappa_domain();
    std::vector<double> out(f.values().begin(), f.values().end() - 1);
    if (!f.is_masked()) return GridFunction(kd, std::move(out));
    std::vector<unsigned char> valid(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) valid[i] = f.valid(i) ? 1 : 0;
    return GridFunction::masked(kd, std::move(out), std::move(valid));
}

void write_csv(const GridFunction& f, std::ostream& out) {
    if (f.is_masked()) throw MaskedInput();
    out << "t,value\n";
    char buf[80];
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.scale()[i], f[i]);
        out << buf;
    }
}

GridFunction read_csv(std::istream& in, const TimeScale& scale) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,value") throw Error("CSV header must be exactly 't,value'");
    std::vector<double> values;
    values.reserve(scale.size());
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw Error("CSV row " + std::to_string(row + 2) + " has no comma");
        double t = 0.0, v = 0.0;
        try {
            std::size_t used = 0;
            t = std::stod(line.substr(0, comma), &used);
            if (used != comma) throw std::invalid_argument(line);
            std::string vs = line.substr(comma + 1);
            v = std::stod(vs, &used);
            if (used != vs.size()) throw std::invalid_argument(line);
        } catch (const std::exception&) {
            throw Error("CSV row " + std::to_string(row + 2) + " is not numeric: " + line);
        }
        if (row >= scale.size())
            throw Error("CSV has more rows than the scale has points");
        if (std::abs(t - scale[row]) > 1e-9)
            throw Error("CSV row " + std::to_string(row + 2) + ": t = " + std::to_string(t) +
                        " does not match scale point " + std::to_string(scale[row]));
        values.push_back(v);
        ++row;
    }
    if (row != scale.size())
        throw Error("CSV has " + std::to_string(row) + " rows but the scale has " +
                    std::to_string(scale.size()) + " points");
    return GridFunction(scale, std::move(values));
}

}  // namespace tsfrac
