#include "tsfrac/timescale.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tsfrac/errors.hpp"

namespace tsfrac {

namespace {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void validate_ascending(const std::vector<double>& pts) {
    if (pts.size() < 2) throw DegenerateScale("a time scale needs at least 2 points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!std::isfinite(pts[i]))
            throw Error("scale point " + std::to_string(i) + " is not finite");
        if (i > 0 && !(pts[i - 1] < pts[i]))
            throw Error("scale points must be strictly ascending (violated at index " +
                        std::to_string(i) + ")");
    }
}

}  // namespace

TimeScale TimeScale::make(std::vector<double> pts, ScaleFamily fam, double step,
                          std::string desc, bool allow_single) {
    if (!allow_single) validate_ascending(pts);
    auto d = std::make_shared<Data>();
    d->points = std::move(pts);
    d->family = fam;
    d->step = step;
    d->descriptor = std::move(desc);
    return TimeScale(std::move(d));
}

TimeScale TimeScale::from_points(std::vector<double> pts) {
    validate_ascending(pts);
    std::string desc = "points:";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) desc += ',';
        desc += fmt_num(pts[i]);
    }
    return make(std::move(pts), ScaleFamily::Explicit, 0.0, std::move(desc), false);
}

TimeScale TimeScale::integer_range(long a, long b) {
    if (a >= b) throw Error("integer range needs a < b");
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(b - a + 1));
    for (long i = a; i <= b; ++i) pts.push_back(static_cast<double>(i));
    std::string desc = "integers:" + std::to_string(a) + ":" + std::to_string(b);
    return make(std::move(pts), ScaleFamily::IntegerRange, 1.0, std::move(desc), false);
}

TimeScale TimeScale::uniform_step(double h, double a, double b) {
    if (!(h > 0.0)) throw Error("step must be positive");
    if (!(a < b)) throw Error("uniform step range needs a < b");
    const double span = (b - a) / h;
    const auto count = static_cast<long>(std::floor(span + 1e-9));
    if (count < 1) throw Error("uniform step range holds fewer than one step");
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(count + 1));
    for (long i = 0; i <= count; ++i) pts.push_back(a + static_cast<double>(i) * h);
    std::string desc = "step:" + fmt_num(h) + ":" + fmt_num(a) + ":" + fmt_num(b);
    TimeScale ts = make(std::move(pts), ScaleFamily::UniformStep, h, std::move(desc), false);
    if (!ts.is_uniform()) throw NonUniformScale();
    return ts;
}

TimeScale TimeScale::real_sample(double a, double b, std::size_t n) {
    if (!(a < b)) throw Error("sample range needs a < b");
    if (n < 1) throw Error("sample needs at least one subinterval");
    const double h = (b - a) / static_cast<double>(n);
    std::vector<double> pts;
    pts.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        pts.push_back(a + static_cast<double>(i) * h);
    pts.back() = b;  // guard the right endpoint against accumulation drift
    std::string desc =
        "sample:" + fmt_num(a) + ":" + fmt_num(b) + ":" + std::to_string(n);
    return make(std::move(pts), ScaleFamily::RealSample, h, std::move(desc), false);
}

TimeScale TimeScale::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open scale file: " + path);
    std::vector<double> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t last = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(first, last - first + 1);
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            pts.push_back(v);
        } catch (const std::exception&) {
            throw Error(path + ":" + std::to_string(lineno) + ": not a number: " + tok);
        }
    }
    validate_ascending(pts);
    return make(std::move(pts), ScaleFamily::Explicit, 0.0, "file:" + path, false);
}

std::size_t TimeScale::index_of(double t) const {
    const auto& p = data_->points;
    auto it = std::lower_bound(p.begin(), p.end(), t);
    if (it == p.end() || *it != t) throw PointNotInScale(t);
    return static_cast<std::size_t>(it - p.begin());
}

std::optional<std::size_t> TimeScale::find(double t, double tol) const {
    const auto& p = data_->points;
    auto it = std::lower_bound(p.begin(), p.end(), t);
    std::size_t best = p.size();
    double best_err = tol;
    if (it != p.end() && std::abs(*it - t) <= best_err) {
        best = static_cast<std::size_t>(it - p.begin());
        best_err = std::abs(*it - t);
    }
    if (it != p.begin() && std::abs(*(it - 1) - t) <= best_err) {
        best = static_cast<std::size_t>(it - p.begin()) - 1;
    }
    if (best == p.size()) return std::nullopt;
    return best;
}

double TimeScale::rho_at(std::size_t i) const {
    return data_->points[i == 0 ? 0 : i - 1];
}

double TimeScale::sigma_at(std::size_t i) const {
    const auto& p = data_->points;
    return p[i + 1 < p.size() ? i + 1 : p.size() - 1];
}

double TimeScale::nu_at(std::size_t i) const {
    const auto& p = data_->points;
    if (i == 0) throw OutsideKappaDomain(p[0]);
    return p[i] - p[i - 1];
}

double TimeScale::rho(double t) const { return rho_at(index_of(t)); }
double TimeScale::sigma(double t) const { return sigma_at(index_of(t)); }
double TimeScale::nu(double t) const { return nu_at(index_of(t)); }

PointClass TimeScale::point_class(std::size_t i) const {
    PointClass c;
    c.left = SideClass::Scattered;
    c.right = SideClass::Scattered;
    c.left_boundary = (i == 0);
    c.right_boundary = (i + 1 == size());
    c.dense_intent = (data_->family == ScaleFamily::RealSample);
    return c;
}

TimeScale TimeScale::kappa_domain() const {
    if (size() < 2)
        throw DegenerateScale("kappa domain would be empty");
    return tail(1);
}

TimeScale TimeScale::tail(std::size_t from) const {
    if (from >= size()) throw DegenerateScale("tail past the end of the scale");
    if (from == 0) return *this;
    const auto& p = data_->points;
    std::vector<double> pts(p.begin() + static_cast<long>(from), p.end());
    ScaleFamily fam = data_->family;
    double step = data_->step;
    std::string desc;
    switch (fam) {
        case ScaleFamily::IntegerRange:
            desc = "integers:" + std::to_string(static_cast<long>(pts.front())) + ":" +
                   std::to_string(static_cast<long>(pts.back()));
            break;
        case ScaleFamily::UniformStep:
        case ScaleFamily::RealSample:
            // a refined sample loses its (a,b,N) identity once truncated
            fam = ScaleFamily::UniformStep;
            desc = "step:" + fmt_num(step) + ":" + fmt_num(pts.front()) + ":" +
                   fmt_num(pts.back());
            break;
        case ScaleFamily::Explicit: {
            desc = "points:";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (i) desc += ',';
                desc += fmt_num(pts[i]);
            }
            break;
        }
    }
    return make(std::move(pts), fam, step, std::move(desc), /*allow_single=*/true);
}

bool TimeScale::is_uniform(double rel_tol) const {
    const auto& p = data_->points;
    if (p.size() < 2) return true;
    const double h = p[1] - p[0];
    for (std::size_t i = 2; i < p.size(); ++i) {
        const double d = p[i] - p[i - 1];
        if (std::abs(d - h) > rel_tol * std::max(std::abs(h), std::abs(d))) return false;
    }
    return true;
}

bool TimeScale::same_points(const TimeScale& other) const {
    if (data_ == other.data_) return true;
    return data_->points == other.data_->points;
}

TimeScale parse_scale_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);

    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            std::size_t pos = s.find(sep, start);
            out.push_back(s.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return out;
    };
    auto num = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error("bad number in scale spec: '" + s + "'");
        }
    };
    auto integer = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used, 10);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw Error("bad integer in scale spec: '" + s + "'");
        }
    };

    if (kind == "integers") {
        auto f = split(rest, ':');
        if (f.size() != 2) throw Error("usage: integers:a:b");
        return TimeScale::integer_range(integer(f[0]), integer(f[1]));
    }
    if (kind == "step") {
        auto f = split(rest, ':');
        if (f.size() != 3) throw Error("usage: step:h:a:b");
        return TimeScale::uniform_step(num(f[0]), num(f[1]), num(f[2]));
    }
    if (kind == "sample") {
        auto f = split(rest, ':');
        if (f.size() != 3) throw Error("usage: sample:a:b:N");
        long n = integer(f[2]);
        if (n < 1) throw Error("sample:a:b:N needs N >= 1");
        return TimeScale::real_sample(num(f[0]), num(f[1]), static_cast<std::size_t>(n));
    }
    if (kind == "file") {
        if (rest.empty()) throw Error("usage: file:PATH");
        return TimeScale::from_file(rest);
    }
    if (kind == "points") {
        auto f = split(rest, ',');
        std::vector<double> pts;
        pts.reserve(f.size());
        for (const auto& s : f) pts.push_back(num(s));
        return TimeScale::from_points(std::move(pts));
    }
    throw Error("unknown scale spec '" + spec +
                "' (expected integers:, step:, sample:, file:, or points:)");
}

}  // namespace tsfrac
