#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tsfrac {

enum class ScaleFamily { Explicit, IntegerRange, UniformStep, RealSample };

enum class SideClass { Dense, Scattered };

/// Left/right classification of a scale point. Every point of a finite scale
/// is scattered; the boundary points clamp (rho(min) = min, sigma(max) = max)
/// and are tagged so. dense_intent marks real_sample grids, whose points
/// stand in for left-dense points of the continuum they sample.
struct PointClass {
    SideClass left = SideClass::Scattered;
    SideClass right = SideClass::Scattered;
    bool left_boundary = false;
    bool right_boundary = false;
    bool dense_intent = false;
};

/// A finite time scale: a strictly ascending set of real points plus family
/// metadata. Immutable after construction; copies share the point storage.
class TimeScale {
public:
    /// Strictly ascending explicit points; at least 2. Descending or
    /// duplicated input is rejected, never repaired.
    static TimeScale from_points(std::vector<double> pts);

    /// Integers a, a+1, ..., b (requires a < b).
    static TimeScale integer_range(long a, long b);

    /// a, a+h, ..., up to b (requires h > 0 and at least one full step).
    static TimeScale uniform_step(double h, double a, double b);

    /// n+1 equally spaced points on [a, b]; the finite stand-in for the
    /// continuous scale, refined by raising n.
    static TimeScale real_sample(double a, double b, std::size_t n);

    /// Text file: one decimal number per line, '#' starts a comment line.
    static TimeScale from_file(const std::string& path);

    std::size_t size() const { return data_->points.size(); }
    const std::vector<double>& points() const { return data_->points; }
    double operator[](std::size_t i) const { return data_->points[i]; }
    double min() const { return data_->points.front(); }
    double max() const { return data_->points.back(); }

    ScaleFamily family() const { return data_->family; }
    /// Nominal step for IntegerRange / UniformStep / RealSample families.
    double family_step() const { return data_->step; }
    /// Canonical constructor-spec text, used in reports and law descriptors.
    const std::string& descriptor() const { return data_->descriptor; }

    /// Exact membership; throws PointNotInScale.
    std::size_t index_of(double t) const;
    /// Tolerant lookup for CLI-level point requests (absolute tolerance).
    std::optional<std::size_t> find(double t, double tol = 1e-9) const;

    // Jump operators and graininess, point-valued and index-valued forms.
    double rho(double t) const;
    double sigma(double t) const;
    double nu(double t) const;  // throws OutsideKappaDomain at the minimum
    double rho_at(std::size_t i) const;
    double sigma_at(std::size_t i) const;
    double nu_at(std::size_t i) const;  // requires i >= 1

    PointClass point_class(std::size_t i) const;

    /// The scale with its minimum removed; iterating yields T^{kappa^n}.
    /// Throws DegenerateScale when no point would remain.
    TimeScale kappa_domain() const;

    /// Sub-scale from index `from` to the end (used by operators anchored at
    /// an interior base point).
    TimeScale tail(std::size_t from) const;

    bool is_uniform(double rel_tol = 1e-12) const;
    bool same_points(const TimeScale& other) const;

private:
    struct Data {
        std::vector<double> points;
        ScaleFamily family = ScaleFamily::Explicit;
        double step = 0.0;
        std::string descriptor;
    };
    explicit TimeScale(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    static TimeScale make(std::vector<double> pts, ScaleFamily fam, double step,
                          std::string desc, bool allow_single);
    std::shared_ptr<const Data> data_;
};

/// Parses a CLI scale spec: integers:a:b, step:h:a:b, sample:a:b:N,
/// file:PATH, or points:v1,v2,...
TimeScale parse_scale_spec(const std::string& spec);

}  // namespace tsfrac
