#include "tsfrac/fractional.hpp"

#include <cmath>

#include "tsfrac/errors.hpp"
#include "tsfrac/gamma_function.hpp"
#include "tsfrac/nabla.hpp"
#include "tsfrac/numeric.hpp"

namespace tsfrac {

namespace {

void require_plain(const GridFunction& f) {
    if (f.is_masked()) throw MaskedInput();
}

void require_base_is_min(const GridFunction& f, double a) {
    if (f.scale().index_of(a) != 0)
        throw Error("base point must be the scale minimum");
}

}  // namespace

GLWeights gl_weights(double mu, std::size_t count) {
    if (count < 1) throw Error("weight count must be positive");
    GLWeights out;
    out.mu = mu;
    out.w.resize(count);
    out.w[0] = 1.0;
    for (std::size_t r = 1; r < count; ++r)
        out.w[r] = out.w[r - 1] * (static_cast<double>(r) - 1.0 - mu) / static_cast<double>(r);
    return out;
}

GridFunction gl_derivative(const GridFunction& f, double mu, double a) {
    require_plain(f);
    if (!(mu > 0.0)) throw OrderOutOfRange(mu, "mu > 0");
    const TimeScale& ts = f.scale();
    if (!ts.is_uniform()) throw NonUniformScale();
    const std::size_t ia = ts.index_of(a);
    const double h = ts[1] - ts[0];
    const double h_mu = pow_real(h, mu);

    const GLWeights weights = gl_weights(mu, ts.size() - ia);
    std::vector<double> out(ts.size() - ia);
    for (std::size_t i = ia; i < ts.size(); ++i) {
        double acc = 0.0;
        for (std::size_t r = 0; r <= i - ia; ++r) acc += weights.w[r] * f[i - r];
        out[i - ia] = acc / h_mu;
    }
    return GridFunction(ts.tail(ia), std::move(out));
}

GridFunction rl_integral(const GridFunction& f, double mu, double a, Kernel kernel) {
    require_plain(f);
    if (!(mu > 0.0)) throw OrderOutOfRange(mu, "mu > 0");
    const TimeScale& ts = f.scale();
    const std::size_t ia = ts.index_of(a);
    const bool regularized = kernel == Kernel::Regularized;
    const double scale_c = mu == 1.0 ? 1.0 : 1.0 / gamma_lanczos(mu);
    const double expo = mu - 1.0;

    std::vector<double> out(ts.size() - ia);
    for (std::size_t i = ia; i < ts.size(); ++i) {
        const double t = ts[i];
        double acc = 0.0;
        for (std::size_t k = ia + 1; k <= i; ++k) {
            double base;
            if (regularized) {
                base = t - ts[k - 1];
            } else {
                if (k == i && mu < 1.0) continue;  // pole of (t - s)^{mu-1}
                base = t - ts[k];
            }
            acc += pow_real(base, expo) * (f[k] * (ts[k] - ts[k - 1]));
        }
        out[i - ia] = scale_c * acc;
    }
    return GridFunction(ts.tail(ia), std::move(out));
}

GridFunction rl_derivative(const GridFunction& f, double mu, double a) {
    require_plain(f);
    if (!(mu > 0.0 && mu <= 1.0)) throw OrderOutOfRange(mu, "0 < mu <= 1");
    require_base_is_min(f, a);
    if (mu == 1.0) return nabla_derivative(f);  // I^0 is the identity
    return nabla_derivative(rl_integral(f, 1.0 - mu, a, Kernel::Regularized));
}

GridFunction caputo_derivative(const GridFunction& f, double mu, double a) {
    require_plain(f);
    if (!(mu > 0.0 && mu <= 1.0)) throw OrderOutOfRange(mu, "0 < mu <= 1");
    require_base_is_min(f, a);
    if (mu == 1.0) return nabla_derivative(f);

    const TimeScale& ts = f.scale();
    const GridFunction fnab = nabla_derivative(f);  // lives on kappa points
    const double scale_c = 1.0 / gamma_lanczos(1.0 - mu);

    // sum over every kappa point s <= t; nu(s) comes from the original scale
    std::vector<double> out(ts.size() - 1);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const double t = ts[i];
        double acc = 0.0;
        for (std::size_t k = 1; k <= i; ++k)
            acc += pow_real(t - ts[k - 1], -mu) * (fnab[k - 1] * (ts[k] - ts[k - 1]));
        out[i - 1] = scale_c * acc;
    }
    return GridFunction(ts.kappa_domain(), std::move(out));
}

GridFunction fractional_operator(FracOp op, const GridFunction& f, double mu, double a,
                                 Kernel kernel) {
    if (mu == 0.0) throw OrderOutOfRange(mu, "mu != 0");
    if (op == FracOp::Derivative)
        return mu > 0.0 ? rl_derivative(f, mu, a)
                        : rl_integral(f, -mu, a, kernel);
    return mu > 0.0 ? rl_integral(f, mu, a, kernel)
                    : rl_derivative(f, -mu, a);
}

}  // namespace tsfrac
