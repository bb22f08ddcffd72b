#include "tsfrac/nabla.hpp"

#include "tsfrac/errors.hpp"
#include "tsfrac/numeric.hpp"

namespace tsfrac {

namespace {

void require_plain(const GridFunction& f) {
    if (f.is_masked()) throw MaskedInput();
}

GridFunction difference_quotient(const GridFunction& f, double mu) {
    require_plain(f);
    if (f.size() < 2) throw DegenerateScale("nabla derivative needs at least 2 points");
    const TimeScale& ts = f.scale();
    std::vector<double> out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
        const double nu = ts[i] - ts[i - 1];
        out[i - 1] = (f[i] - f[i - 1]) / pow_real(nu, mu);
    }
    return GridFunction(ts.kappa_domain(), std::move(out));
}

}  // namespace

GridFunction nabla_derivative(const GridFunction& f) {
    return difference_quotient(f, 1.0);
}

GridFunction nabla_derivative_n(const GridFunction& f, unsigned n) {
    if (n == 0) throw Error("derivative order must be positive");
    if (f.size() < static_cast<std::size_t>(n) + 1)
        throw DegenerateScale("scale has too few points for an order-" +
                              std::to_string(n) + " derivative");
    GridFunction g = nabla_derivative(f);
    for (unsigned k = 1; k < n; ++k) g = nabla_derivative(g);
    return g;
}

double nabla_integral(const GridFunction& f, double a, double t) {
    require_plain(f);
    const TimeScale& ts = f.scale();
    const std::size_t ia = ts.index_of(a);
    const std::size_t it = ts.index_of(t);
    if (it < ia) throw ReversedBounds(a, t);
    double acc = 0.0;
    for (std::size_t k = ia + 1; k <= it; ++k) acc += f[k] * (ts[k] - ts[k - 1]);
    return acc;
}

GridFunction frac_nabla_derivative(const GridFunction& f, FractionalOrder mu) {
    if (!(mu.mu > 0.0 && mu.mu <= 1.0)) throw OrderOutOfRange(mu.mu, "0 < mu <= 1");
    return difference_quotient(f, mu.mu);
}

double backward_reconstruction(const GridFunction& f, FractionalOrder mu, double t) {
    if (!(mu.mu > 0.0 && mu.mu <= 1.0)) throw OrderOutOfRange(mu.mu, "0 < mu <= 1");
    require_plain(f);
    const TimeScale& ts = f.scale();
    const std::size_t i = ts.index_of(t);
    if (i == 0) throw OutsideKappaDomain(t);
    const double nu_pow = pow_real(ts[i] - ts[i - 1], mu.mu);
    const double deriv = (f[i] - f[i - 1]) / nu_pow;
    return f[i] - deriv * nu_pow;
}

}  // namespace tsfrac
