#pragma once

#include "tsfrac/grid_function.hpp"

namespace tsfrac {

/// Order of a fractional operation. The admissible range depends on the
/// operator: (0,1] for pointwise fractional derivatives, any positive value
/// for fractional integrals; each operator validates its own range.
struct FractionalOrder {
    double mu;
    FractionalOrder(double m) : mu(m) {}  // NOLINT: implicit by design
};

/// First-order nabla derivative (f(t) - f(rho(t))) / nu(t), defined on the
/// kappa domain of f's scale.
GridFunction nabla_derivative(const GridFunction& f);

/// n-fold nabla derivative; the domain loses one point per application.
GridFunction nabla_derivative_n(const GridFunction& f, unsigned n);

/// Nabla integral: sum of f(s) nu(s) over scale points s with a < s <= t.
/// Zero when a = t; throws ReversedBounds when t < a. On real_sample scales
/// this is the backward rectangle rule for the Riemann integral.
double nabla_integral(const GridFunction& f, double a, double t);

/// Pointwise fractional nabla derivative of order mu in (0,1]:
/// (f(t) - f(rho(t))) / nu(t)^mu on the kappa domain. nu^mu is evaluated as
/// exp(mu ln nu) with fast paths making mu = 1 coincide bitwise with
/// nabla_derivative.
GridFunction frac_nabla_derivative(const GridFunction& f, FractionalOrder mu);

/// f(t) - f^(mu)(t) nu(t)^mu, which recovers f(rho(t)) to within 4 ulps.
double backward_reconstruction(const GridFunction& f, FractionalOrder mu, double t);

}  // namespace tsfrac
