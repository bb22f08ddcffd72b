#pragma once

#include <cstddef>
#include <vector>

#include "tsfrac/grid_function.hpp"

namespace tsfrac {

/// Generalized binomial weights w[r] = (-1)^r C(mu, r), built from the
/// multiplicative recurrence w[r] = w[r-1] (r - 1 - mu) / r with w[0] = 1.
/// For nonnegative integer mu the row terminates: w[r] = 0 for r > mu.
struct GLWeights {
    double mu = 0.0;
    std::vector<double> w;
};

GLWeights gl_weights(double mu, std::size_t count);

/// Kernel of the fractional integral. Regularized is (t - rho(s))^{mu-1},
/// the form that stays finite at s = t on any finite scale and is the
/// default everywhere; Unregularized is (t - s)^{mu-1}, kept only for
/// comparison, with its pole term at s = t omitted when mu < 1.
enum class Kernel { Regularized, Unregularized };

/// Grunwald-Letnikov derivative on a uniform scale, anchored at a:
/// sum_{r=0..n} w[r] f(t - r h) / h^mu with n h = t - a. Output on the
/// sub-scale [a, max]; the value at t = a is f(a) / h^mu. With mu = 1 this
/// is bitwise the backward difference at every t > a.
GridFunction gl_derivative(const GridFunction& f, double mu, double a);

/// Fractional integral of order mu > 0:
/// (1/Gamma(mu)) sum_{a < s <= t} kernel(t,s)^{mu-1} f(s) nu(s).
/// Output on the sub-scale [a, max]; the value at t = a is 0. With mu = 1
/// both kernels reduce bitwise to the plain nabla integral.
GridFunction rl_integral(const GridFunction& f, double mu, double a,
                         Kernel kernel = Kernel::Regularized);

/// Riemann-Liouville derivative of order mu in (0,1]: the composition
/// nabla of rl_integral(f, 1-mu) with the regularized kernel. Requires
/// a = min(scale). mu = 1 reduces to the plain nabla derivative (I^0 = id).
GridFunction rl_derivative(const GridFunction& f, double mu, double a);

/// Caputo derivative of order mu in (0,1]: the fractional integral of
/// order 1-mu applied to the nabla derivative of f. Requires a = min(scale);
/// lives on the kappa domain. Annihilates constants exactly.
GridFunction caputo_derivative(const GridFunction& f, double mu, double a);

/// Negative-order aliasing: a derivative of order mu < 0 is the fractional
/// integral of order -mu, and an integral of order mu < 0 is the fractional
/// derivative of order -mu. One dispatcher with an operator tag; mu = 0 is
/// rejected.
enum class FracOp { Derivative, Integral };
GridFunction fractional_operator(FracOp op, const GridFunction& f, double mu, double a,
                                 Kernel kernel = Kernel::Regularized);

}  // namespace tsfrac
