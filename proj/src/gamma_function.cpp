#include "tsfrac/gamma_function.hpp"

#include <cmath>

namespace tsfrac {

namespace {

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

double gamma_lanczos(double x) {
    if (x < 0.5) {
        // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
        return kPi / (std::sin(kPi * x) * gamma_lanczos(1.0 - x));
    }
    x -= 1.0;
    double series = kCoeff[0];
    for (int i = 1; i < 9; ++i) series += kCoeff[i] / (x + static_cast<double>(i));
    const double t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * series;
}

}  // namespace tsfrac
