#pragma once

#include <cmath>

namespace tsfrac {

/// Power of a nonnegative base, evaluated as exp(expo * ln base).
///
/// The fast paths are contractual, not an optimization: expo == 1 must return
/// the base bit-for-bit so that every mu = 1 code path reduces exactly to its
/// integer-order counterpart, and expo == 0 must absorb the 0^0 arising from
/// the unregularized kernel at s = t when mu = 1.
inline double pow_real(double base, double expo) {
    if (expo == 0.0) return 1.0;
    if (expo == 1.0) return base;
    if (base == 1.0) return 1.0;
    if (base == 0.0) return 0.0;  // reached only with expo > 0 on valid input
    return std::exp(expo * std::log(base));
}

/// Distance in units in the last place; test helper for the 4-ulp contracts.
inline double ulp_distance(double a, double b) {
    if (a == b) return 0.0;
    double dir = b > a ? 1.0 : -1.0;
    double steps = 0.0;
    double x = a;
    while (steps <= 64.0) {
        x = std::nextafter(x, dir * HUGE_VAL);
        steps += 1.0;
        if (x == b) return steps;
    }
    return HUGE_VAL;
}

}  // namespace tsfrac
