#pragma once

#include <cmath>
#include <functional>
#include <numbers>

#include "ch2geo/field.hpp"

namespace test {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline ch2geo::PeriodicField sampled(int n, const std::function<double(double)>& f) {
    return ch2geo::PeriodicField::sample(ch2geo::Grid(n), f);
}

/// Sixth-order central finite difference of a smooth periodic function.
inline double fd_derivative(const std::function<double(double)>& f, double x, double h = 1e-3) {
    return (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) - 9 * f(x + 2 * h) + f(x + 3 * h)) /
           (60 * h);
}

/// Composite midpoint quadrature over [0, 1): spectrally accurate for smooth periodic integrands.
inline double integrate(const std::function<double(double)>& f, int points = 4096) {
    double s = 0.0;
    for (int j = 0; j < points; ++j) s += f((j + 0.5) / points);
    return s / points;
}

}  // namespace test
