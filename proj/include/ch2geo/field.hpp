#pragma once

#include <complex>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "ch2geo/grid.hpp"

namespace ch2geo {

/// Real-valued function on the unit circle sampled on a uniform grid.
///
/// Values are the primary representation; spectral coefficients are computed
/// on demand and are therefore always consistent with the samples.
class PeriodicField {
public:
    explicit PeriodicField(Grid grid);  // zero field
    PeriodicField(Grid grid, std::vector<double> values);

    static PeriodicField constant(const Grid& grid, double c);
    static PeriodicField sample(const Grid& grid, const std::function<double(double)>& f);
    /// Builds a field from half-spectrum coefficients (see Grid::forward).
    static PeriodicField from_spectrum(const Grid& grid, std::span<const std::complex<double>> coeffs);

    const Grid& grid() const noexcept { return grid_; }
    int size() const noexcept { return grid_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](int j) const noexcept { return values_[j]; }

    std::vector<std::complex<double>> spectrum() const;

    double mean() const;
    double min() const;
    double max() const;
    double max_abs() const;
    bool all_finite() const;

    /// Truncated Fourier series evaluated at an arbitrary point.
    double evaluate(double x) const;

    PeriodicField& operator+=(const PeriodicField& other);
    PeriodicField& operator-=(const PeriodicField& other);
    PeriodicField& operator*=(double s);

    friend PeriodicField operator+(PeriodicField a, const PeriodicField& b) { return a += b; }
    friend PeriodicField operator-(PeriodicField a, const PeriodicField& b) { return a -= b; }
    friend PeriodicField operator*(PeriodicField a, double s) { return a *= s; }
    friend PeriodicField operator*(double s, PeriodicField a) { return a *= s; }
    friend PeriodicField operator-(PeriodicField a) { return a *= -1.0; }
    /// Pointwise product in physical space (not dealiased).
    friend PeriodicField operator*(const PeriodicField& a, const PeriodicField& b);
    /// Pointwise quotient; the caller guarantees b has no zeros.
    friend PeriodicField operator/(const PeriodicField& a, const PeriodicField& b);

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Max-norm distance between two fields on the same grid.
double max_abs_diff(const PeriodicField& a, const PeriodicField& b);

// Spectral operators. All are pure functions of their inputs.

/// d/dx via the multiplier 2 pi i k; the Nyquist mode is dropped.
PeriodicField derivative(const PeriodicField& field);
/// Helmholtz operator A = 1 - d^2/dx^2, multiplier 1 + (2 pi k)^2.
PeriodicField apply_A(const PeriodicField& field);
/// Inverse Helmholtz operator, multiplier 1 / (1 + (2 pi k)^2).
PeriodicField apply_Ainv(const PeriodicField& field);
/// Zeroes every mode above Grid::dealias_cutoff().
PeriodicField dealias(const PeriodicField& field);
/// Dealiased pointwise product.
PeriodicField product(const PeriodicField& a, const PeriodicField& b);

/// Integral over [0, 1) of f * g (trapezoid rule, exact for band-limited products).
double inner_L2(const PeriodicField& f, const PeriodicField& g);
/// Integral of f g + f_x g_x.
double inner_H1(const PeriodicField& f, const PeriodicField& g);

/// Truncated Fourier series of a field, for evaluation off the grid.
class FourierSeries {
public:
    explicit FourierSeries(const PeriodicField& field);

    double value(double x) const;
    /// Value and x-derivative of the series at x.
    std::pair<double, double> value_and_slope(double x) const;

private:
    std::vector<std::complex<double>> coeffs_;
    int nyquist_;
};

/// Evaluates the truncated series of `field` at each point of `xs`.
std::vector<double> evaluate_at(const PeriodicField& field, std::span<const double> xs);
/// Same as evaluate_at, also returning the derivative of the series.
void evaluate_with_derivative(const PeriodicField& field, std::span<const double> xs,
                              std::span<double> values, std::span<double> slopes);

}  // namespace ch2geo
