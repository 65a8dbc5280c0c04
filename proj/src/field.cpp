#include "ch2geo/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ch2geo/errors.hpp"

namespace ch2geo {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

template <class Multiplier>
PeriodicField apply_multiplier(const PeriodicField& field, Multiplier&& mult) {
    auto c = field.spectrum();
    for (int k = 0; k < static_cast<int>(c.size()); ++k) c[k] *= mult(k);
    return PeriodicField::from_spectrum(field.grid(), c);
}

}  // namespace

PeriodicField::PeriodicField(Grid grid) : grid_(std::move(grid)), values_(grid_.size(), 0.0) {}

PeriodicField::PeriodicField(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size())
        throw InvalidArgument("field has " + std::to_string(values_.size()) + " samples, grid has " +
                              std::to_string(grid_.size()));
}

PeriodicField PeriodicField::constant(const Grid& grid, double c) {
    return PeriodicField(grid, std::vector<double>(grid.size(), c));
}

PeriodicField PeriodicField::sample(const Grid& grid, const std::function<double(double)>& f) {
    std::vector<double> v(grid.size());
    for (int j = 0; j < grid.size(); ++j) v[j] = f(grid.point(j));
    return PeriodicField(grid, std::move(v));
}

PeriodicField PeriodicField::from_spectrum(const Grid& grid,
                                           std::span<const std::complex<double>> coeffs) {
    if (static_cast<int>(coeffs.size()) != grid.spectral_size())
        throw InvalidArgument("spectrum size does not match grid");
    std::vector<double> v(grid.size());
    grid.backward(coeffs, v);
    return PeriodicField(grid, std::move(v));
}

std::vector<std::complex<double>> PeriodicField::spectrum() const {
    std::vector<std::complex<double>> c(grid_.spectral_size());
    grid_.forward(values_, c);
    return c;
}

double PeriodicField::mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / size();
}

double PeriodicField::min() const { return *std::min_element(values_.begin(), values_.end()); }
double PeriodicField::max() const { return *std::max_element(values_.begin(), values_.end()); }

double PeriodicField::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool PeriodicField::all_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double PeriodicField::evaluate(double x) const {
    const double xs[1] = {x};
    return evaluate_at(*this, xs).front();
}

PeriodicField& PeriodicField::operator+=(const PeriodicField& other) {
    require_same_grid(grid_, other.grid_);
    for (int j = 0; j < size(); ++j) values_[j] += other.values_[j];
    return *this;
}

PeriodicField& PeriodicField::operator-=(const PeriodicField& other) {
    require_same_grid(grid_, other.grid_);
    for (int j = 0; j < size(); ++j) values_[j] -= other.values_[j];
    return *this;
}

PeriodicField& PeriodicField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

PeriodicField operator*(const PeriodicField& a, const PeriodicField& b) {
    require_same_grid(a.grid_, b.grid_);
    std::vector<double> v(a.size());
    for (int j = 0; j < a.size(); ++j) v[j] = a.values_[j] * b.values_[j];
    return PeriodicField(a.grid_, std::move(v));
}

PeriodicField operator/(const PeriodicField& a, const PeriodicField& b) {
    require_same_grid(a.grid_, b.grid_);
    std::vector<double> v(a.size());
    for (int j = 0; j < a.size(); ++j) v[j] = a.values_[j] / b.values_[j];
    return PeriodicField(a.grid_, std::move(v));
}

double max_abs_diff(const PeriodicField& a, const PeriodicField& b) {
    require_same_grid(a.grid(), b.grid());
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

PeriodicField derivative(const PeriodicField& field) {
    const int nyquist = field.size() / 2;
    return apply_multiplier(field, [nyquist](int k) {
        return k == nyquist ? std::complex<double>(0.0) : std::complex<double>(0.0, two_pi * k);
    });
}

PeriodicField apply_A(const PeriodicField& field) {
    return apply_multiplier(field, [](int k) {
        const double w = two_pi * k;
        return std::complex<double>(1.0 + w * w);
    });
}

PeriodicField apply_Ainv(const PeriodicField& field) {
    return apply_multiplier(field, [](int k) {
        const double w = two_pi * k;
        return std::complex<double>(1.0 / (1.0 + w * w));
    });
}

PeriodicField dealias(const PeriodicField& field) {
    const int cutoff = field.grid().dealias_cutoff();
    return apply_multiplier(field,
                            [cutoff](int k) { return std::complex<double>(k <= cutoff ? 1.0 : 0.0); });
}

PeriodicField product(const PeriodicField& a, const PeriodicField& b) { return dealias(a * b); }

double inner_L2(const PeriodicField& f, const PeriodicField& g) {
    require_same_grid(f.grid(), g.grid());
    double s = 0.0;
    for (int j = 0; j < f.size(); ++j) s += f[j] * g[j];
    return s / f.size();
}

double inner_H1(const PeriodicField& f, const PeriodicField& g) {
    return inner_L2(f, g) + inner_L2(derivative(f), derivative(g));
}

FourierSeries::FourierSeries(const PeriodicField& field)
    : coeffs_(field.spectrum()), nyquist_(field.size() / 2) {}

std::pair<double, double> FourierSeries::value_and_slope(double x) const {
    const std::complex<double> step = std::polar(1.0, two_pi * x);
    std::complex<double> z = step;
    double sum = 0.0;
    double dsum = 0.0;
    for (int k = 1; k < nyquist_; ++k) {
        const std::complex<double> t = coeffs_[k] * z;
        sum += t.real();
        dsum -= k * t.imag();
        z *= step;
    }
    const double phase = two_pi * nyquist_ * x;
    const double c_nyq = coeffs_[nyquist_].real();
    return {coeffs_[0].real() + 2.0 * sum + c_nyq * std::cos(phase),
            2.0 * two_pi * dsum - c_nyq * two_pi * nyquist_ * std::sin(phase)};
}

double FourierSeries::value(double x) const {
    const std::complex<double> step = std::polar(1.0, two_pi * x);
    std::complex<double> z = step;
    double sum = 0.0;
    for (int k = 1; k < nyquist_; ++k) {
        sum += (coeffs_[k] * z).real();
        z *= step;
    }
    return coeffs_[0].real() + 2.0 * sum + coeffs_[nyquist_].real() * std::cos(two_pi * nyquist_ * x);
}

void evaluate_with_derivative(const PeriodicField& field, std::span<const double> xs,
                              std::span<double> values, std::span<double> slopes) {
    const FourierSeries series(field);
    for (std::size_t p = 0; p < xs.size(); ++p) {
        const auto [v, d] = series.value_and_slope(xs[p]);
        values[p] = v;
        slopes[p] = d;
    }
}

std::vector<double> evaluate_at(const PeriodicField& field, std::span<const double> xs) {
    const FourierSeries series(field);
    std::vector<double> out(xs.size());
    for (std::size_t p = 0; p < xs.size(); ++p) out[p] = series.value(xs[p]);
    return out;
}

}  // namespace ch2geo
