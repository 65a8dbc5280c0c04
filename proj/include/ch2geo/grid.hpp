#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace ch2geo {

namespace detail {
class FftPlan;
}

/// Uniform grid of n points on the unit circle [0, 1).
///
/// Mode k carries the angular frequency 2*pi*k. The grid owns a shared
/// real-to-complex FFT plan; copies are cheap and compare equal when they
/// have the same number of points.
class Grid {
public:
    /// Throws InvalidArgument unless n is even and n >= 16.
    explicit Grid(int n);

    int size() const noexcept { return n_; }
    double spacing() const noexcept { return 1.0 / n_; }
    double point(int j) const noexcept { return static_cast<double>(j) / n_; }
    std::vector<double> points() const;

    /// Number of stored half-spectrum coefficients, n/2 + 1.
    int spectral_size() const noexcept { return n_ / 2 + 1; }
    /// Highest mode kept by the 2/3 dealiasing rule.
    int dealias_cutoff() const noexcept { return (n_ - 1) / 3; }

    /// Half-spectrum coefficients c_k, k = 0..n/2, normalized so that
    /// f(x) = sum_k c_k exp(2 pi i k x) over the full symmetric spectrum.
    void forward(std::span<const double> values, std::span<std::complex<double>> coeffs) const;
    /// Inverse of forward(); the imaginary parts of c_0 and c_{n/2} are ignored.
    void backward(std::span<const std::complex<double>> coeffs, std::span<double> values) const;

    friend bool operator==(const Grid& a, const Grid& b) noexcept { return a.n_ == b.n_; }

private:
    int n_;
    std::shared_ptr<const detail::FftPlan> plan_;
};

/// Throws GridMismatch if the grids differ.
void require_same_grid(const Grid& a, const Grid& b);

}  // namespace ch2geo
