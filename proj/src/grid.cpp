#include "ch2geo/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "ch2geo/errors.hpp"

namespace ch2geo {

namespace detail {

// FFTW planning is not thread-safe, executing with the new-array interface is.
class FftPlan {
public:
    explicit FftPlan(int n) : n_(n) {
        std::vector<double> real(n);
        std::vector<std::complex<double>> spec(n / 2 + 1);
        auto* c = reinterpret_cast<fftw_complex*>(spec.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        r2c_ = fftw_plan_dft_r2c_1d(n, real.data(), c, flags);
        c2r_ = fftw_plan_dft_c2r_1d(n, c, real.data(), flags | FFTW_DESTROY_INPUT);
    }
    ~FftPlan() {
        fftw_destroy_plan(r2c_);
        fftw_destroy_plan(c2r_);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void forward(const double* in, std::complex<double>* out) const {
        // r2c leaves its input untouched, the cast only satisfies the C signature.
        fftw_execute_dft_r2c(r2c_, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
    }
    void backward(std::complex<double>* in, double* out) const {
        fftw_execute_dft_c2r(c2r_, reinterpret_cast<fftw_complex*>(in), out);
    }
    int size() const { return n_; }

private:
    int n_;
    fftw_plan r2c_;
    fftw_plan c2r_;
};

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::shared_ptr<const FftPlan> plan_for(int n) {
    std::lock_guard lock(planner_mutex());
    static std::map<int, std::shared_ptr<const FftPlan>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const FftPlan>(n);
    return slot;
}

}  // namespace
}  // namespace detail

Grid::Grid(int n) : n_(n) {
    if (n < 16) throw InvalidArgument("grid size must be at least 16, got " + std::to_string(n));
    if (n % 2 != 0) throw InvalidArgument("grid size must be even, got " + std::to_string(n));
    plan_ = detail::plan_for(n);
}

std::vector<double> Grid::points() const {
    std::vector<double> x(n_);
    for (int j = 0; j < n_; ++j) x[j] = point(j);
    return x;
}

void Grid::forward(std::span<const double> values, std::span<std::complex<double>> coeffs) const {
    plan_->forward(values.data(), coeffs.data());
    const double scale = 1.0 / n_;
    for (auto& c : coeffs) c *= scale;
}

void Grid::backward(std::span<const std::complex<double>> coeffs, std::span<double> values) const {
    std::vector<std::complex<double>> work(coeffs.begin(), coeffs.end());
    work.front().imag(0.0);
    work.back().imag(0.0);
    plan_->backward(work.data(), values.data());
}

void require_same_grid(const Grid& a, const Grid& b) {
    if (!(a == b)) throw GridMismatch(a.size(), b.size());
}

}  // namespace ch2geo
