#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ch2geo/connection.hpp"

namespace ch2geo {

/// Unnormalized sectional curvature of the 2CH metric at the identity:
/// S(u, v) = <Gamma(u, v), Gamma(u, v)> - <Gamma(u, u), Gamma(v, v)>.
double curvature_S(const VelocityPair& u, const VelocityPair& v);

/// <u, u><v, v> - <u, v>^2 in the 2CH metric.
double gram_determinant(const VelocityPair& u, const VelocityPair& v);

/// S(u, v) / gram_determinant(u, v). Throws DegeneratePlane when the Gram
/// determinant is at most 1e-12.
double sectional(const VelocityPair& u, const VelocityPair& v);

/// Pair of cosine directions u = (cos k1 x, cos k2 x), v = (cos l1 x, cos l2 x)
/// with wavenumbers 2 pi m for positive integer modes m. With
/// `first_components_zero` the first slots are dropped: u = (0, cos k2 x),
/// v = (0, cos l2 x), and k1, l1 are ignored.
struct CosineDirectionPair {
    int k1 = 1;
    int k2 = 1;
    int l1 = 1;
    int l2 = 1;
    bool first_components_zero = false;

    /// Throws InvalidArgument for non-positive modes or u == v.
    void validate() const;
    VelocityPair u(const Grid& grid) const;
    VelocityPair v(const Grid& grid) const;
    std::string label() const;
};

/// CH curvature of (cos k x, cos l x) for distinct modes k != l:
/// (1/8)[(1 + kl/2)^2 (k - l)^2 / (1 + (k - l)^2) + (1 - kl/2)^2 (k + l)^2 / (1 + (k + l)^2)].
/// Arguments are integer modes; the wavenumbers are 2 pi k, 2 pi l.
double closedform_S_CH(int k, int l);

struct CurvatureTerms {
    double I1 = 0.0;
    double I2 = 0.0;
    double I3 = 0.0;
    double I4 = 0.0;

    double sum() const { return I1 + I2 + I3 + I4; }
};

/// The four density-coupling integrals for cosine directions in closed form.
/// Every Kronecker delta is an integer comparison of mode numbers.
CurvatureTerms closedform_I(const CosineDirectionPair& dir);

/// S_CH(k1, l1) + I1 + I2 + I3 + I4. When k1 == l1 the first slots coincide
/// and the CH term is S_CH(w, w) = 0.
double closedform_S(const CosineDirectionPair& dir);

struct ScanRow {
    CosineDirectionPair dir;
    double s_numeric = 0.0;
    double s_closed = 0.0;
    double sec = 0.0;
    double gram = 0.0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    /// Labels of tuples skipped because u == v.
    std::vector<std::string> skipped;
    int grid_n = 0;
};

/// Enumerates unordered pairs {u, v}, u != v, of cosine directions with modes
/// 1..max_mode (both the full two-component family and the first-slot-zero
/// family), computing numeric and closed-form S, Sec and the Gram determinant
/// on a grid of n >= 16 max_mode points. Throws Error naming the offending
/// tuple if S <= 0 in the full family or Sec < 1/8 - 1e-12 in the
/// first-slot-zero family.
ScanResult positivity_scan(int max_mode, int grid_n = 0);

/// Smallest grid size used for cosine tuples up to max_mode.
int scan_grid_size(int max_mode);

struct NegativeCurvatureSearch {
    double min_sec = 0.0;
    VelocityPair u;
    VelocityPair v;
    int trials = 0;
};

/// Random search over trigonometric directions (random sine and cosine
/// coefficients of modes 1..max_mode in the first slot) for the most negative
/// sectional curvature. Reported, not asserted.
NegativeCurvatureSearch search_negative_curvature(int grid_n, int max_mode, int trials, std::uint64_t seed);

}  // namespace ch2geo
