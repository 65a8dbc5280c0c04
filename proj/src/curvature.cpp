#include "ch2geo/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ch2geo/errors.hpp"

namespace ch2geo {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

PeriodicField cosine_mode(const Grid& grid, int mode) {
    return PeriodicField::sample(grid, [mode](double x) { return std::cos(two_pi * mode * x); });
}

}  // namespace

double curvature_S(const VelocityPair& u, const VelocityPair& v) {
    const auto guv = gamma_2ch(u, v);
    const auto guu = gamma_2ch(u, u);
    const auto gvv = gamma_2ch(v, v);
    return metric(guv, guv) - metric(guu, gvv);
}

double gram_determinant(const VelocityPair& u, const VelocityPair& v) {
    const double uv = metric(u, v);
    return metric(u, u) * metric(v, v) - uv * uv;
}

double sectional(const VelocityPair& u, const VelocityPair& v) {
    const double gram = gram_determinant(u, v);
    if (!(gram > 1e-12)) {
        std::ostringstream msg;
        msg << "degenerate plane: Gram determinant " << gram << " <= 1e-12";
        throw DegeneratePlane(msg.str());
    }
    return curvature_S(u, v) / gram;
}

void CosineDirectionPair::validate() const {
    if (k2 < 1 || l2 < 1) throw InvalidArgument("cosine modes must be positive: " + label());
    if (first_components_zero) {
        if (k2 == l2) throw InvalidArgument("u == v for " + label());
        return;
    }
    if (k1 < 1 || l1 < 1) throw InvalidArgument("cosine modes must be positive: " + label());
    if (k1 == l1 && k2 == l2) throw InvalidArgument("u == v for " + label());
}

VelocityPair CosineDirectionPair::u(const Grid& grid) const {
    return {first_components_zero ? PeriodicField(grid) : cosine_mode(grid, k1), cosine_mode(grid, k2)};
}

VelocityPair CosineDirectionPair::v(const Grid& grid) const {
    return {first_components_zero ? PeriodicField(grid) : cosine_mode(grid, l1), cosine_mode(grid, l2)};
}

std::string CosineDirectionPair::label() const {
    std::ostringstream s;
    if (first_components_zero)
        s << "u=(0,cos " << k2 << "*2pi x) v=(0,cos " << l2 << "*2pi x)";
    else
        s << "u=(cos " << k1 << "*2pi x,cos " << k2 << "*2pi x) v=(cos " << l1 << "*2pi x,cos " << l2
          << "*2pi x)";
    return s.str();
}

double closedform_S_CH(int k, int l) {
    if (k == l) throw InvalidArgument("closed-form S_CH requires distinct modes");
    const double kw = two_pi * k;
    const double lw = two_pi * l;
    const double d = kw - lw;
    const double s = kw + lw;
    const double half = 0.5 * kw * lw;
    return 0.125 * ((1.0 + half) * (1.0 + half) / (1.0 + d * d) * d * d +
                    (1.0 - half) * (1.0 - half) / (1.0 + s * s) * s * s);
}

CurvatureTerms closedform_I(const CosineDirectionPair& dir) {
    // Integer modes; the first slots vanish identically in the first-slot-zero family.
    const int mk1 = dir.first_components_zero ? 0 : dir.k1;
    const int ml1 = dir.first_components_zero ? 0 : dir.l1;
    const int mk2 = dir.k2;
    const int ml2 = dir.l2;
    const double k1 = two_pi * mk1;
    const double l1 = two_pi * ml1;
    const double k2 = two_pi * mk2;
    const double l2 = two_pi * ml2;

    // Resonance selectors shared by I3 and I4.
    const double sum_hits =
        delta(mk1 + ml1, mk2 - ml2) + delta(mk1 + ml1, ml2 - mk2) + delta(mk1 + ml1, mk2 + ml2);
    const double diff_hits = delta(mk1 - ml1, mk2 - ml2) + delta(mk1 - ml1, ml2 - mk2) +
                             delta(mk1 - ml1, mk2 + ml2) + delta(ml1 - mk1, mk2 + ml2);

    CurvatureTerms t;
    const double dm = k2 - l2;
    const double sm = k2 + l2;
    t.I1 = (dm * dm / (1.0 + dm * dm) + sm * sm / (1.0 + sm * sm)) / 32.0;
    t.I2 = -0.125 * k2 * k2 / (1.0 + 4.0 * k2 * k2) * delta(mk2, ml2);

    const double s1 = k1 + l1;
    const double d1 = k1 - l1;
    t.I3 = 0.125 * (1.0 - 0.5 * k1 * l1) * s1 * s1 / (1.0 + s1 * s1) * sum_hits +
           0.125 * (1.0 + 0.5 * k1 * l1) * d1 * d1 / (1.0 + d1 * d1) * diff_hits -
           0.25 * k1 * k1 * (1.0 - 0.5 * k1 * k1) / (1.0 + 4.0 * k1 * k1) * delta(mk1, ml2) -
           0.25 * l1 * l1 * (1.0 - 0.5 * l1 * l1) / (1.0 + 4.0 * l1 * l1) * delta(mk2, ml1);

    t.I4 = k1 * k1 / 16.0 * (1.0 - 0.5 * delta(mk1, ml2)) + l1 * l1 / 16.0 * (1.0 - 0.5 * delta(ml1, mk2)) -
           k1 * l1 / 16.0 * (diff_hits - sum_hits);
    return t;
}

double closedform_S(const CosineDirectionPair& dir) {
    dir.validate();
    const auto terms = closedform_I(dir);
    if (dir.first_components_zero) return terms.I1 + terms.I2;
    const double s_ch = dir.k1 == dir.l1 ? 0.0 : closedform_S_CH(dir.k1, dir.l1);
    return s_ch + terms.sum();
}

int scan_grid_size(int max_mode) { return std::max(16, 16 * max_mode); }

ScanResult positivity_scan(int max_mode, int grid_n) {
    if (max_mode < 2) throw InvalidArgument("max_mode must be at least 2");
    if (grid_n == 0) grid_n = scan_grid_size(max_mode);
    if (grid_n < scan_grid_size(max_mode))
        throw InvalidArgument("grid too coarse for the requested modes (need n >= 16 * max_mode)");
    const Grid grid(grid_n);

    ScanResult result;
    result.grid_n = grid_n;
    auto evaluate_row = [&](const CosineDirectionPair& dir) {
        ScanRow row;
        row.dir = dir;
        const auto u = dir.u(grid);
        const auto v = dir.v(grid);
        row.s_numeric = curvature_S(u, v);
        row.s_closed = closedform_S(dir);
        row.gram = gram_determinant(u, v);
        row.sec = sectional(u, v);
        return row;
    };

    // Full two-component family, unordered pairs.
    std::vector<std::pair<int, int>> directions;
    for (int a = 1; a <= max_mode; ++a)
        for (int b = 1; b <= max_mode; ++b) directions.emplace_back(a, b);
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i; j < directions.size(); ++j) {
            CosineDirectionPair dir{directions[i].first, directions[i].second, directions[j].first,
                                    directions[j].second, false};
            if (i == j) {
                result.skipped.push_back(dir.label());
                continue;
            }
            auto row = evaluate_row(dir);
            if (!(row.s_numeric > 0.0))
                throw Error("positivity violated: S = " + std::to_string(row.s_numeric) + " for " +
                            dir.label());
            result.rows.push_back(row);
        }
    }

    // First-slot-zero family.
    for (int a = 1; a <= max_mode; ++a) {
        for (int b = a; b <= max_mode; ++b) {
            CosineDirectionPair dir{0, a, 0, b, true};
            if (a == b) {
                result.skipped.push_back(dir.label());
                continue;
            }
            auto row = evaluate_row(dir);
            if (!(row.sec >= 0.125 - 1e-12))
                throw Error("sectional curvature bound violated: Sec = " + std::to_string(row.sec) +
                            " for " + dir.label());
            result.rows.push_back(row);
        }
    }
    return result;
}

NegativeCurvatureSearch search_negative_curvature(int grid_n, int max_mode, int trials, std::uint64_t seed) {
    const Grid grid(grid_n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    auto random_direction = [&] {
        std::vector<double> a(max_mode + 1);
        std::vector<double> b(max_mode + 1);
        for (int k = 1; k <= max_mode; ++k) {
            a[k] = normal(rng);
            b[k] = normal(rng);
        }
        auto u = PeriodicField::sample(grid, [&](double x) {
            double s = 0.0;
            for (int k = 1; k <= max_mode; ++k)
                s += a[k] * std::cos(two_pi * k * x) + b[k] * std::sin(two_pi * k * x);
            return s;
        });
        return VelocityPair(std::move(u));
    };

    NegativeCurvatureSearch best{std::numeric_limits<double>::infinity(), VelocityPair::zero(grid),
                                 VelocityPair::zero(grid), 0};
    for (int trial = 0; trial < trials; ++trial) {
        auto u = random_direction();
        auto v = random_direction();
        if (gram_determinant(u, v) <= 1e-12) continue;
        const double sec = sectional(u, v);
        ++best.trials;
        if (sec < best.min_sec) {
            best.min_sec = sec;
            best.u = std::move(u);
            best.v = std::move(v);
        }
    }
    return best;
}

}  // namespace ch2geo
