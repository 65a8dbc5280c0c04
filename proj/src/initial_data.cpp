#include "ch2geo/initial_data.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "ch2geo/errors.hpp"
#include "ch2geo/io.hpp"

namespace ch2geo {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
    throw ConfigError("invalid --ic '" + std::string(spec) + "': " + why);
}

int parse_mode(std::string_view spec, std::string_view text) {
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) bad_spec(spec, "mode '" + std::string(text) + "' is not an integer");
    if (value < 0) bad_spec(spec, "mode must be non-negative");
    return value;
}

double parse_amplitude(std::string_view spec, std::string_view text) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value))
        bad_spec(spec, "amplitude '" + std::string(text) + "' is not a finite number");
    return value;
}

PeriodicField cosine(const Grid& grid, int mode, double amp) {
    return PeriodicField::sample(grid, [=](double x) { return amp * std::cos(two_pi * mode * x); });
}

}  // namespace

void validate_initial_spec(std::string_view spec) {
    const auto parts = split(spec, ':');
    const auto kind = parts.front();
    if (kind == "zero") {
        if (parts.size() != 1) bad_spec(spec, "zero takes no parameters");
    } else if (kind == "cosmode") {
        if (parts.size() != 3) bad_spec(spec, "expected cosmode:m:amp");
        parse_mode(spec, parts[1]);
        parse_amplitude(spec, parts[2]);
    } else if (kind == "pair") {
        if (parts.size() != 5) bad_spec(spec, "expected pair:m1:a1:m2:a2");
        parse_mode(spec, parts[1]);
        parse_amplitude(spec, parts[2]);
        parse_mode(spec, parts[3]);
        parse_amplitude(spec, parts[4]);
    } else if (kind == "file") {
        if (spec.size() <= 5) bad_spec(spec, "expected file:<path>");
    } else {
        bad_spec(spec, "unknown preset (expected zero, cosmode, pair or file)");
    }
}

VelocityPair make_initial(std::string_view spec, const Grid& grid) {
    validate_initial_spec(spec);
    const auto parts = split(spec, ':');
    const auto kind = parts.front();
    if (kind == "zero") return VelocityPair::zero(grid);
    if (kind == "cosmode")
        return VelocityPair(cosine(grid, parse_mode(spec, parts[1]), parse_amplitude(spec, parts[2])));
    if (kind == "pair")
        return {cosine(grid, parse_mode(spec, parts[1]), parse_amplitude(spec, parts[2])),
                cosine(grid, parse_mode(spec, parts[3]), parse_amplitude(spec, parts[4]))};

    auto state = io::read_snapshot_csv(std::string(spec.substr(5)));
    if (state.grid().size() != grid.size())
        throw ConfigError("snapshot '" + std::string(spec.substr(5)) + "' has " +
                          std::to_string(state.grid().size()) + " points but --n is " +
                          std::to_string(grid.size()));
    return state;
}

PeriodicField random_band_limited(const Grid& grid, int max_mode, std::mt19937_64& rng) {
    if (max_mode < 1 || max_mode > grid.dealias_cutoff())
        throw InvalidArgument("random field modes must lie in [1, dealias cutoff]");
    std::normal_distribution<double> normal(0.0, 1.0);
    const double mean = normal(rng);
    std::vector<double> a(max_mode + 1);
    std::vector<double> b(max_mode + 1);
    for (int k = 1; k <= max_mode; ++k) {
        a[k] = normal(rng) / (k * k);
        b[k] = normal(rng) / (k * k);
    }
    return PeriodicField::sample(grid, [&](double x) {
        double s = mean;
        for (int k = 1; k <= max_mode; ++k) s += a[k] * std::cos(two_pi * k * x) + b[k] * std::sin(two_pi * k * x);
        return s;
    });
}

VelocityPair random_pair(const Grid& grid, int max_mode, std::mt19937_64& rng) {
    auto u = random_band_limited(grid, max_mode, rng);
    auto rho = random_band_limited(grid, max_mode, rng);
    return {std::move(u), std::move(rho)};
}

}  // namespace ch2geo
