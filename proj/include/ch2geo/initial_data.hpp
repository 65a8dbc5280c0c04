#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "ch2geo/connection.hpp"

namespace ch2geo {

/// Initial-condition presets:
///   zero                 (0, 0)
///   cosmode:m:amp        (amp cos 2 pi m x, 0)
///   pair:m1:a1:m2:a2     (a1 cos 2 pi m1 x, a2 cos 2 pi m2 x)
///   file:<path>          snapshot CSV with header x,u,rho
/// Throws ConfigError naming the offending spec.
VelocityPair make_initial(std::string_view spec, const Grid& grid);

/// Checks the syntax of a preset without building it (file: paths are not opened).
void validate_initial_spec(std::string_view spec);

/// Random trigonometric polynomial with modes 1..max_mode, coefficients
/// N(0, 1) / k^2, plus an N(0, 1) mean. Alias-free under quadratic products
/// when max_mode <= n / 6.
PeriodicField random_band_limited(const Grid& grid, int max_mode, std::mt19937_64& rng);

VelocityPair random_pair(const Grid& grid, int max_mode, std::mt19937_64& rng);

}  // namespace ch2geo
