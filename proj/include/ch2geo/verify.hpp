#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ch2geo::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 20240611;
};

/// Runs the twelve acceptance criteria in order. `on_result` (if set) is
/// called as each criterion finishes. An exception inside a criterion marks
/// it failed with the message as detail; the remaining criteria still run.
std::vector<CriterionResult> run_all(const Options& options = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// One line per criterion: `[PASS] 3 bound reproduction (0.01 s): ...`.
std::string format(const CriterionResult& result);

}  // namespace ch2geo::verify
