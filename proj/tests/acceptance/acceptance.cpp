#include <iostream>

#include "ch2geo/verify.hpp"

int main() {
    bool all = true;
    ch2geo::verify::run_all({}, [&](const ch2geo::verify::CriterionResult& r) {
        std::cout << ch2geo::verify::format(r) << std::endl;
        all = all && r.passed;
    });
    std::cout << (all ? "all acceptance criteria passed" : "some acceptance criteria failed") << std::endl;
    return all ? 0 : 1;
}
