#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace wordpower::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::chrono::milliseconds elapsed{0};
};

/// tmmorph, shur, stronger, fact, pansiot, square, conj, extend, main,
/// finite-overlaps, infinite, uncount, automatic, beta
[[nodiscard]] const std::vector<std::string_view>& suite_names();

/// Runs one desk-scale check. Throws std::invalid_argument for an unknown name.
[[nodiscard]] SuiteResult run_suite(std::string_view name);

}  // namespace wordpower::verify
