#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kstab::verify {

struct Options {
    std::uint64_t seed = 42;
    /// Smaller corpora, g <= 6 and k <= 3.
    bool quick = false;
};

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Where a frozen expected value comes from.
enum class Origin { literature, oracle, direct };

struct ExpectedValue {
    std::string_view key;
    std::string_view value;
    Origin origin;
};

/// The frozen table every criterion compares against.
const std::vector<ExpectedValue>& expected_values();
/// Throws std::out_of_range for an unknown key.
std::string_view expected(std::string_view key);

/// Runs the ten acceptance criteria in order.
std::vector<CriterionResult> run_all(const Options& options);

/// Deterministic scorecard; runtimes are included only when asked for.
nlohmann::json scorecard(const Options& options, const std::vector<CriterionResult>& results,
                         bool with_timings = false);

} // namespace kstab::verify
