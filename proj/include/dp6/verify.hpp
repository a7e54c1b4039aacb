#pragma once

#include <functional>
#include <string>
#include <vector>

namespace dp6::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // observed values, scales swept, or the failure site
    double wall_ms = 0.0;
};

// quick trims the exhaustive grids to a smoke-test scale; full runs the
// acceptance scale (the grids and bounds stated in the criteria).
enum class Suite { quick, full };

// Runs every criterion in order.  on_result (optional) observes each result
// as soon as it is known, for streaming progress output.
std::vector<CriterionResult> run_suite(
    Suite suite, int threads = 1,
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace dp6::verify
