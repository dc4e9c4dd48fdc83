#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nok/exec.hpp"

namespace nok {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // what ran, and the first failure if any
    double wall_ms = 0;
};

inline constexpr int kCriteria = 11;

/// Runs acceptance criterion `id` (1..kCriteria) at its pinned caps.
[[nodiscard]] CriterionResult run_criterion(int id, Exec exec = Exec::Parallel);

/// All criteria in order; `on_result` (if set) sees each result as it finishes.
std::vector<CriterionResult> run_acceptance(Exec exec = Exec::Parallel,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace nok
