#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dsl/session.hpp"

namespace wb::suite {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<dsl::CheckResult(int order)> run;
};

/// The acceptance battery, one entry per criterion, in order.
const std::vector<Criterion>& criteria();

/// Runs every criterion at twist order `order` (criterion 10 uses at least 3).
/// A criterion that exceeds its time budget fails.
dsl::Report paper_suite(int order = 3, bool timings = false);

} // namespace wb::suite
