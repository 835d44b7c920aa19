#pragma once

// Config-driven evaluation: every (variant, case) cell of the configured
// classes, plus per-class aggregates, assembled into one deterministic Report.

#include <string>
#include <vector>

#include "fuzzrp/harness/config.hpp"
#include "fuzzrp/harness/variant.hpp"
#include "fuzzrp/reductive.hpp"

namespace fuzzrp {

struct ReportRow {
    MethodVariant variant;
    Direction direction = Direction::Fmp;
    int case_id = 1;
    DiscreteFuzzySet premise;
    DiscreteFuzzySet conclusion;
    DiscreteFuzzySet target;  // the vector the rpcf was scored against
    double rpcf = 0.0;

    bool operator==(const ReportRow&) const = default;
};

struct AggregateRow {
    MethodVariant variant;
    int class_id = 1;
    double fmp = 0.0;
    double fmt = 0.0;
    double overall = 0.0;

    bool operator==(const AggregateRow&) const = default;
};

struct Report {
    ExperimentConfig config;
    // Roster order, forward cases before backward, ladder order within.
    // Cases shared by both configured classes appear once.
    std::vector<ReportRow> rows;
    // Roster order, then class order.
    std::vector<AggregateRow> aggregates;
    // Human-readable notes emitted when a computed cell disagrees with a
    // golden fixture beyond config.tolerance (default rule only).
    std::vector<std::string> annotations;

    bool operator==(const Report&) const = default;
};

// Runs every cell. Deterministic: equal configs produce equal reports.
// A TargetMode::Best config scores each cell against both candidate targets
// and keeps the better one (ties prefer the hedged target).
Report run_suite(const ExperimentConfig& config);

}  // namespace fuzzrp
