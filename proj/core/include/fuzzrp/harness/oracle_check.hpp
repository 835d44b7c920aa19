#pragma once

// Independent audit of the production pipeline against the golden fixtures.
// The checker recomputes every fixture cell with its own naive loops (it
// shares nothing with inference.cpp beyond the scalar implies/tnorm calls)
// and classifies each cell:
//
//   MatchesPrinted    printed == recomputed == production, within tolerance
//   SourceErratum     production == recomputed, but the printed value differs
//                     (the source's slip, not ours)
//   ImplementationBug production != recomputed — the only fatal label
//
// `check` exits nonzero iff at least one ImplementationBug record exists.

#include <string>
#include <vector>

#include "fuzzrp/harness/config.hpp"
#include "fuzzrp/harness/fixtures.hpp"

namespace fuzzrp {

enum class DiscrepancyLabel { MatchesPrinted, SourceErratum, ImplementationBug };

std::string_view discrepancy_label_name(DiscrepancyLabel label) noexcept;

struct DiscrepancyRecord {
    const PrintedCell* cell = nullptr;
    DiscrepancyLabel label = DiscrepancyLabel::MatchesPrinted;
    double production_rpcf = 0.0;
    double recomputed_rpcf = 0.0;
    // Largest per-degree gap vs the printed conclusion, when one was printed.
    double conclusion_gap = 0.0;
    std::string detail;
};

struct CheckReport {
    std::vector<DiscrepancyRecord> records;  // fixture order
    int matches = 0;
    int errata = 0;
    int bugs = 0;

    bool ok() const noexcept { return bugs == 0; }
};

// Audits every fixture cell applicable to the config's rule. The fixtures
// describe the default rule only, so a config with a custom rule is rejected
// (there is nothing printed to audit against).
CheckReport oracle_check(const ExperimentConfig& config);

// One line per record: "label table cell: detail".
std::string format_check_report(const CheckReport& report);

}  // namespace fuzzrp
