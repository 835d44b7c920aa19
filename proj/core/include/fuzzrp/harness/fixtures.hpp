#pragma once

// Golden fixtures: the reference tables' printed numbers for the default
// rule, recorded as published. Each cell carries a status so tests can assert
// against recomputed values while still documenting the source's slips:
//
//   Verified          recomputation agrees (0.05 rpcf pp / 5e-3 per degree)
//   Erratum           recomputation disagrees and the slip's origin is known
//   Unreconstructable recomputation disagrees and no plausible arithmetic
//                     reproduces the printed value
//
// Cells also carry the recomputed value (`oracle_*`), frozen from an
// independent high-precision evaluation, so nothing downstream needs to trust
// the production pipeline to know what the right answer is.

#include <optional>
#include <string_view>
#include <vector>

#include "fuzzrp/harness/variant.hpp"
#include "fuzzrp/reductive.hpp"

namespace fuzzrp {

enum class FixtureStatus { Verified, Erratum, Unreconstructable };

enum class CellKind { PerCase, FmpAggregate, FmtAggregate, Overall };

std::string_view fixture_status_name(FixtureStatus s) noexcept;

struct PrintedCell {
    std::string_view table;  // e.g. "qip_class1", "comparison_class2"
    MethodVariant variant;
    int class_id = 1;
    CellKind kind = CellKind::PerCase;
    int case_id = 0;  // PerCase only
    // What the source printed. rpcf is NaN when the source printed no score
    // for the cell; conclusion is empty when no vector was printed.
    double printed_rpcf = 0.0;
    std::vector<double> printed_conclusion;
    // Frozen recomputation of the same cell.
    double oracle_rpcf = 0.0;
    std::vector<double> oracle_conclusion;  // empty for aggregate cells
    FixtureStatus status = FixtureStatus::Verified;
    std::string_view note;  // non-empty on every non-Verified cell
};

// Every fixture cell, grouped by table, in print order.
const std::vector<PrintedCell>& printed_cells();

// Convenience filters.
std::vector<const PrintedCell*> cells_for_table(std::string_view table);
const PrintedCell* find_cell(const MethodVariant& variant, int class_id,
                             CellKind kind, int case_id = 0);

}  // namespace fuzzrp
