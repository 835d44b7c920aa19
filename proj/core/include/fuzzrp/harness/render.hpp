#pragma once

// Report rendering. All three formats are deterministic and locale-free:
// equal reports render to byte-identical text.
//
//   csv       long format, one row per cell, full-precision numbers:
//             method,family,direction,case,rpcf,conclusion
//             (conclusion degrees joined with ';')
//   json      nested method -> family -> case, full-precision numbers;
//             report_from_json() inverts it exactly
//   markdown  per-method tables with 2-decimal rounding, laid out like the
//             reference tables, plus an aggregate comparison table

#include <filesystem>
#include <string>

#include "fuzzrp/harness/config.hpp"
#include "fuzzrp/harness/runner.hpp"

namespace fuzzrp {

std::string render_report(const Report& report, OutputFormat format);

std::string render_csv(const Report& report);
std::string render_json(const Report& report);
std::string render_markdown(const Report& report);

// Inverse of render_json. Throws std::invalid_argument on malformed input.
Report report_from_json(const std::string& text);

// Regenerates the full set of reference tables for the default rule into
// `dir` (created if missing), one markdown file per table:
//   qip_class1.md cri_class1.md tip_class1.md aars_class1.md dmm_class1.md
//   comparison_class1.md comparison_class2.md
// Cells whose printed source values are documented errata gain a footnote.
// Returns the paths written, in that order.
std::vector<std::filesystem::path> write_reference_tables(
    const std::filesystem::path& dir);

}  // namespace fuzzrp
