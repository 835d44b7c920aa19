#pragma once

// Flat key-value experiment configuration. Grammar (documented in README):
//
//   # comment                <- '#' starts a comment anywhere on a line
//   key = value              <- one binding per line, '=' required
//
// keys and values:
//   antecedent / consequent / tilted_antecedent / tilted_consequent
//       membership vector: comma- or space-separated degrees, optionally
//       wrapped in [ ] — e.g. "[1, 0.3, 0, 0, 0]" or "1 0.3 0 0 0"
//   classes      "1", "2", or "1 2"
//   methods      variant ids ("cri:zadeh dmm:two_valued"), bare method names
//                ("qip" expands to all its variants), or "all" (default)
//   target_mode  hedged | plain | best        (default hedged)
//   format       csv | json | markdown        (default csv)
//   tolerance    positive real                (default 0.05)
//
// Omitted keys take the defaults below. Unknown or duplicated keys are
// rejected, and every rejection names the offending key.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzrp/harness/variant.hpp"
#include "fuzzrp/inference.hpp"
#include "fuzzrp/reductive.hpp"

namespace fuzzrp {

enum class OutputFormat { Csv, Json, Markdown };

std::string_view format_name(OutputFormat f) noexcept;
std::optional<OutputFormat> format_from_name(std::string_view name) noexcept;

std::string_view target_mode_name(TargetMode m) noexcept;
std::optional<TargetMode> target_mode_from_name(std::string_view name) noexcept;

struct ExperimentConfig {
    FuzzyRule rule;
    std::optional<DiscreteFuzzySet> tilted_antecedent;
    std::optional<DiscreteFuzzySet> tilted_consequent;
    std::vector<int> classes{1};
    std::vector<MethodVariant> methods;  // resolved, never empty
    TargetMode target_mode = TargetMode::Hedged;
    OutputFormat format = OutputFormat::Csv;
    double tolerance = 0.05;  // RPCF percentage points, for fixture audits

    bool operator==(const ExperimentConfig&) const = default;
};

// The rule and tilts every table in the golden fixtures was computed from.
FuzzyRule default_rule();
DiscreteFuzzySet default_tilted_antecedent();  // [1, 0.2, 0, 0, 0]
DiscreteFuzzySet default_tilted_consequent();  // [0, 0, 0, 0.2, 1]

// Empty text parses to this: default rule, class 1, the 17-variant roster,
// hedged targets, csv, tolerance 0.05.
ExperimentConfig default_config();

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// Parse inline text. The default tilts attach only to the default rule: a
// custom rule selecting class 2 must spell out its own tilted vectors.
ExperimentConfig parse_config(std::string_view text);

// Read a file and parse_config() its contents.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace fuzzrp
