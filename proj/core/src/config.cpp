#include "fuzzrp/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace fuzzrp {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_items(std::string_view value) {
    // List values accept commas and/or whitespace as separators and an
    // optional surrounding [ ].
    std::string cleaned(value);
    std::erase(cleaned, '[');
    std::erase(cleaned, ']');
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<std::string> items;
    for (std::string item; in >> item;) {
        items.push_back(std::move(item));
    }
    return items;
}

double parse_double(const std::string& key, const std::string& item) {
    double v = 0.0;
    const auto [end, ec] =
        std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size()) {
        throw ConfigError(key, "not a number: '" + item + "'");
    }
    return v;
}

DiscreteFuzzySet parse_membership(const std::string& key,
                                  std::string_view value) {
    std::vector<double> degrees;
    for (const std::string& item : split_items(value)) {
        const double v = parse_double(key, item);
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ConfigError(key, "membership out of range: " + item);
        }
        degrees.push_back(v);
    }
    if (degrees.empty()) {
        throw ConfigError(key, "empty membership vector");
    }
    return DiscreteFuzzySet(std::move(degrees));
}

std::vector<int> parse_classes(const std::string& key, std::string_view value) {
    std::set<int> seen;
    std::vector<int> classes;
    for (const std::string& item : split_items(value)) {
        if (item != "1" && item != "2") {
            throw ConfigError(key, "class must be 1 or 2, got '" + item + "'");
        }
        const int id = item == "1" ? 1 : 2;
        if (seen.insert(id).second) {
            classes.push_back(id);
        }
    }
    if (classes.empty()) {
        throw ConfigError(key, "no classes selected");
    }
    std::sort(classes.begin(), classes.end());
    return classes;
}

std::vector<MethodVariant> parse_methods(const std::string& key,
                                         std::string_view value) {
    std::vector<MethodVariant> methods;
    auto add_unique = [&](const MethodVariant& v) {
        if (std::find(methods.begin(), methods.end(), v) == methods.end()) {
            methods.push_back(v);
        }
    };
    for (const std::string& item : split_items(value)) {
        if (item == "all") {
            for (const MethodVariant& v : default_roster()) {
                add_unique(v);
            }
            continue;
        }
        if (const std::optional<MethodKind> kind = method_from_name(item)) {
            for (const MethodVariant& v : variants_of(*kind)) {
                add_unique(v);
            }
            continue;
        }
        if (const std::optional<MethodVariant> v = variant_from_id(item)) {
            add_unique(*v);
            continue;
        }
        throw ConfigError(key, "unknown method '" + item + "'");
    }
    if (methods.empty()) {
        throw ConfigError(key, "no methods selected");
    }
    return methods;
}

}  // namespace

std::string_view format_name(OutputFormat f) noexcept {
    switch (f) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Markdown: return "markdown";
    }
    return "?";
}

std::optional<OutputFormat> format_from_name(std::string_view name) noexcept {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "markdown") return OutputFormat::Markdown;
    return std::nullopt;
}

std::string_view target_mode_name(TargetMode m) noexcept {
    switch (m) {
        case TargetMode::Hedged: return "hedged";
        case TargetMode::Plain: return "plain";
        case TargetMode::Best: return "best";
    }
    return "?";
}

std::optional<TargetMode> target_mode_from_name(std::string_view name) noexcept {
    if (name == "hedged") return TargetMode::Hedged;
    if (name == "plain") return TargetMode::Plain;
    if (name == "best") return TargetMode::Best;
    return std::nullopt;
}

FuzzyRule default_rule() {
    return {DiscreteFuzzySet{1.0, 0.3, 0.0, 0.0, 0.0},
            DiscreteFuzzySet{0.0, 0.0, 0.0, 0.3, 1.0}};
}

DiscreteFuzzySet default_tilted_antecedent() {
    return DiscreteFuzzySet{1.0, 0.2, 0.0, 0.0, 0.0};
}

DiscreteFuzzySet default_tilted_consequent() {
    return DiscreteFuzzySet{0.0, 0.0, 0.0, 0.2, 1.0};
}

ExperimentConfig default_config() {
    ExperimentConfig config;
    config.rule = default_rule();
    config.tilted_antecedent = default_tilted_antecedent();
    config.tilted_consequent = default_tilted_consequent();
    const std::span<const MethodVariant> roster = default_roster();
    config.methods.assign(roster.begin(), roster.end());
    return config;
}

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    std::set<std::string> seen;
    std::optional<DiscreteFuzzySet> antecedent;
    std::optional<DiscreteFuzzySet> consequent;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (const std::size_t hash = line.find('#');
            hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(line), "expected 'key = value'");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(std::string(line), "missing key");
        }
        if (!seen.insert(key).second) {
            throw ConfigError(key, "duplicate key");
        }
        if (value.empty()) {
            throw ConfigError(key, "missing value");
        }

        if (key == "antecedent") {
            antecedent = parse_membership(key, value);
        } else if (key == "consequent") {
            consequent = parse_membership(key, value);
        } else if (key == "tilted_antecedent") {
            config.tilted_antecedent = parse_membership(key, value);
        } else if (key == "tilted_consequent") {
            config.tilted_consequent = parse_membership(key, value);
        } else if (key == "classes") {
            config.classes = parse_classes(key, value);
        } else if (key == "methods") {
            config.methods = parse_methods(key, value);
        } else if (key == "target_mode") {
            const auto mode = target_mode_from_name(value);
            if (!mode) {
                throw ConfigError(key, "expected hedged|plain|best, got '" +
                                           std::string(value) + "'");
            }
            config.target_mode = *mode;
        } else if (key == "format") {
            const auto format = format_from_name(value);
            if (!format) {
                throw ConfigError(key, "expected csv|json|markdown, got '" +
                                           std::string(value) + "'");
            }
            config.format = *format;
        } else if (key == "tolerance") {
            const double tol = parse_double(key, std::string(value));
            if (!(tol > 0.0)) {
                throw ConfigError(key, "tolerance must be positive");
            }
            config.tolerance = tol;
        } else {
            throw ConfigError(key, "unknown key");
        }
    }

    if (antecedent.has_value() != consequent.has_value()) {
        throw ConfigError(antecedent ? "consequent" : "antecedent",
                          "antecedent and consequent must be given together");
    }
    const bool custom_rule = antecedent.has_value();
    config.rule = custom_rule
                      ? FuzzyRule{std::move(*antecedent), std::move(*consequent)}
                      : default_rule();

    // The stock tilted vectors describe the stock rule; they are not a
    // meaningful default for anything else.
    if (!custom_rule) {
        if (!config.tilted_antecedent) {
            config.tilted_antecedent = default_tilted_antecedent();
        }
        if (!config.tilted_consequent) {
            config.tilted_consequent = default_tilted_consequent();
        }
    }
    const bool wants_class2 =
        std::find(config.classes.begin(), config.classes.end(), 2) !=
        config.classes.end();
    if (wants_class2) {
        if (!config.tilted_antecedent) {
            throw ConfigError("tilted_antecedent",
                              "required when classes include 2");
        }
        if (!config.tilted_consequent) {
            throw ConfigError("tilted_consequent",
                              "required when classes include 2");
        }
    }
    if (config.tilted_antecedent &&
        config.tilted_antecedent->size() != config.rule.antecedent.size()) {
        throw ConfigError("tilted_antecedent", "size differs from antecedent");
    }
    if (config.tilted_consequent &&
        config.tilted_consequent->size() != config.rule.consequent.size()) {
        throw ConfigError("tilted_consequent", "size differs from consequent");
    }

    if (config.methods.empty()) {
        const std::span<const MethodVariant> roster = default_roster();
        config.methods.assign(roster.begin(), roster.end());
    }
    return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string(), "cannot open config file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace fuzzrp
