#include "fuzzrp/harness/render.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fuzzrp/harness/fixtures.hpp"

namespace fuzzrp {

namespace {

using nlohmann::json;

// Shortest decimal form that parses back to the same double; locale-free.
std::string num(double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) {
        throw std::logic_error("num: to_chars failed");
    }
    return std::string(buf, end);
}

std::string fixed2(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << v;
    return out.str();
}

// Degrees shown the way the reference tables print them: up to three
// decimals, trailing zeros trimmed.
std::string degree3(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << v;
    std::string s = out.str();
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

std::string degrees_list(const DiscreteFuzzySet& s) {
    std::string out = "[";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) out += ", ";
        out += degree3(s[k]);
    }
    return out + "]";
}

std::string_view direction_name(Direction d) {
    return d == Direction::Fmp ? "fmp" : "fmt";
}

json degrees_json(const DiscreteFuzzySet& s) { return json(s.degrees()); }

DiscreteFuzzySet degrees_from_json(const json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("report_from_json: expected an array");
    }
    return DiscreteFuzzySet(j.get<std::vector<double>>());
}

}  // namespace

std::string render_csv(const Report& report) {
    std::string out = "method,family,direction,case,rpcf,conclusion\n";
    for (const ReportRow& row : report.rows) {
        out += std::string(method_name(row.variant.kind)) + ",";
        out += row.variant.discriminator() + ",";
        out += std::string(direction_name(row.direction)) + ",";
        out += std::to_string(row.case_id) + ",";
        out += num(row.rpcf) + ",";
        for (std::size_t k = 0; k < row.conclusion.size(); ++k) {
            if (k > 0) out += ";";
            out += num(row.conclusion[k]);
        }
        out += "\n";
    }
    return out;
}

std::string render_json(const Report& report) {
    const ExperimentConfig& config = report.config;
    json j;
    j["config"]["rule"]["antecedent"] = degrees_json(config.rule.antecedent);
    j["config"]["rule"]["consequent"] = degrees_json(config.rule.consequent);
    j["config"]["tilted_antecedent"] =
        config.tilted_antecedent ? degrees_json(*config.tilted_antecedent)
                                 : json();
    j["config"]["tilted_consequent"] =
        config.tilted_consequent ? degrees_json(*config.tilted_consequent)
                                 : json();
    j["config"]["classes"] = config.classes;
    json method_ids = json::array();
    for (const MethodVariant& v : config.methods) {
        method_ids.push_back(v.id());
    }
    j["config"]["methods"] = method_ids;
    j["config"]["target_mode"] = std::string(target_mode_name(config.target_mode));
    j["config"]["format"] = std::string(format_name(config.format));
    j["config"]["tolerance"] = config.tolerance;

    json methods = json::object();
    for (const ReportRow& row : report.rows) {
        json& slot = methods[std::string(method_name(row.variant.kind))]
                            [row.variant.discriminator()]["cases"]
                            [std::to_string(row.case_id)];
        slot["direction"] = std::string(direction_name(row.direction));
        slot["premise"] = degrees_json(row.premise);
        slot["conclusion"] = degrees_json(row.conclusion);
        slot["target"] = degrees_json(row.target);
        slot["rpcf"] = row.rpcf;
    }
    for (const AggregateRow& agg : report.aggregates) {
        json& slot = methods[std::string(method_name(agg.variant.kind))]
                            [agg.variant.discriminator()]["aggregates"]
                            [std::to_string(agg.class_id)];
        slot["fmp"] = agg.fmp;
        slot["fmt"] = agg.fmt;
        slot["overall"] = agg.overall;
    }
    j["methods"] = methods;
    j["annotations"] = report.annotations;
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report_from_json: ") +
                                    e.what());
    }
    try {
        Report report;
        const json& jc = j.at("config");
        report.config.rule.antecedent =
            degrees_from_json(jc.at("rule").at("antecedent"));
        report.config.rule.consequent =
            degrees_from_json(jc.at("rule").at("consequent"));
        if (!jc.at("tilted_antecedent").is_null()) {
            report.config.tilted_antecedent =
                degrees_from_json(jc.at("tilted_antecedent"));
        }
        if (!jc.at("tilted_consequent").is_null()) {
            report.config.tilted_consequent =
                degrees_from_json(jc.at("tilted_consequent"));
        }
        report.config.classes = jc.at("classes").get<std::vector<int>>();
        report.config.methods.clear();
        for (const json& id : jc.at("methods")) {
            const auto v = variant_from_id(id.get<std::string>());
            if (!v) {
                throw std::invalid_argument("unknown method id " +
                                            id.get<std::string>());
            }
            report.config.methods.push_back(*v);
        }
        const auto mode =
            target_mode_from_name(jc.at("target_mode").get<std::string>());
        const auto format = format_from_name(jc.at("format").get<std::string>());
        if (!mode || !format) {
            throw std::invalid_argument("bad target_mode or format");
        }
        report.config.target_mode = *mode;
        report.config.format = *format;
        report.config.tolerance = jc.at("tolerance").get<double>();

        const json& methods = j.at("methods");
        for (const MethodVariant& v : report.config.methods) {
            const json& slot = methods.at(std::string(method_name(v.kind)))
                                   .at(v.discriminator());
            if (slot.contains("cases")) {
                std::map<int, const json*> ordered;
                for (const auto& [key, value] : slot.at("cases").items()) {
                    ordered[std::stoi(key)] = &value;
                }
                for (const auto& [case_id, cell] : ordered) {
                    ReportRow row;
                    row.variant = v;
                    row.case_id = case_id;
                    row.direction = case_direction(case_id);
                    row.premise = degrees_from_json(cell->at("premise"));
                    row.conclusion = degrees_from_json(cell->at("conclusion"));
                    row.target = degrees_from_json(cell->at("target"));
                    row.rpcf = cell->at("rpcf").get<double>();
                    report.rows.push_back(std::move(row));
                }
            }
            if (slot.contains("aggregates")) {
                for (const int class_id : report.config.classes) {
                    const json& cell =
                        slot.at("aggregates").at(std::to_string(class_id));
                    AggregateRow agg;
                    agg.variant = v;
                    agg.class_id = class_id;
                    agg.fmp = cell.at("fmp").get<double>();
                    agg.fmt = cell.at("fmt").get<double>();
                    agg.overall = cell.at("overall").get<double>();
                    report.aggregates.push_back(std::move(agg));
                }
            }
        }
        report.annotations =
            j.at("annotations").get<std::vector<std::string>>();
        return report;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: ") +
                                    e.what());
    }
}

std::string render_markdown(const Report& report) {
    std::ostringstream out;
    out << "# Reductive-property report\n\n";
    out << "- rule antecedent: " << degrees_list(report.config.rule.antecedent)
        << "\n";
    out << "- rule consequent: " << degrees_list(report.config.rule.consequent)
        << "\n";
    out << "- classes:";
    for (const int c : report.config.classes) out << " " << c;
    out << "\n- target mode: "
        << target_mode_name(report.config.target_mode) << "\n\n";

    out << "## Aggregates\n\n";
    out << "| method | class | forward | backward | overall |\n";
    out << "|---|---|---|---|---|\n";
    for (const AggregateRow& agg : report.aggregates) {
        out << "| " << agg.variant.id() << " | " << agg.class_id << " | "
            << fixed2(agg.fmp) << " | " << fixed2(agg.fmt) << " | "
            << fixed2(agg.overall) << " |\n";
    }

    const MethodVariant* current = nullptr;
    for (const ReportRow& row : report.rows) {
        if (current == nullptr || !(*current == row.variant)) {
            out << "\n## " << row.variant.id() << "\n\n";
            out << "| case | direction | premise | conclusion | score |\n";
            out << "|---|---|---|---|---|\n";
            current = &row.variant;
        }
        out << "| " << row.case_id << " | " << direction_name(row.direction)
            << " | " << degrees_list(row.premise) << " | "
            << degrees_list(row.conclusion) << " | " << fixed2(row.rpcf)
            << " |\n";
    }

    if (!report.annotations.empty()) {
        out << "\n## Annotations\n\n";
        for (const std::string& note : report.annotations) {
            out << "- " << note << "\n";
        }
    }
    return out.str();
}

std::string render_report(const Report& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return render_csv(report);
        case OutputFormat::Json: return render_json(report);
        case OutputFormat::Markdown: return render_markdown(report);
    }
    throw std::logic_error("render_report: unknown format");
}

namespace {

Report class_report(int class_id, std::vector<MethodVariant> methods) {
    ExperimentConfig config = default_config();
    config.classes = {class_id};
    config.methods = std::move(methods);
    return run_suite(config);
}

void append_footnotes(std::ostringstream& out, std::string_view table) {
    bool any = false;
    for (const PrintedCell* cell : cells_for_table(table)) {
        if (cell->status == FixtureStatus::Verified) continue;
        if (!any) {
            out << "\nNotes on the printed source values:\n\n";
            any = true;
        }
        out << "- " << cell->variant.id() << " ";
        switch (cell->kind) {
            case CellKind::PerCase: out << "case " << cell->case_id; break;
            case CellKind::FmpAggregate: out << "forward aggregate"; break;
            case CellKind::FmtAggregate: out << "backward aggregate"; break;
            case CellKind::Overall: out << "overall"; break;
        }
        out << " (printed " << fixed2(cell->printed_rpcf) << ", "
            << fixture_status_name(cell->status) << "): " << cell->note
            << "\n";
    }
}

// One per-method class-1 table: case rows with a conclusion+score column per
// variant, then the directional aggregate rows.
std::string method_table(std::string_view title, std::string_view table,
                         MethodKind kind) {
    const Report report = class_report(1, variants_of(kind));
    std::ostringstream out;
    out << "# " << title << "\n";

    const std::vector<MethodVariant> variants = variants_of(kind);
    for (const Direction dir : {Direction::Fmp, Direction::Fmt}) {
        out << "\n| premise |";
        for (const MethodVariant& v : variants) {
            out << " " << v.id() << " |";
        }
        out << "\n|---|";
        for (std::size_t k = 0; k < variants.size(); ++k) out << "---|";
        out << "\n";
        for (int case_id = 1; case_id <= 10; ++case_id) {
            if (!case_in_class(case_id, 1) ||
                case_direction(case_id) != dir) {
                continue;
            }
            const ReportRow* first = nullptr;
            out << "| ";
            for (const MethodVariant& v : variants) {
                for (const ReportRow& row : report.rows) {
                    if (row.variant == v && row.case_id == case_id) {
                        if (first == nullptr) {
                            first = &row;
                            out << degrees_list(row.premise) << " |";
                        }
                        out << " " << degrees_list(row.conclusion) << " "
                            << fixed2(row.rpcf) << " |";
                    }
                }
            }
            out << "\n";
        }
        out << "| "
            << (dir == Direction::Fmp ? "forward aggregate"
                                      : "backward aggregate")
            << " |";
        for (const MethodVariant& v : variants) {
            for (const AggregateRow& agg : report.aggregates) {
                if (agg.variant == v) {
                    out << " "
                        << fixed2(dir == Direction::Fmp ? agg.fmp : agg.fmt)
                        << " |";
                }
            }
        }
        out << "\n";
    }
    append_footnotes(out, table);
    return out.str();
}

std::string comparison_table(std::string_view title, std::string_view table,
                             int class_id) {
    const std::span<const MethodVariant> roster = default_roster();
    const Report report =
        class_report(class_id, {roster.begin(), roster.end()});
    std::ostringstream out;
    out << "# " << title << "\n\n";
    out << "| method | forward | backward | overall |\n";
    out << "|---|---|---|---|\n";
    for (const AggregateRow& agg : report.aggregates) {
        out << "| " << agg.variant.id() << " | " << fixed2(agg.fmp) << " | "
            << fixed2(agg.fmt) << " | " << fixed2(agg.overall) << " |\n";
    }
    append_footnotes(out, table);
    return out.str();
}

}  // namespace

std::vector<std::filesystem::path> write_reference_tables(
    const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::vector<std::pair<std::filesystem::path, std::string>> files = {
        {"qip_class1.md",
         method_table("Quintuple-implication results, class 1", "qip_class1",
                      MethodKind::Qip)},
        {"cri_class1.md",
         method_table("Compositional-rule results, class 1", "cri_class1",
                      MethodKind::Cri)},
        {"tip_class1.md",
         method_table("Triple-implication results, class 1", "tip_class1",
                      MethodKind::Tip)},
        {"aars_class1.md",
         method_table("Similarity-schema results, class 1", "aars_class1",
                      MethodKind::Aars)},
        {"dmm_class1.md",
         method_table("Distance-measure results, class 1", "dmm_class1",
                      MethodKind::Dmm)},
        {"comparison_class1.md",
         comparison_table("All-method comparison, class 1",
                          "comparison_class1", 1)},
        {"comparison_class2.md",
         comparison_table("All-method comparison, class 2",
                          "comparison_class2", 2)},
    };
    std::vector<std::filesystem::path> written;
    for (const auto& [name, body] : files) {
        const std::filesystem::path path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        out << body;
        written.push_back(path);
    }
    return written;
}

}  // namespace fuzzrp
