// fuzzrp: run reductive-property suites, audit them against the golden
// fixtures, and regenerate the reference tables.
//
//   fuzzrp run    [--config <path>] [--class 1|2]... [--method <id>]...
//                 [--format csv|json|markdown] [--out <path>]
//   fuzzrp check  [--config <path>] [--tolerance <x>]
//   fuzzrp tables [--out-dir <dir>]
//
// Exit codes: 0 success; 1 implementation-bug records found by check;
// 2 configuration or usage errors.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzrp/harness/config.hpp"
#include "fuzzrp/harness/oracle_check.hpp"
#include "fuzzrp/harness/render.hpp"
#include "fuzzrp/harness/runner.hpp"

namespace {

fuzzrp::ExperimentConfig read_config(const std::string& path) {
    if (path.empty()) {
        return fuzzrp::default_config();
    }
    return fuzzrp::load_config(path);
}

void apply_method_filter(fuzzrp::ExperimentConfig& config,
                         const std::vector<std::string>& ids) {
    if (ids.empty()) {
        return;
    }
    std::vector<fuzzrp::MethodVariant> methods;
    for (const std::string& id : ids) {
        if (const auto kind = fuzzrp::method_from_name(id)) {
            for (const fuzzrp::MethodVariant& v : fuzzrp::variants_of(*kind)) {
                methods.push_back(v);
            }
            continue;
        }
        const auto v = fuzzrp::variant_from_id(id);
        if (!v) {
            throw fuzzrp::ConfigError("--method", "unknown method '" + id + "'");
        }
        methods.push_back(*v);
    }
    config.methods = std::move(methods);
}

int run_command(const std::string& config_path,
                const std::vector<int>& classes,
                const std::vector<std::string>& methods,
                const std::string& format_name_arg, const std::string& out_path) {
    fuzzrp::ExperimentConfig config = read_config(config_path);
    if (!classes.empty()) {
        config.classes = classes;
        std::sort(config.classes.begin(), config.classes.end());
        config.classes.erase(
            std::unique(config.classes.begin(), config.classes.end()),
            config.classes.end());
    }
    apply_method_filter(config, methods);
    if (!format_name_arg.empty()) {
        const auto format = fuzzrp::format_from_name(format_name_arg);
        if (!format) {
            throw fuzzrp::ConfigError("--format", "unknown format '" +
                                                      format_name_arg + "'");
        }
        config.format = *format;
    }
    // Class 2 needs tilted vectors; surface the config error before running.
    const fuzzrp::Report report = fuzzrp::run_suite(config);
    const std::string text = fuzzrp::render_report(report, config.format);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

int check_command(const std::string& config_path, double tolerance) {
    fuzzrp::ExperimentConfig config = read_config(config_path);
    if (tolerance > 0.0) {
        config.tolerance = tolerance;
    }
    const fuzzrp::CheckReport report = fuzzrp::oracle_check(config);
    std::cout << fuzzrp::format_check_report(report);
    return report.ok() ? 0 : 1;
}

int tables_command(const std::string& out_dir) {
    for (const std::filesystem::path& path :
         fuzzrp::write_reference_tables(out_dir)) {
        std::cout << path.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete fuzzy-reasoning engine and reductive-property "
                 "audit harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<int> classes;
    std::vector<std::string> methods;
    std::string format;
    std::string out_path;
    double tolerance = 0.0;
    std::string out_dir = "tables";

    CLI::App* run = app.add_subcommand("run", "evaluate a suite and render it");
    run->add_option("--config", config_path, "config file (defaults apply)");
    run->add_option("--class", classes, "restrict to class 1 and/or 2")
        ->check(CLI::IsMember({1, 2}));
    run->add_option("--method", methods,
                    "restrict to method names or variant ids");
    run->add_option("--format", format, "csv|json|markdown");
    run->add_option("--out", out_path, "write here instead of stdout");

    CLI::App* check =
        app.add_subcommand("check", "audit against the golden fixtures");
    check->add_option("--config", config_path, "config file (defaults apply)");
    check->add_option("--tolerance", tolerance,
                      "score tolerance in percentage points")
        ->check(CLI::PositiveNumber);

    CLI::App* tables = app.add_subcommand(
        "tables", "regenerate the reference tables as markdown");
    tables->add_option("--out-dir", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_command(config_path, classes, methods, format, out_path);
        }
        if (check->parsed()) {
            return check_command(config_path, tolerance);
        }
        return tables_command(out_dir);
    } catch (const fuzzrp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
