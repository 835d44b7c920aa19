#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "fuzzrp/harness/config.hpp"
#include "fuzzrp/harness/fixtures.hpp"
#include "fuzzrp/harness/oracle_check.hpp"
#include "fuzzrp/harness/render.hpp"
#include "fuzzrp/harness/runner.hpp"
#include "fuzzrp/harness/variant.hpp"

using namespace fuzzrp;

namespace {

constexpr double kFrozenTol = 1e-9;  // vs independently frozen recomputations

bool near(double a, double b, double tol = kFrozenTol) {
    return std::abs(a - b) <= tol;
}

const AggregateRow& aggregate_of(const Report& report, const std::string& id,
                                 int class_id) {
    for (const AggregateRow& agg : report.aggregates) {
        if (agg.variant.id() == id && agg.class_id == class_id) {
            return agg;
        }
    }
    throw std::out_of_range("no aggregate for " + id);
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("fuzzrp_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

// --- variants ---------------------------------------------------------------

TEST_CASE("the default roster is the 17-variant comparison grid") {
    const auto roster = default_roster();
    REQUIRE(roster.size() == 17);
    std::set<std::string> ids;
    for (const MethodVariant& v : roster) {
        ids.insert(v.id());
    }
    CHECK(ids.size() == 17);  // no duplicates
    // presentation order: cri block first, dmm block last
    CHECK(roster[0].id() == "cri:zadeh");
    CHECK(roster[1].id() == "cri:lukasiewicz");
    CHECK(roster[4].id() == "cri:goguen");
    CHECK(roster[5].id() == "tip:lukasiewicz");
    CHECK(roster[9].id() == "qip:lukasiewicz");
    CHECK(roster[13].id() == "aars:more_or_less");
    CHECK(roster[14].id() == "aars:reduction");
    CHECK(roster[15].id() == "dmm:three_valued");
    CHECK(roster[16].id() == "dmm:two_valued");
}

TEST_CASE("variant ids round-trip") {
    for (const MethodVariant& v : default_roster()) {
        const auto parsed = variant_from_id(v.id());
        REQUIRE(parsed.has_value());
        CHECK(*parsed == v);
    }
    CHECK_FALSE(variant_from_id("cri").has_value());
    CHECK_FALSE(variant_from_id("cri:").has_value());
    CHECK_FALSE(variant_from_id("cri:klee").has_value());
    CHECK_FALSE(variant_from_id("tip:zadeh").has_value());
    CHECK_FALSE(variant_from_id("dmm:more_or_less").has_value());
    CHECK_FALSE(variant_from_id("").has_value());
}

TEST_CASE("variant construction enforces the method's discriminator") {
    CHECK(make_variant(MethodKind::Cri, OperatorFamily::Zadeh).id() == "cri:zadeh");
    CHECK_THROWS_AS(make_variant(MethodKind::Tip, OperatorFamily::Zadeh),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_variant(MethodKind::Qip, OperatorFamily::Zadeh),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_variant(MethodKind::Aars, OperatorFamily::Goedel),
                    std::invalid_argument);
    CHECK(make_variant(AarsForm::Reduction).id() == "aars:reduction");
    CHECK(make_variant(SignForm::ThreeValued).id() == "dmm:three_valued");
    CHECK(variants_of(MethodKind::Cri).size() == 5);
    CHECK(variants_of(MethodKind::Tip).size() == 4);
    CHECK(variants_of(MethodKind::Aars).size() == 2);
}

TEST_CASE("method names round-trip") {
    for (MethodKind kind : all_methods) {
        const auto parsed = method_from_name(method_name(kind));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == kind);
    }
    CHECK_FALSE(method_from_name("CRI").has_value());
    CHECK_FALSE(method_from_name("xyz").has_value());
}

// --- config -----------------------------------------------------------------

TEST_CASE("empty text parses to the default experiment") {
    const ExperimentConfig config = parse_config("");
    CHECK(config == default_config());
    CHECK(config.rule.antecedent == DiscreteFuzzySet({1.0, 0.3, 0.0, 0.0, 0.0}));
    CHECK(config.rule.consequent == DiscreteFuzzySet({0.0, 0.0, 0.0, 0.3, 1.0}));
    CHECK(config.classes == std::vector<int>{1});
    CHECK(config.methods.size() == 17);
    CHECK(config.target_mode == TargetMode::Hedged);
    CHECK(config.format == OutputFormat::Csv);
    CHECK(config.tolerance == 0.05);
}

TEST_CASE("a full custom config parses every key") {
    const ExperimentConfig config = parse_config(
        "# experiment with a three-element universe\n"
        "antecedent = [1, 0.5, 0]\n"
        "consequent = 0, 0.5, 1   # bare commas work too\n"
        "tilted_antecedent = 1 0.4 0\n"
        "tilted_consequent = [0 0.4 1]\n"
        "classes = 1 2\n"
        "methods = cri:godel dmm\n"
        "target_mode = best\n"
        "format = markdown\n"
        "tolerance = 0.1\n");
    CHECK(config.rule.antecedent == DiscreteFuzzySet({1.0, 0.5, 0.0}));
    CHECK(config.rule.consequent == DiscreteFuzzySet({0.0, 0.5, 1.0}));
    REQUIRE(config.tilted_antecedent.has_value());
    CHECK(*config.tilted_antecedent == DiscreteFuzzySet({1.0, 0.4, 0.0}));
    CHECK(config.classes == std::vector<int>{1, 2});
    REQUIRE(config.methods.size() == 3);
    CHECK(config.methods[0].id() == "cri:godel");
    CHECK(config.methods[1].id() == "dmm:three_valued");
    CHECK(config.methods[2].id() == "dmm:two_valued");
    CHECK(config.target_mode == TargetMode::Best);
    CHECK(config.format == OutputFormat::Markdown);
    CHECK(config.tolerance == 0.1);
}

TEST_CASE("method lists deduplicate while keeping first-seen order") {
    const ExperimentConfig config =
        parse_config("methods = qip:r0, qip, cri:zadeh, qip:r0\n");
    REQUIRE(config.methods.size() == 5);
    CHECK(config.methods[0].id() == "qip:r0");
    CHECK(config.methods[1].id() == "qip:lukasiewicz");
    CHECK(config.methods[2].id() == "qip:godel");
    CHECK(config.methods[3].id() == "qip:goguen");
    CHECK(config.methods[4].id() == "cri:zadeh");
}

TEST_CASE("rejections name the offending key") {
    auto key_of = [](const char* text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return e.key();
        }
        return std::string("(no error)");
    };
    CHECK(key_of("classes = 1\nclasses = 2\n") == "classes");
    CHECK(key_of("banana = 1\n") == "banana");
    CHECK(key_of("tolerance =\n") == "tolerance");
    CHECK(key_of("tolerance = fast\n") == "tolerance");
    CHECK(key_of("tolerance = -0.5\n") == "tolerance");
    CHECK(key_of("antecedent = [1, 2]\nconsequent = [0, 1]\n") == "antecedent");
    CHECK(key_of("classes = 3\n") == "classes");
    CHECK(key_of("methods = frobnicate\n") == "methods");
    CHECK(key_of("target_mode = exact\n") == "target_mode");
    CHECK(key_of("format = yaml\n") == "format");
    // a lone antecedent blames the key that is missing, not the one given
    CHECK(key_of("antecedent = [1, 0]\n") == "consequent");
    CHECK(key_of("tilted_antecedent = [1, 0]\n") == "tilted_antecedent");  // size
}

TEST_CASE("a custom rule selecting class 2 must spell out its tilts") {
    const char* base =
        "antecedent = [1, 0.5, 0]\n"
        "consequent = [0, 0.5, 1]\n"
        "classes = 2\n";
    CHECK_THROWS_AS(parse_config(base), ConfigError);
    try {
        parse_config(base);
    } catch (const ConfigError& e) {
        CHECK(e.key() == "tilted_antecedent");
    }
    const ExperimentConfig ok = parse_config(
        std::string(base) +
        "tilted_antecedent = [1, 0.4, 0]\ntilted_consequent = [0, 0.4, 1]\n");
    CHECK(ok.classes == std::vector<int>{2});
}

TEST_CASE("config files load like inline text") {
    TempDir tmp;
    const auto path = tmp.path / "experiment.conf";
    {
        std::ofstream out(path);
        out << "methods = aars\nformat = json\n";
    }
    const ExperimentConfig config = load_config(path);
    CHECK(config.methods.size() == 2);
    CHECK(config.format == OutputFormat::Json);
    CHECK_THROWS_AS(load_config(tmp.path / "missing.conf"), ConfigError);
}

// --- fixtures ---------------------------------------------------------------

TEST_CASE("fixture cells cover all seven reference tables") {
    const std::set<std::string_view> want{
        "qip_class1",  "cri_class1",        "tip_class1",       "aars_class1",
        "dmm_class1",  "comparison_class1", "comparison_class2"};
    std::set<std::string_view> seen;
    for (const PrintedCell& cell : printed_cells()) {
        seen.insert(cell.table);
        if (cell.status != FixtureStatus::Verified) {
            CHECK_FALSE(cell.note.empty());
        }
        if (cell.kind != CellKind::PerCase) {
            CHECK(cell.case_id == 0);
            CHECK(cell.printed_conclusion.empty());
        }
    }
    CHECK(seen == want);
    // 40 cells each for the three compositional tables, 20 each for the
    // similarity and distance tables, 19 + 51 for the two comparison tables
    CHECK(printed_cells().size() == 230);
}

TEST_CASE("fixture lookup by variant, class, kind and case") {
    const PrintedCell* c3 = find_cell(
        make_variant(MethodKind::Qip, OperatorFamily::Lukasiewicz), 1,
        CellKind::PerCase, 3);
    REQUIRE(c3 != nullptr);
    CHECK(c3->printed_rpcf == 95.1);
    CHECK(near(c3->oracle_rpcf, 95.0455488498967));
    CHECK(c3->status == FixtureStatus::Erratum);

    const PrintedCell* c8 = find_cell(
        make_variant(MethodKind::Qip, OperatorFamily::Lukasiewicz), 1,
        CellKind::PerCase, 8);
    REQUIRE(c8 != nullptr);
    CHECK(c8->printed_rpcf == 42.95);
    CHECK(near(c8->oracle_rpcf, 30.9544511501033));
    CHECK(c8->status == FixtureStatus::Unreconstructable);

    const PrintedCell* overall = find_cell(
        make_variant(MethodKind::Cri, OperatorFamily::Goedel), 2,
        CellKind::Overall);
    REQUIRE(overall != nullptr);
    CHECK(overall->printed_rpcf == 86.38);
    CHECK(near(overall->oracle_rpcf, 86.3806936062371));
    CHECK(overall->status == FixtureStatus::Verified);

    CHECK(find_cell(make_variant(MethodKind::Cri, OperatorFamily::Zadeh), 1,
                    CellKind::PerCase, 1) == nullptr);  // never printed
    CHECK(cells_for_table("qip_class1").size() == 40);
    CHECK(cells_for_table("comparison_class1").size() == 19);
    CHECK(cells_for_table("comparison_class2").size() == 51);
}

// --- runner -----------------------------------------------------------------

TEST_CASE("a class-1 default run covers 17 variants by 8 cases") {
    const Report report = run_suite(default_config());
    CHECK(report.rows.size() == 17 * 8);
    CHECK(report.aggregates.size() == 17);

    // roster order, ascending case ids within each variant
    std::size_t at = 0;
    for (const MethodVariant& v : default_roster()) {
        const std::vector<int> ladder{1, 2, 3, 4, 6, 7, 8, 9};
        for (const int case_id : ladder) {
            REQUIRE(at < report.rows.size());
            CHECK(report.rows[at].variant == v);
            CHECK(report.rows[at].case_id == case_id);
            ++at;
        }
    }
}

TEST_CASE("both classes together evaluate the ten distinct cases once each") {
    ExperimentConfig config = default_config();
    config.classes = {1, 2};
    const Report report = run_suite(config);
    CHECK(report.rows.size() == 17 * 10);
    CHECK(report.aggregates.size() == 17 * 2);
    int fives = 0;
    for (const ReportRow& row : report.rows) {
        if (row.variant.id() == "cri:zadeh" && row.case_id == 5) ++fives;
    }
    CHECK(fives == 1);
}

TEST_CASE("every row's score restates its own conclusion against its target") {
    ExperimentConfig config = default_config();
    config.classes = {1, 2};
    const Report report = run_suite(config);
    for (const ReportRow& row : report.rows) {
        CHECK(row.rpcf == rpcf_single(row.conclusion, row.target));
        if (row.case_id == 5) {
            CHECK(row.premise == *config.tilted_antecedent);
        } else if (row.case_id == 10) {
            CHECK(row.premise == complement(*config.tilted_consequent));
        } else {
            CaseSpec spec;
            spec.case_id = row.case_id;
            spec.class_id = 1;
            CHECK(row.premise == generate_premise(config.rule, spec));
        }
    }
}

TEST_CASE("class-1 aggregates agree with independently frozen recomputations") {
    const Report report = run_suite(default_config());
    const AggregateRow& luk = aggregate_of(report, "cri:lukasiewicz", 1);
    CHECK(near(luk.fmp, 88.7341616374225));
    CHECK(near(luk.fmt, 61.8113872124742));
    CHECK(near(luk.overall, 75.2727744249483));
    const AggregateRow& qip = aggregate_of(report, "qip:godel", 1);
    CHECK(near(qip.fmp, 79.2113872124742));
    CHECK(near(qip.fmt, 44.6886127875258));
    CHECK(near(qip.overall, 61.95));
    const AggregateRow& mol = aggregate_of(report, "aars:more_or_less", 1);
    CHECK(near(mol.fmp, 77.1049027834531));
    CHECK(near(mol.fmt, 37.136730148005));
    const AggregateRow& three = aggregate_of(report, "dmm:three_valued", 1);
    CHECK(near(three.fmp, 88.0615079885125));
    CHECK(near(three.fmt, 88.0615079885125));
    CHECK(near(three.overall, 88.0615079885125));
}

TEST_CASE("class-2 aggregates agree with independently frozen recomputations") {
    ExperimentConfig config = default_config();
    config.classes = {2};
    const Report report = run_suite(config);
    CHECK(near(aggregate_of(report, "cri:godel", 2).overall, 86.3806936062371));
    CHECK(near(aggregate_of(report, "qip:lukasiewicz", 2).overall, 61.45));
    CHECK(near(aggregate_of(report, "aars:more_or_less", 2).overall,
               56.5946360253041));
    CHECK(near(aggregate_of(report, "dmm:three_valued", 2).overall,
               95.3991621561198));
    CHECK(near(aggregate_of(report, "dmm:two_valued", 2).overall,
               95.5153988675986));
}

TEST_CASE("equal configs produce equal reports") {
    ExperimentConfig config = default_config();
    config.classes = {1, 2};
    const Report a = run_suite(config);
    const Report b = run_suite(config);
    CHECK(a == b);
}

TEST_CASE("best target mode never scores below either fixed mode") {
    ExperimentConfig hedged = default_config();
    ExperimentConfig plain = hedged;
    plain.target_mode = TargetMode::Plain;
    ExperimentConfig best = hedged;
    best.target_mode = TargetMode::Best;
    const Report rh = run_suite(hedged);
    const Report rp = run_suite(plain);
    const Report rb = run_suite(best);
    REQUIRE(rh.rows.size() == rb.rows.size());
    REQUIRE(rp.rows.size() == rb.rows.size());
    for (std::size_t k = 0; k < rb.rows.size(); ++k) {
        CHECK(rb.rows[k].rpcf >= rh.rows[k].rpcf);
        CHECK(rb.rows[k].rpcf >= rp.rows[k].rpcf);
        const bool matches_one = rb.rows[k].target == rh.rows[k].target ||
                                 rb.rows[k].target == rp.rows[k].target;
        CHECK(matches_one);
    }
}

TEST_CASE("default-rule runs annotate known disagreements with the source") {
    const Report report = run_suite(default_config());
    CHECK_FALSE(report.annotations.empty());
    bool saw_qip_c8 = false;
    for (const std::string& note : report.annotations) {
        if (note.find("qip:lukasiewicz case 8") != std::string::npos) {
            saw_qip_c8 = true;
            CHECK(note.find("42.95") != std::string::npos);
            CHECK(note.find("30.95") != std::string::npos);
            CHECK(note.find("unreconstructable") != std::string::npos);
        }
    }
    CHECK(saw_qip_c8);
}

TEST_CASE("custom-rule runs have nothing to annotate") {
    ExperimentConfig config = parse_config(
        "antecedent = [1, 0.4, 0, 0]\nconsequent = [0, 0, 0.4, 1]\n");
    const Report report = run_suite(config);
    CHECK(report.annotations.empty());
    CHECK(report.rows.size() == 17 * 8);
}

// --- oracle check -----------------------------------------------------------

TEST_CASE("the audit finds no implementation bugs on the default experiment") {
    const CheckReport check = oracle_check(default_config());
    CHECK(check.ok());
    CHECK(check.bugs == 0);
    CHECK(check.matches == 154);
    CHECK(check.errata == 25);
    // the default experiment runs class 1 only, so the 51 class-2 cells are
    // out of scope for the audit
    std::size_t class1_cells = 0;
    for (const PrintedCell& cell : printed_cells()) {
        if (cell.class_id == 1) ++class1_cells;
    }
    CHECK(check.records.size() == class1_cells);
    CHECK(check.records.size() == 179);
    for (const DiscrepancyRecord& record : check.records) {
        REQUIRE(record.cell != nullptr);
        if (record.label == DiscrepancyLabel::SourceErratum) {
            // every erratum is a documented one
            CHECK(record.cell->status != FixtureStatus::Verified);
        }
    }
}

TEST_CASE("the audit classifies the known printed slips as errata") {
    const CheckReport check = oracle_check(default_config());
    bool saw_qip_overall = false;
    for (const DiscrepancyRecord& record : check.records) {
        if (record.cell->table == "comparison_class1" &&
            record.cell->variant.id() == "qip:lukasiewicz" &&
            record.cell->kind == CellKind::Overall) {
            saw_qip_overall = true;
            CHECK(record.label == DiscrepancyLabel::SourceErratum);
            CHECK(near(record.production_rpcf, 61.95));
            CHECK(near(record.recomputed_rpcf, 61.95));
            CHECK(record.cell->printed_rpcf == 63.45);
        }
    }
    CHECK(saw_qip_overall);
}

TEST_CASE("the audit is scoped by the configured methods and classes") {
    ExperimentConfig config = default_config();
    config.methods = {make_variant(MethodKind::Cri, OperatorFamily::Zadeh)};
    const CheckReport check = oracle_check(config);
    CHECK(check.ok());
    CHECK_FALSE(check.records.empty());
    for (const DiscrepancyRecord& record : check.records) {
        CHECK(record.cell->variant.id() == "cri:zadeh");
        CHECK(record.cell->class_id == 1);
    }
}

TEST_CASE("the audit rejects custom rules, which no table describes") {
    ExperimentConfig config = parse_config(
        "antecedent = [1, 0.4, 0]\nconsequent = [0, 0.4, 1]\n");
    CHECK_THROWS_AS(oracle_check(config), std::invalid_argument);
}

TEST_CASE("the audit report prints one line per record plus a summary") {
    const CheckReport check = oracle_check(default_config());
    const std::string text = format_check_report(check);
    CHECK(text.find("[match]") != std::string::npos);
    CHECK(text.find("[erratum]") != std::string::npos);
    CHECK(text.find("[bug]") == std::string::npos);
    CHECK(text.find("154 match, 25 errata, 0 bugs") != std::string::npos);
}

// --- rendering --------------------------------------------------------------

TEST_CASE("csv output is long-format with an exact header") {
    const Report report = run_suite(default_config());
    const std::string csv = render_csv(report);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "method,family,direction,case,rpcf,conclusion");
    std::size_t lines = 0;
    for (const char c : csv) {
        if (c == '\n') ++lines;
    }
    CHECK(lines == 1 + 136);
    CHECK(csv.find("cri,zadeh,fmp,1,") != std::string::npos);
    CHECK(csv.find("dmm,two_valued,fmt,9,") != std::string::npos);
    // byte stability
    CHECK(render_csv(run_suite(default_config())) == csv);
}

TEST_CASE("json output inverts exactly") {
    ExperimentConfig config = default_config();
    config.classes = {1, 2};
    config.format = OutputFormat::Json;
    const Report report = run_suite(config);
    const std::string text = render_json(report);
    const Report back = report_from_json(text);
    CHECK(back == report);
    CHECK(render_json(back) == text);
}

TEST_CASE("json round-trip survives filtered methods and custom rules") {
    ExperimentConfig config = parse_config(
        "antecedent = [1, 0.5, 0]\nconsequent = [0, 0.5, 1]\n"
        "methods = dmm:two_valued cri:goguen\ntarget_mode = plain\n");
    const Report report = run_suite(config);
    CHECK(report_from_json(render_json(report)) == report);
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(report_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("[1, 2]"), std::invalid_argument);
}

TEST_CASE("markdown output carries the aggregate table and annotations") {
    ExperimentConfig config = default_config();
    config.format = OutputFormat::Markdown;
    const Report report = run_suite(config);
    const std::string md = render_markdown(report);
    CHECK(md.find("| method | class | forward | backward | overall |") !=
          std::string::npos);
    CHECK(md.find("88.06") != std::string::npos);  // dmm:three_valued overall
    CHECK(md.find("## cri:zadeh") != std::string::npos);
    CHECK(md.find("## Annotations") != std::string::npos);
    CHECK(render_report(report, OutputFormat::Markdown) == md);
    CHECK(render_report(report, OutputFormat::Csv) == render_csv(report));
}

TEST_CASE("reference tables regenerate into seven files") {
    TempDir tmp;
    const auto written = write_reference_tables(tmp.path / "tables");
    REQUIRE(written.size() == 7);
    const std::vector<std::string> want{
        "qip_class1.md",  "cri_class1.md",        "tip_class1.md",
        "aars_class1.md", "dmm_class1.md",        "comparison_class1.md",
        "comparison_class2.md"};
    for (std::size_t k = 0; k < written.size(); ++k) {
        CHECK(written[k].filename().string() == want[k]);
        CHECK(std::filesystem::file_size(written[k]) > 0);
    }
    std::ifstream in(written[0]);
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(body.find("qip:lukasiewicz") != std::string::npos);
    CHECK(body.find("unreconstructable") != std::string::npos);
    CHECK(body.find("42.95") != std::string::npos);  // the printed source value
}
