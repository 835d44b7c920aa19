#include "fuzzrp/harness/runner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fuzzrp/harness/fixtures.hpp"

namespace fuzzrp {

namespace {

// The base dmm perturbs follows the case ladder: plain consequent side for
// the identity-shaped cases, its complement for the complement-shaped ones,
// and the case's own tilted target for the tilted ones.
DmmBase dmm_base_for_case(const CaseSpec& spec) {
    switch (spec.case_id) {
        case 1:
        case 2:
        case 3:
        case 9:
            return DmmBase::plain();
        case 4:
        case 6:
        case 7:
        case 8:
            return DmmBase::complement_of_rule();
        case 5:
        case 10:
            return DmmBase::custom_set(*spec.tilted_target);
    }
    throw std::logic_error("dmm_base_for_case: unreachable");
}

InferenceOutcome run_cell(const FuzzyRule& rule, const MethodVariant& variant,
                          const CaseSpec& spec,
                          const DiscreteFuzzySet& premise) {
    const bool forward = case_direction(spec.case_id) == Direction::Fmp;
    switch (variant.kind) {
        case MethodKind::Cri:
            return forward ? cri_fmp(rule, premise, *variant.family)
                           : cri_fmt(rule, premise, *variant.family);
        case MethodKind::Tip:
            return forward ? tip_fmp(rule, premise, *variant.family)
                           : tip_fmt(rule, premise, *variant.family);
        case MethodKind::Qip:
            return forward ? qip_fmp(rule, premise, *variant.family)
                           : qip_fmt(rule, premise, *variant.family);
        case MethodKind::Aars:
            return forward ? aars_fmp(rule, premise, *variant.aars_form)
                           : aars_fmt(rule, premise, *variant.aars_form);
        case MethodKind::Dmm: {
            const DmmBase base = dmm_base_for_case(spec);
            return forward ? dmm_fmp(rule, premise, *variant.sign_form, base)
                           : dmm_fmt(rule, premise, *variant.sign_form, base);
        }
    }
    throw std::logic_error("run_cell: unreachable");
}

struct ScoredCell {
    DiscreteFuzzySet target;
    double rpcf = 0.0;
};

ScoredCell score_cell(const FuzzyRule& rule, const CaseSpec& spec,
                      const DiscreteFuzzySet& conclusion, TargetMode mode) {
    if (mode != TargetMode::Best) {
        DiscreteFuzzySet target = expected_target(rule, spec, mode);
        const double rpcf = rpcf_single(conclusion, target);
        return {std::move(target), rpcf};
    }
    TargetPair pair = expected_targets(rule, spec);
    const double hedged = rpcf_single(conclusion, pair.hedged);
    const double plain = rpcf_single(conclusion, pair.plain);
    if (plain > hedged) {
        return {std::move(pair.plain), plain};
    }
    return {std::move(pair.hedged), hedged};
}

std::string format_score(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << v;
    return out.str();
}

bool uses_default_fixture_inputs(const ExperimentConfig& config) {
    if (!(config.rule == default_rule())) {
        return false;
    }
    const bool tilt_a_ok = !config.tilted_antecedent ||
                           *config.tilted_antecedent == default_tilted_antecedent();
    const bool tilt_b_ok = !config.tilted_consequent ||
                           *config.tilted_consequent == default_tilted_consequent();
    return tilt_a_ok && tilt_b_ok;
}

void annotate_rpcf(std::vector<std::string>& annotations,
                   const PrintedCell* cell, const std::string& where,
                   double computed, double tolerance) {
    if (cell == nullptr || std::isnan(cell->printed_rpcf)) {
        return;
    }
    if (std::fabs(computed - cell->printed_rpcf) <= tolerance) {
        return;
    }
    std::ostringstream out;
    out << where << ": computed " << format_score(computed)
        << " vs printed " << format_score(cell->printed_rpcf) << " ("
        << fixture_status_name(cell->status);
    if (!cell->note.empty()) {
        out << ": " << cell->note;
    }
    out << ")";
    annotations.push_back(out.str());
}

}  // namespace

Report run_suite(const ExperimentConfig& config) {
    if (config.methods.empty()) {
        throw std::invalid_argument("run_suite: no methods configured");
    }
    if (config.classes.empty()) {
        throw std::invalid_argument("run_suite: no classes configured");
    }

    Report report;
    report.config = config;

    // Cases shared between the configured classes are evaluated once; the
    // ladder is id-ordered, which puts forward cases first.
    std::map<int, CaseSpec> merged;
    std::map<int, std::vector<int>> class_cases;
    for (const int class_id : config.classes) {
        for (CaseSpec& spec :
             make_class_cases(class_id, config.rule, config.tilted_antecedent,
                              config.tilted_consequent)) {
            class_cases[class_id].push_back(spec.case_id);
            merged.try_emplace(spec.case_id, std::move(spec));
        }
    }

    const bool annotate = uses_default_fixture_inputs(config);

    for (const MethodVariant& variant : config.methods) {
        std::map<int, double> case_rpcf;
        for (const auto& [case_id, spec] : merged) {
            ReportRow row;
            row.variant = variant;
            row.direction = case_direction(case_id);
            row.case_id = case_id;
            row.premise = generate_premise(config.rule, spec);
            InferenceOutcome outcome =
                run_cell(config.rule, variant, spec, row.premise);
            row.conclusion = std::move(outcome.conclusion);
            ScoredCell scored =
                score_cell(config.rule, spec, row.conclusion, config.target_mode);
            row.target = std::move(scored.target);
            row.rpcf = scored.rpcf;
            case_rpcf[case_id] = row.rpcf;
            if (annotate) {
                annotate_rpcf(report.annotations,
                              find_cell(variant, 1, CellKind::PerCase, case_id),
                              variant.id() + " case " + std::to_string(case_id),
                              row.rpcf, config.tolerance);
            }
            report.rows.push_back(std::move(row));
        }

        for (const int class_id : config.classes) {
            AggregateRow agg;
            agg.variant = variant;
            agg.class_id = class_id;
            std::vector<double> fmp_scores;
            std::vector<double> fmt_scores;
            for (const int case_id : class_cases[class_id]) {
                (case_direction(case_id) == Direction::Fmp ? fmp_scores
                                                           : fmt_scores)
                    .push_back(case_rpcf.at(case_id));
            }
            agg.fmp = rpcf_aggregate(fmp_scores);
            agg.fmt = rpcf_aggregate(fmt_scores);
            agg.overall = rpcf_overall(agg.fmp, agg.fmt);
            if (annotate) {
                const std::string where = variant.id() + " class " +
                                          std::to_string(class_id);
                annotate_rpcf(report.annotations,
                              find_cell(variant, class_id, CellKind::FmpAggregate),
                              where + " fmp aggregate", agg.fmp,
                              config.tolerance);
                annotate_rpcf(report.annotations,
                              find_cell(variant, class_id, CellKind::FmtAggregate),
                              where + " fmt aggregate", agg.fmt,
                              config.tolerance);
                annotate_rpcf(report.annotations,
                              find_cell(variant, class_id, CellKind::Overall),
                              where + " overall", agg.overall,
                              config.tolerance);
            }
            report.aggregates.push_back(std::move(agg));
        }
    }
    return report;
}

}  // namespace fuzzrp
