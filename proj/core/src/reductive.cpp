#include "fuzzrp/reductive.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fuzzrp {

namespace {

void require_case_id(int case_id) {
    if (case_id < 1 || case_id > 10) {
        throw std::invalid_argument("case_id out of range: " +
                                    std::to_string(case_id));
    }
}

void require_class_id(int class_id) {
    if (class_id != 1 && class_id != 2) {
        throw std::invalid_argument("class_id out of range: " +
                                    std::to_string(class_id));
    }
}

bool needs_tilt(int case_id) { return case_id == 5 || case_id == 10; }

const DiscreteFuzzySet& tilt_or_throw(
    const std::optional<DiscreteFuzzySet>& tilt, const DiscreteFuzzySet& like,
    const char* what) {
    if (!tilt) {
        throw std::invalid_argument(std::string(what) +
                                    ": tilted vector required for this case");
    }
    if (tilt->size() != like.size()) {
        throw std::invalid_argument(std::string(what) +
                                    ": tilted vector size mismatch");
    }
    return *tilt;
}

}  // namespace

Direction case_direction(int case_id) {
    require_case_id(case_id);
    return case_id <= 5 ? Direction::Fmp : Direction::Fmt;
}

bool case_in_class(int case_id, int class_id) {
    require_case_id(case_id);
    require_class_id(class_id);
    if (case_id == 4 || case_id == 9) {
        return class_id == 1;
    }
    if (case_id == 5 || case_id == 10) {
        return class_id == 2;
    }
    return true;  // 1-3 and 6-8 belong to both
}

void validate_case(const FuzzyRule& rule, const CaseSpec& spec) {
    if (rule.antecedent.empty() || rule.consequent.empty()) {
        throw std::invalid_argument("validate_case: empty rule side");
    }
    require_case_id(spec.case_id);
    require_class_id(spec.class_id);
    if (!case_in_class(spec.case_id, spec.class_id)) {
        throw std::invalid_argument(
            "case " + std::to_string(spec.case_id) + " is not part of class " +
            std::to_string(spec.class_id));
    }
    if (needs_tilt(spec.case_id)) {
        const DiscreteFuzzySet& premise_like =
            case_direction(spec.case_id) == Direction::Fmp ? rule.antecedent
                                                           : rule.consequent;
        const DiscreteFuzzySet& target_like =
            case_direction(spec.case_id) == Direction::Fmp ? rule.consequent
                                                           : rule.antecedent;
        tilt_or_throw(spec.tilted_premise, premise_like, "validate_case");
        tilt_or_throw(spec.tilted_target, target_like, "validate_case");
    }
}

DiscreteFuzzySet generate_premise(const FuzzyRule& rule, const CaseSpec& spec) {
    validate_case(rule, spec);
    const DiscreteFuzzySet& a = rule.antecedent;
    const DiscreteFuzzySet& b = rule.consequent;
    switch (spec.case_id) {
        case 1: return a;
        case 2: return power_hedge(a, 2.0);
        case 3: return power_hedge(a, 0.5);
        case 4: return complement(a);
        case 5: return *spec.tilted_premise;
        case 6: return complement(b);
        case 7: return complement(power_hedge(b, 2.0));
        case 8: return complement(power_hedge(b, 0.5));
        case 9: return b;
        case 10: return *spec.tilted_premise;
    }
    throw std::logic_error("generate_premise: unreachable");
}

TargetPair expected_targets(const FuzzyRule& rule, const CaseSpec& spec) {
    validate_case(rule, spec);
    const DiscreteFuzzySet& a = rule.antecedent;
    const DiscreteFuzzySet& b = rule.consequent;
    const DiscreteFuzzySet plain = case_direction(spec.case_id) == Direction::Fmp
                                       ? b
                                       : complement(a);
    switch (spec.case_id) {
        case 1: return {b, plain};
        case 2: return {power_hedge(b, 2.0), plain};
        case 3: return {power_hedge(b, 0.5), plain};
        case 4: return {complement(b), plain};
        case 5: return {*spec.tilted_target, plain};
        case 6: return {complement(a), plain};
        case 7: return {complement(power_hedge(a, 2.0)), plain};
        case 8: return {complement(power_hedge(a, 0.5)), plain};
        case 9: return {a, plain};
        case 10: return {*spec.tilted_target, plain};
    }
    throw std::logic_error("expected_targets: unreachable");
}

DiscreteFuzzySet expected_target(const FuzzyRule& rule, const CaseSpec& spec,
                                 TargetMode mode) {
    if (mode == TargetMode::Best) {
        throw std::invalid_argument(
            "expected_target: Best has two candidates; use expected_targets()");
    }
    TargetPair pair = expected_targets(rule, spec);
    return mode == TargetMode::Hedged ? std::move(pair.hedged)
                                      : std::move(pair.plain);
}

std::vector<double> error_vector(const DiscreteFuzzySet& conclusion,
                                 const DiscreteFuzzySet& target) {
    if (conclusion.size() != target.size()) {
        throw std::invalid_argument("error_vector: size mismatch");
    }
    std::vector<double> out(conclusion.size());
    for (std::size_t k = 0; k < conclusion.size(); ++k) {
        out[k] = conclusion[k] - target[k];
    }
    return out;
}

double rpcf_single(const DiscreteFuzzySet& conclusion,
                   const DiscreteFuzzySet& target) {
    if (conclusion.empty()) {
        throw std::invalid_argument("rpcf_single: empty input");
    }
    double sum = 0.0;
    for (const double e : error_vector(conclusion, target)) {
        sum += std::fabs(e);
    }
    return (1.0 - sum / static_cast<double>(conclusion.size())) * 100.0;
}

double rpcf_aggregate(std::span<const double> per_case) {
    if (per_case.empty()) {
        throw std::invalid_argument("rpcf_aggregate: empty input");
    }
    double sum = 0.0;
    for (const double v : per_case) {
        sum += v;
    }
    return sum / static_cast<double>(per_case.size());
}

double rpcf_overall(double fmp_aggregate, double fmt_aggregate) {
    return (fmp_aggregate + fmt_aggregate) / 2.0;
}

std::vector<CaseSpec> make_class_cases(
    int class_id, const FuzzyRule& rule,
    const std::optional<DiscreteFuzzySet>& tilted_antecedent,
    const std::optional<DiscreteFuzzySet>& tilted_consequent) {
    require_class_id(class_id);
    std::vector<CaseSpec> cases;
    for (int case_id = 1; case_id <= 10; ++case_id) {
        if (!case_in_class(case_id, class_id)) {
            continue;
        }
        CaseSpec spec;
        spec.case_id = case_id;
        spec.class_id = class_id;
        if (case_id == 5) {
            spec.tilted_premise =
                tilt_or_throw(tilted_antecedent, rule.antecedent,
                              "make_class_cases(tilted_antecedent)");
            spec.tilted_target =
                tilt_or_throw(tilted_consequent, rule.consequent,
                              "make_class_cases(tilted_consequent)");
        } else if (case_id == 10) {
            spec.tilted_premise = complement(
                tilt_or_throw(tilted_consequent, rule.consequent,
                              "make_class_cases(tilted_consequent)"));
            spec.tilted_target = complement(
                tilt_or_throw(tilted_antecedent, rule.antecedent,
                              "make_class_cases(tilted_antecedent)"));
        }
        validate_case(rule, spec);
        cases.push_back(std::move(spec));
    }
    return cases;
}

}  // namespace fuzzrp
