#include "fuzzrp/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fuzzrp {

namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw std::invalid_argument(std::string(what) + ": expected size " +
                                    std::to_string(want) + ", got " +
                                    std::to_string(got));
    }
}

void require_nonempty(const DiscreteFuzzySet& s, const char* what) {
    if (s.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty fuzzy set");
    }
}

void require_rule(const FuzzyRule& rule, const char* what) {
    require_nonempty(rule.antecedent, what);
    require_nonempty(rule.consequent, what);
}

void require_residual(OperatorFamily family, const char* what) {
    if (!is_residual(family)) {
        throw std::invalid_argument(
            std::string(what) + ": requires a residuated family, not zadeh");
    }
}

void require_square_rule(const FuzzyRule& rule, const char* what) {
    if (rule.antecedent.size() != rule.consequent.size()) {
        throw std::invalid_argument(std::string(what) +
                                    ": requires equal-size universes");
    }
}

InferenceOutcome compositional_outcome(const char* method,
                                       OperatorFamily family,
                                       DiscreteFuzzySet conclusion) {
    InferenceOutcome out;
    out.conclusion = std::move(conclusion);
    out.method = method;
    out.family = family;
    return out;
}

// The shared sup-t kernel of cri_fmp / cri_fmt / tip_fmp. Candidates are
// folded with a running max in index order; re-evaluations that follow the
// same scalar call order reproduce it bit for bit.
DiscreteFuzzySet sup_t_compose(const DiscreteFuzzySet& premise,
                               const DiscreteFuzzySet& a,
                               const DiscreteFuzzySet& b,
                               OperatorFamily family) {
    std::vector<double> out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            best = std::max(best, tnorm(family, premise[i], implies(family, a[i], b[j])));
        }
        out[j] = best;
    }
    return DiscreteFuzzySet(std::move(out));
}

DiscreteFuzzySet resolve_dmm_base(const DmmBase& base,
                                  const DiscreteFuzzySet& plain,
                                  std::size_t want, const char* what) {
    DiscreteFuzzySet resolved;
    switch (base.kind) {
        case DmmBase::Kind::Plain:
            resolved = plain;
            break;
        case DmmBase::Kind::Complement:
            resolved = complement(plain);
            break;
        case DmmBase::Kind::Custom:
            if (!base.custom) {
                throw std::invalid_argument(std::string(what) +
                                            ": custom base without a vector");
            }
            resolved = *base.custom;
            break;
    }
    require_size(resolved.size(), want, what);
    return resolved;
}

// Difference -> sign -> quasi -> unit rescale, shared by both dmm directions.
// `reference` is what the premise is compared against; `base` is what the
// quasi vector perturbs. Both must match the premise in size.
InferenceOutcome dmm_run(const DiscreteFuzzySet& premise,
                         const DiscreteFuzzySet& reference,
                         const DiscreteFuzzySet& base, SignForm form,
                         const char* what) {
    require_size(premise.size(), reference.size(), what);
    require_size(base.size(), reference.size(), what);

    InferenceOutcome out;
    out.method = "dmm";
    out.sign_form = form;

    DmmTrace trace;
    trace.difference.resize(premise.size());
    for (std::size_t k = 0; k < premise.size(); ++k) {
        trace.difference[k] = premise[k] - reference[k];
    }
    trace.sign = sign_vector(trace.difference, form);
    trace.distance = euclid_dm(premise, reference);

    if (is_disjoint(premise, reference)) {
        // No overlap means no evidence to perturb with; the conclusion is
        // empty membership everywhere.
        trace.disjoint = true;
        out.trace = std::move(trace);
        out.conclusion =
            DiscreteFuzzySet(std::vector<double>(base.size(), 0.0));
        return out;
    }

    trace.quasi.resize(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
        trace.quasi[k] = base[k] + trace.distance * trace.sign[k];
    }
    NormalizeResult norm = normalize_unit(trace.quasi);
    trace.xi = norm.xi;
    trace.eta = norm.eta;
    trace.degenerate = norm.degenerate;
    out.trace = std::move(trace);
    out.conclusion = std::move(norm.set);
    return out;
}

double aars_scale(const DiscreteFuzzySet& premise,
                  const DiscreteFuzzySet& reference) {
    // distance <= 1 on unit-interval sets, so the scale lives in [1/2, 1].
    return 1.0 / (1.0 + euclid_dm(premise, reference));
}

DiscreteFuzzySet aars_shape(const DiscreteFuzzySet& source, double scale,
                            AarsForm form) {
    std::vector<double> out(source.size());
    for (std::size_t k = 0; k < source.size(); ++k) {
        out[k] = form == AarsForm::MoreOrLess
                     ? std::min(1.0, source[k] / scale)
                     : source[k] * scale;
    }
    return DiscreteFuzzySet(std::move(out));
}

InferenceOutcome aars_outcome(DiscreteFuzzySet conclusion, AarsForm form) {
    InferenceOutcome out;
    out.conclusion = std::move(conclusion);
    out.method = "aars";
    out.aars_form = form;
    return out;
}

}  // namespace

InferenceOutcome cri_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family) {
    require_rule(rule, "cri_fmp");
    require_size(premise.size(), rule.antecedent.size(), "cri_fmp");
    return compositional_outcome(
        "cri", family,
        sup_t_compose(premise, rule.antecedent, rule.consequent, family));
}

InferenceOutcome cri_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family) {
    require_rule(rule, "cri_fmt");
    require_square_rule(rule, "cri_fmt");
    require_size(premise.size(), rule.consequent.size(), "cri_fmt");
    return compositional_outcome(
        "cri", family,
        sup_t_compose(premise, rule.antecedent, rule.consequent, family));
}

InferenceOutcome tip_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family) {
    require_residual(family, "tip_fmp");
    require_rule(rule, "tip_fmp");
    require_size(premise.size(), rule.antecedent.size(), "tip_fmp");
    return compositional_outcome(
        "tip", family,
        sup_t_compose(premise, rule.antecedent, rule.consequent, family));
}

InferenceOutcome tip_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family) {
    require_residual(family, "tip_fmt");
    require_rule(rule, "tip_fmt");
    require_size(premise.size(), rule.consequent.size(), "tip_fmt");
    const DiscreteFuzzySet& a = rule.antecedent;
    const DiscreteFuzzySet& b = rule.consequent;
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double worst = 1.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            worst = std::min(
                worst, implies(family, implies(family, a[i], b[j]), premise[j]));
        }
        out[i] = worst;
    }
    return compositional_outcome("tip", family,
                                 DiscreteFuzzySet(std::move(out)));
}

InferenceOutcome qip_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family) {
    require_residual(family, "qip_fmp");
    require_rule(rule, "qip_fmp");
    require_size(premise.size(), rule.antecedent.size(), "qip_fmp");
    const DiscreteFuzzySet& a = rule.antecedent;
    const DiscreteFuzzySet& b = rule.consequent;
    std::vector<double> out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double graded =
                tnorm(family, premise[i], implies(family, premise[i], a[i]));
            best = std::max(best,
                            tnorm(family, graded, implies(family, a[i], b[j])));
        }
        out[j] = best;
    }
    return compositional_outcome("qip", family,
                                 DiscreteFuzzySet(std::move(out)));
}

InferenceOutcome qip_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family) {
    require_residual(family, "qip_fmt");
    require_rule(rule, "qip_fmt");
    require_size(premise.size(), rule.consequent.size(), "qip_fmt");
    const DiscreteFuzzySet& a = rule.antecedent;
    const DiscreteFuzzySet& b = rule.consequent;
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double best = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double graded =
                tnorm(family, a[i], implies(family, a[i], b[j]));
            best = std::max(
                best, tnorm(family, graded, implies(family, b[j], premise[j])));
        }
        out[i] = best;
    }
    return compositional_outcome("qip", family,
                                 DiscreteFuzzySet(std::move(out)));
}

double euclid_dm(const DiscreteFuzzySet& a, const DiscreteFuzzySet& b) {
    require_nonempty(a, "euclid_dm");
    require_size(b.size(), a.size(), "euclid_dm");
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(a.size()));
}

std::vector<int> sign_vector(std::span<const double> diff, SignForm form) {
    std::vector<int> out(diff.size());
    for (std::size_t k = 0; k < diff.size(); ++k) {
        if (diff[k] > 0.0) {
            out[k] = 1;
        } else if (diff[k] < 0.0) {
            out[k] = -1;
        } else {
            out[k] = form == SignForm::TwoValued ? 1 : 0;
        }
    }
    return out;
}

NormalizeResult normalize_unit(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("normalize_unit: empty input");
    }
    NormalizeResult result;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    result.eta = *lo;
    result.xi = *hi;
    std::vector<double> out(values.size(), 0.0);
    if (result.xi == result.eta) {
        result.degenerate = true;
    } else {
        const double span = result.xi - result.eta;
        for (std::size_t k = 0; k < values.size(); ++k) {
            out[k] = (values[k] - result.eta) / span;
        }
    }
    result.set = DiscreteFuzzySet(std::move(out));
    return result;
}

InferenceOutcome aars_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                          AarsForm form) {
    require_rule(rule, "aars_fmp");
    require_size(premise.size(), rule.antecedent.size(), "aars_fmp");
    const double s = aars_scale(premise, rule.antecedent);
    return aars_outcome(aars_shape(rule.consequent, s, form), form);
}

InferenceOutcome aars_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                          AarsForm form) {
    require_rule(rule, "aars_fmt");
    require_size(premise.size(), rule.consequent.size(), "aars_fmt");
    const double s = aars_scale(premise, rule.consequent);
    return aars_outcome(aars_shape(rule.antecedent, s, form), form);
}

InferenceOutcome dmm_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         SignForm form, const DmmBase& base) {
    require_rule(rule, "dmm_fmp");
    require_size(premise.size(), rule.antecedent.size(), "dmm_fmp");
    require_square_rule(rule, "dmm_fmp");
    DiscreteFuzzySet resolved = resolve_dmm_base(
        base, rule.consequent, rule.antecedent.size(), "dmm_fmp");
    return dmm_run(premise, rule.antecedent, resolved, form, "dmm_fmp");
}

InferenceOutcome dmm_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         SignForm form, const DmmBase& base) {
    require_rule(rule, "dmm_fmt");
    require_size(premise.size(), rule.consequent.size(), "dmm_fmt");
    require_square_rule(rule, "dmm_fmt");
    // The backward direction reasons from the contrapositive reading of the
    // rule: the premise is compared against the negated consequent and the
    // perturbed base defaults to the antecedent.
    DiscreteFuzzySet resolved = resolve_dmm_base(
        base, rule.antecedent, rule.consequent.size(), "dmm_fmt");
    return dmm_run(premise, complement(rule.consequent), resolved, form,
                   "dmm_fmt");
}

std::vector<DiscreteFuzzySet> union_conclusions(
    std::span<const InferenceOutcome> outcomes) {
    if (outcomes.empty()) {
        throw std::invalid_argument("union_conclusions: empty input");
    }
    std::vector<DiscreteFuzzySet> out;
    out.reserve(outcomes.size());
    for (const InferenceOutcome& o : outcomes) {
        out.push_back(o.conclusion);
    }
    return out;
}

}  // namespace fuzzrp
