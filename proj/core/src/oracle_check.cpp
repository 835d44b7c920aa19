#include "fuzzrp/harness/oracle_check.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fuzzrp/inference.hpp"
#include "fuzzrp/reductive.hpp"

// The recomputation below deliberately shares nothing with inference.cpp,
// reductive.cpp, or runner.cpp except the scalar implies/tnorm calls: premises,
// targets, method kernels, scores, and aggregates are all re-derived with
// plain loops over std::vector<double>. A disagreement between the two routes
// is therefore a bug in one of them, not a shared mistake.

namespace fuzzrp {

namespace {

constexpr double kDegreeTol = 5e-3;    // printed vectors carry ~3 decimals
constexpr double kRouteTol = 1e-9;     // production vs recomputed, both doubles

using Vec = std::vector<double>;

Vec vec_pow(const Vec& v, double p) {
    Vec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = std::pow(v[k], p);
    return out;
}

Vec vec_comp(const Vec& v) {
    Vec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = 1.0 - v[k];
    return out;
}

Vec naive_premise(int case_id, const Vec& a, const Vec& b, const Vec& tilt_a,
                  const Vec& tilt_b) {
    switch (case_id) {
        case 1: return a;
        case 2: return vec_pow(a, 2.0);
        case 3: return vec_pow(a, 0.5);
        case 4: return vec_comp(a);
        case 5: return tilt_a;
        case 6: return vec_comp(b);
        case 7: return vec_comp(vec_pow(b, 2.0));
        case 8: return vec_comp(vec_pow(b, 0.5));
        case 9: return b;
        case 10: return vec_comp(tilt_b);
    }
    throw std::logic_error("naive_premise: bad case");
}

Vec naive_target(int case_id, const Vec& a, const Vec& b, const Vec& tilt_a,
                 const Vec& tilt_b) {
    switch (case_id) {
        case 1: return b;
        case 2: return vec_pow(b, 2.0);
        case 3: return vec_pow(b, 0.5);
        case 4: return vec_comp(b);
        case 5: return tilt_b;
        case 6: return vec_comp(a);
        case 7: return vec_comp(vec_pow(a, 2.0));
        case 8: return vec_comp(vec_pow(a, 0.5));
        case 9: return a;
        case 10: return vec_comp(tilt_a);
    }
    throw std::logic_error("naive_target: bad case");
}

// The set the dmm quasi vector perturbs, per the case ladder.
Vec naive_dmm_base(int case_id, const Vec& a, const Vec& b, const Vec& tilt_a,
                   const Vec& tilt_b) {
    switch (case_id) {
        case 1:
        case 2:
        case 3: return b;
        case 4: return vec_comp(b);
        case 5: return tilt_b;
        case 6:
        case 7:
        case 8: return vec_comp(a);
        case 9: return a;
        case 10: return vec_comp(tilt_a);
    }
    throw std::logic_error("naive_dmm_base: bad case");
}

double naive_rpcf(const Vec& c, const Vec& t) {
    double sum = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) sum += std::fabs(c[k] - t[k]);
    return (1.0 - sum / static_cast<double>(c.size())) * 100.0;
}

Vec naive_compose(const Vec& premise, const Vec& a, const Vec& b,
                  OperatorFamily f) {
    Vec out(b.size(), 0.0);
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[j] = std::max(out[j],
                              tnorm(f, premise[i], implies(f, a[i], b[j])));
        }
    }
    return out;
}

Vec naive_tip_fmt(const Vec& premise, const Vec& a, const Vec& b,
                  OperatorFamily f) {
    Vec out(a.size(), 1.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i] = std::min(out[i],
                              implies(f, implies(f, a[i], b[j]), premise[j]));
        }
    }
    return out;
}

Vec naive_qip(const Vec& premise, const Vec& a, const Vec& b, OperatorFamily f,
              bool forward) {
    if (forward) {
        Vec out(b.size(), 0.0);
        for (std::size_t j = 0; j < b.size(); ++j) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double g =
                    tnorm(f, premise[i], implies(f, premise[i], a[i]));
                out[j] = std::max(out[j], tnorm(f, g, implies(f, a[i], b[j])));
            }
        }
        return out;
    }
    Vec out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double g = tnorm(f, a[i], implies(f, a[i], b[j]));
            out[i] = std::max(out[i], tnorm(f, g, implies(f, b[j], premise[j])));
        }
    }
    return out;
}

double naive_euclid(const Vec& x, const Vec& y) {
    double sum = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sum += (x[k] - y[k]) * (x[k] - y[k]);
    }
    return std::sqrt(sum / static_cast<double>(x.size()));
}

Vec naive_aars(const Vec& premise, const Vec& reference, const Vec& source,
               AarsForm form) {
    const double s = 1.0 / (1.0 + naive_euclid(premise, reference));
    Vec out(source.size());
    for (std::size_t k = 0; k < source.size(); ++k) {
        out[k] = form == AarsForm::MoreOrLess ? std::min(1.0, source[k] / s)
                                              : source[k] * s;
    }
    return out;
}

Vec naive_dmm(const Vec& premise, const Vec& reference, const Vec& base,
              SignForm form) {
    bool disjoint = true;
    for (std::size_t k = 0; k < premise.size(); ++k) {
        if (std::min(premise[k], reference[k]) > 0.0) disjoint = false;
    }
    if (disjoint) {
        return Vec(base.size(), 0.0);
    }
    const double dm = naive_euclid(premise, reference);
    Vec quasi(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
        double s = 0.0;
        const double d = premise[k] - reference[k];
        if (d > 0.0) s = 1.0;
        else if (d < 0.0) s = -1.0;
        else s = form == SignForm::TwoValued ? 1.0 : 0.0;
        quasi[k] = base[k] + dm * s;
    }
    const double xi = *std::max_element(quasi.begin(), quasi.end());
    const double eta = *std::min_element(quasi.begin(), quasi.end());
    if (xi == eta) {
        return Vec(base.size(), 0.0);
    }
    Vec out(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
        out[k] = (quasi[k] - eta) / (xi - eta);
    }
    return out;
}

Vec naive_conclusion(const MethodVariant& v, int case_id, const Vec& a,
                     const Vec& b, const Vec& tilt_a, const Vec& tilt_b) {
    const Vec premise = naive_premise(case_id, a, b, tilt_a, tilt_b);
    const bool forward = case_id <= 5;
    switch (v.kind) {
        case MethodKind::Cri:
        case MethodKind::Tip:
            if (forward || v.kind == MethodKind::Cri) {
                return naive_compose(premise, a, b, *v.family);
            }
            return naive_tip_fmt(premise, a, b, *v.family);
        case MethodKind::Qip:
            return naive_qip(premise, a, b, *v.family, forward);
        case MethodKind::Aars:
            return forward ? naive_aars(premise, a, b, *v.aars_form)
                           : naive_aars(premise, b, a, *v.aars_form);
        case MethodKind::Dmm: {
            const Vec base = naive_dmm_base(case_id, a, b, tilt_a, tilt_b);
            const Vec reference = forward ? a : vec_comp(b);
            return naive_dmm(premise, reference, base, *v.sign_form);
        }
    }
    throw std::logic_error("naive_conclusion: bad method");
}

double naive_case_rpcf(const MethodVariant& v, int case_id, const Vec& a,
                       const Vec& b, const Vec& tilt_a, const Vec& tilt_b) {
    return naive_rpcf(naive_conclusion(v, case_id, a, b, tilt_a, tilt_b),
                      naive_target(case_id, a, b, tilt_a, tilt_b));
}

// Production route: the real pipeline end to end.
DiscreteFuzzySet production_conclusion(const ExperimentConfig& config,
                                       const MethodVariant& v,
                                       const CaseSpec& spec) {
    const DiscreteFuzzySet premise = generate_premise(config.rule, spec);
    const bool forward = case_direction(spec.case_id) == Direction::Fmp;
    switch (v.kind) {
        case MethodKind::Cri:
            return (forward ? cri_fmp(config.rule, premise, *v.family)
                            : cri_fmt(config.rule, premise, *v.family))
                .conclusion;
        case MethodKind::Tip:
            return (forward ? tip_fmp(config.rule, premise, *v.family)
                            : tip_fmt(config.rule, premise, *v.family))
                .conclusion;
        case MethodKind::Qip:
            return (forward ? qip_fmp(config.rule, premise, *v.family)
                            : qip_fmt(config.rule, premise, *v.family))
                .conclusion;
        case MethodKind::Aars:
            return (forward ? aars_fmp(config.rule, premise, *v.aars_form)
                            : aars_fmt(config.rule, premise, *v.aars_form))
                .conclusion;
        case MethodKind::Dmm: {
            DmmBase base = DmmBase::plain();
            switch (spec.case_id) {
                case 4: case 6: case 7: case 8:
                    base = DmmBase::complement_of_rule();
                    break;
                case 5: case 10:
                    base = DmmBase::custom_set(*spec.tilted_target);
                    break;
                default:
                    break;
            }
            return (forward ? dmm_fmp(config.rule, premise, *v.sign_form, base)
                            : dmm_fmt(config.rule, premise, *v.sign_form, base))
                .conclusion;
        }
    }
    throw std::logic_error("production_conclusion: bad method");
}

double max_gap(const Vec& x, const Vec& y) {
    double gap = 0.0;
    for (std::size_t k = 0; k < std::max(x.size(), y.size()); ++k) {
        if (k >= x.size() || k >= y.size()) return 1.0;
        gap = std::max(gap, std::fabs(x[k] - y[k]));
    }
    return gap;
}

std::string cell_name(const PrintedCell& cell) {
    std::string name = std::string(cell.table) + " " + cell.variant.id();
    switch (cell.kind) {
        case CellKind::PerCase:
            return name + " case " + std::to_string(cell.case_id);
        case CellKind::FmpAggregate: return name + " fmp aggregate";
        case CellKind::FmtAggregate: return name + " fmt aggregate";
        case CellKind::Overall: return name + " overall";
    }
    return name;
}

std::string two_decimals(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << v;
    return out.str();
}

}  // namespace

std::string_view discrepancy_label_name(DiscrepancyLabel label) noexcept {
    switch (label) {
        case DiscrepancyLabel::MatchesPrinted: return "match";
        case DiscrepancyLabel::SourceErratum: return "erratum";
        case DiscrepancyLabel::ImplementationBug: return "bug";
    }
    return "?";
}

CheckReport oracle_check(const ExperimentConfig& config) {
    if (!(config.rule == default_rule())) {
        throw std::invalid_argument(
            "oracle_check: golden fixtures describe the default rule only");
    }
    if (config.target_mode != TargetMode::Hedged) {
        throw std::invalid_argument(
            "oracle_check: golden fixtures are hedged-target scores");
    }
    const Vec a = config.rule.antecedent.degrees();
    const Vec b = config.rule.consequent.degrees();
    const Vec tilt_a = config.tilted_antecedent
                           ? config.tilted_antecedent->degrees()
                           : default_tilted_antecedent().degrees();
    const Vec tilt_b = config.tilted_consequent
                           ? config.tilted_consequent->degrees()
                           : default_tilted_consequent().degrees();

    CheckReport report;
    for (const PrintedCell& cell : printed_cells()) {
        if (std::find(config.classes.begin(), config.classes.end(),
                      cell.class_id) == config.classes.end()) {
            continue;
        }
        if (std::find(config.methods.begin(), config.methods.end(),
                      cell.variant) == config.methods.end()) {
            continue;
        }

        DiscrepancyRecord rec;
        rec.cell = &cell;

        // Both routes, per cell kind.
        std::vector<int> case_ids;
        if (cell.kind == CellKind::PerCase) {
            case_ids = {cell.case_id};
        } else {
            for (int id = 1; id <= 10; ++id) {
                if (!case_in_class(id, cell.class_id)) continue;
                const bool fwd = id <= 5;
                if (cell.kind == CellKind::FmpAggregate && !fwd) continue;
                if (cell.kind == CellKind::FmtAggregate && fwd) continue;
                case_ids.push_back(id);
            }
        }

        const std::vector<CaseSpec> specs = make_class_cases(
            cell.class_id, config.rule,
            DiscreteFuzzySet(tilt_a), DiscreteFuzzySet(tilt_b));

        double naive_sum = 0.0;
        double production_sum = 0.0;
        double route_gap = 0.0;
        Vec production_vec;
        for (const int id : case_ids) {
            const double naive_score =
                naive_case_rpcf(cell.variant, id, a, b, tilt_a, tilt_b);
            const auto spec_it =
                std::find_if(specs.begin(), specs.end(),
                             [&](const CaseSpec& s) { return s.case_id == id; });
            const DiscreteFuzzySet conclusion =
                production_conclusion(config, cell.variant, *spec_it);
            const double production_score = rpcf_single(
                conclusion, expected_target(config.rule, *spec_it,
                                            TargetMode::Hedged));
            naive_sum += naive_score;
            production_sum += production_score;
            route_gap = std::max(
                route_gap,
                max_gap(conclusion.degrees(),
                        naive_conclusion(cell.variant, id, a, b, tilt_a,
                                         tilt_b)));
            production_vec = conclusion.degrees();
        }
        // For Overall cells the mean over all eight cases equals the mean of
        // the two directional aggregates, since both directions have four.
        const double n = static_cast<double>(case_ids.size());
        rec.recomputed_rpcf = naive_sum / n;
        rec.production_rpcf = production_sum / n;

        if (!cell.printed_conclusion.empty()) {
            rec.conclusion_gap = max_gap(production_vec, cell.printed_conclusion);
        }

        const bool routes_agree =
            std::fabs(rec.production_rpcf - rec.recomputed_rpcf) <= kRouteTol &&
            route_gap <= kRouteTol;
        const bool frozen_agrees =
            std::fabs(rec.recomputed_rpcf - cell.oracle_rpcf) <= kRouteTol;
        const bool printed_rpcf_agrees =
            std::isnan(cell.printed_rpcf) ||
            std::fabs(cell.printed_rpcf - rec.recomputed_rpcf) <=
                config.tolerance;
        const bool printed_vec_agrees = cell.printed_conclusion.empty() ||
                                        rec.conclusion_gap <= kDegreeTol;

        std::ostringstream detail;
        detail << "printed " << two_decimals(cell.printed_rpcf)
               << ", recomputed " << two_decimals(rec.recomputed_rpcf)
               << ", production " << two_decimals(rec.production_rpcf);
        if (!routes_agree) {
            rec.label = DiscrepancyLabel::ImplementationBug;
            detail << " — production and recomputation disagree";
        } else if (!frozen_agrees) {
            rec.label = DiscrepancyLabel::ImplementationBug;
            detail << " — recomputation drifted from the frozen value "
                   << two_decimals(cell.oracle_rpcf);
        } else if (!printed_rpcf_agrees || !printed_vec_agrees) {
            rec.label = DiscrepancyLabel::SourceErratum;
            if (!cell.note.empty()) {
                detail << " — " << cell.note;
            }
        } else {
            rec.label = DiscrepancyLabel::MatchesPrinted;
        }
        rec.detail = detail.str();

        switch (rec.label) {
            case DiscrepancyLabel::MatchesPrinted: ++report.matches; break;
            case DiscrepancyLabel::SourceErratum: ++report.errata; break;
            case DiscrepancyLabel::ImplementationBug: ++report.bugs; break;
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::string format_check_report(const CheckReport& report) {
    std::ostringstream out;
    for (const DiscrepancyRecord& rec : report.records) {
        out << "[" << discrepancy_label_name(rec.label) << "] "
            << cell_name(*rec.cell) << ": " << rec.detail << "\n";
    }
    out << report.matches << " match, " << report.errata << " errata, "
        << report.bugs << " bugs\n";
    return out.str();
}

}  // namespace fuzzrp
