#pragma once

// Five inference methods over a single fuzzy rule "if x is A then y is B",
// each in a forward form (premise about x, conclusion about y) and a backward
// form (premise about y, conclusion about x):
//
//   cri   compositional rule of inference (sup-t composition)
//   tip   triple implication principle (forward form coincides with cri)
//   qip   quintuple implication principle
//   aars  similarity-scaled analogy (distance -> scale -> hedge the output)
//   dmm   distance-measure method (difference -> sign -> quasi vector -> rescale)
//
// cri/tip/qip take an implication family; tip and qip require a residuated
// one. aars and dmm are operator-free.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzrp/fuzzy_set.hpp"
#include "fuzzrp/operators.hpp"

namespace fuzzrp {

struct FuzzyRule {
    DiscreteFuzzySet antecedent;  // A, over the input universe X
    DiscreteFuzzySet consequent;  // B, over the output universe Y

    bool operator==(const FuzzyRule&) const = default;
};

// How dmm maps a difference to a perturbation direction: ThreeValued keeps
// sign(0) = 0, TwoValued forces ties upward to +1.
enum class SignForm { ThreeValued, TwoValued };

// aars output shaping: MoreOrLess divides by the similarity scale and clips
// at 1; Reduction multiplies by it.
enum class AarsForm { MoreOrLess, Reduction };

// The set dmm perturbs to build its quasi conclusion. Plain and Complement
// are resolved against the rule at call time; Custom carries the vector.
struct DmmBase {
    enum class Kind { Plain, Complement, Custom };

    Kind kind = Kind::Plain;
    std::optional<DiscreteFuzzySet> custom;

    static DmmBase plain() { return {Kind::Plain, std::nullopt}; }
    static DmmBase complement_of_rule() { return {Kind::Complement, std::nullopt}; }
    static DmmBase custom_set(DiscreteFuzzySet s) { return {Kind::Custom, std::move(s)}; }

    bool operator==(const DmmBase&) const = default;
};

// Intermediate values of a dmm run, kept for auditing. When the premise and
// the reference set are disjoint the method short-circuits to the all-zero
// conclusion: quasi/xi/eta are then left empty.
struct DmmTrace {
    std::vector<double> difference;  // premise - reference, elementwise
    std::vector<int> sign;           // per SignForm
    double distance = 0.0;           // root mean square of difference
    std::vector<double> quasi;       // base + distance * sign
    double xi = 0.0;                 // max of quasi
    double eta = 0.0;                // min of quasi
    bool disjoint = false;
    bool degenerate = false;         // quasi was constant; conclusion forced to 0

    bool operator==(const DmmTrace&) const = default;
};

struct InferenceOutcome {
    DiscreteFuzzySet conclusion;
    std::string method;  // "cri", "tip", "qip", "aars", "dmm"
    std::optional<OperatorFamily> family;
    std::optional<AarsForm> aars_form;
    std::optional<SignForm> sign_form;
    std::optional<DmmTrace> trace;  // dmm only

    bool operator==(const InferenceOutcome&) const = default;
};

// --- compositional methods ------------------------------------------------
// Scalar evaluation order is part of the contract: each candidate is
// tnorm(premise_k, implies(...)) (qip: tnorm(tnorm(p, implies(p, a)), ...))
// folded with a running max in index order, so independent re-evaluations
// agree bit for bit.

// conclusion(y) = max_x tnorm(premise(x), implies(A(x), B(y))).
InferenceOutcome cri_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family);

// Backward cri pairs premise element k with antecedent element k — the same
// composition as cri_fmp applied to the backward premise — and therefore
// requires |X| = |Y|. The sup-t composition over the consequent axis is a
// different operation and does not produce these tables.
InferenceOutcome cri_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family);

// Forward tip computes the same sup-t composition as cri_fmp but insists on a
// residuated family.
InferenceOutcome tip_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family);

// conclusion(x) = min_y implies(implies(A(x), B(y)), premise(y)).
InferenceOutcome tip_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family);

// conclusion(y) = max_x tnorm(tnorm(p(x), implies(p(x), A(x))), implies(A(x), B(y))).
InferenceOutcome qip_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family);

// conclusion(x) = max_y tnorm(tnorm(A(x), implies(A(x), B(y))), implies(B(y), p(y))).
InferenceOutcome qip_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         OperatorFamily family);

// --- distance helpers -------------------------------------------------------

// sqrt(sum_k (a_k - b_k)^2 / r). Bounded by 1 on [0,1]-valued sets.
double euclid_dm(const DiscreteFuzzySet& a, const DiscreteFuzzySet& b);

std::vector<int> sign_vector(std::span<const double> diff, SignForm form);

struct NormalizeResult {
    DiscreteFuzzySet set;
    double xi = 0.0;   // input max
    double eta = 0.0;  // input min
    bool degenerate = false;  // xi == eta; set is all zeros

    bool operator==(const NormalizeResult&) const = default;
};

// Affine rescale (v - min) / (max - min) onto [0, 1]. A constant input has no
// direction to preserve: the result is flagged degenerate and zeroed.
NormalizeResult normalize_unit(std::span<const double> values);

// --- similarity and distance methods ---------------------------------------

// aars: s = 1 / (1 + euclid_dm(premise, A)); forward output reshapes B by s.
InferenceOutcome aars_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                          AarsForm form);

// Backward aars measures the premise against B and reshapes A by s.
InferenceOutcome aars_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                          AarsForm form);

// dmm forward: difference taken against A, quasi vector built on `base`
// (Plain resolves to B, Complement to 1-B), then rescaled onto [0, 1].
// Disjoint premise/A short-circuits to all zeros.
InferenceOutcome dmm_fmp(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         SignForm form, const DmmBase& base = DmmBase::plain());

// dmm backward: difference taken against 1-B (the negated consequent), base
// resolved against A (Plain -> A, Complement -> 1-A). Requires |X| = |Y|.
InferenceOutcome dmm_fmt(const FuzzyRule& rule, const DiscreteFuzzySet& premise,
                         SignForm form, const DmmBase& base = DmmBase::plain());

// Collects the per-premise conclusions, order preserved. The aggregation over
// multiple premises is a set union of alternatives, not a pointwise max, so
// nothing is merged. Throws on an empty list.
std::vector<DiscreteFuzzySet> union_conclusions(
    std::span<const InferenceOutcome> outcomes);

}  // namespace fuzzrp
