#pragma once

// Reductive-property evaluation: perturb the rule's antecedent (forward) or
// consequent (backward) in a fixed ladder of ways, run a method, and score how
// close the conclusion lands to the matching perturbation of the other side.
//
// Case ladder (A = antecedent, B = consequent, tilts are caller-supplied):
//   forward  1: A        -> B          backward  6: 1-B        -> 1-A
//            2: A^2      -> B^2                  7: 1-B^2      -> 1-A^2
//            3: A^0.5    -> B^0.5                8: 1-B^0.5    -> 1-A^0.5
//            4: 1-A      -> 1-B                  9: B          -> A
//            5: tilt(A)  -> tilt(B)             10: 1-tilt(B)  -> 1-tilt(A)
//
// Class 1 runs {1,2,3,4} / {6,7,8,9}; class 2 swaps the complement cases for
// the tilted ones: {1,2,3,5} / {6,7,8,10}.

#include <optional>
#include <span>
#include <vector>

#include "fuzzrp/fuzzy_set.hpp"
#include "fuzzrp/inference.hpp"

namespace fuzzrp {

enum class Direction { Fmp, Fmt };  // forward (premise about x) / backward (about y)

// Score the conclusion against the hedged target of the case, the unhedged
// one (plain B / 1-A), or whichever of the two scores higher.
enum class TargetMode { Hedged, Plain, Best };

struct CaseSpec {
    int case_id = 1;   // 1..10 per the ladder above
    int class_id = 1;  // 1 or 2
    // Required for cases 5 and 10 (where they are premise/target material),
    // ignored elsewhere.
    std::optional<DiscreteFuzzySet> tilted_premise;
    std::optional<DiscreteFuzzySet> tilted_target;

    bool operator==(const CaseSpec&) const = default;
};

Direction case_direction(int case_id);
bool case_in_class(int case_id, int class_id);

// Checks id ranges, class membership, and that tilted material is present
// (and sized like the rule) exactly when the case needs it.
void validate_case(const FuzzyRule& rule, const CaseSpec& spec);

DiscreteFuzzySet generate_premise(const FuzzyRule& rule, const CaseSpec& spec);

struct TargetPair {
    DiscreteFuzzySet hedged;
    DiscreteFuzzySet plain;
};

TargetPair expected_targets(const FuzzyRule& rule, const CaseSpec& spec);

// mode must be Hedged or Plain; Best needs both vectors — use
// expected_targets() and score each side.
DiscreteFuzzySet expected_target(const FuzzyRule& rule, const CaseSpec& spec,
                                 TargetMode mode);

// Signed per-element misses conclusion_k - target_k.
std::vector<double> error_vector(const DiscreteFuzzySet& conclusion,
                                 const DiscreteFuzzySet& target);

// (1 - sum_k |conclusion_k - target_k| / r) * 100, in [0, 100] for
// [0,1]-valued inputs; 100 iff the vectors coincide.
double rpcf_single(const DiscreteFuzzySet& conclusion,
                   const DiscreteFuzzySet& target);

// Plain mean over the per-case scores of one direction.
double rpcf_aggregate(std::span<const double> per_case);

// Mean of the two directional aggregates.
double rpcf_overall(double fmp_aggregate, double fmt_aggregate);

// The four forward + four backward cases of a class, in ladder order, with
// tilted material filled in for cases 5 and 10. Case 10 lives on the
// complement rung of the ladder: its premise is 1 - tilted-consequent and its
// target 1 - tilted-antecedent. Class 2 therefore requires both tilts.
std::vector<CaseSpec> make_class_cases(
    int class_id, const FuzzyRule& rule,
    const std::optional<DiscreteFuzzySet>& tilted_antecedent,
    const std::optional<DiscreteFuzzySet>& tilted_consequent);

}  // namespace fuzzrp
