#pragma once

// Test-side reference semantics, independent of the library internals.
//
// The residuation law tnorm(a, b) <= c iff a <= implies(b, c) is a statement
// about real arithmetic. On the grid {0, 0.1, ..., 1.0} every operator value
// is a rational with a small denominator, so both sides of the law can be
// decided exactly in integers (k in 0..10 standing for k/10):
//
//   lukasiewicz  tnorm <= c  <=>  a+b <= c+10      a <= imp  <=>  a+b <= c+10
//   godel        min(a,b) <= c                     b <= c  or  a <= c
//   r0           a+b <= 10  or  min(a,b) <= c      b <= c  or  a <= 10-b  or  a <= c
//   goguen       a*b <= 10*c                       b <= c  or  a*b <= 10*c
//
// Doubles only enter when comparing the production operators against the
// exact rational values, with an explicit tolerance.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fuzzrp/fuzzy_set.hpp"
#include "fuzzrp/inference.hpp"
#include "fuzzrp/operators.hpp"

namespace refsem {

// Exact decision of tnorm(a/10, b/10) <= c/10 in integer arithmetic.
inline bool exact_tnorm_le(fuzzrp::OperatorFamily f, int a, int b, int c) {
    using fuzzrp::OperatorFamily;
    switch (f) {
        case OperatorFamily::Lukasiewicz:
            return a + b <= c + 10;
        case OperatorFamily::Goedel:
            return a <= c || b <= c;
        case OperatorFamily::R0:
            return a + b <= 10 || (a <= c || b <= c);
        case OperatorFamily::Goguen:
            return a * b <= 10 * c;
        case OperatorFamily::Zadeh:
            break;
    }
    throw std::invalid_argument("exact_tnorm_le: zadeh is not residuated");
}

// Exact decision of a/10 <= implies(b/10, c/10) in integer arithmetic.
inline bool exact_le_implies(fuzzrp::OperatorFamily f, int a, int b, int c) {
    using fuzzrp::OperatorFamily;
    if (b <= c) return true;  // residual implication is 1 above the diagonal
    switch (f) {
        case OperatorFamily::Lukasiewicz:
            return a <= 10 - b + c;
        case OperatorFamily::Goedel:
            return a <= c;
        case OperatorFamily::R0:
            return a <= 10 - b || a <= c;
        case OperatorFamily::Goguen:
            return a * b <= 10 * c;  // a/10 <= c/b, b > 0 here
        case OperatorFamily::Zadeh:
            break;
    }
    throw std::invalid_argument("exact_le_implies: zadeh is not residuated");
}

// The operator values at grid points, each produced by a single rounding of
// the exact rational (integer / 10, or one integer division for goguen).
inline double exact_implies(fuzzrp::OperatorFamily f, int a, int b) {
    using fuzzrp::OperatorFamily;
    switch (f) {
        case OperatorFamily::Zadeh: {
            const int m = a < b ? a : b;  // min(a, b)
            const int v = 10 - a > m ? 10 - a : m;
            return v / 10.0;
        }
        case OperatorFamily::Lukasiewicz: {
            const int v = 10 - a + b < 10 ? 10 - a + b : 10;
            return v / 10.0;
        }
        case OperatorFamily::Goedel:
            return (a <= b ? 10 : b) / 10.0;
        case OperatorFamily::R0: {
            if (a <= b) return 1.0;
            const int v = 10 - a > b ? 10 - a : b;
            return v / 10.0;
        }
        case OperatorFamily::Goguen:
            if (a <= b) return 1.0;
            return static_cast<double>(b) / static_cast<double>(a);
    }
    throw std::invalid_argument("exact_implies: bad family");
}

inline double exact_tnorm(fuzzrp::OperatorFamily f, int a, int b) {
    using fuzzrp::OperatorFamily;
    switch (f) {
        case OperatorFamily::Zadeh:
        case OperatorFamily::Goedel:
            return (a < b ? a : b) / 10.0;
        case OperatorFamily::Lukasiewicz:
            return (a + b > 10 ? a + b - 10 : 0) / 10.0;
        case OperatorFamily::R0:
            return a + b <= 10 ? 0.0 : (a < b ? a : b) / 10.0;
        case OperatorFamily::Goguen:
            return (a * b) / 100.0;
    }
    throw std::invalid_argument("exact_tnorm: bad family");
}

// --- kernel re-evaluations ---------------------------------------------------
// These repeat the documented scalar call order (tnorm of the premise term
// with the implication term, running max / min in index order) so that
// results can be compared against the library bit for bit.

inline std::vector<double> sup_t(const fuzzrp::DiscreteFuzzySet& premise,
                                 const fuzzrp::DiscreteFuzzySet& a,
                                 const fuzzrp::DiscreteFuzzySet& b,
                                 fuzzrp::OperatorFamily f) {
    std::vector<double> out(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double cand =
                fuzzrp::tnorm(f, premise[i], fuzzrp::implies(f, a[i], b[j]));
            if (cand > best) best = cand;
        }
        out[j] = best;
    }
    return out;
}

inline std::vector<double> inf_residual_fmt(
    const fuzzrp::DiscreteFuzzySet& premise, const fuzzrp::DiscreteFuzzySet& a,
    const fuzzrp::DiscreteFuzzySet& b, fuzzrp::OperatorFamily f) {
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double worst = 1.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double cand = fuzzrp::implies(
                f, fuzzrp::implies(f, a[i], b[j]), premise[j]);
            if (cand < worst) worst = cand;
        }
        out[i] = worst;
    }
    return out;
}

}  // namespace refsem
