#include "fuzzrp/fuzzy_set.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fuzzrp {

namespace {

void require_degree(double v, std::size_t k) {
    // Written as a negated conjunction so NaN fails too.
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("membership out of range at index " +
                                    std::to_string(k) + ": " +
                                    std::to_string(v));
    }
}

void require_same_size(const DiscreteFuzzySet& a, const DiscreteFuzzySet& b,
                       const char* what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": size mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

}  // namespace

DiscreteFuzzySet::DiscreteFuzzySet(std::vector<double> degrees)
    : degrees_(std::move(degrees)) {
    for (std::size_t k = 0; k < degrees_.size(); ++k) {
        require_degree(degrees_[k], k);
    }
}

DiscreteFuzzySet::DiscreteFuzzySet(std::initializer_list<double> degrees)
    : DiscreteFuzzySet(std::vector<double>(degrees)) {}

DiscreteFuzzySet complement(const DiscreteFuzzySet& s) {
    std::vector<double> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        out[k] = 1.0 - s[k];
    }
    return DiscreteFuzzySet(std::move(out));
}

DiscreteFuzzySet power_hedge(const DiscreteFuzzySet& s, double exponent) {
    if (!(exponent > 0.0)) {
        throw std::invalid_argument("power_hedge: exponent must be positive");
    }
    std::vector<double> out(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        // pow maps [0,1] into [0,1] for positive exponents; clamp anyway so a
        // stray 1 + ulp cannot escape the constructor check.
        out[k] = std::min(1.0, std::pow(s[k], exponent));
    }
    return DiscreteFuzzySet(std::move(out));
}

bool is_disjoint(const DiscreteFuzzySet& a, const DiscreteFuzzySet& b) {
    require_same_size(a, b, "is_disjoint");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (std::min(a[k], b[k]) > 0.0) {
            return false;
        }
    }
    return true;
}

}  // namespace fuzzrp
