#pragma once

// Finite discrete fuzzy sets: a membership degree per element of an implicit
// universe {x_1, ..., x_r}. Degrees are validated into [0, 1] on construction.

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fuzzrp {

class DiscreteFuzzySet {
public:
    DiscreteFuzzySet() = default;
    explicit DiscreteFuzzySet(std::vector<double> degrees);
    DiscreteFuzzySet(std::initializer_list<double> degrees);

    std::size_t size() const noexcept { return degrees_.size(); }
    bool empty() const noexcept { return degrees_.empty(); }
    double operator[](std::size_t k) const noexcept { return degrees_[k]; }
    const std::vector<double>& degrees() const noexcept { return degrees_; }

    auto begin() const noexcept { return degrees_.begin(); }
    auto end() const noexcept { return degrees_.end(); }

    bool operator==(const DiscreteFuzzySet&) const = default;

private:
    std::vector<double> degrees_;
};

// Standard negation 1 - s, elementwise. Involutive up to rounding.
DiscreteFuzzySet complement(const DiscreteFuzzySet& s);

// Elementwise power s^p for p > 0. p = 2 strengthens ("very"), p = 0.5
// weakens ("more or less"); degrees stay inside [0, 1].
DiscreteFuzzySet power_hedge(const DiscreteFuzzySet& s, double exponent);

// True when min(a_k, b_k) = 0 at every position, i.e. the supports never
// overlap. Requires equal sizes.
bool is_disjoint(const DiscreteFuzzySet& a, const DiscreteFuzzySet& b);

}  // namespace fuzzrp
