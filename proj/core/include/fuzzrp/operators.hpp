#pragma once

// Implication / t-norm pairs used by the compositional inference methods.
// Four of the five pairs are residuated: tnorm(a, b) <= c iff a <= implies(b, c)
// (over the reals; in doubles this holds up to rounding of sums near the
// boundary). Zadeh's implication is paired with min by convention only and
// satisfies no such adjunction, so methods that rely on residuation reject it.

#include <array>
#include <optional>
#include <string_view>

namespace fuzzrp {

enum class OperatorFamily { Zadeh, Lukasiewicz, Goedel, R0, Goguen };

inline constexpr std::array<OperatorFamily, 5> all_families{
    OperatorFamily::Zadeh, OperatorFamily::Lukasiewicz, OperatorFamily::Goedel,
    OperatorFamily::R0, OperatorFamily::Goguen};

inline constexpr std::array<OperatorFamily, 4> residual_families{
    OperatorFamily::Lukasiewicz, OperatorFamily::Goedel, OperatorFamily::R0,
    OperatorFamily::Goguen};

// Both arguments must lie in [0, 1]; out-of-range or NaN throws.
double implies(OperatorFamily f, double a, double b);
double tnorm(OperatorFamily f, double a, double b);

bool is_residual(OperatorFamily f) noexcept;

// Lower-case stable identifiers: "zadeh", "lukasiewicz", "godel", "r0",
// "goguen". Parsing is exact (no aliases) and returns nullopt on miss.
std::string_view family_name(OperatorFamily f) noexcept;
std::optional<OperatorFamily> family_from_name(std::string_view name) noexcept;

}  // namespace fuzzrp
