#pragma once

// A method variant is a method plus whatever discriminator it takes: an
// operator family for cri/tip/qip, an output form for aars, a sign form for
// dmm. The default roster is the full 17-variant comparison grid.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzrp/inference.hpp"
#include "fuzzrp/operators.hpp"

namespace fuzzrp {

enum class MethodKind { Cri, Tip, Qip, Aars, Dmm };

inline constexpr std::array<MethodKind, 5> all_methods{
    MethodKind::Cri, MethodKind::Tip, MethodKind::Qip, MethodKind::Aars,
    MethodKind::Dmm};

std::string_view method_name(MethodKind kind) noexcept;  // "cri" ...
std::optional<MethodKind> method_from_name(std::string_view name) noexcept;

struct MethodVariant {
    MethodKind kind = MethodKind::Cri;
    std::optional<OperatorFamily> family;  // cri/tip/qip
    std::optional<AarsForm> aars_form;     // aars
    std::optional<SignForm> sign_form;     // dmm

    // "cri:zadeh", "aars:more_or_less", "dmm:three_valued", ...
    std::string id() const;
    // The family/form part of id(), or "-" when the method takes none.
    std::string discriminator() const;

    bool operator==(const MethodVariant&) const = default;
};

MethodVariant make_variant(MethodKind kind, OperatorFamily family);
MethodVariant make_variant(AarsForm form);
MethodVariant make_variant(SignForm form);

// Exact inverse of MethodVariant::id(); nullopt on anything else.
std::optional<MethodVariant> variant_from_id(std::string_view id);

// 17 variants in presentation order: cri x 5 families, tip x 4 residual,
// qip x 4 residual, aars x 2 forms, dmm x 2 sign forms.
std::span<const MethodVariant> default_roster();

// All variants of one method, in roster order.
std::vector<MethodVariant> variants_of(MethodKind kind);

}  // namespace fuzzrp
