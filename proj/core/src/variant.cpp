#include "fuzzrp/harness/variant.hpp"

#include <stdexcept>
#include <vector>

namespace fuzzrp {

namespace {

std::string_view aars_form_name(AarsForm form) noexcept {
    return form == AarsForm::MoreOrLess ? "more_or_less" : "reduction";
}

std::string_view sign_form_name(SignForm form) noexcept {
    return form == SignForm::ThreeValued ? "three_valued" : "two_valued";
}

std::vector<MethodVariant> build_roster() {
    std::vector<MethodVariant> roster;
    for (OperatorFamily f : all_families) {
        roster.push_back(make_variant(MethodKind::Cri, f));
    }
    for (OperatorFamily f : residual_families) {
        roster.push_back(make_variant(MethodKind::Tip, f));
    }
    for (OperatorFamily f : residual_families) {
        roster.push_back(make_variant(MethodKind::Qip, f));
    }
    roster.push_back(make_variant(AarsForm::MoreOrLess));
    roster.push_back(make_variant(AarsForm::Reduction));
    roster.push_back(make_variant(SignForm::ThreeValued));
    roster.push_back(make_variant(SignForm::TwoValued));
    return roster;
}

}  // namespace

std::string_view method_name(MethodKind kind) noexcept {
    switch (kind) {
        case MethodKind::Cri: return "cri";
        case MethodKind::Tip: return "tip";
        case MethodKind::Qip: return "qip";
        case MethodKind::Aars: return "aars";
        case MethodKind::Dmm: return "dmm";
    }
    return "?";
}

std::optional<MethodKind> method_from_name(std::string_view name) noexcept {
    for (MethodKind kind : all_methods) {
        if (method_name(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string MethodVariant::discriminator() const {
    if (family) {
        return std::string(family_name(*family));
    }
    if (aars_form) {
        return std::string(aars_form_name(*aars_form));
    }
    if (sign_form) {
        return std::string(sign_form_name(*sign_form));
    }
    return "-";
}

std::string MethodVariant::id() const {
    return std::string(method_name(kind)) + ":" + discriminator();
}

MethodVariant make_variant(MethodKind kind, OperatorFamily family) {
    if (kind != MethodKind::Cri && kind != MethodKind::Tip &&
        kind != MethodKind::Qip) {
        throw std::invalid_argument(
            "make_variant: only cri/tip/qip take an operator family");
    }
    if (kind != MethodKind::Cri && !is_residual(family)) {
        throw std::invalid_argument(std::string("make_variant: ") +
                                    std::string(method_name(kind)) +
                                    " requires a residuated family");
    }
    MethodVariant v;
    v.kind = kind;
    v.family = family;
    return v;
}

MethodVariant make_variant(AarsForm form) {
    MethodVariant v;
    v.kind = MethodKind::Aars;
    v.aars_form = form;
    return v;
}

MethodVariant make_variant(SignForm form) {
    MethodVariant v;
    v.kind = MethodKind::Dmm;
    v.sign_form = form;
    return v;
}

std::optional<MethodVariant> variant_from_id(std::string_view id) {
    const std::size_t colon = id.find(':');
    if (colon == std::string_view::npos) {
        return std::nullopt;
    }
    const std::string_view method = id.substr(0, colon);
    const std::string_view disc = id.substr(colon + 1);
    const std::optional<MethodKind> kind = method_from_name(method);
    if (!kind) {
        return std::nullopt;
    }
    switch (*kind) {
        case MethodKind::Cri:
        case MethodKind::Tip:
        case MethodKind::Qip: {
            const std::optional<OperatorFamily> family = family_from_name(disc);
            if (!family || (*kind != MethodKind::Cri && !is_residual(*family))) {
                return std::nullopt;
            }
            return make_variant(*kind, *family);
        }
        case MethodKind::Aars:
            if (disc == "more_or_less") return make_variant(AarsForm::MoreOrLess);
            if (disc == "reduction") return make_variant(AarsForm::Reduction);
            return std::nullopt;
        case MethodKind::Dmm:
            if (disc == "three_valued") return make_variant(SignForm::ThreeValued);
            if (disc == "two_valued") return make_variant(SignForm::TwoValued);
            return std::nullopt;
    }
    return std::nullopt;
}

std::span<const MethodVariant> default_roster() {
    static const std::vector<MethodVariant> roster = build_roster();
    return roster;
}

std::vector<MethodVariant> variants_of(MethodKind kind) {
    std::vector<MethodVariant> out;
    for (const MethodVariant& v : default_roster()) {
        if (v.kind == kind) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace fuzzrp
