#include "fuzzrp/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fuzzrp {

namespace {

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument(std::string(what) +
                                    ": argument out of [0,1]: " +
                                    std::to_string(v));
    }
}

}  // namespace

double implies(OperatorFamily f, double a, double b) {
    require_unit(a, "implies");
    require_unit(b, "implies");
    switch (f) {
        case OperatorFamily::Zadeh:
            return std::max(1.0 - a, std::min(a, b));
        case OperatorFamily::Lukasiewicz:
            return std::min(1.0, 1.0 - a + b);
        case OperatorFamily::Goedel:
            return a <= b ? 1.0 : b;
        case OperatorFamily::R0:
            return a <= b ? 1.0 : std::max(1.0 - a, b);
        case OperatorFamily::Goguen:
            return a <= b ? 1.0 : b / a;  // a > b >= 0, so a > 0
    }
    throw std::logic_error("implies: unknown family");
}

double tnorm(OperatorFamily f, double a, double b) {
    require_unit(a, "tnorm");
    require_unit(b, "tnorm");
    switch (f) {
        case OperatorFamily::Zadeh:
        case OperatorFamily::Goedel:
            return std::min(a, b);
        case OperatorFamily::Lukasiewicz:
            return std::max(0.0, a + b - 1.0);
        case OperatorFamily::R0:
            return a + b <= 1.0 ? 0.0 : std::min(a, b);
        case OperatorFamily::Goguen:
            return a * b;
    }
    throw std::logic_error("tnorm: unknown family");
}

bool is_residual(OperatorFamily f) noexcept {
    return f != OperatorFamily::Zadeh;
}

std::string_view family_name(OperatorFamily f) noexcept {
    switch (f) {
        case OperatorFamily::Zadeh: return "zadeh";
        case OperatorFamily::Lukasiewicz: return "lukasiewicz";
        case OperatorFamily::Goedel: return "godel";
        case OperatorFamily::R0: return "r0";
        case OperatorFamily::Goguen: return "goguen";
    }
    return "?";
}

std::optional<OperatorFamily> family_from_name(std::string_view name) noexcept {
    for (OperatorFamily f : all_families) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

}  // namespace fuzzrp
