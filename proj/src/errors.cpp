#include "equivar/errors.hpp"

namespace equivar {

const char* errc_name(errc code) {
    switch (code) {
        case errc::dimension_mismatch: return "dimension-mismatch";
        case errc::containment_violation: return "containment-violation";
        case errc::not_an_involution: return "not-an-involution";
        case errc::non_simplicial_map: return "non-simplicial-map";
        case errc::invalid_permutation: return "invalid-permutation";
        case errc::non_regular_action: return "non-regular-action";
        case errc::window_too_small: return "window-too-small";
        case errc::empty_fixed_set: return "empty-fixed-set";
        case errc::hypothesis_violation: return "hypothesis-violation";
        case errc::inconsistent_inputs: return "inconsistent-inputs";
        case errc::route_mismatch: return "route-mismatch";
        case errc::constraint_violation: return "constraint-violation";
        case errc::negative_output: return "negative-output";
        case errc::bound_violation: return "bound-violation";
        case errc::formula_not_applicable: return "formula-not-applicable";
        case errc::parse_error: return "parse-error";
        case errc::simplex_cap_exceeded: return "simplex-cap-exceeded";
        case errc::internal: return "internal";
    }
    return "unknown";
}

void fail(errc code, const std::string& what) {
    throw error(code, std::string(errc_name(code)) + ": " + what);
}

}  // namespace equivar
