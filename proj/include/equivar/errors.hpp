#pragma once

#include <stdexcept>
#include <string>

namespace equivar {

/// Stable machine-readable failure codes, surfaced verbatim by the CLI.
enum class errc {
    dimension_mismatch,
    containment_violation,
    not_an_involution,
    non_simplicial_map,
    invalid_permutation,
    non_regular_action,
    window_too_small,
    empty_fixed_set,
    hypothesis_violation,
    inconsistent_inputs,
    route_mismatch,
    constraint_violation,
    negative_output,
    bound_violation,
    formula_not_applicable,
    parse_error,
    simplex_cap_exceeded,
    internal,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& what);

inline void require(bool condition, errc code, const std::string& what) {
    if (!condition) fail(code, what);
}

}  // namespace equivar
