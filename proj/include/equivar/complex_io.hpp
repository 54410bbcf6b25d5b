#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equivar/simplicial.hpp"

namespace equivar {

/// The on-disk complex format: vertex count, maximal simplices, optional
/// involution permutation. Face closure is computed on load.
struct ComplexFile {
    int vertices = 0;
    std::vector<Simplex> maximal_simplices;
    std::optional<std::vector<int>> involution;
};

ComplexFile parse_complex_json(const std::string& text);
std::string complex_file_to_json(const ComplexFile& file);
ComplexFile to_complex_file(const InvolutiveComplex& ic);

struct LoadOptions {
    bool auto_regularize = true;
    std::size_t simplex_cap = default_simplex_cap;
};

/// Closure under faces, involution validation (identity when absent),
/// regularization unless disabled.
InvolutiveComplex load_involutive(const ComplexFile& file,
                                  const LoadOptions& options = {});

}  // namespace equivar
