// Test-only reference implementations, deliberately naive and independent of
// the bit-packed production path. Unpacked 0/1 ints, textbook elimination.
#pragma once

#include <cstddef>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<int>>;  // entries 0/1

inline std::size_t rank_mod2(Mat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c]) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

// dims of the cohomology of a cochain complex given by matrices d[q]: C^q -> C^{q+1}
// (d has one entry per degree 0..D, the last one mapping into 0).
inline std::vector<std::size_t> cochain_cohomology_dims(
    const std::vector<std::size_t>& space_dims, const std::vector<Mat>& d) {
    std::vector<std::size_t> out(space_dims.size());
    std::size_t prev_rank = 0;
    for (std::size_t q = 0; q < space_dims.size(); ++q) {
        std::size_t rk = q < d.size() ? rank_mod2(d[q]) : 0;
        out[q] = space_dims[q] - rk - prev_rank;
        prev_rank = rk;
    }
    return out;
}

}  // namespace oracle
