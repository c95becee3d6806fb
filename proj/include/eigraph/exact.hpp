#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eigraph/bigint.hpp"

namespace eigraph {

// Rank of an integer matrix by Bareiss fraction-free elimination with full
// pivoting.  No floating point anywhere; every interior division is exact.
std::size_t matrix_rank_exact(std::vector<BigInt> m, std::size_t rows, std::size_t cols);

std::size_t matrix_rank_exact(const std::vector<std::int64_t>& m,
                              std::size_t rows, std::size_t cols);

} // namespace eigraph
