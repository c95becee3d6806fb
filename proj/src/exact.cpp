#include "eigraph/exact.hpp"

#include <utility>

namespace eigraph {

std::size_t matrix_rank_exact(std::vector<BigInt> m, std::size_t rows, std::size_t cols) {
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * cols + j]; };
    BigInt prev = 1;
    std::size_t rank = 0;
    while (rank < rows && rank < cols) {
        // Full pivot: largest magnitude keeps intermediate entries small.
        std::size_t pi = rank, pj = rank;
        BigInt best = 0;
        for (std::size_t i = rank; i < rows; ++i) {
            for (std::size_t j = rank; j < cols; ++j) {
                BigInt a = abs(at(i, j));
                if (a > best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best == 0) break;
        if (pi != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(rank, j), at(pi, j));
        if (pj != rank)
            for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, rank), at(i, pj));
        const BigInt pivot = at(rank, rank);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = rank + 1; j < cols; ++j)
                at(i, j) = (pivot * at(i, j) - at(i, rank) * at(rank, j)) / prev;
            at(i, rank) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t matrix_rank_exact(const std::vector<std::int64_t>& m,
                              std::size_t rows, std::size_t cols) {
    std::vector<BigInt> big(m.begin(), m.end());
    return matrix_rank_exact(std::move(big), rows, cols);
}

} // namespace eigraph
