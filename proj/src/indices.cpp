#include "eigraph/indices.hpp"

#include <numeric>
#include <sstream>

namespace eigraph {

namespace {

std::pair<std::int64_t, std::int64_t> distance_sums(const IdealGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::vector<int> dist = g.distance_matrix();
    std::int64_t sum = 0, sum_sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int d = dist[i * n + j];
            if (d < 0) throw structure_error("graph is disconnected");
            sum += d;
            sum_sq += static_cast<std::int64_t>(d) * d;
        }
    }
    return {sum, sum_sq};
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

Rational Rational::halves(std::int64_t twice) {
    if (twice % 2 == 0) return {twice / 2, 1};
    return {twice, 2};
}

std::string Rational::str() const {
    std::ostringstream out;
    out << num;
    if (den != 1) out << '/' << den;
    return out.str();
}

int diameter(const IdealGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::vector<int> dist = g.distance_matrix();
    int diam = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int d = dist[i * n + j];
            if (d < 0) throw structure_error("graph is disconnected");
            diam = std::max(diam, d);
        }
    }
    return diam;
}

std::int64_t wiener(const IdealGraph& g) { return distance_sums(g).first; }

Rational hyper_wiener(const IdealGraph& g) {
    auto [sum, sum_sq] = distance_sums(g);
    return Rational::halves(sum + sum_sq);
}

std::optional<std::int64_t> closed_wiener(const FactoredInteger& f) {
    const int k = f.prime_count();
    if (k == 1) {
        const std::int64_t m = f.exponents()[0];
        return binomial(m - 1, 2);
    }
    if (k == 2) {
        const std::int64_t m1 = f.exponents()[0];
        const std::int64_t m2 = f.exponents()[1];
        const std::int64_t a = m1 * m2;
        return (a * (a - 1) + (m1 + m2) * (2 * a - 4) +
                2 * (1 + m1 * m1 + m2 * m2)) / 2;
    }
    if (!f.squarefree()) return std::nullopt;
    // Every term 2^{k+1} + 2^t - 2^{k-t} - 7 is odd times C(k,t); the total
    // over t is even, so sum halves at the end.
    std::int64_t twice = 0;
    for (int t = 1; t <= k - 1; ++t)
        twice += binomial(k, t) *
                 ((2LL << k) + (1LL << t) - (1LL << (k - t)) - 7);
    return twice / 2;
}

std::optional<Rational> closed_hyper_wiener(const FactoredInteger& f) {
    const int k = f.prime_count();
    if (k == 1) {
        const std::int64_t m = f.exponents()[0];
        return Rational{binomial(m - 1, 2), 1};
    }
    if (k == 2) {
        const std::int64_t m1 = f.exponents()[0];
        const std::int64_t m2 = f.exponents()[1];
        const std::int64_t a = m1 * m2;
        return Rational::halves(a * (a - 1) + (m1 + m2) * (2 * a - 5) +
                                3 * (m1 * m1 + m2 * m2) + 2);
    }
    if (!f.squarefree()) return std::nullopt;
    std::int64_t twice = 0;
    for (int t = 1; t <= k - 1; ++t)
        twice += binomial(k, t) *
                 (3 * (1LL << k) - 2 * (1LL << (k - t)) + 3 * (1LL << t) - 13);
    return Rational::halves(twice);
}

std::int64_t equal_exponent_wiener(int m) {
    const std::int64_t mm = m;
    return (mm * mm * mm * mm + 4 * mm * mm * mm + 3 * mm * mm - 8 * mm + 2) / 2;
}

} // namespace eigraph
