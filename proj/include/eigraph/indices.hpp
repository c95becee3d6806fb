#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eigraph/graph.hpp"

namespace eigraph {

// Reduced fraction with positive denominator; covers the half-integers the
// hyper-Wiener definition can produce.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational halves(std::int64_t twice); // value twice/2, reduced
    bool operator==(const Rational&) const = default;
    std::string str() const;
};

// Largest entry of the BFS distance matrix; throws structure_error when the
// graph is disconnected (never the case for these graphs).
int diameter(const IdealGraph& g);

// Sum of distances over unordered pairs.
std::int64_t wiener(const IdealGraph& g);

// W/2 + (sum of squared distances over unordered pairs)/2.
Rational hyper_wiener(const IdealGraph& g);

// Closed forms, covering p^m, p^{m1}q^{m2}, and squarefree n; nullopt
// otherwise.
std::optional<std::int64_t> closed_wiener(const FactoredInteger& f);
std::optional<Rational> closed_hyper_wiener(const FactoredInteger& f);

// The p^m q^m specialization (m^4+4m^3+3m^2-8m+2)/2; must agree with the
// general two-prime form at m1 = m2 = m.
std::int64_t equal_exponent_wiener(int m);

} // namespace eigraph
