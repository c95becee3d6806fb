#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigraph/bigint.hpp"

namespace eigraph {

/// n = p_1^{m_1} ... p_k^{m_k} with p_1 < ... < p_k, all m_i >= 1 and n
/// composite. Selects the ring Z_n whose ideal lattice we work in.
class FactoredInteger {
public:
    static FactoredInteger from_factors(std::vector<std::uint64_t> primes,
                                        std::vector<int> exponents);

    const std::vector<std::uint64_t>& primes() const { return primes_; }
    const std::vector<int>& exponents() const { return exponents_; }
    const BigInt& value() const { return value_; }

    int prime_count() const { return static_cast<int>(primes_.size()); }
    bool squarefree() const;

    /// Product of all exponents, i.e. the order of the universal clique plus one.
    std::int64_t exponent_product() const;

    /// "2^2*3^2" style rendering.
    std::string display() const;

    bool operator==(const FactoredInteger& other) const {
        return primes_ == other.primes_ && exponents_ == other.exponents_;
    }

private:
    FactoredInteger() = default;
    std::vector<std::uint64_t> primes_;
    std::vector<int> exponents_;
    BigInt value_;
};

/// Exponent vector (r_1,...,r_k) naming the ideal <p_1^{r_1}...p_k^{r_k}>.
/// The unit ideal (all zeros) and the zero ideal (r_i = m_i) are representable
/// for arithmetic but are rejected as graph vertices.
struct IdealId {
    std::vector<int> exponents;

    bool operator==(const IdealId& other) const { return exponents == other.exponents; }
    bool operator<(const IdealId& other) const { return exponents < other.exponents; }

    /// Number of indices with r_i >= 1.
    int support_size() const;
};

/// Deterministic trial-division factorization. Throws std::invalid_argument
/// for n < 4, n prime (graph undefined), or n beyond the trial-division bound.
FactoredInteger factorize(const BigInt& n);

bool is_unit_ideal(const IdealId& a);
bool is_zero_ideal(const IdealId& a, const FactoredInteger& f);

/// Checks 0 <= r_i <= m_i and matching length; throws otherwise.
void validate_ideal(const IdealId& a, const FactoredInteger& f);

/// Generator value prod p_i^{r_i}.
BigInt generator(const IdealId& a, const FactoredInteger& f);

/// <x> + <y> = <gcd(x,y)>: componentwise minimum. May produce the unit ideal.
IdealId ideal_sum(const IdealId& a, const IdealId& b);

/// All nonzero proper ideals in canonical order: grouped by support size
/// ascending, then ascending lexicographic on exponent vectors.
/// Exactly prod(m_i + 1) - 2 entries.
std::vector<IdealId> enumerate_ideals(const FactoredInteger& f);

} // namespace eigraph
