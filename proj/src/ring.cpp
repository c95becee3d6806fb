#include "eigraph/ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eigraph {

namespace {

// Trial division stays practical up to divisors of this size; beyond it the
// remaining cofactor is certified prime only for n <= kTrialBound^2.
constexpr std::uint64_t kTrialBound = 10'000'000;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

FactoredInteger FactoredInteger::from_factors(std::vector<std::uint64_t> primes,
                                              std::vector<int> exponents) {
    if (primes.empty() || primes.size() != exponents.size())
        throw std::invalid_argument("factor lists must be non-empty and aligned");
    for (std::size_t i = 0; i + 1 < primes.size(); ++i)
        if (primes[i] >= primes[i + 1])
            throw std::invalid_argument("primes must be strictly ascending");
    FactoredInteger f;
    f.value_ = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i]))
            throw std::invalid_argument("factor " + std::to_string(primes[i]) +
                                        " is not prime");
        if (exponents[i] < 1) throw std::invalid_argument("exponents must be >= 1");
        for (int e = 0; e < exponents[i]; ++e) f.value_ *= primes[i];
    }
    if (primes.size() == 1 && exponents[0] == 1)
        throw std::invalid_argument("graph undefined for this n");
    f.primes_ = std::move(primes);
    f.exponents_ = std::move(exponents);
    return f;
}

bool FactoredInteger::squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](int m) { return m == 1; });
}

std::int64_t FactoredInteger::exponent_product() const {
    std::int64_t p = 1;
    for (int m : exponents_) p *= m;
    return p;
}

std::string FactoredInteger::display() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) out << '*';
        out << primes_[i];
        if (exponents_[i] > 1) out << '^' << exponents_[i];
    }
    return out.str();
}

int IdealId::support_size() const {
    int t = 0;
    for (int r : exponents)
        if (r >= 1) ++t;
    return t;
}

FactoredInteger factorize(const BigInt& n) {
    if (n < 4) throw std::invalid_argument("graph undefined for this n");

    std::vector<std::uint64_t> primes;
    std::vector<int> exponents;
    BigInt rest = n;
    auto take = [&](std::uint64_t d) {
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e > 0) {
            primes.push_back(d);
            exponents.push_back(e);
        }
    };
    take(2);
    take(3);
    for (std::uint64_t d = 5; d <= kTrialBound && BigInt(d) * d <= rest; d += 6) {
        take(d);
        take(d + 2);
    }
    if (rest > 1) {
        if (rest > BigInt(kTrialBound) * kTrialBound)
            throw std::invalid_argument("n too large to factor by trial division");
        primes.push_back(rest.convert_to<std::uint64_t>());
        exponents.push_back(1);
    }
    if (primes.size() == 1 && exponents[0] == 1)
        throw std::invalid_argument("graph undefined for this n");
    return FactoredInteger::from_factors(std::move(primes), std::move(exponents));
}

bool is_unit_ideal(const IdealId& a) {
    return std::all_of(a.exponents.begin(), a.exponents.end(),
                       [](int r) { return r == 0; });
}

bool is_zero_ideal(const IdealId& a, const FactoredInteger& f) {
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] != f.exponents()[i]) return false;
    return a.exponents.size() == f.exponents().size();
}

void validate_ideal(const IdealId& a, const FactoredInteger& f) {
    if (static_cast<int>(a.exponents.size()) != f.prime_count())
        throw std::invalid_argument("ideal does not belong to this ring");
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        if (a.exponents[i] < 0 || a.exponents[i] > f.exponents()[i])
            throw std::invalid_argument("ideal exponent out of range");
}

BigInt generator(const IdealId& a, const FactoredInteger& f) {
    validate_ideal(a, f);
    BigInt g = 1;
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        for (int e = 0; e < a.exponents[i]; ++e) g *= f.primes()[i];
    return g;
}

IdealId ideal_sum(const IdealId& a, const IdealId& b) {
    if (a.exponents.size() != b.exponents.size())
        throw std::invalid_argument("ideals belong to different rings");
    IdealId s;
    s.exponents.resize(a.exponents.size());
    for (std::size_t i = 0; i < a.exponents.size(); ++i)
        s.exponents[i] = std::min(a.exponents[i], b.exponents[i]);
    return s;
}

std::vector<IdealId> enumerate_ideals(const FactoredInteger& f) {
    const int k = f.prime_count();
    std::vector<IdealId> ideals;
    IdealId cur;
    cur.exponents.assign(k, 0);
    // Odometer over all exponent vectors, excluding the unit and zero ideals.
    while (true) {
        if (!is_unit_ideal(cur) && !is_zero_ideal(cur, f)) ideals.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur.exponents[i] == f.exponents()[i]) {
            cur.exponents[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++cur.exponents[i];
    }
    std::sort(ideals.begin(), ideals.end(), [](const IdealId& a, const IdealId& b) {
        int ta = a.support_size(), tb = b.support_size();
        if (ta != tb) return ta < tb;
        return a.exponents < b.exponents;
    });
    return ideals;
}

} // namespace eigraph
