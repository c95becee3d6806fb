#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigraph/report.hpp"

namespace eigraph {

enum class Family { p_power, two_prime, squarefree, all };

Family parse_family(const std::string& name); // throws on unknown name

struct VerifyOptions {
    unsigned checks = check_all;
    double cluster_tol = 1e-9;
    double zero_tol = 1e-7;
    std::size_t max_vertices = 512;
    std::size_t exact_cap = 16; // keep exact char polys cheap inside sweeps
    unsigned workers = 1;
};

struct VerifyIssue {
    BigInt n;
    std::string check;
    std::string detail;
};

struct VerifySummary {
    std::size_t tested = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0; // over the vertex cap
    std::vector<VerifyIssue> issues; // sorted by n
};

// Runs the selected checks on every composite n in [lo, hi]; primes and 1
// are not part of the domain and are passed over silently.
VerifySummary verify_range(std::uint64_t lo, std::uint64_t hi,
                           const VerifyOptions& opts = {});

// Family sweeps used by the closed-form theorems:
//   p_power: p in {2,3,5}, exponents 2..10;
//   two_prime: p < q in {2,3,5}, exponents 1..5 each;
//   squarefree: products of the first k primes, k in [k_min, k_max].
VerifySummary verify_family(Family family, int k_min, int k_max,
                            const VerifyOptions& opts = {});

// The n values a family sweep visits, ascending.
std::vector<BigInt> family_members(Family family, int k_min, int k_max);

std::string summary_text(const VerifySummary& s);

} // namespace eigraph
